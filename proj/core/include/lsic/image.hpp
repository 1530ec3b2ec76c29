#pragma once

#include <cstdint>
#include <vector>

namespace lsic {

inline constexpr std::uint32_t kTileSize = 256;

// Next multiple of the tile size (1 -> 256, 256 -> 256, 300 -> 512).
constexpr std::uint32_t padded_extent(std::uint32_t n) noexcept {
  return (n + kTileSize - 1) / kTileSize * kTileSize;
}

// Raster image as independent per-channel byte planes, row-major.
struct PlaneImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t channels = 1;  // 1 (gray) or 3 (RGB)
  std::vector<std::vector<std::uint8_t>> planes;

  bool operator==(const PlaneImage&) const = default;
};

// Parsed ciphertext container. The wire format (see write_container):
//   magic 'L' 'S' 'I' 'C' | version=1 | flags (bit 0: noise embedded) |
//   channels (1|3) | reserved=0 | width u32 BE | height u32 BE |
//   per channel the encrypted padded plane, padded_w * padded_h bytes.
struct CipherContainer {
  std::uint8_t version = 1;
  bool noise_embedded = false;
  std::uint8_t channels = 1;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::vector<std::uint8_t>> payload;  // encrypted padded planes

  std::uint32_t padded_width() const noexcept { return padded_extent(width); }
  std::uint32_t padded_height() const noexcept { return padded_extent(height); }

  bool operator==(const CipherContainer&) const = default;
};

}  // namespace lsic
