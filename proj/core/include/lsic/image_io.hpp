#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsic/image.hpp"

namespace lsic {

// Malformed image or container bytes; offset points at the offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Binary PGM (P5) / PPM (P6), 8-bit only. Header comments are accepted on
// read; the writer emits the canonical single-space, newline-terminated
// header so outputs are bit-reproducible.
PlaneImage read_image(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_image(const PlaneImage& img);

CipherContainer read_container(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_container(const CipherContainer& ct);

// File convenience wrappers.
std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace lsic
