#pragma once

#include <cstdint>
#include <span>

namespace lsic {

// FNV-1a, used for key fingerprints in analysis reports and for compact
// regression checks. Not a cryptographic hash.
inline std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace lsic
