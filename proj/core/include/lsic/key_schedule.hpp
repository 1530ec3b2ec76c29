#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lsic/latin_square.hpp"

namespace lsic {

inline constexpr int kRounds = 8;        // SPN rounds; squares run 0..kRounds
inline constexpr int kSquareCount = 9;   // kRounds + final whitening square

// 256-bit encryption key.
struct Key256 {
  std::array<std::uint8_t, 32> bytes{};
};

// Eight 32-bit subkeys, big-endian slices of a Key256.
struct SubKeys {
  std::array<std::uint32_t, 8> words{};
};

// One round's pseudo-random sequence pair, 256 values each.
struct SequencePair {
  std::array<std::uint64_t, 256> q1{};
  std::array<std::uint64_t, 256> q2{};
};

// Per-key material: nine order-256 squares and their rotation parameters
// d[n] = squares[n].cell(0, 0).
struct KeySchedule {
  std::vector<LatinSquare> squares;
  std::array<std::uint8_t, kSquareCount> rotations{};
};

// Fixed 64-bit LCG step (Knuth MMIX constants). The concrete generator is
// part of the wire contract: ciphertexts are reproducible across
// implementations only if everyone steps the same sequence.
inline constexpr std::uint64_t prng_next(std::uint64_t state) noexcept {
  return state * 6364136223846793005ULL + 1442695040888963407ULL;
}

// k_i = big-endian word over key bytes [4i, 4i+4).
SubKeys subkey_div(const Key256& key);

// Expands a key into M+1 sequence pairs. Each round derives eight subkey
// streams of 64 LCG values; the first 32 of every stream concatenate into q1,
// the last 32 into q2, and the low words of the final values chain into the
// next round key.
std::vector<SequencePair> kdsg(const Key256& key, int m);

// Nine keyed squares L_0..L_8 with rotation parameters.
KeySchedule derive_schedule(const Key256& key);

// Hex helpers for the 64-character key presentation. parse accepts upper or
// lower case; format emits lower case.
Key256 parse_key_hex(std::string_view hex);
std::string key_to_hex(const Key256& key);

// Fresh key from the OS entropy source.
Key256 random_key();

// MSB-first bit flip: bit 0 is the top bit of byte 0, bit 255 the bottom bit
// of byte 31, matching the left-to-right hex reading of a printed key.
Key256 flip_key_bit(const Key256& key, unsigned bit);

}  // namespace lsic
