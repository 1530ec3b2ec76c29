#include "lsic/key_schedule.hpp"

#include <random>
#include <span>
#include <stdexcept>

#include "lsic/endian.hpp"

namespace lsic {

SubKeys subkey_div(const Key256& key) {
  SubKeys sk;
  for (int i = 0; i < 8; ++i) {
    sk.words[i] = load_be32(key.bytes.data() + 4 * i);
  }
  return sk;
}

std::vector<SequencePair> kdsg(const Key256& key, int m) {
  if (m < 0) {
    throw std::invalid_argument("kdsg: round count must be nonnegative");
  }
  std::vector<SequencePair> out(static_cast<std::size_t>(m) + 1);
  Key256 round_key = key;
  for (int n = 0; n <= m; ++n) {
    const SubKeys sk = subkey_div(round_key);
    SequencePair& pair = out[n];
    Key256 next_key;
    for (int i = 0; i < 8; ++i) {
      std::uint64_t q = prng_next(sk.words[i]);
      for (int j = 0; j < 64; ++j) {
        const int slot = 32 * i + (j & 31);
        if (j < 32) {
          pair.q1[slot] = q;
        } else {
          pair.q2[slot] = q;
        }
        if (j == 63) {
          store_be32(next_key.bytes.data() + 4 * i,
                     static_cast<std::uint32_t>(q));
        } else {
          q = prng_next(q);
        }
      }
    }
    round_key = next_key;
  }
  return out;
}

KeySchedule derive_schedule(const Key256& key) {
  const std::vector<SequencePair> pairs = kdsg(key, kRounds);
  KeySchedule schedule;
  schedule.squares.reserve(kSquareCount);
  for (int n = 0; n < kSquareCount; ++n) {
    schedule.squares.push_back(lsg(pairs[n].q1, pairs[n].q2));
    schedule.rotations[n] = schedule.squares.back().cell(0, 0);
  }
  return schedule;
}

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Key256 parse_key_hex(std::string_view hex) {
  if (hex.size() != 64) {
    throw std::invalid_argument("key must be 64 hex characters, got " +
                                std::to_string(hex.size()));
  }
  Key256 key;
  for (std::size_t i = 0; i < 32; ++i) {
    const int hi = hex_nibble(hex[2 * i]);
    const int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw std::invalid_argument("key contains a non-hex character");
    }
    key.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return key;
}

std::string key_to_hex(const Key256& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : key.bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

Key256 random_key() {
  std::random_device rd;
  Key256 key;
  for (std::size_t i = 0; i < key.bytes.size(); i += 4) {
    store_be32(key.bytes.data() + i, rd());
  }
  return key;
}

Key256 flip_key_bit(const Key256& key, unsigned bit) {
  if (bit >= 256) {
    throw std::out_of_range("key bit index out of range [0, 256)");
  }
  Key256 out = key;
  out.bytes[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
  return out;
}

}  // namespace lsic
