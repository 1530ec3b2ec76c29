#pragma once

#include <cstdint>
#include <optional>

#include "lsic/image.hpp"
#include "lsic/key_schedule.hpp"
#include "lsic/primitives.hpp"

namespace lsic {

struct EncryptOptions {
  // Randomize the least significant bit-plane before the first round, making
  // encryption probabilistic: the same plaintext and key yield distinct
  // ciphertexts. Decryption then recovers bits 1..7 exactly; bit 0 carries
  // the (visually negligible) noise.
  bool embed_noise = true;
  // Seed for the noise bit stream. Test-mode only: fixes the noise
  // deterministically. Absent means fresh OS entropy per call. Either way
  // the noise is independent of the encryption key.
  std::optional<std::uint64_t> noise_seed;
};

// Keystream of noise bits, backed by the same LCG as the key schedule but
// seeded in a separate domain.
class NoiseBits {
 public:
  explicit NoiseBits(std::uint64_t seed);
  std::uint64_t next_word() noexcept;

 private:
  std::uint64_t state_;
};

// XORs one random bit into bit 0 of every pixel; bits 1..7 pass through.
SymbolBlock lsb_noise_embed(const SymbolBlock& p, NoiseBits& bits);

// Eight-round SPN over one 256x256 block: per round whitening, then a row or
// column S-box (parity-alternating, rows on even rounds), then the
// permutation stage; a ninth whitening closes the network.
SymbolBlock encrypt_block(const SymbolBlock& p, const KeySchedule& schedule,
                          const EncryptOptions& opts = {});

// Exact inverse of the SPN stages in reverse order. If noise was embedded the
// result equals the noise-carrying plaintext: bits 1..7 match the original.
SymbolBlock decrypt_block(const SymbolBlock& c, const KeySchedule& schedule);

// Whole-image encryption: each channel plane is zero-padded to tile
// multiples, split into 256x256 tiles, and every tile is encrypted
// independently with one schedule derived from the key. threads = 0 means
// available hardware parallelism; the output is identical for any count.
CipherContainer encrypt_image(const PlaneImage& img, const Key256& key,
                              const EncryptOptions& opts = {}, int threads = 0);

// Inverse of encrypt_image; crops back to the header's true dimensions.
// A wrong key is not detected: it simply yields random-like planes.
PlaneImage decrypt_image(const CipherContainer& ct, const Key256& key,
                         int threads = 0);

}  // namespace lsic
