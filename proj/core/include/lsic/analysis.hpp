#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "lsic/cipher.hpp"
#include "lsic/key_schedule.hpp"

namespace lsic {

// Ideal expectations for two independent uniformly random byte planes; used
// as reference points when judging diffusion scores.
inline constexpr double kIdealNpcrPercent = 99.609375;        // 100*(1 - 2^-8)
inline constexpr double kIdealUaciPercent = 33.46354166667;   // sum d*2(256-d)/(255*256^2)*100

enum class Direction { horizontal, vertical, diagonal };

struct AnalysisReport {
  double entropy = 0.0;
  double apc_horizontal = 0.0;
  double apc_vertical = 0.0;
  double apc_diagonal = 0.0;
  std::optional<double> npcr_percent;
  std::optional<double> uaci_percent;
  std::array<std::uint64_t, 256> histogram{};
};

std::array<std::uint64_t, 256> histogram(std::span<const std::uint8_t> plane);

// Shannon entropy in bits per symbol over the 256-bin empirical histogram.
double entropy(std::span<const std::uint8_t> plane);

// Pearson correlation between pixels and their neighbors along one
// direction; offsets are (0,1) horizontal, (1,0) vertical, (1,1) diagonal.
// all-pairs over every valid pair, or a seeded sample of n distinct
// positions drawn without replacement. A constant plane has zero variance
// and no defined coefficient.
double apc(std::span<const std::uint8_t> plane, std::uint32_t width,
           std::uint32_t height, Direction dir);
double apc_sampled(std::span<const std::uint8_t> plane, std::uint32_t width,
                   std::uint32_t height, Direction dir, std::uint32_t n,
                   std::uint64_t seed);

// Percentage of positions at which the planes differ.
double npcr(std::span<const std::uint8_t> c1, std::span<const std::uint8_t> c2);

// Mean absolute difference scaled by the maximum intensity 255, in percent.
double uaci(std::span<const std::uint8_t> c1, std::span<const std::uint8_t> c2);

// Metrics plus histogram for one plane; npcr/uaci filled when a counterpart
// plane of equal size is supplied.
AnalysisReport analyze_plane(std::span<const std::uint8_t> plane,
                             std::uint32_t width, std::uint32_t height,
                             std::span<const std::uint8_t> pair = {});

struct DiffusionResult {
  double npcr_percent = 0.0;
  double uaci_percent = 0.0;
};

struct KeySensitivityResult {
  double cipher_npcr_percent = 0.0;       // NPCR between the two ciphertexts
  double wrong_key_entropy = 0.0;         // entropy of the misdecrypted plane
  double wrong_key_block_entropy_min = 0.0;  // worst 256x256 block of it
};

struct NoiseRobustnessResult {
  std::uint64_t corrupted_bytes = 0;
  std::uint64_t differing_pixels = 0;
  double differing_fraction = 0.0;
};

// Experiment drivers reproducing the evaluation protocol. All three run with
// noise embedding off so the cipher is deterministic under a fixed key.

// Encrypts the plane and a copy with pixel (r, c) XORed by delta; returns the
// NPCR/UACI of the ciphertext pair. diff_out, when non-null, receives the
// absolute ciphertext difference plane (padded dimensions).
DiffusionResult diffusion_experiment(std::span<const std::uint8_t> plane,
                                     std::uint32_t width, std::uint32_t height,
                                     const Key256& key, std::uint32_t r,
                                     std::uint32_t c, std::uint8_t delta,
                                     std::vector<std::uint8_t>* diff_out = nullptr);

// Flips one key bit (MSB-first index in [0, 256)); reports ciphertext NPCR
// across the flip and the entropy of decrypting with the flipped key.
KeySensitivityResult key_sensitivity_experiment(
    std::span<const std::uint8_t> plane, std::uint32_t width,
    std::uint32_t height, const Key256& key, unsigned bit,
    std::vector<std::uint8_t>* diff_out = nullptr);

// Corrupts ceil(ratio * payload) distinct ciphertext bytes at seeded random
// positions (each XORed with a nonzero byte), decrypts, and compares with the
// clean decryption.
NoiseRobustnessResult noise_robustness_experiment(
    std::span<const std::uint8_t> plane, std::uint32_t width,
    std::uint32_t height, const Key256& key, double ratio, std::uint64_t seed,
    std::vector<std::uint8_t>* diff_out = nullptr);

}  // namespace lsic
