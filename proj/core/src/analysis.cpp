#include "lsic/analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace lsic {

namespace {

// Deterministic uniform draws on top of the fixed LCG; used wherever a seeded
// experiment must reproduce bit-for-bit across platforms.
class DetRand {
 public:
  explicit DetRand(std::uint64_t seed) : state_(prng_next(seed)) {}

  std::uint64_t next() noexcept {
    state_ = prng_next(state_);
    return state_;
  }

  // Unbiased value in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t limit = n * (~std::uint64_t{0} / n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

 private:
  std::uint64_t state_;
};

struct PairOffsets {
  std::uint32_t dr, dc;
};

PairOffsets offsets_for(Direction dir) {
  switch (dir) {
    case Direction::horizontal:
      return {0, 1};
    case Direction::vertical:
      return {1, 0};
    case Direction::diagonal:
      return {1, 1};
  }
  throw std::invalid_argument("unknown direction");
}

void check_plane_shape(std::span<const std::uint8_t> plane, std::uint32_t width,
                       std::uint32_t height) {
  if (plane.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("plane size does not match dimensions");
  }
}

struct PairAccumulator {
  std::uint64_t n = 0;
  std::int64_t sum_a = 0, sum_b = 0;
  std::int64_t sum_aa = 0, sum_bb = 0, sum_ab = 0;

  void add(std::uint8_t a, std::uint8_t b) noexcept {
    ++n;
    sum_a += a;
    sum_b += b;
    sum_aa += static_cast<std::int64_t>(a) * a;
    sum_bb += static_cast<std::int64_t>(b) * b;
    sum_ab += static_cast<std::int64_t>(a) * b;
  }

  double correlation() const {
    const double cnt = static_cast<double>(n);
    const double mean_a = static_cast<double>(sum_a) / cnt;
    const double mean_b = static_cast<double>(sum_b) / cnt;
    const double var_a = static_cast<double>(sum_aa) / cnt - mean_a * mean_a;
    const double var_b = static_cast<double>(sum_bb) / cnt - mean_b * mean_b;
    if (var_a <= 0.0 || var_b <= 0.0) {
      throw std::domain_error("zero variance: correlation undefined");
    }
    const double cov = static_cast<double>(sum_ab) / cnt - mean_a * mean_b;
    return cov / std::sqrt(var_a * var_b);
  }
};

}  // namespace

std::array<std::uint64_t, 256> histogram(std::span<const std::uint8_t> plane) {
  std::array<std::uint64_t, 256> h{};
  for (std::uint8_t v : plane) ++h[v];
  return h;
}

double entropy(std::span<const std::uint8_t> plane) {
  if (plane.empty()) {
    throw std::invalid_argument("entropy: empty plane");
  }
  const std::array<std::uint64_t, 256> h = histogram(plane);
  const double total = static_cast<double>(plane.size());
  double bits = 0.0;
  for (std::uint64_t count : h) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / total;
    bits -= p * std::log2(p);
  }
  return bits;
}

double apc(std::span<const std::uint8_t> plane, std::uint32_t width,
           std::uint32_t height, Direction dir) {
  check_plane_shape(plane, width, height);
  const auto [dr, dc] = offsets_for(dir);
  if (height <= dr || width <= dc) {
    throw std::invalid_argument("plane too small for adjacency pairs");
  }
  const std::uint32_t rows = height - dr;
  const std::uint32_t cols = width - dc;
  if (static_cast<std::uint64_t>(rows) * cols < 2) {
    throw std::invalid_argument("plane too small for adjacency pairs");
  }
  PairAccumulator acc;
  for (std::uint32_t r = 0; r < rows; ++r) {
    const std::uint8_t* row = plane.data() + static_cast<std::size_t>(r) * width;
    const std::uint8_t* adj =
        plane.data() + static_cast<std::size_t>(r + dr) * width + dc;
    for (std::uint32_t c = 0; c < cols; ++c) {
      acc.add(row[c], adj[c]);
    }
  }
  return acc.correlation();
}

double apc_sampled(std::span<const std::uint8_t> plane, std::uint32_t width,
                   std::uint32_t height, Direction dir, std::uint32_t n,
                   std::uint64_t seed) {
  check_plane_shape(plane, width, height);
  const auto [dr, dc] = offsets_for(dir);
  if (height <= dr || width <= dc) {
    throw std::invalid_argument("plane too small for adjacency pairs");
  }
  const std::uint64_t rows = height - dr;
  const std::uint64_t cols = width - dc;
  const std::uint64_t available = rows * cols;
  if (available < 2 || n < 2) {
    throw std::invalid_argument("need at least 2 pairs");
  }
  if (n >= available) {
    return apc(plane, width, height, dir);  // sample would cover everything
  }
  DetRand rand(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(n * 2);
  PairAccumulator acc;
  while (chosen.size() < n) {
    const std::uint64_t pos = rand.below(available);
    if (!chosen.insert(pos).second) continue;
    const std::uint32_t r = static_cast<std::uint32_t>(pos / cols);
    const std::uint32_t c = static_cast<std::uint32_t>(pos % cols);
    acc.add(plane[static_cast<std::size_t>(r) * width + c],
            plane[static_cast<std::size_t>(r + dr) * width + c + dc]);
  }
  return acc.correlation();
}

double npcr(std::span<const std::uint8_t> c1, std::span<const std::uint8_t> c2) {
  if (c1.size() != c2.size()) {
    throw std::invalid_argument("npcr: plane size mismatch");
  }
  if (c1.empty()) {
    throw std::invalid_argument("npcr: empty planes");
  }
  std::uint64_t diff = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    diff += c1[i] != c2[i];
  }
  return 100.0 * static_cast<double>(diff) / static_cast<double>(c1.size());
}

double uaci(std::span<const std::uint8_t> c1, std::span<const std::uint8_t> c2) {
  if (c1.size() != c2.size()) {
    throw std::invalid_argument("uaci: plane size mismatch");
  }
  if (c1.empty()) {
    throw std::invalid_argument("uaci: empty planes");
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    sum += static_cast<std::uint64_t>(std::abs(int{c1[i]} - int{c2[i]}));
  }
  return 100.0 * static_cast<double>(sum) /
         (255.0 * static_cast<double>(c1.size()));
}

AnalysisReport analyze_plane(std::span<const std::uint8_t> plane,
                             std::uint32_t width, std::uint32_t height,
                             std::span<const std::uint8_t> pair) {
  check_plane_shape(plane, width, height);
  AnalysisReport report;
  report.entropy = entropy(plane);
  report.apc_horizontal = apc(plane, width, height, Direction::horizontal);
  report.apc_vertical = apc(plane, width, height, Direction::vertical);
  report.apc_diagonal = apc(plane, width, height, Direction::diagonal);
  report.histogram = histogram(plane);
  if (!pair.empty()) {
    report.npcr_percent = npcr(plane, pair);
    report.uaci_percent = uaci(plane, pair);
  }
  return report;
}

namespace {

PlaneImage wrap_gray(std::span<const std::uint8_t> plane, std::uint32_t width,
                     std::uint32_t height) {
  PlaneImage img;
  img.width = width;
  img.height = height;
  img.channels = 1;
  img.planes.emplace_back(plane.begin(), plane.end());
  return img;
}

void fill_abs_diff(std::span<const std::uint8_t> a,
                   std::span<const std::uint8_t> b,
                   std::vector<std::uint8_t>* out) {
  if (!out) return;
  out->resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    (*out)[i] = static_cast<std::uint8_t>(std::abs(int{a[i]} - int{b[i]}));
  }
}

double min_block_entropy(std::span<const std::uint8_t> plane,
                         std::uint32_t width, std::uint32_t height) {
  if (width < kTileSize || height < kTileSize) {
    return entropy(plane);
  }
  double best = 8.0;
  std::vector<std::uint8_t> block(static_cast<std::size_t>(kTileSize) * kTileSize);
  for (std::uint32_t tr = 0; tr + kTileSize <= height; tr += kTileSize) {
    for (std::uint32_t tc = 0; tc + kTileSize <= width; tc += kTileSize) {
      for (std::uint32_t r = 0; r < kTileSize; ++r) {
        const std::uint8_t* src =
            plane.data() + static_cast<std::size_t>(tr + r) * width + tc;
        std::copy(src, src + kTileSize,
                  block.begin() + static_cast<std::size_t>(r) * kTileSize);
      }
      best = std::min(best, entropy(block));
    }
  }
  return best;
}

}  // namespace

DiffusionResult diffusion_experiment(std::span<const std::uint8_t> plane,
                                     std::uint32_t width, std::uint32_t height,
                                     const Key256& key, std::uint32_t r,
                                     std::uint32_t c, std::uint8_t delta,
                                     std::vector<std::uint8_t>* diff_out) {
  check_plane_shape(plane, width, height);
  if (r >= height || c >= width) {
    throw std::out_of_range("pixel coordinates outside the plane");
  }
  EncryptOptions opts;
  opts.embed_noise = false;

  PlaneImage original = wrap_gray(plane, width, height);
  PlaneImage modified = original;
  modified.planes[0][static_cast<std::size_t>(r) * width + c] ^= delta;

  const CipherContainer c1 = encrypt_image(original, key, opts);
  const CipherContainer c2 = encrypt_image(modified, key, opts);
  fill_abs_diff(c1.payload[0], c2.payload[0], diff_out);
  return {npcr(c1.payload[0], c2.payload[0]),
          uaci(c1.payload[0], c2.payload[0])};
}

KeySensitivityResult key_sensitivity_experiment(
    std::span<const std::uint8_t> plane, std::uint32_t width,
    std::uint32_t height, const Key256& key, unsigned bit,
    std::vector<std::uint8_t>* diff_out) {
  check_plane_shape(plane, width, height);
  EncryptOptions opts;
  opts.embed_noise = false;

  const Key256 flipped = flip_key_bit(key, bit);
  const PlaneImage img = wrap_gray(plane, width, height);
  const CipherContainer c1 = encrypt_image(img, key, opts);
  const CipherContainer c2 = encrypt_image(img, flipped, opts);
  fill_abs_diff(c1.payload[0], c2.payload[0], diff_out);

  const PlaneImage wrong = decrypt_image(c1, flipped);
  KeySensitivityResult result;
  result.cipher_npcr_percent = npcr(c1.payload[0], c2.payload[0]);
  result.wrong_key_entropy = entropy(wrong.planes[0]);
  result.wrong_key_block_entropy_min =
      min_block_entropy(wrong.planes[0], width, height);
  return result;
}

NoiseRobustnessResult noise_robustness_experiment(
    std::span<const std::uint8_t> plane, std::uint32_t width,
    std::uint32_t height, const Key256& key, double ratio, std::uint64_t seed,
    std::vector<std::uint8_t>* diff_out) {
  check_plane_shape(plane, width, height);
  if (ratio < 0.0 || ratio > 1.0) {
    throw std::invalid_argument("corruption ratio must be in [0, 1]");
  }
  EncryptOptions opts;
  opts.embed_noise = false;

  const PlaneImage img = wrap_gray(plane, width, height);
  CipherContainer ct = encrypt_image(img, key, opts);
  const PlaneImage clean = decrypt_image(ct, key);

  const std::uint64_t total = ct.payload[0].size();
  const std::uint64_t corrupt =
      static_cast<std::uint64_t>(std::ceil(ratio * static_cast<double>(total)));

  DetRand rand(seed);
  std::unordered_set<std::uint64_t> positions;
  positions.reserve(corrupt * 2);
  while (positions.size() < corrupt) {
    const std::uint64_t pos = rand.below(total);
    if (!positions.insert(pos).second) continue;
    ct.payload[0][pos] ^=
        static_cast<std::uint8_t>(1 + rand.below(255));  // guaranteed change
  }

  const PlaneImage noisy = decrypt_image(ct, key);
  fill_abs_diff(clean.planes[0], noisy.planes[0], diff_out);

  std::uint64_t differing = 0;
  for (std::size_t i = 0; i < clean.planes[0].size(); ++i) {
    differing += clean.planes[0][i] != noisy.planes[0][i];
  }
  NoiseRobustnessResult result;
  result.corrupted_bytes = corrupt;
  result.differing_pixels = differing;
  result.differing_fraction =
      static_cast<double>(differing) / static_cast<double>(clean.planes[0].size());
  return result;
}

}  // namespace lsic
