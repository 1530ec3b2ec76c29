#include "lsic/cipher.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lsic {

namespace {

constexpr std::uint64_t kNoiseDomain = 0x6c73622d6e6f6973ULL;
constexpr int kBlockOrder = 256;

std::uint64_t os_entropy64() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Distinct deterministic stream per (plane, tile) so tile workers never share
// noise state and the result is independent of scheduling.
std::uint64_t tile_noise_seed(std::uint64_t base, std::uint32_t plane,
                              std::uint32_t tile) {
  std::uint64_t s = prng_next(base ^ kNoiseDomain);
  return prng_next(s ^ ((static_cast<std::uint64_t>(plane) << 32) | tile));
}

void check_block(const SymbolBlock& b) {
  if (b.order() != kBlockOrder) {
    throw std::invalid_argument("cipher blocks are 256x256");
  }
}

void check_schedule(const KeySchedule& s) {
  if (s.squares.size() != kSquareCount) {
    throw std::invalid_argument("key schedule must hold 9 squares");
  }
}

SymbolBlock spn_encrypt(SymbolBlock x, const KeySchedule& s) {
  for (int n = 0; n < kRounds; ++n) {
    x = whiten_encrypt(s.squares[n], x, s.rotations[n]);
    x = (n % 2 != 0) ? lscs_encrypt(s.squares[n], x)
                     : lsrs_encrypt(s.squares[n], x);
    x = lsp_encrypt(s.squares[n], x);
  }
  return whiten_encrypt(s.squares[kRounds], x, s.rotations[kRounds]);
}

SymbolBlock spn_decrypt(const SymbolBlock& c, const KeySchedule& s) {
  SymbolBlock x = whiten_decrypt(s.squares[kRounds], c, s.rotations[kRounds]);
  for (int n = kRounds - 1; n >= 0; --n) {
    x = lsp_decrypt(s.squares[n], x);
    x = (n % 2 != 0) ? lscs_decrypt(s.squares[n], x)
                     : lsrs_decrypt(s.squares[n], x);
    x = whiten_decrypt(s.squares[n], x, s.rotations[n]);
  }
  return x;
}

void run_parallel(std::size_t jobs, int threads,
                  const std::function<void(std::size_t)>& fn) {
  unsigned want = threads > 0 ? static_cast<unsigned>(threads)
                              : std::thread::hardware_concurrency();
  if (want == 0) want = 1;
  if (want > jobs) want = static_cast<unsigned>(jobs);
  if (want <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(want);
  for (unsigned t = 0; t < want; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void check_image(const PlaneImage& img) {
  if (img.width == 0 || img.height == 0) {
    throw std::invalid_argument("image dimensions must be at least 1x1");
  }
  if (img.channels != 1 && img.channels != 3) {
    throw std::invalid_argument("channel count must be 1 or 3");
  }
  if (img.planes.size() != img.channels) {
    throw std::invalid_argument("plane count does not match channels");
  }
  const std::size_t expect =
      static_cast<std::size_t>(img.width) * img.height;
  for (const auto& plane : img.planes) {
    if (plane.size() != expect) {
      throw std::invalid_argument("plane size does not match dimensions");
    }
  }
}

SymbolBlock extract_tile(const std::vector<std::uint8_t>& plane,
                         std::uint32_t padded_w, std::uint32_t tile_r,
                         std::uint32_t tile_c) {
  SymbolBlock b(kBlockOrder);
  std::uint8_t* dst = b.data().data();
  const std::size_t base =
      static_cast<std::size_t>(tile_r) * kTileSize * padded_w +
      static_cast<std::size_t>(tile_c) * kTileSize;
  for (std::uint32_t r = 0; r < kTileSize; ++r) {
    const std::uint8_t* src = plane.data() + base + static_cast<std::size_t>(r) * padded_w;
    std::copy(src, src + kTileSize, dst + static_cast<std::size_t>(r) * kTileSize);
  }
  return b;
}

void store_tile(std::vector<std::uint8_t>& plane, std::uint32_t padded_w,
                std::uint32_t tile_r, std::uint32_t tile_c,
                const SymbolBlock& b) {
  const std::uint8_t* src = b.data().data();
  const std::size_t base =
      static_cast<std::size_t>(tile_r) * kTileSize * padded_w +
      static_cast<std::size_t>(tile_c) * kTileSize;
  for (std::uint32_t r = 0; r < kTileSize; ++r) {
    std::uint8_t* dst = plane.data() + base + static_cast<std::size_t>(r) * padded_w;
    std::copy(src + static_cast<std::size_t>(r) * kTileSize,
              src + static_cast<std::size_t>(r + 1) * kTileSize, dst);
  }
}

}  // namespace

NoiseBits::NoiseBits(std::uint64_t seed)
    : state_(prng_next(seed ^ kNoiseDomain)) {}

std::uint64_t NoiseBits::next_word() noexcept {
  state_ = prng_next(state_);
  return state_;
}

SymbolBlock lsb_noise_embed(const SymbolBlock& p, NoiseBits& bits) {
  check_block(p);
  SymbolBlock out = p;
  std::span<std::uint8_t> d = out.data();
  for (std::size_t i = 0; i < d.size(); i += 64) {
    std::uint64_t w = bits.next_word();
    for (int b = 0; b < 64; ++b) {
      d[i + b] ^= static_cast<std::uint8_t>((w >> b) & 1u);
    }
  }
  return out;
}

SymbolBlock encrypt_block(const SymbolBlock& p, const KeySchedule& schedule,
                          const EncryptOptions& opts) {
  check_block(p);
  check_schedule(schedule);
  if (opts.embed_noise) {
    NoiseBits bits(opts.noise_seed ? *opts.noise_seed : os_entropy64());
    return spn_encrypt(lsb_noise_embed(p, bits), schedule);
  }
  return spn_encrypt(p, schedule);
}

SymbolBlock decrypt_block(const SymbolBlock& c, const KeySchedule& schedule) {
  check_block(c);
  check_schedule(schedule);
  return spn_decrypt(c, schedule);
}

CipherContainer encrypt_image(const PlaneImage& img, const Key256& key,
                              const EncryptOptions& opts, int threads) {
  check_image(img);
  const KeySchedule schedule = derive_schedule(key);

  CipherContainer ct;
  ct.noise_embedded = opts.embed_noise;
  ct.channels = img.channels;
  ct.width = img.width;
  ct.height = img.height;

  const std::uint32_t pw = ct.padded_width();
  const std::uint32_t ph = ct.padded_height();
  ct.payload.resize(img.channels);
  for (std::uint8_t ch = 0; ch < img.channels; ++ch) {
    auto& plane = ct.payload[ch];
    plane.assign(static_cast<std::size_t>(pw) * ph, 0);
    for (std::uint32_t r = 0; r < img.height; ++r) {
      std::copy(img.planes[ch].begin() + static_cast<std::size_t>(r) * img.width,
                img.planes[ch].begin() + static_cast<std::size_t>(r + 1) * img.width,
                plane.begin() + static_cast<std::size_t>(r) * pw);
    }
  }

  const std::uint32_t tiles_x = pw / kTileSize;
  const std::uint32_t tiles_y = ph / kTileSize;
  const std::size_t tiles_per_plane = static_cast<std::size_t>(tiles_x) * tiles_y;
  const std::size_t jobs = tiles_per_plane * img.channels;
  const std::uint64_t noise_base =
      opts.embed_noise ? (opts.noise_seed ? *opts.noise_seed : os_entropy64())
                       : 0;

  run_parallel(jobs, threads, [&](std::size_t job) {
    const std::uint32_t ch = static_cast<std::uint32_t>(job / tiles_per_plane);
    const std::uint32_t tile = static_cast<std::uint32_t>(job % tiles_per_plane);
    const std::uint32_t tr = tile / tiles_x;
    const std::uint32_t tc = tile % tiles_x;
    SymbolBlock x = extract_tile(ct.payload[ch], pw, tr, tc);
    if (opts.embed_noise) {
      NoiseBits bits(tile_noise_seed(noise_base, ch, tile));
      x = lsb_noise_embed(x, bits);
    }
    store_tile(ct.payload[ch], pw, tr, tc, spn_encrypt(std::move(x), schedule));
  });
  return ct;
}

PlaneImage decrypt_image(const CipherContainer& ct, const Key256& key,
                         int threads) {
  if (ct.version != 1) {
    throw std::invalid_argument("unsupported container version");
  }
  if (ct.width == 0 || ct.height == 0) {
    throw std::invalid_argument("container dimensions must be at least 1x1");
  }
  if (ct.channels != 1 && ct.channels != 3) {
    throw std::invalid_argument("container channel count must be 1 or 3");
  }
  const std::uint32_t pw = ct.padded_width();
  const std::uint32_t ph = ct.padded_height();
  const std::size_t padded_size = static_cast<std::size_t>(pw) * ph;
  if (ct.payload.size() != ct.channels) {
    throw std::invalid_argument("container payload plane count mismatch");
  }
  for (const auto& plane : ct.payload) {
    if (plane.size() != padded_size) {
      throw std::invalid_argument("container payload plane size mismatch");
    }
  }

  const KeySchedule schedule = derive_schedule(key);
  std::vector<std::vector<std::uint8_t>> padded = ct.payload;

  const std::uint32_t tiles_x = pw / kTileSize;
  const std::uint32_t tiles_y = ph / kTileSize;
  const std::size_t tiles_per_plane = static_cast<std::size_t>(tiles_x) * tiles_y;
  const std::size_t jobs = tiles_per_plane * ct.channels;

  run_parallel(jobs, threads, [&](std::size_t job) {
    const std::uint32_t ch = static_cast<std::uint32_t>(job / tiles_per_plane);
    const std::uint32_t tile = static_cast<std::uint32_t>(job % tiles_per_plane);
    const std::uint32_t tr = tile / tiles_x;
    const std::uint32_t tc = tile % tiles_x;
    SymbolBlock x = extract_tile(padded[ch], pw, tr, tc);
    store_tile(padded[ch], pw, tr, tc, spn_decrypt(x, schedule));
  });

  PlaneImage img;
  img.width = ct.width;
  img.height = ct.height;
  img.channels = ct.channels;
  img.planes.resize(ct.channels);
  for (std::uint8_t ch = 0; ch < ct.channels; ++ch) {
    auto& plane = img.planes[ch];
    plane.resize(static_cast<std::size_t>(ct.width) * ct.height);
    for (std::uint32_t r = 0; r < ct.height; ++r) {
      std::copy(padded[ch].begin() + static_cast<std::size_t>(r) * pw,
                padded[ch].begin() + static_cast<std::size_t>(r) * pw + ct.width,
                plane.begin() + static_cast<std::size_t>(r) * ct.width);
    }
  }
  return img;
}

}  // namespace lsic
