#include "lsic/image_io.hpp"

#include <fstream>

#include "lsic/endian.hpp"

namespace lsic {

namespace {

constexpr std::uint8_t kMagic[4] = {0x4C, 0x53, 0x49, 0x43};  // "LSIC"
constexpr std::size_t kHeaderSize = 16;

bool is_pnm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Netpbm token scanner: skips whitespace and '#' comments. Positions are
// absolute offsets into the input.
class PnmCursor {
 public:
  PnmCursor(std::span<const std::uint8_t> bytes, std::size_t start)
      : bytes_(bytes), pos_(start) {}

  std::size_t pos() const { return pos_; }

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_pnm_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  std::uint32_t read_number(const char* what) {
    skip_separators();
    if (pos_ >= bytes_.size() || bytes_[pos_] < '0' || bytes_[pos_] > '9') {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFull) {
        throw ParseError(std::string(what) + " out of range", pos_);
      }
      ++pos_;
    }
    return static_cast<std::uint32_t>(value);
  }

  // Exactly one whitespace byte separates the maxval from the payload.
  void expect_single_separator() {
    if (pos_ >= bytes_.size() || !is_pnm_space(bytes_[pos_])) {
      throw ParseError("expected whitespace before pixel data", pos_);
    }
    ++pos_;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
};

}  // namespace

PlaneImage read_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' ||
      (bytes[1] != '5' && bytes[1] != '6')) {
    throw ParseError("not a binary PGM (P5) or PPM (P6) image", 0);
  }
  const std::uint8_t channels = bytes[1] == '5' ? 1 : 3;

  PnmCursor cursor(bytes, 2);
  const std::uint32_t width = cursor.read_number("width");
  const std::uint32_t height = cursor.read_number("height");
  const std::uint32_t maxval = cursor.read_number("maxval");
  if (width == 0 || height == 0) {
    throw ParseError("image dimensions must be positive", cursor.pos());
  }
  if (maxval != 255) {
    throw ParseError("unsupported depth: maxval must be 255", cursor.pos());
  }
  cursor.expect_single_separator();
  const std::size_t payload_start = cursor.pos();

  const std::size_t pixels = static_cast<std::size_t>(width) * height;
  const std::size_t expect = pixels * channels;
  if (bytes.size() - payload_start < expect) {
    throw ParseError("truncated pixel payload", bytes.size());
  }

  PlaneImage img;
  img.width = width;
  img.height = height;
  img.channels = channels;
  img.planes.assign(channels, std::vector<std::uint8_t>(pixels));
  const std::uint8_t* src = bytes.data() + payload_start;
  if (channels == 1) {
    std::copy(src, src + pixels, img.planes[0].begin());
  } else {
    for (std::size_t i = 0; i < pixels; ++i) {
      img.planes[0][i] = src[3 * i];
      img.planes[1][i] = src[3 * i + 1];
      img.planes[2][i] = src[3 * i + 2];
    }
  }
  return img;
}

std::vector<std::uint8_t> write_image(const PlaneImage& img) {
  if (img.channels != 1 && img.channels != 3) {
    throw std::invalid_argument("channel count must be 1 or 3");
  }
  if (img.planes.size() != img.channels) {
    throw std::invalid_argument("plane count does not match channels");
  }
  const std::size_t pixels = static_cast<std::size_t>(img.width) * img.height;
  for (const auto& plane : img.planes) {
    if (plane.size() != pixels) {
      throw std::invalid_argument("plane size does not match dimensions");
    }
  }

  std::string header = (img.channels == 1 ? "P5\n" : "P6\n");
  header += std::to_string(img.width) + " " + std::to_string(img.height) +
            "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + pixels * img.channels);
  if (img.channels == 1) {
    out.insert(out.end(), img.planes[0].begin(), img.planes[0].end());
  } else {
    const std::size_t base = out.size();
    out.resize(base + pixels * 3);
    for (std::size_t i = 0; i < pixels; ++i) {
      out[base + 3 * i] = img.planes[0][i];
      out[base + 3 * i + 1] = img.planes[1][i];
      out[base + 3 * i + 2] = img.planes[2][i];
    }
  }
  return out;
}

CipherContainer read_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) {
    throw ParseError("container shorter than header", bytes.size());
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (bytes[i] != kMagic[i]) {
      throw ParseError("bad container magic", i);
    }
  }
  if (bytes[4] != 1) {
    throw ParseError("unsupported container version", 4);
  }
  if (bytes[5] & ~std::uint8_t{1}) {
    throw ParseError("unknown container flags", 5);
  }
  const std::uint8_t channels = bytes[6];
  if (channels != 1 && channels != 3) {
    throw ParseError("container channel count must be 1 or 3", 6);
  }
  if (bytes[7] != 0) {
    throw ParseError("reserved container byte must be zero", 7);
  }

  CipherContainer ct;
  ct.version = bytes[4];
  ct.noise_embedded = (bytes[5] & 1) != 0;
  ct.channels = channels;
  ct.width = load_be32(bytes.data() + 8);
  ct.height = load_be32(bytes.data() + 12);
  if (ct.width == 0 || ct.height == 0) {
    throw ParseError("container dimensions must be positive", 8);
  }

  const std::size_t plane_size =
      static_cast<std::size_t>(ct.padded_width()) * ct.padded_height();
  const std::size_t expect = kHeaderSize + plane_size * channels;
  if (bytes.size() != expect) {
    throw ParseError("container payload size mismatch", bytes.size());
  }
  ct.payload.resize(channels);
  for (std::uint8_t ch = 0; ch < channels; ++ch) {
    const std::uint8_t* src = bytes.data() + kHeaderSize + plane_size * ch;
    ct.payload[ch].assign(src, src + plane_size);
  }
  return ct;
}

std::vector<std::uint8_t> write_container(const CipherContainer& ct) {
  if (ct.version != 1) {
    throw std::invalid_argument("unsupported container version");
  }
  if (ct.channels != 1 && ct.channels != 3) {
    throw std::invalid_argument("container channel count must be 1 or 3");
  }
  if (ct.width == 0 || ct.height == 0) {
    throw std::invalid_argument("container dimensions must be positive");
  }
  const std::size_t plane_size =
      static_cast<std::size_t>(ct.padded_width()) * ct.padded_height();
  if (ct.payload.size() != ct.channels) {
    throw std::invalid_argument("container payload plane count mismatch");
  }
  for (const auto& plane : ct.payload) {
    if (plane.size() != plane_size) {
      throw std::invalid_argument("container payload plane size mismatch");
    }
  }

  std::vector<std::uint8_t> out(kHeaderSize + plane_size * ct.channels);
  std::copy(kMagic, kMagic + 4, out.begin());
  out[4] = ct.version;
  out[5] = ct.noise_embedded ? 1 : 0;
  out[6] = ct.channels;
  out[7] = 0;
  store_be32(out.data() + 8, ct.width);
  store_be32(out.data() + 12, ct.height);
  for (std::uint8_t ch = 0; ch < ct.channels; ++ch) {
    std::copy(ct.payload[ch].begin(), ct.payload[ch].end(),
              out.begin() + kHeaderSize + plane_size * ch);
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open file for writing: " + path);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("failed writing file: " + path);
  }
}

}  // namespace lsic
