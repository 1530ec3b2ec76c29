#include "lsic/primitives.hpp"

#include <bit>
#include <string>

namespace lsic {

namespace {

void check_same_order(const LatinSquare& sq, const SymbolBlock& b) {
  if (sq.order() != b.order()) {
    throw std::invalid_argument("square order " + std::to_string(sq.order()) +
                                " does not match block order " +
                                std::to_string(b.order()));
  }
}

}  // namespace

SymbolBlock::SymbolBlock(int order)
    : order_(order), data_(static_cast<std::size_t>(order) * order, 0) {
  if (order < LatinSquare::kMinOrder || order > LatinSquare::kMaxOrder) {
    throw std::invalid_argument("block order must be in [2, 256]");
  }
}

SymbolBlock::SymbolBlock(int order, std::vector<std::uint8_t> data)
    : order_(order), data_(std::move(data)) {
  if (order < LatinSquare::kMinOrder || order > LatinSquare::kMaxOrder) {
    throw std::invalid_argument("block order must be in [2, 256]");
  }
  if (data_.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("block data size does not match order");
  }
  if (order < 256) {
    for (std::uint8_t v : data_) {
      if (v >= order) {
        throw std::invalid_argument("block symbol out of range [0, N)");
      }
    }
  }
}

SymbolBlock spatial_rotate(const SymbolBlock& x, int d) {
  const int n = x.order();
  switch (d) {
    case 0:
      return x;
    case 1: {
      SymbolBlock y(n);
      for (int r = 0; r < n; ++r) {
        const std::uint8_t* src = x.data().data() + static_cast<std::size_t>(r) * n;
        std::uint8_t* dst =
            y.data().data() + static_cast<std::size_t>(n - 1 - r) * n;
        std::copy(src, src + n, dst);
      }
      return y;
    }
    case 2: {
      SymbolBlock y(n);
      for (int r = 0; r < n; ++r) {
        const std::uint8_t* src = x.data().data() + static_cast<std::size_t>(r) * n;
        std::uint8_t* dst = y.data().data() + static_cast<std::size_t>(r) * n;
        for (int c = 0; c < n; ++c) {
          dst[c] = src[n - 1 - c];
        }
      }
      return y;
    }
    default:
      throw std::invalid_argument("flip direction must be 0, 1 or 2");
  }
}

SymbolBlock whiten_encrypt(const LatinSquare& sq, const SymbolBlock& p,
                           int d_param) {
  check_same_order(sq, p);
  if (!std::has_single_bit(static_cast<unsigned>(sq.order()))) {
    throw std::invalid_argument("whitening requires a power-of-two order");
  }
  SymbolBlock c = spatial_rotate(p, ((d_param % 3) + 3) % 3);
  const std::uint8_t* l = sq.cells().data();
  std::uint8_t* out = c.data().data();
  const std::size_t total = c.data().size();
  for (std::size_t i = 0; i < total; ++i) {
    out[i] ^= l[i];
  }
  return c;
}

SymbolBlock whiten_decrypt(const LatinSquare& sq, const SymbolBlock& c,
                           int d_param) {
  check_same_order(sq, c);
  if (!std::has_single_bit(static_cast<unsigned>(sq.order()))) {
    throw std::invalid_argument("whitening requires a power-of-two order");
  }
  SymbolBlock mixed = c;
  const std::uint8_t* l = sq.cells().data();
  std::uint8_t* out = mixed.data().data();
  const std::size_t total = mixed.data().size();
  for (std::size_t i = 0; i < total; ++i) {
    out[i] ^= l[i];
  }
  return spatial_rotate(mixed, ((d_param % 3) + 3) % 3);
}

SymbolBlock lsrs_encrypt(const LatinSquare& sq, const SymbolBlock& p) {
  check_same_order(sq, p);
  const int n = p.order();
  SymbolBlock c(n);
  const std::uint8_t* cells = sq.cells().data();
  const std::uint8_t* in = p.data().data();
  std::uint8_t* out = c.data().data();
  // Row 0 substitutes through row 0 of the square; each later row chains on
  // the ciphertext byte directly above.
  for (int col = 0; col < n; ++col) {
    out[col] = cells[in[col]];
  }
  for (int r = 1; r < n; ++r) {
    const std::size_t row = static_cast<std::size_t>(r) * n;
    for (int col = 0; col < n; ++col) {
      out[row + col] =
          cells[static_cast<std::size_t>(out[row - n + col]) * n + in[row + col]];
    }
  }
  return c;
}

SymbolBlock lsrs_decrypt(const LatinSquare& sq, const SymbolBlock& c) {
  check_same_order(sq, c);
  const int n = c.order();
  SymbolBlock p(n);
  const std::uint8_t* rinv = sq.row_inv_table().data();
  const std::uint8_t* in = c.data().data();
  std::uint8_t* out = p.data().data();
  for (int col = 0; col < n; ++col) {
    out[col] = rinv[in[col]];
  }
  for (int r = 1; r < n; ++r) {
    const std::size_t row = static_cast<std::size_t>(r) * n;
    for (int col = 0; col < n; ++col) {
      out[row + col] =
          rinv[static_cast<std::size_t>(in[row - n + col]) * n + in[row + col]];
    }
  }
  return p;
}

SymbolBlock lscs_encrypt(const LatinSquare& sq, const SymbolBlock& p) {
  check_same_order(sq, p);
  const int n = p.order();
  SymbolBlock c(n);
  const std::uint8_t* cells = sq.cells().data();
  const std::uint8_t* in = p.data().data();
  std::uint8_t* out = c.data().data();
  for (int r = 0; r < n; ++r) {
    const std::size_t row = static_cast<std::size_t>(r) * n;
    std::uint8_t prev = cells[static_cast<std::size_t>(in[row]) * n];
    out[row] = prev;
    for (int col = 1; col < n; ++col) {
      prev = cells[static_cast<std::size_t>(in[row + col]) * n + prev];
      out[row + col] = prev;
    }
  }
  return c;
}

SymbolBlock lscs_decrypt(const LatinSquare& sq, const SymbolBlock& c) {
  check_same_order(sq, c);
  const int n = c.order();
  SymbolBlock p(n);
  const std::uint8_t* cinv = sq.col_inv_table().data();
  const std::uint8_t* in = c.data().data();
  std::uint8_t* out = p.data().data();
  for (int r = 0; r < n; ++r) {
    const std::size_t row = static_cast<std::size_t>(r) * n;
    out[row] = cinv[in[row]];
    for (int col = 1; col < n; ++col) {
      out[row + col] = cinv[static_cast<std::size_t>(in[row + col - 1]) * n +
                            in[row + col]];
    }
  }
  return p;
}

SymbolBlock lsrp_forward(const LatinSquare& sq, const SymbolBlock& p) {
  check_same_order(sq, p);
  const int n = p.order();
  SymbolBlock c(n);
  const std::uint8_t* cells = sq.cells().data();
  const std::uint8_t* in = p.data().data();
  std::uint8_t* out = c.data().data();
  for (int r = 0; r < n; ++r) {
    const std::size_t row = static_cast<std::size_t>(r) * n;
    for (int col = 0; col < n; ++col) {
      out[row + col] = in[row + cells[row + col]];
    }
  }
  return c;
}

SymbolBlock lsrp_inverse(const LatinSquare& sq, const SymbolBlock& c) {
  check_same_order(sq, c);
  const int n = c.order();
  SymbolBlock p(n);
  const std::uint8_t* rinv = sq.row_inv_table().data();
  const std::uint8_t* in = c.data().data();
  std::uint8_t* out = p.data().data();
  for (int r = 0; r < n; ++r) {
    const std::size_t row = static_cast<std::size_t>(r) * n;
    for (int col = 0; col < n; ++col) {
      out[row + col] = in[row + rinv[row + col]];
    }
  }
  return p;
}

SymbolBlock lscp_forward(const LatinSquare& sq, const SymbolBlock& p) {
  check_same_order(sq, p);
  const int n = p.order();
  SymbolBlock c(n);
  const std::uint8_t* cells = sq.cells().data();
  const std::uint8_t* in = p.data().data();
  std::uint8_t* out = c.data().data();
  for (int r = 0; r < n; ++r) {
    const std::size_t row = static_cast<std::size_t>(r) * n;
    for (int col = 0; col < n; ++col) {
      out[row + col] = in[static_cast<std::size_t>(cells[row + col]) * n + col];
    }
  }
  return c;
}

SymbolBlock lscp_inverse(const LatinSquare& sq, const SymbolBlock& c) {
  check_same_order(sq, c);
  const int n = c.order();
  SymbolBlock p(n);
  const std::uint8_t* cinv = sq.col_inv_table().data();
  const std::uint8_t* in = c.data().data();
  std::uint8_t* out = p.data().data();
  for (int r = 0; r < n; ++r) {
    const std::size_t row = static_cast<std::size_t>(r) * n;
    for (int col = 0; col < n; ++col) {
      out[row + col] =
          in[static_cast<std::size_t>(cinv[static_cast<std::size_t>(col) * n + r]) * n +
             col];
    }
  }
  return p;
}

SymbolBlock lsp_encrypt(const LatinSquare& sq, const SymbolBlock& p) {
  return lscp_forward(sq, lsrp_forward(sq, p));
}

SymbolBlock lsp_decrypt(const LatinSquare& sq, const SymbolBlock& c) {
  return lsrp_inverse(sq, lscp_inverse(sq, c));
}

}  // namespace lsic
