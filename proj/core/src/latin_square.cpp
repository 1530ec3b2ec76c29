#include "lsic/latin_square.hpp"

#include <sstream>

namespace lsic {

namespace {

void check_order(std::size_t n) {
  if (n < LatinSquare::kMinOrder || n > LatinSquare::kMaxOrder) {
    throw std::invalid_argument("latin square order must be in [2, 256], got " +
                                std::to_string(n));
  }
}

void check_index(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw std::out_of_range(std::string(what) + " out of range [0, " +
                            std::to_string(n) + ")");
  }
}

bool is_index_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

LatinSquare LatinSquare::from_cells(int order, std::vector<std::uint8_t> cells) {
  check_order(order < 0 ? 0 : static_cast<std::size_t>(order));
  if (cells.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("cell array size does not match order");
  }
  for (std::uint8_t v : cells) {
    if (v >= order) {
      throw std::invalid_argument("cell symbol out of range [0, N)");
    }
  }
  LatinSquare sq;
  sq.order_ = order;
  sq.cells_ = std::move(cells);
  sq.build_inverse_tables();
  return sq;
}

LatinSquare LatinSquare::from_shift_pair(const Permutation& seed,
                                         const Permutation& shift) {
  const std::size_t n = seed.size();
  check_order(n);
  if (shift.size() != n) {
    throw std::invalid_argument("seed/shift length mismatch");
  }
  if (!is_index_permutation(seed) || !is_index_permutation(shift)) {
    throw std::invalid_argument("seed and shift must be index permutations");
  }
  LatinSquare sq;
  sq.order_ = static_cast<int>(n);
  sq.cells_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t v = shift[r];
    for (std::size_t c = 0; c < n; ++c) {
      sq.cells_[r * n + c] = static_cast<std::uint8_t>(seed[(c + v) % n]);
    }
  }
  sq.build_inverse_tables();
  return sq;
}

void LatinSquare::build_inverse_tables() {
  const std::size_t n = static_cast<std::size_t>(order_);
  row_inv_.assign(n * n, 0);
  col_inv_.assign(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint8_t y = cells_[r * n + c];
      row_inv_[r * n + y] = static_cast<std::uint8_t>(c);
      col_inv_[c * n + y] = static_cast<std::uint8_t>(r);
    }
  }
}

Permutation row_shift(const Permutation& q, std::uint64_t v) {
  const std::size_t n = q.size();
  if (n == 0) {
    throw std::invalid_argument("row_shift: empty sequence");
  }
  Permutation out(n);
  const std::size_t off = static_cast<std::size_t>(v % n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = q[(i + off) % n];
  }
  return out;
}

std::uint8_t frm(const LatinSquare& sq, int r, int x) {
  check_index(r, sq.order(), "row");
  check_index(x, sq.order(), "input");
  return sq.cell(r, x);
}

std::uint8_t irm(const LatinSquare& sq, int r, int y) {
  check_index(r, sq.order(), "row");
  check_index(y, sq.order(), "symbol");
  return sq.row_inv(r, y);
}

std::uint8_t fcm(const LatinSquare& sq, int x, int c) {
  check_index(x, sq.order(), "input");
  check_index(c, sq.order(), "column");
  return sq.cell(x, c);
}

std::uint8_t icm(const LatinSquare& sq, int y, int c) {
  check_index(y, sq.order(), "symbol");
  check_index(c, sq.order(), "column");
  return sq.col_inv(c, y);
}

bool validate(const LatinSquare& sq) noexcept {
  const int n = sq.order();
  if (n < LatinSquare::kMinOrder || n > LatinSquare::kMaxOrder) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n));

  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (int c = 0; c < n; ++c) {
      const std::uint8_t v = sq.cell(r, c);
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (int r = 0; r < n; ++r) {
      const std::uint8_t v = sq.cell(r, c);
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
  }
  // Inverse tables must agree with the cells. Together with the permutation
  // property above this covers both identity directions.
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const std::uint8_t y = sq.cell(r, c);
      if (sq.row_inv(r, y) != c) return false;
      if (sq.col_inv(c, y) != r) return false;
    }
  }
  return true;
}

std::string to_text(const LatinSquare& sq) {
  std::ostringstream out;
  const int n = sq.order();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << static_cast<int>(sq.cell(r, c));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lsic
