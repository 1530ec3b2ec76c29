#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsic {

// Index permutation of {0..N-1}. Element type is wide enough for any order
// this library accepts (squares are capped at order 256).
using Permutation = std::vector<std::uint32_t>;

// Order-N square over the symbol set {0..N-1} with precomputed row and column
// inverse lookup tables:
//   row_inv(r, y) = x  such that  cell(r, x) = y
//   col_inv(c, y) = x  such that  cell(x, c) = y
// Instances are immutable after construction and safe to share across threads.
class LatinSquare {
 public:
  static constexpr int kMinOrder = 2;
  static constexpr int kMaxOrder = 256;

  // Builds from raw row-major cells. Shape and symbol range are enforced;
  // the Latin property is not, so that validate() can classify bad squares.
  static LatinSquare from_cells(int order, std::vector<std::uint8_t> cells);

  // Row r of the result is seed left-rotated by shift[r].
  static LatinSquare from_shift_pair(const Permutation& seed,
                                     const Permutation& shift);

  int order() const noexcept { return order_; }

  std::uint8_t cell(int r, int c) const noexcept {
    return cells_[static_cast<std::size_t>(r) * order_ + c];
  }
  std::uint8_t row_inv(int r, int y) const noexcept {
    return row_inv_[static_cast<std::size_t>(r) * order_ + y];
  }
  std::uint8_t col_inv(int c, int y) const noexcept {
    return col_inv_[static_cast<std::size_t>(c) * order_ + y];
  }

  std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  std::span<const std::uint8_t> row_inv_table() const noexcept { return row_inv_; }
  std::span<const std::uint8_t> col_inv_table() const noexcept { return col_inv_; }

 private:
  LatinSquare() = default;
  void build_inverse_tables();

  int order_ = 0;
  std::vector<std::uint8_t> cells_;
  std::vector<std::uint8_t> row_inv_;  // indexed [r][y]
  std::vector<std::uint8_t> col_inv_;  // indexed [c][y]
};

// Argsort: returns the permutation p with q[p[0]] <= q[p[1]] <= ... Ties keep
// ascending original index, so integer sequences with collisions still yield
// a well-defined permutation.
template <typename Seq>
Permutation sort_map(const Seq& q) {
  const std::size_t n = std::size(q);
  if (n == 0) {
    throw std::invalid_argument("sort_map: empty sequence");
  }
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::stable_sort(p.begin(), p.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return q[a] < q[b]; });
  return p;
}

// Left circular shift: output[i] = q[(i + v) mod N].
Permutation row_shift(const Permutation& q, std::uint64_t v);

// Keyed square from two same-length sequences: rows are circular shifts of
// sort_map(q1), offset per row by sort_map(q2). Every output is Latin by
// construction because the shift offsets form a permutation.
template <typename Seq1, typename Seq2>
LatinSquare lsg(const Seq1& q1, const Seq2& q2) {
  if (std::size(q1) != std::size(q2)) {
    throw std::invalid_argument("lsg: sequence length mismatch");
  }
  return LatinSquare::from_shift_pair(sort_map(q1), sort_map(q2));
}

// Forward/inverse row and column mappings. These are the S-box and P-box
// bijections: each row and each column of a Latin square is a permutation of
// {0..N-1}, usable as a lookup table in both directions.
std::uint8_t frm(const LatinSquare& sq, int r, int x);
std::uint8_t irm(const LatinSquare& sq, int r, int y);
std::uint8_t fcm(const LatinSquare& sq, int x, int c);
std::uint8_t icm(const LatinSquare& sq, int y, int c);

// True iff every row and column is a permutation of {0..N-1} and both
// inverse tables are consistent with the cells.
bool validate(const LatinSquare& sq) noexcept;

// Debug form: N lines of N space-separated decimal symbols, row-major.
std::string to_text(const LatinSquare& sq);

}  // namespace lsic
