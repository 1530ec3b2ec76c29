#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lsic/latin_square.hpp"

namespace lsic {

// N x N array of symbols in [0, N). At production scale N = 256 and the
// symbols are image bytes; small orders exist so every primitive can be
// exercised exhaustively against the order-4 worked example.
class SymbolBlock {
 public:
  explicit SymbolBlock(int order);
  SymbolBlock(int order, std::vector<std::uint8_t> data);

  int order() const noexcept { return order_; }

  std::uint8_t at(int r, int c) const noexcept {
    return data_[static_cast<std::size_t>(r) * order_ + c];
  }
  void set(int r, int c, std::uint8_t v) noexcept {
    data_[static_cast<std::size_t>(r) * order_ + c] = v;
  }

  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> data() noexcept { return data_; }

  bool operator==(const SymbolBlock&) const = default;

 private:
  int order_;
  std::vector<std::uint8_t> data_;
};

// d = 0: identity; d = 1: flip rows top<->bottom; d = 2: flip columns
// left<->right. An involution for every d.
SymbolBlock spatial_rotate(const SymbolBlock& x, int d);

// Whitening: C = SR(P, D mod 3) ^ L elementwise, inverted by
// P = SR(C ^ L, D mod 3). XOR is addition in GF(2^8) (and in GF(2^k) for any
// power-of-two order), which makes the two lines mutual inverses; the order
// must therefore be a power of two.
SymbolBlock whiten_encrypt(const LatinSquare& sq, const SymbolBlock& p, int d_param);
SymbolBlock whiten_decrypt(const LatinSquare& sq, const SymbolBlock& c, int d_param);

// Row S-box: substitution chained down each column,
//   C(0,c) = L(0, P(0,c));  C(r,c) = L(C(r-1,c), P(r,c)).
SymbolBlock lsrs_encrypt(const LatinSquare& sq, const SymbolBlock& p);
SymbolBlock lsrs_decrypt(const LatinSquare& sq, const SymbolBlock& c);

// Column S-box: substitution chained along each row,
//   C(r,0) = L(P(r,0), 0);  C(r,c) = L(P(r,c), C(r,c-1)).
SymbolBlock lscs_encrypt(const LatinSquare& sq, const SymbolBlock& p);
SymbolBlock lscs_decrypt(const LatinSquare& sq, const SymbolBlock& c);

// Row P-box: permutes within rows, C(r,c) = P(r, L(r,c)).
SymbolBlock lsrp_forward(const LatinSquare& sq, const SymbolBlock& p);
SymbolBlock lsrp_inverse(const LatinSquare& sq, const SymbolBlock& c);

// Column P-box: permutes within columns, C(r,c) = P(L(r,c), c).
SymbolBlock lscp_forward(const LatinSquare& sq, const SymbolBlock& p);
SymbolBlock lscp_inverse(const LatinSquare& sq, const SymbolBlock& c);

// Full permutation stage: row P-box then column P-box. Pure position
// shuffle, so the global histogram is preserved.
SymbolBlock lsp_encrypt(const LatinSquare& sq, const SymbolBlock& p);
SymbolBlock lsp_decrypt(const LatinSquare& sq, const SymbolBlock& c);

}  // namespace lsic
