#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "lsic/latin_square.hpp"

using namespace lsic;

namespace {

// The published order-4 worked example; reused all over the test suites.
LatinSquare reference_square4() {
  const std::vector<double> q1 = {.1, .6, .9, .7};
  const std::vector<double> q2 = {.3, .9, .4, .2};
  return lsg(q1, q2);
}

std::vector<std::uint64_t> random_values(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = rng();
  return v;
}

}  // namespace

TEST_CASE("sort_map known answers") {
  CHECK(sort_map(std::vector<double>{.1, .6, .9, .7}) ==
        Permutation{0, 1, 3, 2});
  CHECK(sort_map(std::vector<double>{.3, .9, .4, .2}) ==
        Permutation{3, 0, 2, 1});
  CHECK(sort_map(std::vector<int>{5}) == Permutation{0});
  CHECK(sort_map(std::vector<int>{7, 7, 7}) == Permutation{0, 1, 2});
}

TEST_CASE("sort_map rejects empty input") {
  CHECK_THROWS_AS(sort_map(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("sort_map output sorts the sequence") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = random_values(rng, 1 + static_cast<std::size_t>(rng() % 300));
    const Permutation p = sort_map(q);
    REQUIRE(p.size() == q.size());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      CHECK(q[p[i]] <= q[p[i + 1]]);
    }
    // p must be a permutation of the index range
    std::vector<bool> seen(p.size(), false);
    for (auto v : p) {
      REQUIRE(v < p.size());
      CHECK(!seen[v]);
      seen[v] = true;
    }
  }
}

TEST_CASE("row_shift ring shifts left") {
  const Permutation q = {0, 1, 3, 2};
  CHECK(row_shift(q, 3) == Permutation{2, 0, 1, 3});
  CHECK(row_shift(q, 0) == q);
  CHECK(row_shift(q, 2) == Permutation{3, 2, 0, 1});
  CHECK(row_shift(q, 4) == q);  // reduced mod N
}

TEST_CASE("lsg reproduces the order-4 reference square") {
  const LatinSquare sq = reference_square4();
  const std::vector<std::uint8_t> expect = {2, 0, 1, 3, 0, 1, 3, 2,
                                            3, 2, 0, 1, 1, 3, 2, 0};
  REQUIRE(sq.order() == 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(sq.cell(r, c) == expect[static_cast<std::size_t>(r) * 4 + c]);
    }
  }
  CHECK(validate(sq));
}

TEST_CASE("lsg identity seeds at order 2") {
  const LatinSquare sq = lsg(std::vector<int>{0, 1}, std::vector<int>{0, 1});
  CHECK(sq.cell(0, 0) == 0);
  CHECK(sq.cell(0, 1) == 1);
  CHECK(sq.cell(1, 0) == 1);
  CHECK(sq.cell(1, 1) == 0);
}

TEST_CASE("lsg rejects mismatched lengths") {
  CHECK_THROWS_AS(lsg(std::vector<int>{1, 2, 3}, std::vector<int>{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("lsg output is always a valid Latin square") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {2u, 4u, 16u, 256u}) {
    for (int trial = 0; trial < 250; ++trial) {
      const LatinSquare sq = lsg(random_values(rng, n), random_values(rng, n));
      REQUIRE(validate(sq));
    }
  }
}

TEST_CASE("bijection known answers on the reference square") {
  const LatinSquare sq = reference_square4();
  CHECK(frm(sq, 0, 1) == 0);
  CHECK(irm(sq, 0, 2) == 0);
  CHECK(icm(sq, 3, 0) == 2);
  CHECK(fcm(sq, 2, 0) == 3);
}

TEST_CASE("bijection index range errors") {
  const LatinSquare sq = reference_square4();
  CHECK_THROWS_AS(frm(sq, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(frm(sq, 0, -1), std::out_of_range);
  CHECK_THROWS_AS(irm(sq, -1, 0), std::out_of_range);
  CHECK_THROWS_AS(fcm(sq, 0, 4), std::out_of_range);
  CHECK_THROWS_AS(icm(sq, 4, 0), std::out_of_range);
}

TEST_CASE("bijection identities hold exhaustively at order 4") {
  const LatinSquare sq = reference_square4();
  for (int r = 0; r < 4; ++r) {
    for (int v = 0; v < 4; ++v) {
      CHECK(irm(sq, r, frm(sq, r, v)) == v);
      CHECK(frm(sq, r, irm(sq, r, v)) == v);
      CHECK(icm(sq, fcm(sq, v, r), r) == v);
      CHECK(fcm(sq, icm(sq, v, r), r) == v);
    }
  }
}

TEST_CASE("bijection identities hold on random probes at order 256") {
  std::mt19937_64 rng(99);
  const LatinSquare sq = lsg(random_values(rng, 256), random_values(rng, 256));
  for (int probe = 0; probe < 20000; ++probe) {
    const int r = static_cast<int>(rng() % 256);
    const int c = static_cast<int>(rng() % 256);
    const int v = static_cast<int>(rng() % 256);
    CHECK(irm(sq, r, frm(sq, r, v)) == v);
    CHECK(fcm(sq, icm(sq, v, c), c) == v);
  }
}

TEST_CASE("validate rejects non-Latin cells") {
  // Repeated symbol per column.
  const LatinSquare bad = LatinSquare::from_cells(2, {0, 1, 0, 1});
  CHECK_FALSE(validate(bad));
  CHECK(validate(LatinSquare::from_cells(2, {0, 1, 1, 0})));
}

TEST_CASE("from_cells rejects malformed input") {
  CHECK_THROWS_AS(LatinSquare::from_cells(2, {0, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatinSquare::from_cells(2, {0, 1, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatinSquare::from_cells(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(LatinSquare::from_cells(257, {}), std::invalid_argument);
}

TEST_CASE("from_shift_pair rejects non-permutations") {
  CHECK_THROWS_AS(LatinSquare::from_shift_pair({0, 0, 1, 2}, {0, 1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatinSquare::from_shift_pair({0, 1}, {0, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("to_text renders rows of decimal symbols") {
  const LatinSquare sq = lsg(std::vector<int>{0, 1}, std::vector<int>{0, 1});
  CHECK(to_text(sq) == "0 1\n1 0\n");
}
