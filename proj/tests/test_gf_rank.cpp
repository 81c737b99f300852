#include "pathideal/errors.hpp"
#include "pathideal/gf_rank.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace pathideal;

namespace {

// Rank as log_p of the number of distinct vectors in the row space, found by
// enumerating every linear combination of the rows.
std::size_t brute_rank(const ModMatrix& m) {
  const std::uint32_t p = m.characteristic();
  std::set<std::vector<std::uint32_t>> span;
  std::vector<std::uint32_t> coeff(m.rows(), 0);
  while (true) {
    std::vector<std::uint32_t> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = (v[c] + coeff[r] * m.at(r, c)) % p;
    span.insert(v);
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  std::size_t rk = 0;
  for (std::size_t size = span.size(); size > 1; size /= p) ++rk;
  return rk;
}

} // namespace

TEST_CASE("rank of fixed matrices") {
  ModMatrix id(3, 3, 5);
  for (int i = 0; i < 3; ++i) id.set(i, i, 1);
  CHECK(rank(id) == 3);

  ModMatrix dep(2, 2, 3);
  dep.set(0, 0, 1);
  dep.set(0, 1, 2);
  dep.set(1, 0, 2);
  dep.set(1, 1, 1); // row1 = 2 * row0 mod 3
  CHECK(rank(dep) == 1);

  BitMatrix zero(4, 70);
  CHECK(rank(zero) == 0);
  BitMatrix wide(2, 130);
  wide.set(0, 129, true);
  wide.set(1, 0, true);
  CHECK(rank(wide) == 2);
}

TEST_CASE("characteristic must be prime") {
  CHECK_THROWS_AS(ModMatrix(1, 1, 4), DomainError);
  CHECK(is_prime(2));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("negative entries reduce to residues") {
  ModMatrix m(1, 1, 7);
  m.set(0, 0, -1);
  CHECK(m.at(0, 0) == 6);
}

TEST_CASE("property: elimination rank equals brute-force span size") {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
      ModMatrix m(rows, cols, p);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % 3 == 0 ? 0 : rng() % p);
      CHECK(rank(m) == brute_rank(m));
    }
  }
}

TEST_CASE("property: packed GF(2) rank agrees with the generic path") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 150;
    ModMatrix m(rows, cols, 2);
    BitMatrix b(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (rng() % 4 == 0) {
          m.set(r, c, 1);
          b.set(r, c, true);
        }
    CHECK(rank(b) == rank(m));
  }
}
