#include "pathideal/gf_rank.hpp"

#include "pathideal/errors.hpp"

#include <bit>
#include <utility>

namespace pathideal {
namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

} // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
}

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  data_[r * cols_ + c] = static_cast<std::uint32_t>(m);
}

std::size_t rank(ModMatrix m) {
  const std::uint64_t p = m.p_;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols_ && rk < m.rows_; ++col) {
    std::size_t pivot = rk;
    while (pivot < m.rows_ && m.data_[pivot * m.cols_ + col] == 0) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rk)
      for (std::size_t c = col; c < m.cols_; ++c)
        std::swap(m.data_[pivot * m.cols_ + c], m.data_[rk * m.cols_ + c]);

    std::uint32_t* prow = &m.data_[rk * m.cols_];
    const std::uint64_t inv = inverse_mod(prow[col], m.p_);
    for (std::size_t c = col; c < m.cols_; ++c) prow[c] = static_cast<std::uint32_t>(prow[c] * inv % p);

    for (std::size_t r = rk + 1; r < m.rows_; ++r) {
      std::uint32_t* row = &m.data_[r * m.cols_];
      const std::uint64_t f = row[col];
      if (f == 0) continue;
      for (std::size_t c = col; c < m.cols_; ++c)
        row[c] = static_cast<std::uint32_t>((row[c] + (p - f) * prow[c]) % p);
    }
    ++rk;
  }
  return rk;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

bool BitMatrix::at(std::size_t r, std::size_t c) const {
  return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  if (at(r, c) != v) flip(r, c);
}

std::size_t rank(BitMatrix m) {
  std::size_t rk = 0;
  for (std::size_t w = 0; w < m.words_ && rk < m.rows_; ++w) {
    for (unsigned b = 0; b < 64 && rk < m.rows_; ++b) {
      const std::uint64_t mask = std::uint64_t{1} << b;
      std::size_t pivot = rk;
      while (pivot < m.rows_ && !(m.bits_[pivot * m.words_ + w] & mask)) ++pivot;
      if (pivot == m.rows_) continue;
      if (pivot != rk)
        for (std::size_t k = w; k < m.words_; ++k)
          std::swap(m.bits_[pivot * m.words_ + k], m.bits_[rk * m.words_ + k]);
      const std::uint64_t* prow = &m.bits_[rk * m.words_];
      for (std::size_t r = rk + 1; r < m.rows_; ++r) {
        std::uint64_t* row = &m.bits_[r * m.words_];
        if (row[w] & mask)
          for (std::size_t k = w; k < m.words_; ++k) row[k] ^= prow[k];
      }
      ++rk;
    }
  }
  return rk;
}

} // namespace pathideal
