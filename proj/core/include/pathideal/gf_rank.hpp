#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pathideal {

/// Dense matrix over GF(p), entries kept reduced in [0, p).
class ModMatrix {
public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores v mod p; negative values wrap to their residue.
  void set(std::size_t r, std::size_t c, std::int64_t v);

  friend std::size_t rank(ModMatrix m);

private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

/// Matrix over GF(2) with rows packed into 64-bit words.
class BitMatrix {
public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool at(std::size_t r, std::size_t c) const;
  void flip(std::size_t r, std::size_t c);
  void set(std::size_t r, std::size_t c, bool v);

  friend std::size_t rank(BitMatrix m);

private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

/// Rank by Gaussian elimination; the argument is consumed.
std::size_t rank(ModMatrix m);
std::size_t rank(BitMatrix m);

bool is_prime(std::uint32_t p);

} // namespace pathideal
