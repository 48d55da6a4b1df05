#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "lefschetz/combinatorics.hpp"

namespace lefschetz {

/// Dense row-major matrix over the rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_integral() const;
  bool is_zero() const;
  std::vector<Rational> column(std::size_t c) const;
  ExactMatrix transpose() const;
  /// Submatrix made of the listed columns, in the order given.
  ExactMatrix select_columns(const std::vector<std::size_t>& columns) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RankOptions {
  /// Return the rank modulo a word-size prime without exact confirmation.
  bool probabilistic = false;
  /// Try a modular rank first; a full modular rank certifies the rational one.
  bool modular_prefilter = true;
};

/// Exact rank over Q by fraction-free elimination.
std::size_t rank(const ExactMatrix& m, const RankOptions& options = {});

struct Echelon {
  ExactMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are the first nonzero column of each nonzero row.
Echelon row_reduce(const ExactMatrix& m);

/// Columns form a basis of the right kernel, one per free column of the echelon form.
ExactMatrix kernel_basis(const ExactMatrix& m);

// --- word-size modular arithmetic --------------------------------------------

/// 2^61 - 1, the default prime for modular rank computations.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

bool is_prime_u64(std::uint64_t n);
/// Uniformly random prime with exactly `bits` bits (32 <= bits <= 62).
std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits = 62);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
/// Image of a rational modulo p; nothing when the denominator vanishes mod p.
std::optional<std::uint64_t> reduce_mod(const Rational& q, std::uint64_t p);

/// Dense matrix over Z/p used for fast rank screening.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t prime)
      : rows_(rows), cols_(cols), prime_(prime), entries_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t prime() const noexcept { return prime_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void add(std::size_t r, std::size_t c, std::uint64_t v);

  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t prime_;
  std::vector<std::uint64_t> entries_;
};

/// Rank modulo p, never larger than the rational rank.
std::optional<std::size_t> modular_rank(const ExactMatrix& m, std::uint64_t prime = kDefaultPrime);

}  // namespace lefschetz
