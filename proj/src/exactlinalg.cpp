#include "lefschetz/exactlinalg.hpp"

#include <algorithm>
#include <utility>

#include "lefschetz/errors.hpp"

namespace lefschetz {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool ExactMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

std::vector<Rational> ExactMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& columns) const {
  ExactMatrix s(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < columns.size(); ++k) s(r, k) = (*this)(r, columns.at(k));
  return s;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  ExactMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += x * b(k, c);
    }
  return p;
}

namespace {

// Row-major integer copy; each row scaled by the lcm of its denominators.
std::vector<Integer> integer_rows(const ExactMatrix& m) {
  std::vector<Integer> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      a[r * m.cols() + c] = q.get_num() * (l / q.get_den());
    }
  }
  return a;
}

void swap_rows(std::vector<Integer>& a, std::size_t cols, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < cols; ++c) std::swap(a[r1 * cols + c], a[r2 * cols + c]);
}

std::size_t bareiss_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> a = integer_rows(m);
  Integer prev = 1, t;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    swap_rows(a, cols, pivot, rank);
    const Integer& p = a[rank * cols + c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      Integer& lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& x = a[i * cols + j];
        x *= p;
        t = lead * a[rank * cols + j];
        x -= t;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const ExactMatrix& m, const RankOptions& options) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (options.probabilistic || options.modular_prefilter) {
    auto r = modular_rank(m, kDefaultPrime);
    if (r && (options.probabilistic || *r == std::min(m.rows(), m.cols()))) return *r;
  }
  return bareiss_rank(m);
}

Echelon row_reduce(const ExactMatrix& m) {
  // Fraction-free Gauss-Jordan: after each step every pivot equals the current
  // leading minor and all divisions by the previous pivot are exact.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> a = integer_rows(m);
  Echelon out;
  Integer prev = 1, t, rem;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    swap_rows(a, cols, pivot, rank);
    const Integer p = a[rank * cols + c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const Integer lead = a[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        Integer& x = a[i * cols + j];
        x *= p;
        t = lead * a[rank * cols + j];
        x -= t;
        mpz_tdiv_qr(x.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("row_reduce: inexact fraction-free step");
      }
      a[i * cols + c] = 0;
    }
    prev = p;
    out.pivots.push_back(c);
    ++rank;
  }
  out.matrix = ExactMatrix(rows, cols);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (a[r * cols + c] != 0) {
        out.matrix(r, c) = Rational(a[r * cols + c], prev);
        out.matrix(r, c).canonicalize();
      }
    }
  return out;
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  ExactMatrix k(m.cols(), m.cols() - e.pivots.size());
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(f, out) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], out) = -e.matrix(r, f);
    ++out;
  }
  return k;
}

// --- modular arithmetic ------------------------------------------------------

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these witnesses.
  for (std::uint64_t w : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned k = 1; k < s; ++k) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits) {
  if (bits < 32 || bits > 62) throw DomainError("random_prime: bits must lie in [32, 62]");
  const std::uint64_t top = 1ULL << (bits - 1);
  for (;;) {
    std::uint64_t candidate = (rng() & (top - 1)) | top | 1ULL;
    if (is_prime_u64(candidate)) return candidate;
  }
}

std::optional<std::uint64_t> reduce_mod(const Rational& q, std::uint64_t p) {
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  return mul_mod(num, inv_mod(den, p), p);
}

void ModMatrix::add(std::size_t r, std::size_t c, std::uint64_t v) {
  std::uint64_t& x = entries_[r * cols_ + c];
  x += v;
  if (x >= prime_) x -= prime_;
}

std::size_t ModMatrix::rank() const {
  std::vector<std::uint64_t> a(entries_);
  const std::uint64_t p = prime_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a[pivot * cols_ + c] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t j = c; j < cols_; ++j) std::swap(a[pivot * cols_ + j], a[rank * cols_ + j]);
    const std::uint64_t inv = inv_mod(a[rank * cols_ + c], p);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      const std::uint64_t lead = a[i * cols_ + c];
      if (lead == 0) continue;
      const std::uint64_t f = p - mul_mod(lead, inv, p);
      for (std::size_t j = c; j < cols_; ++j) {
        std::uint64_t& x = a[i * cols_ + j];
        x = (x + mul_mod(f, a[rank * cols_ + j], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<std::size_t> modular_rank(const ExactMatrix& m, std::uint64_t prime) {
  ModMatrix a(m.rows(), m.cols(), prime);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      if (q == 0) continue;
      auto v = reduce_mod(q, prime);
      if (!v) return std::nullopt;
      a(r, c) = *v;
    }
  return a.rank();
}

}  // namespace lefschetz
