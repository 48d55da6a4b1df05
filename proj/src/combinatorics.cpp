#include "lefschetz/combinatorics.hpp"

#include <numeric>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial Monomial::one(std::size_t arity) { return Monomial(std::vector<unsigned>(arity, 0)); }

Monomial Monomial::variable(std::size_t arity, std::size_t index, unsigned power) {
  if (index >= arity) throw DomainError("variable index out of range");
  std::vector<unsigned> e(arity, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (arity() != other.arity() || degree_ > other.degree_) return false;
  for (std::size_t t = 0; t < exponents_.size(); ++t) {
    if (exponents_[t] > other.exponents_[t]) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) return std::nullopt;
  std::vector<unsigned> e(exponents_);
  for (std::size_t t = 0; t < e.size(); ++t) e[t] -= divisor.exponents_[t];
  return Monomial(std::move(e));
}

bool Monomial::is_pure_power() const {
  std::size_t nonzero = 0;
  for (unsigned a : exponents_) nonzero += (a != 0);
  return nonzero == 1;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity() != other.arity()) throw DomainError("monomial arity mismatch");
  std::vector<unsigned> e(exponents_);
  for (std::size_t t = 0; t < e.size(); ++t) e[t] += other.exponents_[t];
  return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  if (a.arity() != b.arity()) return a.arity() <=> b.arity();
  for (std::size_t t = a.arity(); t-- > 0;) {
    if (a.exponents_[t] != b.exponents_[t]) return a.exponents_[t] <=> b.exponents_[t];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.arity();
  for (unsigned a : m.exponents()) h = h * 1000003u ^ a;
  return h;
}

namespace {

// Fills exponents[0..len) with every vector of the given degree, colex order.
void fill_basis(std::vector<unsigned>& exponents, std::size_t len, unsigned degree,
                std::vector<Monomial>& out) {
  if (len == 1) {
    exponents[0] = degree;
    out.emplace_back(exponents);
    return;
  }
  for (unsigned last = 0; last <= degree; ++last) {
    exponents[len - 1] = last;
    fill_basis(exponents, len - 1, degree - last, out);
  }
  exponents[len - 1] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, unsigned d) {
  if (n == 0) throw DomainError("monomial_basis needs at least one variable");
  std::vector<Monomial> out;
  out.reserve(count_monomials(n, d).get_ui());
  std::vector<unsigned> exponents(n, 0);
  fill_basis(exponents, n, d, out);
  return out;
}

Integer binomial(long long c, long long k) {
  if (k < 0 || c < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(k));
  return r;
}

Integer count_monomials(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(static_cast<long long>(n + d - 1), static_cast<long long>(n - 1));
}

Integer multinomial(unsigned i, std::span<const unsigned> a) {
  unsigned long sum = 0;
  for (unsigned e : a) sum += e;
  if (sum != i) throw DomainError("multinomial: exponents sum to " + std::to_string(sum) +
                                  ", expected " + std::to_string(i));
  Integer r = 1;
  long long filled = 0;
  for (unsigned e : a) {
    filled += e;
    r *= binomial(filled, e);
  }
  return r;
}

Integer BinomialExpansion::value() const {
  Integer s = 0;
  for (const auto& term : terms) {
    Integer b;
    mpz_bin_ui(b.get_mpz_t(), term.top.get_mpz_t(), term.bottom);
    s += b;
  }
  return s;
}

std::string BinomialExpansion::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out << " + ";
    out << "C(" << terms[k].top.get_str() << "," << terms[k].bottom << ")";
  }
  if (terms.empty()) out << "0";
  return out.str();
}

namespace {

Integer binom(const Integer& top, unsigned bottom) {
  if (top < 0 || top < bottom) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), bottom);
  return r;
}

// Largest top >= k with C(top, k) <= r, for r >= 1.
Integer greedy_top(const Integer& r, unsigned k) {
  Integer lo = k;
  Integer step = 1;
  Integer hi = lo + step;
  while (binom(hi, k) <= r) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  // C(lo, k) <= r < C(hi, k)
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (binom(mid, k) <= r) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace

BinomialExpansion macaulay_expansion(const Integer& m, unsigned i) {
  if (i == 0) throw DomainError("macaulay_expansion: index must be positive");
  if (m < 0) throw DomainError("macaulay_expansion: negative value");
  BinomialExpansion e;
  e.index = i;
  Integer rest = m;
  for (unsigned k = i; k >= 1 && rest > 0; --k) {
    Integer top = greedy_top(rest, k);
    rest -= binom(top, k);
    e.terms.push_back({std::move(top), k});
  }
  return e;
}

Integer macaulay_lower(const Integer& m, unsigned i) {
  Integer s = 0;
  for (const auto& term : macaulay_expansion(m, i).terms) s += binom(term.top - 1, term.bottom - 1);
  return s;
}

Integer macaulay_growth(const Integer& m, unsigned i) {
  Integer s = 0;
  for (const auto& term : macaulay_expansion(m, i).terms) s += binom(term.top + 1, term.bottom + 1);
  return s;
}

}  // namespace lefschetz
