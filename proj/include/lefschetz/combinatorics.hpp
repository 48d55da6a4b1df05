#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lefschetz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector x^a = x_1^{a_1} ... x_n^{a_n} with cached total degree.
///
/// Monomials of different arity never compare equal. The ordering operators
/// implement the canonical basis order: total degree first, then
/// colexicographic (the last coordinate where two vectors differ decides).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);

  static Monomial one(std::size_t arity);
  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

  std::size_t arity() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t t) const { return exponents_[t]; }
  std::span<const unsigned> exponents() const noexcept { return exponents_; }

  bool divides(const Monomial& other) const;
  /// this / divisor, or nothing when divisor does not divide this.
  std::optional<Monomial> quotient(const Monomial& divisor) const;
  bool is_pure_power() const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of degree d in n variables, in the canonical order.
std::vector<Monomial> monomial_basis(std::size_t n, unsigned d);

/// C(c, k), zero whenever c < k or k < 0.
Integer binomial(long long c, long long k);

/// Number of monomials of degree d in n variables, C(n+d-1, n-1).
Integer count_monomials(std::size_t n, unsigned d);

/// i! / prod a_t!; throws DomainError unless sum(a) == i.
Integer multinomial(unsigned i, std::span<const unsigned> a);

/// One summand C(top, bottom) of an i-binomial expansion.
struct BinomialTerm {
  Integer top;
  unsigned bottom = 0;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// m = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j), greedy form.
struct BinomialExpansion {
  unsigned index = 0;
  std::vector<BinomialTerm> terms;

  Integer value() const;
  std::string to_string() const;
};

BinomialExpansion macaulay_expansion(const Integer& m, unsigned i);

/// ((m)_{(i)})_{-1}^{-1}: every C(m_k, k) becomes C(m_k - 1, k - 1).
Integer macaulay_lower(const Integer& m, unsigned i);

/// Macaulay growth bound m^{<i>}: every C(m_k, k) becomes C(m_k + 1, k + 1).
Integer macaulay_growth(const Integer& m, unsigned i);

}  // namespace lefschetz
