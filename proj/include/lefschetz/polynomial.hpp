#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "lefschetz/combinatorics.hpp"

namespace lefschetz {

/// Sparse polynomial with rational coefficients; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}
  Polynomial(std::size_t arity, Terms terms);

  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Degree of a homogeneous polynomial; nothing when zero or mixed degree.
  std::optional<unsigned> homogeneous_degree() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator*(const Monomial& m) const;
  Polynomial operator*(const Polynomial& other) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t arity_;
  Terms terms_;
};

}  // namespace lefschetz
