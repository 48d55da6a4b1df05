#include "lefschetz/polynomial.hpp"

#include "lefschetz/errors.hpp"

namespace lefschetz {

Polynomial::Polynomial(std::size_t arity, Terms terms) : arity_(arity) {
  for (auto& [m, c] : terms) add_term(m, c);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.arity());
  p.add_term(m, c);
  return p;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.arity() != arity_) throw DomainError("polynomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  Polynomial out(arity_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out(arity_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) out.add_term(a * b, ca * cb);
  }
  return out;
}

}  // namespace lefschetz
