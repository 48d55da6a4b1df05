#include "lefschetz/duality.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

#include "lefschetz/errors.hpp"

namespace lefschetz {

DualElement::DualElement(Polynomial poly, unsigned degree) : poly_(std::move(poly)), degree_(degree) {
  for (const auto& [m, c] : poly_.terms()) {
    if (m.degree() != degree_) throw DomainError("dual element: term of degree " + std::to_string(m.degree()) +
                                                 " in an element of degree " + std::to_string(degree_));
  }
}

std::vector<Monomial> DualElement::support() const {
  std::vector<Monomial> s;
  for (const auto& [m, c] : poly_.terms()) s.push_back(m);
  return s;
}

namespace {

// prod_t b_t! / (b_t - a_t)!, for a <= b componentwise.
Integer falling(const Monomial& b, const Monomial& a) {
  Integer r = 1;
  for (std::size_t t = 0; t < b.arity(); ++t) {
    for (unsigned k = 0; k < a[t]; ++k) r *= b[t] - k;
  }
  return r;
}

}  // namespace

DualElement contract(const Monomial& m, const DualElement& f) {
  if (m.arity() != f.arity()) throw DomainError("contract: arity mismatch");
  if (m.degree() > f.degree()) throw DomainError("contract: operator degree exceeds element degree");
  Polynomial out(f.arity());
  for (const auto& [b, c] : f.polynomial().terms()) {
    auto q = b.quotient(m);
    if (!q) continue;
    out.add_term(*q, c * Rational(falling(b, m)));
  }
  return DualElement(std::move(out), f.degree() - m.degree());
}

DualElement ell_power_contract(const DualElement& f, unsigned i) {
  if (i > f.degree()) throw DomainError("ell_power_contract: power exceeds element degree");
  Polynomial out(f.arity());
  const auto ops = monomial_basis(f.arity(), i);
  for (const auto& [b, c] : f.polynomial().terms()) {
    for (const auto& a : ops) {
      auto q = b.quotient(a);
      if (!q) continue;
      out.add_term(*q, c * Rational(multinomial(i, a.exponents()) * falling(b, a)));
    }
  }
  return DualElement(std::move(out), f.degree() - i);
}

InverseSystemPiece inverse_system_piece(const MonomialIdeal& ideal, unsigned k) {
  return {k, graded_piece(ideal, k).standard};
}

ExactMatrix contraction_matrix(const MonomialIdeal& ideal, unsigned i, unsigned j) {
  const auto source = inverse_system_piece(ideal, j + i).dual_basis;
  const auto target = inverse_system_piece(ideal, j).dual_basis;
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r], r);
  ExactMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    DualElement image = ell_power_contract(DualElement(Polynomial::monomial(source[c]), j + i), i);
    for (const auto& [a, coeff] : image.polynomial().terms()) {
      auto it = row_of.find(a);
      if (it == row_of.end()) throw std::logic_error("contraction left the inverse system");
      m(it->second, c) = coeff;
    }
  }
  return m;
}

DualIdeal dual_ideal_from_support(const std::vector<Monomial>& support, std::size_t n, unsigned d) {
  if (support.empty()) throw DomainError("dual_ideal_from_support: empty support");
  std::set<Monomial> in_support;
  bool artinian = true;
  for (const auto& m : support) {
    if (m.arity() != n || m.degree() != d) throw DomainError("dual_ideal_from_support: support monomial of wrong shape");
    if (m.is_pure_power()) artinian = false;
    in_support.insert(m);
  }
  std::vector<Monomial> gens;
  for (auto& m : monomial_basis(n, d)) {
    if (!in_support.count(m)) gens.push_back(std::move(m));
  }
  if (gens.empty()) return {MonomialIdeal::zero(n), false};
  return {MonomialIdeal::minimalize(n, std::move(gens)), artinian};
}

DualElement extremal_element(std::size_t n, unsigned d, unsigned i) {
  if (n < 3) throw DomainError("extremal construction needs n >= 3");
  if (i < 1 || i > d) throw DomainError("extremal construction needs 1 <= i <= d");
  const unsigned m = d - i + 1;
  Polynomial f(n);
  for (unsigned k = 0; k <= m; ++k) {
    std::vector<unsigned> e(n, 0);
    e[0] = i - 1;
    e[1] = m - k;
    e[2] = k;
    Integer c = binomial(m, k);
    if (k % 2) c = -c;
    f.add_term(Monomial(std::move(e)), Rational(c));
  }
  return DualElement(std::move(f), d);
}

ExtremalPair extremal_dual(std::size_t n, unsigned d, unsigned i) {
  if (n < 3) throw DomainError("extremal_dual: needs n >= 3");
  if (i < 2 || i + 1 > d) throw DomainError("extremal_dual: needs 2 <= i <= d - 1");
  DualElement f = extremal_element(n, d, i);
  DualIdeal dual = dual_ideal_from_support(f.support(), n, d);
  return {std::move(f), std::move(dual.ideal)};
}

namespace {

struct SupportSearch {
  std::vector<std::vector<std::uint64_t>> mod_columns;
  ExactMatrix exact;  // rows over E_{d-i}, one column per candidate dual monomial
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t budget = 0;
  std::uint64_t calls = 0;
  std::size_t target = 0;
  std::vector<std::size_t> chosen;
  std::optional<std::vector<std::size_t>> found;

  struct Reduced {
    std::size_t pivot;
    std::vector<std::uint64_t> v;
  };

  std::optional<Reduced> reduce(std::size_t column, const std::vector<Reduced>& basis) const {
    std::vector<std::uint64_t> v = mod_columns[column];
    const std::uint64_t p = prime;
    for (const auto& b : basis) {
      const std::uint64_t lead = v[b.pivot];
      if (lead == 0) continue;
      for (std::size_t r = 0; r < v.size(); ++r) {
        if (b.v[r]) v[r] = (v[r] + p - mul_mod(lead, b.v[r], p)) % p;
      }
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) return std::nullopt;
    const std::uint64_t inv = inv_mod(v[pivot], p);
    for (auto& x : v) x = mul_mod(x, inv, p);
    return Reduced{pivot, std::move(v)};
  }

  bool exactly_dependent() const {
    return rank(exact.select_columns(chosen), RankOptions{.modular_prefilter = false}) < chosen.size();
  }

  // Every proper subset of the chosen columns is independent over Q here.
  void dfs(std::size_t start, std::vector<Reduced>& basis, bool exact_mode) {
    for (std::size_t c = start; c < mod_columns.size() && !found; ++c) {
      if (++calls > budget) throw BudgetExceeded("min_kernel_support: subset budget exhausted");
      chosen.push_back(c);
      if (exact_mode) {
        if (chosen.size() == target) {
          if (exactly_dependent()) found = chosen;
        } else {
          dfs(c + 1, basis, true);
        }
      } else {
        auto r = reduce(c, basis);
        if (chosen.size() == target) {
          if (!r && exactly_dependent()) found = chosen;
        } else if (r) {
          basis.push_back(std::move(*r));
          dfs(c + 1, basis, false);
          basis.pop_back();
        } else {
          // Dependent mod p only: descendants need exact tests.
          dfs(c + 1, basis, true);
        }
      }
      chosen.pop_back();
    }
  }
};

}  // namespace

KernelSupportResult min_kernel_support(const MonomialIdeal& ideal, unsigned d, unsigned i, std::size_t bound,
                                       std::uint64_t budget) {
  if (i < 1 || i > d) throw DomainError("min_kernel_support: needs 1 <= i <= d");
  const std::size_t n = ideal.arity();
  const auto columns = inverse_system_piece(ideal, d).dual_basis;
  const auto rows = monomial_basis(n, d - i);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);

  SupportSearch search;
  search.budget = budget;
  search.exact = ExactMatrix(rows.size(), columns.size());
  search.mod_columns.assign(columns.size(), std::vector<std::uint64_t>(rows.size(), 0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    DualElement image = ell_power_contract(DualElement(Polynomial::monomial(columns[c]), d), i);
    for (const auto& [a, coeff] : image.polynomial().terms()) {
      const std::size_t r = row_of.at(a);
      search.exact(r, c) = coeff;
      search.mod_columns[c][r] = *reduce_mod(coeff, search.prime);
    }
  }

  KernelSupportResult result;
  const std::size_t limit = std::min(bound, columns.size());
  for (std::size_t size = 1; size <= limit && !search.found; ++size) {
    search.target = size;
    std::vector<SupportSearch::Reduced> basis;
    search.dfs(0, basis, false);
  }
  result.rank_calls = search.calls;
  if (!search.found) return result;

  const auto& cols = *search.found;
  ExactMatrix kernel = kernel_basis(search.exact.select_columns(cols));
  // Scale the kernel vector to a primitive integer vector.
  Integer den = 1, num = 0;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), kernel(r, 0).get_den_mpz_t());
  }
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Rational scaled = kernel(r, 0) * den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_num_mpz_t());
  }
  Polynomial f(n);
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    f.add_term(columns[cols[r]], kernel(r, 0) * den / num);
  }
  result.min_support = cols.size();
  result.witness = DualElement(std::move(f), d);
  return result;
}

}  // namespace lefschetz
