#include "lefschetz/ideals.hpp"

#include <algorithm>
#include <set>

#include "lefschetz/errors.hpp"

namespace lefschetz {

std::string to_string(TermOrder order) {
  switch (order) {
    case TermOrder::Degrevlex: return "degrevlex";
    case TermOrder::Lex: return "lex";
    case TermOrder::Grlex: return "grlex";
  }
  return "degrevlex";
}

TermOrder parse_term_order(const std::string& name) {
  if (name == "degrevlex" || name == "grevlex") return TermOrder::Degrevlex;
  if (name == "lex") return TermOrder::Lex;
  if (name == "grlex" || name == "deglex") return TermOrder::Grlex;
  throw DomainError("unknown term order '" + name + "'");
}

bool term_greater(const Monomial& a, const Monomial& b, TermOrder order) {
  if (a.degree() != b.degree() && order != TermOrder::Lex) return a.degree() > b.degree();
  const std::size_t n = a.arity();
  if (order == TermOrder::Degrevlex) {
    for (std::size_t t = n; t-- > 0;) {
      if (a[t] != b[t]) return a[t] < b[t];
    }
    return false;
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t] != b[t]) return a[t] > b[t];
  }
  return false;
}

// --- MonomialIdeal -----------------------------------------------------------

MonomialIdeal MonomialIdeal::minimalize(std::size_t arity, std::vector<Monomial> monomials) {
  if (monomials.empty()) throw DomainError("minimalize: empty generator set");
  for (const auto& m : monomials) {
    if (m.arity() != arity) throw DomainError("minimalize: generator arity mismatch");
    if (m.degree() == 0) throw DomainError("minimalize: constant generator gives the unit ideal");
  }
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  // Sorted by degree, so a divisor always precedes its multiples.
  std::vector<Monomial> kept;
  for (auto& m : monomials) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return MonomialIdeal(arity, std::move(kept));
}

MonomialIdeal MonomialIdeal::zero(std::size_t arity) { return MonomialIdeal(arity, {}); }

unsigned MonomialIdeal::min_degree() const {
  if (generators_.empty()) throw DomainError("zero ideal has no generator degree");
  return generators_.front().degree();
}

unsigned MonomialIdeal::max_degree() const {
  if (generators_.empty()) throw DomainError("zero ideal has no generator degree");
  return generators_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : generators_) {
    if (g.degree() > m.degree()) break;
    if (g.divides(m)) return true;
  }
  return false;
}

// --- FormIdeal ---------------------------------------------------------------

FormIdeal::FormIdeal(std::size_t arity, std::vector<Polynomial> generators)
    : arity_(arity), generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("form ideal needs at least one generator");
  for (const auto& f : generators_) {
    if (f.arity() != arity_) throw DomainError("form ideal: generator arity mismatch");
    if (f.is_zero()) throw DomainError("form ideal: zero generator");
    auto d = f.homogeneous_degree();
    if (!d) throw DomainError("form ideal: generator is not homogeneous");
    if (*d == 0) throw DomainError("form ideal: constant generator gives the unit ideal");
    degrees_.push_back(*d);
  }
}

FormIdeal FormIdeal::from_monomials(const MonomialIdeal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(Polynomial::monomial(g));
  return FormIdeal(ideal.arity(), std::move(gens));
}

unsigned FormIdeal::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }
unsigned FormIdeal::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

// --- QuotientRing ------------------------------------------------------------

QuotientRing::QuotientRing(MonomialIdeal ideal) : arity_(ideal.arity()), monomial_(std::move(ideal)) {
  if (!monomial_->is_zero()) {
    min_degree_ = monomial_->min_degree();
    max_degree_ = monomial_->max_degree();
  }
}

QuotientRing::QuotientRing(FormIdeal ideal, TermOrder order)
    : arity_(ideal.arity()), forms_(std::move(ideal)), order_(order) {
  min_degree_ = forms_->min_degree();
  max_degree_ = forms_->max_degree();
}

const MonomialIdeal& QuotientRing::monomial_ideal() const {
  if (!monomial_) throw DomainError("quotient is not defined by a monomial ideal");
  return *monomial_;
}

const FormIdeal& QuotientRing::form_ideal() const {
  if (!forms_) throw DomainError("quotient is not defined by a form ideal");
  return *forms_;
}

unsigned QuotientRing::default_cap() const noexcept {
  return static_cast<unsigned>(arity_) * (std::max(max_degree_, 1u) - 1) + 8;
}

const GradedPiece& QuotientRing::piece(unsigned k) const { return cached(k).piece; }

std::optional<std::size_t> QuotientRing::standard_index(const Monomial& m) const {
  const auto& c = cached(m.degree());
  auto it = c.standard_index.find(m);
  if (it == c.standard_index.end()) return std::nullopt;
  return it->second;
}

const QuotientRing::CachedPiece& QuotientRing::cached(unsigned k) const {
  if (pieces_.size() <= k) pieces_.resize(k + 1);
  if (!pieces_[k]) {
    pieces_[k] = std::make_unique<CachedPiece>(monomial_ ? build_monomial_piece(k) : build_form_piece(k));
  }
  return *pieces_[k];
}

QuotientRing::CachedPiece QuotientRing::build_monomial_piece(unsigned k) const {
  CachedPiece c;
  c.piece.degree = k;
  const MonomialIdeal& ideal = *monomial_;
  if (ideal.is_zero() || k < min_degree_) {
    c.piece.standard = monomial_basis(arity_, k);
  } else if (k <= max_degree_) {
    for (auto& m : monomial_basis(arity_, k)) {
      if (ideal.contains(m)) c.piece.leading.push_back(std::move(m));
      else c.piece.standard.push_back(std::move(m));
    }
  } else {
    // Past the top generator degree, x^c is standard iff every x^c / x_t is.
    const CachedPiece& below = cached(k - 1);
    std::set<Monomial> candidates;
    for (const auto& s : below.piece.standard) {
      for (std::size_t t = 0; t < arity_; ++t) candidates.insert(s * Monomial::variable(arity_, t));
    }
    for (const auto& m : candidates) {
      bool standard = true;
      for (std::size_t t = 0; t < arity_ && standard; ++t) {
        if (m[t] == 0) continue;
        standard = below.standard_index.count(*m.quotient(Monomial::variable(arity_, t))) > 0;
      }
      if (standard) c.piece.standard.push_back(m);
    }
    std::set<Monomial> std_set(c.piece.standard.begin(), c.piece.standard.end());
    for (auto& m : monomial_basis(arity_, k)) {
      if (!std_set.count(m)) c.piece.leading.push_back(std::move(m));
    }
  }
  for (std::size_t i = 0; i < c.piece.standard.size(); ++i) c.standard_index.emplace(c.piece.standard[i], i);
  return c;
}

QuotientRing::CachedPiece QuotientRing::build_form_piece(unsigned k) const {
  CachedPiece c;
  c.piece.degree = k;
  std::vector<Monomial> columns = monomial_basis(arity_, k);
  std::sort(columns.begin(), columns.end(),
            [this](const Monomial& a, const Monomial& b) { return term_greater(a, b, order_); });
  for (std::size_t i = 0; i < columns.size(); ++i) c.column_index.emplace(columns[i], i);

  const FormIdeal& ideal = *forms_;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t g = 0; g < ideal.generators().size(); ++g) {
    const unsigned dg = ideal.degrees()[g];
    if (dg > k) continue;
    for (const auto& m : monomial_basis(arity_, k - dg)) {
      std::vector<Rational> row(columns.size());
      for (const auto& [t, coeff] : ideal.generators()[g].terms()) row[c.column_index.at(t * m)] = coeff;
      rows.push_back(std::move(row));
    }
  }
  ExactMatrix span(rows.size(), columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) span(r, j) = rows[r][j];
  Echelon e = row_reduce(span);

  std::vector<bool> is_pivot(columns.size(), false);
  for (std::size_t p : e.pivots) {
    is_pivot[p] = true;
    c.piece.leading.push_back(columns[p]);
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (!is_pivot[j]) c.piece.standard.push_back(columns[j]);
  }
  std::sort(c.piece.standard.begin(), c.piece.standard.end());
  std::sort(c.piece.leading.begin(), c.piece.leading.end());
  for (std::size_t i = 0; i < c.piece.standard.size(); ++i) c.standard_index.emplace(c.piece.standard[i], i);
  // Keep only the nonzero rows of the echelon form.
  ExactMatrix basis(e.pivots.size(), columns.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) basis(r, j) = e.matrix(r, j);
  c.piece.columns = std::move(columns);
  c.piece.span = Echelon{std::move(basis), std::move(e.pivots)};
  return c;
}

std::vector<Rational> QuotientRing::normal_form(unsigned k, const Polynomial& p) const {
  const CachedPiece& c = cached(k);
  std::vector<Rational> out(c.piece.standard.size());
  if (monomial_) {
    for (const auto& [m, coeff] : p.terms()) {
      if (m.degree() != k) throw DomainError("normal_form: polynomial is not of the requested degree");
      auto it = c.standard_index.find(m);
      if (it != c.standard_index.end()) out[it->second] += coeff;
    }
    return out;
  }
  std::vector<Rational> v(c.piece.columns.size());
  for (const auto& [m, coeff] : p.terms()) {
    if (m.degree() != k) throw DomainError("normal_form: polynomial is not of the requested degree");
    v[c.column_index.at(m)] += coeff;
  }
  const Echelon& e = *c.piece.span;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const Rational lead = v[e.pivots[r]];
    if (lead == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (e.matrix(r, j) != 0) v[j] -= lead * e.matrix(r, j);
    }
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    out[c.standard_index.at(c.piece.columns[j])] = v[j];
  }
  return out;
}

unsigned QuotientRing::socle_degree(std::optional<unsigned> cap) const {
  if (monomial_ && !lefschetz::is_artinian(*monomial_)) throw NotArtinian("ideal is not artinian");
  const unsigned limit = cap.value_or(default_cap());
  for (unsigned k = 0; k <= limit + 1; ++k) {
    if (dim(k) == 0) {
      if (k == 0) throw DomainError("quotient is the zero ring");
      return k - 1;
    }
  }
  throw Indeterminate("Hilbert function has not vanished by degree " + std::to_string(limit + 1));
}

bool QuotientRing::is_artinian(std::optional<unsigned> cap) const {
  if (monomial_) return lefschetz::is_artinian(*monomial_);
  socle_degree(cap);
  return true;
}

// --- free functions ----------------------------------------------------------

bool is_artinian(const MonomialIdeal& ideal) {
  std::vector<bool> has_pure_power(ideal.arity(), false);
  for (const auto& g : ideal.generators()) {
    if (!g.is_pure_power()) continue;
    for (std::size_t t = 0; t < g.arity(); ++t) {
      if (g[t] != 0) has_pure_power[t] = true;
    }
  }
  return std::all_of(has_pure_power.begin(), has_pure_power.end(), [](bool b) { return b; });
}

bool is_artinian(const FormIdeal& ideal, std::optional<unsigned> cap) {
  return QuotientRing(ideal).is_artinian(cap);
}

GradedPiece graded_piece(const MonomialIdeal& ideal, unsigned k) { return QuotientRing(ideal).piece(k); }

GradedPiece graded_piece(const FormIdeal& ideal, unsigned k, TermOrder order) {
  return QuotientRing(ideal, order).piece(k);
}

namespace {

HilbertValues hilbert_of(const QuotientRing& ring, unsigned upto) {
  HilbertValues h(upto + 1);
  for (unsigned k = 0; k <= upto; ++k) h[k] = ring.dim(k);
  return h;
}

}  // namespace

HilbertValues hilbert_function(const MonomialIdeal& ideal, unsigned upto) {
  return hilbert_of(QuotientRing(ideal), upto);
}

HilbertValues hilbert_function(const FormIdeal& ideal, unsigned upto) {
  return hilbert_of(QuotientRing(ideal), upto);
}

unsigned socle_degree(const MonomialIdeal& ideal, std::optional<unsigned> cap) {
  return QuotientRing(ideal).socle_degree(cap);
}

unsigned socle_degree(const FormIdeal& ideal, std::optional<unsigned> cap) {
  return QuotientRing(ideal).socle_degree(cap);
}

std::vector<std::vector<Monomial>> initial_ideal_degreewise(const FormIdeal& ideal, TermOrder order,
                                                             unsigned upto) {
  QuotientRing ring(ideal, order);
  std::vector<std::vector<Monomial>> leads(upto + 1);
  for (unsigned k = 0; k <= upto; ++k) leads[k] = ring.piece(k).leading;
  return leads;
}

MonomialIdeal initial_ideal(const FormIdeal& ideal, TermOrder order, unsigned upto) {
  std::vector<Monomial> all;
  for (auto& level : initial_ideal_degreewise(ideal, order, upto)) {
    for (auto& m : level) all.push_back(std::move(m));
  }
  if (all.empty()) return MonomialIdeal::zero(ideal.arity());
  return MonomialIdeal::minimalize(ideal.arity(), std::move(all));
}

}  // namespace lefschetz
