#include "lefschetz/deciders.hpp"

#include <algorithm>
#include <random>

#include "lefschetz/errors.hpp"

namespace lefschetz {

LinearForm::LinearForm(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("linear form needs at least one variable");
  if (std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return c == 0; })) {
    throw DomainError("linear form must be nonzero");
  }
}

LinearForm LinearForm::sum_of_variables(std::size_t n) { return LinearForm(std::vector<Rational>(n, Rational(1))); }

bool LinearForm::is_sum_of_variables() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return c == 1; });
}

LinearForm random_linear_form(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  if (bound < 2) throw DomainError("random_linear_form: coefficient bound must be at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(1, bound);
  std::vector<Rational> c(n);
  for (auto& x : c) x = Rational(static_cast<long>(dist(rng)));
  return LinearForm(std::move(c));
}

std::string to_string(Property p) {
  switch (p) {
    case Property::Weak: return "WLP";
    case Property::Strong: return "SLP";
    case Property::Power: return "power";
  }
  return "WLP";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Full: return "full";
    case Method::Shortcut: return "shortcut";
    case Method::Randomized: return "randomized";
  }
  return "full";
}

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "randomized"; }

namespace {

struct PowerTerm {
  Monomial exponent;
  Rational coefficient;
};

// Nonzero terms multinomial(i, a) * prod c_t^{a_t} of l^i.
std::vector<PowerTerm> expand_power(const LinearForm& form, unsigned i) {
  std::vector<PowerTerm> terms;
  for (auto& a : monomial_basis(form.arity(), i)) {
    Rational c(multinomial(i, a.exponents()));
    for (std::size_t t = 0; t < a.arity() && c != 0; ++t) {
      for (unsigned k = 0; k < a[t]; ++k) c *= form.coefficients()[t];
    }
    if (c != 0) terms.push_back({std::move(a), std::move(c)});
  }
  return terms;
}

void check_arity(const QuotientRing& ring, const LinearForm& form) {
  if (ring.arity() != form.arity()) throw DomainError("linear form arity does not match the ring");
}

// Modular image of the monomial-case matrix; nothing if a coefficient has no image mod p.
std::optional<ModMatrix> modular_monomial_map(const QuotientRing& ring, const std::vector<PowerTerm>& terms,
                                              unsigned i, unsigned j) {
  const auto& source = ring.piece(j).standard;
  ModMatrix m(ring.dim(j + i), source.size(), kDefaultPrime);
  std::vector<std::uint64_t> coeffs;
  for (const auto& term : terms) {
    auto v = reduce_mod(term.coefficient, kDefaultPrime);
    if (!v) return std::nullopt;
    coeffs.push_back(*v);
  }
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (auto r = ring.standard_index(source[c] * terms[k].exponent)) m.add(*r, c, coeffs[k]);
    }
  }
  return m;
}

}  // namespace

ExactMatrix mult_map_matrix(const QuotientRing& ring, const LinearForm& form, unsigned i, unsigned j) {
  check_arity(ring, form);
  const auto terms = expand_power(form, i);
  const auto& source = ring.piece(j).standard;
  ExactMatrix m(ring.dim(j + i), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    if (ring.is_monomial()) {
      for (const auto& term : terms) {
        if (auto r = ring.standard_index(source[c] * term.exponent)) m(*r, c) += term.coefficient;
      }
    } else {
      Polynomial image(ring.arity());
      for (const auto& term : terms) image.add_term(source[c] * term.exponent, term.coefficient);
      auto coords = ring.normal_form(j + i, image);
      for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = std::move(coords[r]);
    }
  }
  return m;
}

ExactMatrix mult_map_matrix(const MonomialIdeal& ideal, const LinearForm& form, unsigned i, unsigned j) {
  return mult_map_matrix(QuotientRing(ideal), form, i, j);
}

MaximalRank has_maximal_rank(const QuotientRing& ring, const LinearForm& form, unsigned i, unsigned j) {
  check_arity(ring, form);
  if (i == 0) throw DomainError("has_maximal_rank: power must be positive");
  const std::size_t source = ring.dim(j), target = ring.dim(j + i);
  const std::size_t full = std::min(source, target);
  if (full == 0) return {true, 0};
  if (ring.is_monomial()) {
    // rank mod p never exceeds the rational rank, so a full modular rank is exact.
    if (auto m = modular_monomial_map(ring, expand_power(form, i), i, j); m && m->rank() == full) {
      return {true, full};
    }
    const std::size_t r = rank(mult_map_matrix(ring, form, i, j), RankOptions{.modular_prefilter = false});
    return {r == full, r};
  }
  const std::size_t r = rank(mult_map_matrix(ring, form, i, j));
  return {r == full, r};
}

MaximalRank has_maximal_rank(const MonomialIdeal& ideal, const LinearForm& form, unsigned i, unsigned j) {
  return has_maximal_rank(QuotientRing(ideal), form, i, j);
}

namespace {

PairRecord evaluate_pair(const QuotientRing& ring, std::span<const LinearForm> forms, unsigned i, unsigned j,
                         std::uint64_t& entries) {
  PairRecord rec;
  rec.power = i;
  rec.degree = j;
  rec.source_dim = ring.dim(j);
  rec.target_dim = ring.dim(j + i);
  rec.maximal = false;
  for (const auto& form : forms) {
    entries += rec.source_dim * rec.target_dim;
    MaximalRank mr = has_maximal_rank(ring, form, i, j);
    rec.rank = std::max(rec.rank, mr.rank);
    if (mr.maximal) {
      rec.maximal = true;
      break;
    }
  }
  return rec;
}

void finish(LefschetzReport& report) {
  report.verdict = true;
  report.witness.reset();
  for (const auto& p : report.pairs) {
    if (!p.maximal) {
      report.verdict = false;
      report.witness = p;
      break;
    }
  }
}

std::vector<LinearForm> forms_for(const QuotientRing& ring, const DeciderOptions& options, LefschetzReport& report) {
  std::vector<LinearForm> forms;
  if (options.mode == Mode::Exact && ring.is_monomial()) {
    forms.push_back(LinearForm::sum_of_variables(ring.arity()));
    report.method = Method::Full;
    return forms;
  }
  if (options.trials == 0) throw DomainError("randomized mode needs at least one trial");
  report.method = Method::Randomized;
  report.trials = options.trials;
  for (unsigned k = 0; k < options.trials; ++k) {
    const std::uint64_t seed = options.seed + k;
    report.seeds.push_back(seed);
    forms.push_back(random_linear_form(ring.arity(), seed, options.coefficient_bound));
  }
  return forms;
}

LefschetzReport run_checks(const QuotientRing& ring, Property property, unsigned power,
                           std::span<const LinearForm> forms, std::optional<unsigned> cap, LefschetzReport report) {
  const unsigned e = ring.socle_degree(cap);
  report.property = property;
  report.power = property == Property::Power ? power : 0;
  report.socle_degree = e;
  std::uint64_t entries = 0;
  auto add = [&](unsigned i, unsigned j) { report.pairs.push_back(evaluate_pair(ring, forms, i, j, entries)); };
  switch (property) {
    case Property::Weak:
      for (unsigned j = 0; j < e; ++j) add(1, j);
      break;
    case Property::Strong:
      for (unsigned i = 1; i <= e; ++i)
        for (unsigned j = 0; j + i <= e; ++j) add(i, j);
      break;
    case Property::Power:
      if (power == 0) throw DomainError("power must be positive");
      for (unsigned j = 0; j + power <= e; ++j) add(power, j);
      break;
  }
  report.matrix_entries += entries;
  finish(report);
  return report;
}

}  // namespace

LefschetzReport check_with_forms(const QuotientRing& ring, Property property, unsigned power,
                                 std::span<const LinearForm> forms, std::optional<unsigned> socle_cap) {
  if (forms.empty()) throw DomainError("check_with_forms: no linear forms given");
  for (const auto& f : forms) check_arity(ring, f);
  LefschetzReport report;
  report.method = forms.size() == 1 && forms.front().is_sum_of_variables() ? Method::Full : Method::Randomized;
  report.trials = static_cast<unsigned>(forms.size());
  return run_checks(ring, property, power, forms, socle_cap, std::move(report));
}

namespace {

LefschetzReport check(const QuotientRing& ring, Property property, unsigned power, const DeciderOptions& options) {
  LefschetzReport report;
  const auto forms = forms_for(ring, options, report);
  return run_checks(ring, property, power, forms, options.socle_cap, std::move(report));
}

}  // namespace

LefschetzReport check_wlp(const QuotientRing& ring, const DeciderOptions& options) {
  return check(ring, Property::Weak, 0, options);
}
LefschetzReport check_slp(const QuotientRing& ring, const DeciderOptions& options) {
  return check(ring, Property::Strong, 0, options);
}
LefschetzReport check_power(const QuotientRing& ring, unsigned i, const DeciderOptions& options) {
  return check(ring, Property::Power, i, options);
}

LefschetzReport check_wlp(const MonomialIdeal& ideal, const DeciderOptions& options) {
  return check_wlp(QuotientRing(ideal), options);
}
LefschetzReport check_slp(const MonomialIdeal& ideal, const DeciderOptions& options) {
  return check_slp(QuotientRing(ideal), options);
}
LefschetzReport check_power(const MonomialIdeal& ideal, unsigned i, const DeciderOptions& options) {
  return check_power(QuotientRing(ideal), i, options);
}
LefschetzReport check_wlp(const FormIdeal& ideal, const DeciderOptions& options) {
  return check_wlp(QuotientRing(ideal), options);
}
LefschetzReport check_slp(const FormIdeal& ideal, const DeciderOptions& options) {
  return check_slp(QuotientRing(ideal), options);
}
LefschetzReport check_power(const FormIdeal& ideal, unsigned i, const DeciderOptions& options) {
  return check_power(QuotientRing(ideal), i, options);
}

namespace {

// Hypotheses shared by both shortcuts; returns the reason they fail, if any.
std::optional<std::string> shortcut_gate(const QuotientRing& ring) {
  if (!ring.is_monomial()) return "shortcut requires a monomial ideal";
  if (ring.monomial_ideal().is_zero()) return "shortcut requires a nonzero ideal";
  if (ring.arity() < 3) return "shortcut requires n >= 3";
  if (ring.min_generator_degree() < 2) return "shortcut requires minimal generator degree d >= 2";
  return std::nullopt;
}

LefschetzReport single_surjectivity(const QuotientRing& ring, Property property, unsigned i, unsigned j,
                                    const DeciderOptions& options) {
  LefschetzReport report;
  const auto forms = forms_for(ring, options, report);
  report.property = property;
  report.power = property == Property::Power ? i : 0;
  report.socle_degree = ring.socle_degree(options.socle_cap);
  if (report.method == Method::Full) report.method = Method::Shortcut;
  std::uint64_t entries = 0;
  report.pairs.push_back(evaluate_pair(ring, forms, i, j, entries));
  report.matrix_entries = entries;
  finish(report);
  return report;
}

}  // namespace

LefschetzReport check_power_shortcut(const QuotientRing& ring, unsigned i, const DeciderOptions& options) {
  auto reason = shortcut_gate(ring);
  if (!reason) {
    const unsigned d = ring.min_generator_degree();
    if (i < 1 || i + 1 > d) {
      reason = "shortcut requires 1 <= i <= d - 1";
    } else if (ring.dim(d - i) < ring.dim(d)) {
      reason = "HF(R, d-i) < HF(R, d)";
    } else {
      return single_surjectivity(ring, Property::Power, i, d - i, options);
    }
  }
  LefschetzReport report = check_power(ring, i, options);
  report.fallback = true;
  report.fallback_reason = *reason;
  return report;
}

LefschetzReport check_power_shortcut(const MonomialIdeal& ideal, unsigned i, const DeciderOptions& options) {
  return check_power_shortcut(QuotientRing(ideal), i, options);
}

LefschetzReport check_slp_shortcut(const QuotientRing& ring, const DeciderOptions& options) {
  auto reason = shortcut_gate(ring);
  if (!reason) {
    const unsigned d = ring.min_generator_degree();
    if (ring.dim(1) < ring.dim(d)) {
      reason = "HF(R, 1) < HF(R, d)";
    } else {
      return single_surjectivity(ring, Property::Strong, d - 1, 1, options);
    }
  }
  LefschetzReport report = check_slp(ring, options);
  report.fallback = true;
  report.fallback_reason = *reason;
  return report;
}

LefschetzReport check_slp_shortcut(const MonomialIdeal& ideal, const DeciderOptions& options) {
  return check_slp_shortcut(QuotientRing(ideal), options);
}

}  // namespace lefschetz
