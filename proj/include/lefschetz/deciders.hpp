#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lefschetz/exactlinalg.hpp"
#include "lefschetz/ideals.hpp"

namespace lefschetz {

/// l = c_1 x_1 + ... + c_n x_n with not all c_t zero.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coefficients);
  static LinearForm sum_of_variables(std::size_t n);

  std::size_t arity() const noexcept { return coefficients_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  bool is_sum_of_variables() const;

 private:
  std::vector<Rational> coefficients_;
};

/// Integer coefficients uniform in [1, bound], reproducible from the seed.
LinearForm random_linear_form(std::size_t n, std::uint64_t seed, std::int64_t bound = 1000);

enum class Property { Weak, Strong, Power };
enum class Method { Full, Shortcut, Randomized };
enum class Mode { Exact, Randomized };

std::string to_string(Property p);
std::string to_string(Method m);
std::string to_string(Mode m);

struct DeciderOptions {
  /// Exact uses l = x_1 + ... + x_n, which decides WLP/SLP for monomial algebras.
  /// Form ideals always run randomized.
  Mode mode = Mode::Exact;
  unsigned trials = 3;
  std::uint64_t seed = 1;
  std::int64_t coefficient_bound = 1000;
  std::optional<unsigned> socle_cap;
};

/// Evidence for one map l^i : R_j -> R_{j+i}.
struct PairRecord {
  unsigned power = 0;
  unsigned degree = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool maximal = true;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct LefschetzReport {
  Property property = Property::Weak;
  /// Fixed power for Property::Power, otherwise 0.
  unsigned power = 0;
  bool verdict = true;
  std::vector<PairRecord> pairs;
  /// First failing pair in lexicographic (i, j) order.
  std::optional<PairRecord> witness;
  Method method = Method::Full;
  /// A shortcut was requested but its hypotheses failed; `method` is then Full.
  bool fallback = false;
  std::string fallback_reason;
  /// Seeds of the random forms, randomized mode only.
  std::vector<std::uint64_t> seeds;
  unsigned trials = 0;
  unsigned socle_degree = 0;
  std::uint64_t matrix_entries = 0;
};

/// Matrix of l^i : R_j -> R_{j+i}; rows index standard monomials of degree j+i,
/// columns those of degree j.
ExactMatrix mult_map_matrix(const QuotientRing& ring, const LinearForm& form, unsigned i, unsigned j);
ExactMatrix mult_map_matrix(const MonomialIdeal& ideal, const LinearForm& form, unsigned i, unsigned j);

struct MaximalRank {
  bool maximal = false;
  std::size_t rank = 0;
};

/// Exact; full modular ranks short-circuit the rational elimination.
MaximalRank has_maximal_rank(const QuotientRing& ring, const LinearForm& form, unsigned i, unsigned j);
MaximalRank has_maximal_rank(const MonomialIdeal& ideal, const LinearForm& form, unsigned i, unsigned j);

/// Checks every map of the property with each form; a map counts as maximal
/// when at least one form attains maximal rank on it.
LefschetzReport check_with_forms(const QuotientRing& ring, Property property, unsigned power,
                                 std::span<const LinearForm> forms, std::optional<unsigned> socle_cap = {});

LefschetzReport check_wlp(const QuotientRing& ring, const DeciderOptions& options = {});
LefschetzReport check_slp(const QuotientRing& ring, const DeciderOptions& options = {});
/// l^i : R_j -> R_{j+i} for every j.
LefschetzReport check_power(const QuotientRing& ring, unsigned i, const DeciderOptions& options = {});

LefschetzReport check_wlp(const MonomialIdeal& ideal, const DeciderOptions& options = {});
LefschetzReport check_slp(const MonomialIdeal& ideal, const DeciderOptions& options = {});
LefschetzReport check_power(const MonomialIdeal& ideal, unsigned i, const DeciderOptions& options = {});
LefschetzReport check_wlp(const FormIdeal& ideal, const DeciderOptions& options = {});
LefschetzReport check_slp(const FormIdeal& ideal, const DeciderOptions& options = {});
LefschetzReport check_power(const FormIdeal& ideal, unsigned i, const DeciderOptions& options = {});

/// Decides maximal rank of l^i in every degree from surjectivity of
/// l^i : R_{d-i} -> R_d, valid for monomial ideals with minimal generator degree
/// d >= 2, n >= 3, 1 <= i <= d-1 and HF(R, d-i) >= HF(R, d). Falls back to
/// check_power otherwise.
LefschetzReport check_power_shortcut(const QuotientRing& ring, unsigned i, const DeciderOptions& options = {});
LefschetzReport check_power_shortcut(const MonomialIdeal& ideal, unsigned i, const DeciderOptions& options = {});

/// Decides SLP from surjectivity of l^{d-1} : R_1 -> R_d when HF(R, 1) >= HF(R, d);
/// falls back to check_slp otherwise.
LefschetzReport check_slp_shortcut(const QuotientRing& ring, const DeciderOptions& options = {});
LefschetzReport check_slp_shortcut(const MonomialIdeal& ideal, const DeciderOptions& options = {});

}  // namespace lefschetz
