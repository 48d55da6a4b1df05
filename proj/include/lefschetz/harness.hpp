#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/deciders.hpp"
#include "lefschetz/ideals.hpp"

namespace lefschetz {

struct HfRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// Parameters of a campaign over equigenerated artinian monomial ideals.
struct SearchSpec {
  std::size_t n = 3;
  unsigned d = 2;
  /// Allowed values of HF(R, d); defaults to [0, C(n+d-1, n-1) - n].
  std::optional<HfRange> range;
  Property property = Property::Weak;
  unsigned power = 0;
  /// Keep one support per orbit of the symmetric group permuting variables.
  bool symmetry = true;
  unsigned threads = 1;
  std::uint64_t ideal_budget = 1'000'000;
  std::uint64_t entry_budget = 100'000'000;
  std::uint64_t seed = 1;

  /// Throws DomainError on n < 3, d < 2 or a range outside the admissible one.
  void validate() const;
  std::size_t max_hf() const;
  HfRange effective_range() const;
};

/// Degree-d monomials that are not pure powers, in the canonical order.
std::vector<Monomial> mixed_monomials(std::size_t n, unsigned d);

/// Artinian ideal generated by every degree-d monomial outside the support.
MonomialIdeal ideal_from_support(std::size_t n, unsigned d, const std::vector<Monomial>& support);

/// Smallest image of the support under permutations of the variables.
std::vector<Monomial> canonical_support(const std::vector<Monomial>& support);

struct EquigeneratedIdeal {
  std::vector<Monomial> support;
  MonomialIdeal ideal;
};

/// Visits ideals by increasing HF(R, d), supports in lexicographic index order.
/// The visitor returns false to stop. Throws BudgetExceeded past spec.ideal_budget.
void for_each_equigenerated(const SearchSpec& spec, const std::function<bool(const EquigeneratedIdeal&)>& visit);
std::vector<EquigeneratedIdeal> enumerate_equigenerated(const SearchSpec& spec);

struct Witness {
  std::vector<Monomial> support;
  MonomialIdeal ideal;
  std::size_t hf = 0;
  LefschetzReport report;
  std::string note;
};

struct CaseRecord {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  std::string campaign;
  SearchSpec config;
  std::optional<unsigned> power;
  std::uint64_t ideals_examined = 0;
  std::size_t expected_bound = 0;
  std::uint64_t failures_below_bound = 0;
  std::optional<std::size_t> min_failing_hf;
  bool witness_at_bound = false;
  std::vector<Witness> witnesses;
  std::vector<CaseRecord> cases;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t matrix_entries = 0;
  bool partial = false;
  std::string partial_reason;
  bool confirmed = false;
  double elapsed_seconds = 0.0;
};

/// Lower bound on HF(R, d) for WLP failure: 3(d-1) (n = 3, d odd),
/// 3(d-1)+1 (n = 3, d even), 2d (n >= 4).
std::size_t wlp_bound(std::size_t n, unsigned d);
/// Lower bound on HF(R, d) for SLP failure: 4 for d = 2, 3 for d >= 3.
std::size_t slp_bound(unsigned d);
/// Lower bound on HF(R, d) when l^i fails maximal rank: d - i + 2.
std::size_t power_bound(unsigned d, unsigned i);

/// Smallest HF(R, d) of an enumerated ideal failing the spec's property, with its witness.
std::optional<Witness> min_failing_hf(const SearchSpec& spec);

VerificationReport verify_thm1(const SearchSpec& spec);
/// spec.property Strong checks the SLP bound; Power checks the bound for spec.power.
VerificationReport verify_thm2(const SearchSpec& spec);
VerificationReport verify_thm37(std::size_t n, unsigned d, unsigned i,
                                std::uint64_t subset_budget = 10'000'000);
/// sample_size = 0 checks the whole enumeration.
VerificationReport crosscheck_shortcuts(const SearchSpec& spec, std::size_t sample_size);
VerificationReport named_examples();

}  // namespace lefschetz
