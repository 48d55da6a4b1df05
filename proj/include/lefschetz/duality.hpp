#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lefschetz/combinatorics.hpp"
#include "lefschetz/exactlinalg.hpp"
#include "lefschetz/ideals.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

/// Homogeneous element of the dual ring E = k[y_1..y_n], on which S acts by
/// differentiation. The zero element keeps its nominal degree.
class DualElement {
 public:
  DualElement(std::size_t arity, unsigned degree) : poly_(arity), degree_(degree) {}
  /// Throws DomainError unless every term has the given degree.
  DualElement(Polynomial poly, unsigned degree);

  std::size_t arity() const noexcept { return poly_.arity(); }
  unsigned degree() const noexcept { return degree_; }
  const Polynomial& polynomial() const noexcept { return poly_; }
  std::size_t support_size() const noexcept { return poly_.support_size(); }
  std::vector<Monomial> support() const;
  bool is_zero() const noexcept { return poly_.is_zero(); }

  friend bool operator==(const DualElement&, const DualElement&) = default;

 private:
  Polynomial poly_;
  unsigned degree_;
};

/// Dual monomials y^b for the standard monomials x^b of R_k.
struct InverseSystemPiece {
  unsigned degree = 0;
  std::vector<Monomial> dual_basis;
};

/// m o f: the partial derivative d^|m| f / dy^m.
DualElement contract(const Monomial& m, const DualElement& f);

/// (x_1 + ... + x_n)^i o f.
DualElement ell_power_contract(const DualElement& f, unsigned i);

InverseSystemPiece inverse_system_piece(const MonomialIdeal& ideal, unsigned k);

/// Matrix of f -> l^i o f from (I^{-1})_{j+i} to (I^{-1})_j in the dual monomial bases.
ExactMatrix contraction_matrix(const MonomialIdeal& ideal, unsigned i, unsigned j);

struct DualIdeal {
  MonomialIdeal ideal;
  /// False when the support contains a pure power.
  bool artinian = true;
};

/// Ideal generated by the degree-d monomials outside the support T.
DualIdeal dual_ideal_from_support(const std::vector<Monomial>& support, std::size_t n, unsigned d);

struct ExtremalPair {
  DualElement f;
  MonomialIdeal ideal;
};

/// f = y_1^{i-1} (y_2 - y_3)^{d-i+1} and the monomial ideal dual to its support.
/// Requires n >= 3 and 2 <= i <= d - 1.
ExtremalPair extremal_dual(std::size_t n, unsigned d, unsigned i);

/// Same construction without the range check on i (1 <= i <= d).
DualElement extremal_element(std::size_t n, unsigned d, unsigned i);

struct KernelSupportResult {
  /// Smallest |T| admitting a nonzero f supported on T with l^i o f = 0.
  std::optional<std::size_t> min_support;
  /// A kernel element realizing the minimum.
  std::optional<DualElement> witness;
  std::uint64_t rank_calls = 0;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// Searches dual supports inside (I^{-1})_d in increasing size up to `bound`.
/// Throws BudgetExceeded after `budget` subset rank tests.
KernelSupportResult min_kernel_support(const MonomialIdeal& ideal, unsigned d, unsigned i, std::size_t bound,
                                       std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace lefschetz
