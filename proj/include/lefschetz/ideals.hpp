#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lefschetz/combinatorics.hpp"
#include "lefschetz/exactlinalg.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

enum class TermOrder { Degrevlex, Lex, Grlex };

std::string to_string(TermOrder order);
TermOrder parse_term_order(const std::string& name);

/// True when a is larger than b in the given term order.
bool term_greater(const Monomial& a, const Monomial& b, TermOrder order);

/// Monomial ideal given by its minimal generators. The zero ideal has none.
class MonomialIdeal {
 public:
  /// Divisibility-minimal subset of a nonempty set of nonconstant monomials.
  static MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> monomials);
  static MonomialIdeal zero(std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  unsigned min_degree() const;
  unsigned max_degree() const;
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t arity, std::vector<Monomial> generators)
      : arity_(arity), generators_(std::move(generators)) {}

  std::size_t arity_ = 0;
  std::vector<Monomial> generators_;
};

/// Ideal generated by nonzero homogeneous forms of positive degree.
class FormIdeal {
 public:
  FormIdeal(std::size_t arity, std::vector<Polynomial> generators);
  static FormIdeal from_monomials(const MonomialIdeal& ideal);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  unsigned min_degree() const;
  unsigned max_degree() const;

 private:
  std::size_t arity_;
  std::vector<Polynomial> generators_;
  std::vector<unsigned> degrees_;
};

/// Degree-k piece of S/I.
struct GradedPiece {
  unsigned degree = 0;
  /// Standard monomials spanning R_k, in the canonical basis order.
  std::vector<Monomial> standard;
  /// Form case only: columns of `span` listed from largest to smallest in the term order.
  std::vector<Monomial> columns;
  /// Form case only: reduced row echelon basis of I_k over `columns`.
  std::optional<Echelon> span;
  /// Leading monomials of I_k (pivot columns of `span`, or the degree-k monomials in I).
  std::vector<Monomial> leading;
};

/// S/I with lazily computed graded pieces.
///
/// Not safe for concurrent use; parallel callers keep one instance per worker.
class QuotientRing {
 public:
  explicit QuotientRing(MonomialIdeal ideal);
  explicit QuotientRing(FormIdeal ideal, TermOrder order = TermOrder::Degrevlex);

  std::size_t arity() const noexcept { return arity_; }
  bool is_monomial() const noexcept { return monomial_.has_value(); }
  const MonomialIdeal& monomial_ideal() const;
  const FormIdeal& form_ideal() const;
  TermOrder order() const noexcept { return order_; }
  unsigned min_generator_degree() const noexcept { return min_degree_; }
  /// n(d_max - 1) + 8.
  unsigned default_cap() const noexcept;

  const GradedPiece& piece(unsigned k) const;
  std::size_t dim(unsigned k) const { return piece(k).standard.size(); }
  /// Position of m among the standard monomials of its degree, if standard.
  std::optional<std::size_t> standard_index(const Monomial& m) const;

  /// Coordinates of the class of a degree-k polynomial over piece(k).standard.
  std::vector<Rational> normal_form(unsigned k, const Polynomial& p) const;

  /// Largest e with dim(e) > 0; throws Indeterminate when dim(cap + 1) > 0.
  unsigned socle_degree(std::optional<unsigned> cap = std::nullopt) const;
  bool is_artinian(std::optional<unsigned> cap = std::nullopt) const;

 private:
  struct CachedPiece {
    GradedPiece piece;
    std::unordered_map<Monomial, std::size_t, MonomialHash> standard_index;
    std::unordered_map<Monomial, std::size_t, MonomialHash> column_index;
  };

  const CachedPiece& cached(unsigned k) const;
  CachedPiece build_monomial_piece(unsigned k) const;
  CachedPiece build_form_piece(unsigned k) const;

  std::size_t arity_;
  std::optional<MonomialIdeal> monomial_;
  std::optional<FormIdeal> forms_;
  TermOrder order_ = TermOrder::Degrevlex;
  unsigned min_degree_ = 0;
  unsigned max_degree_ = 0;
  mutable std::vector<std::unique_ptr<CachedPiece>> pieces_;
};

using HilbertValues = std::vector<std::size_t>;

bool is_artinian(const MonomialIdeal& ideal);
/// Throws Indeterminate when the Hilbert function has not vanished by the cap.
bool is_artinian(const FormIdeal& ideal, std::optional<unsigned> cap = std::nullopt);

GradedPiece graded_piece(const MonomialIdeal& ideal, unsigned k);
GradedPiece graded_piece(const FormIdeal& ideal, unsigned k, TermOrder order = TermOrder::Degrevlex);

HilbertValues hilbert_function(const MonomialIdeal& ideal, unsigned upto);
HilbertValues hilbert_function(const FormIdeal& ideal, unsigned upto);

unsigned socle_degree(const MonomialIdeal& ideal, std::optional<unsigned> cap = std::nullopt);
unsigned socle_degree(const FormIdeal& ideal, std::optional<unsigned> cap = std::nullopt);

/// Leading monomials of each graded piece I_k, k = 0..upto.
std::vector<std::vector<Monomial>> initial_ideal_degreewise(const FormIdeal& ideal, TermOrder order,
                                                             unsigned upto);

/// Monomial ideal generated by all degreewise leading monomials up to `upto`.
MonomialIdeal initial_ideal(const FormIdeal& ideal, TermOrder order, unsigned upto);

}  // namespace lefschetz
