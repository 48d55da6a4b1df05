#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lefschetz/combinatorics.hpp"
#include "lefschetz/duality.hpp"
#include "lefschetz/ideals.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

/// Generators read from an ideal file or a --gens list.
struct ParsedIdeal {
  std::size_t arity = 0;
  std::vector<Polynomial> generators;

  /// Every generator is a single term.
  bool is_monomial() const;
  MonomialIdeal to_monomial_ideal() const;
  FormIdeal to_form_ideal() const;
};

/// One generator per line; '#' starts a comment. A line is either a
/// whitespace-separated exponent vector or a signed sum of COEFF*monomial terms,
/// where monomials are products of xK^E factors. The arity is the largest
/// variable index or vector length unless `arity` is given.
ParsedIdeal parse_ideal(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

/// Comma-separated generators on one line, as accepted by --gens.
ParsedIdeal parse_generator_list(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

/// A polynomial in the variables named by `variable` ('x' or 'y').
Polynomial parse_polynomial(std::string_view text, char variable = 'x',
                            std::optional<std::size_t> arity = std::nullopt);

/// A homogeneous element of the dual ring written in y1..yn.
DualElement parse_dual_element(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

/// "1,2,2,1" or a JSON array "[1, 2, 2, 1]".
std::vector<Integer> parse_sequence(std::string_view text);

std::string format_monomial(const Monomial& m, char variable = 'x');
/// Terms in ascending canonical order, e.g. "x1^2 - 3*x2*x3"; "0" for zero.
std::string format_polynomial(const Polynomial& p, char variable = 'x');
std::vector<std::string> format_generators(const MonomialIdeal& ideal);
std::vector<std::string> format_generators(const FormIdeal& ideal);
/// Ideal file text that parse_ideal reads back to the same ideal.
std::string format_ideal_file(const MonomialIdeal& ideal);

}  // namespace lefschetz
