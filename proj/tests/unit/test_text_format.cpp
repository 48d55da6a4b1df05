#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "lefschetz/cli.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/text_format.hpp"

using namespace lefschetz;

namespace {

Monomial mono(std::vector<unsigned> e) { return Monomial(std::move(e)); }

ParseError parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError(0, 0, "");
}

}  // namespace

TEST(ParseIdeal, ExponentVectors) {
  const ParsedIdeal p = parse_ideal("# comment\n3 0 0\n0 3 0   # trailing\n\n0 0 3\n1 1 1\n");
  EXPECT_EQ(p.arity, 3u);
  ASSERT_TRUE(p.is_monomial());
  const MonomialIdeal ideal = p.to_monomial_ideal();
  EXPECT_EQ(ideal.generators().size(), 4u);
  EXPECT_TRUE(ideal.contains(mono({1, 1, 1})));
  EXPECT_TRUE(is_artinian(ideal));
}

TEST(ParseIdeal, Polynomials) {
  const ParsedIdeal p = parse_ideal("x1^2 - 3/2*x2*x3\nx2^2 + x1 x3\nx3^2\n");
  EXPECT_EQ(p.arity, 3u);
  EXPECT_FALSE(p.is_monomial());
  ASSERT_EQ(p.generators.size(), 3u);
  EXPECT_EQ(p.generators[0].coefficient(mono({2, 0, 0})), Rational(1));
  EXPECT_EQ(p.generators[0].coefficient(mono({0, 1, 1})), Rational(-3, 2));
  EXPECT_EQ(p.generators[1].coefficient(mono({1, 0, 1})), Rational(1));
  EXPECT_EQ(p.to_form_ideal().generators().size(), 3u);
}

TEST(ParseIdeal, ExplicitArityWidens) {
  const ParsedIdeal p = parse_ideal("x1^2\nx2^2\n", 4);
  EXPECT_EQ(p.arity, 4u);
  EXPECT_THROW(parse_ideal("x5^2\n", 4), ParseError);
}

TEST(ParseIdeal, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error_of([] { parse_ideal("x1^2\nx2^2 + x3\n"); }).line(), 2u);
  EXPECT_EQ(parse_error_of([] { parse_ideal("x1^2\n\nx1 - x1\n"); }).line(), 3u);
  EXPECT_EQ(parse_error_of([] { parse_ideal("2 0\n1 1 1\n"); }).line(), 2u);
  EXPECT_EQ(parse_error_of([] { parse_ideal("x1^2\nx0^2\n"); }).line(), 2u);
  const ParseError bad = parse_error_of([] { parse_ideal("x1^2\nx2^2 + ?\n"); });
  EXPECT_EQ(bad.line(), 2u);
  EXPECT_GT(bad.column(), 1u);
  EXPECT_THROW(parse_ideal("# nothing\n"), ParseError);
  EXPECT_THROW(parse_ideal("0 0\n"), ParseError);
  EXPECT_THROW(parse_ideal("x1/0\n"), ParseError);
}

TEST(ParseGeneratorList, CommaSeparated) {
  const ParsedIdeal p = parse_generator_list("x1^2, x2^2,x3^2, x1*x2");
  EXPECT_EQ(p.arity, 3u);
  EXPECT_EQ(p.generators.size(), 4u);
  const ParseError e = parse_error_of([] { parse_generator_list("x1^2,,x2^2"); });
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 6u);
}

TEST(ParsePolynomial, ConstantsAndVariables) {
  EXPECT_EQ(parse_polynomial("5", 'x', 2).coefficient(Monomial::one(2)), Rational(5));
  const Polynomial f = parse_polynomial("y1^2*y2 - y3^3", 'y');
  EXPECT_EQ(f.arity(), 3u);
  EXPECT_EQ(f.homogeneous_degree(), 3u);
  EXPECT_THROW(parse_polynomial("x1 + y2"), ParseError);
}

TEST(ParseDualElement, HomogeneousOnly) {
  const DualElement f = parse_dual_element("y1^3 + y2^3 + y3^3 - y1*y2*y3", 3);
  EXPECT_EQ(f.degree(), 3u);
  EXPECT_THROW(parse_dual_element("y1^2 + y2"), ParseError);
  EXPECT_THROW(parse_dual_element("y1 - y1"), ParseError);
}

TEST(ParseSequence, BothSyntaxes) {
  const std::vector<Integer> expected{1, 2, 2, 1};
  EXPECT_EQ(parse_sequence("1,2,2,1"), expected);
  EXPECT_EQ(parse_sequence(" 1, 2 ,2,1 "), expected);
  EXPECT_EQ(parse_sequence("[1, 2, 2, 1]"), expected);
  EXPECT_THROW(parse_sequence(""), ParseError);
  EXPECT_THROW(parse_sequence("[1, 2"), ParseError);
  EXPECT_THROW(parse_sequence("[1, \"a\"]"), ParseError);
  EXPECT_THROW(parse_sequence("1,x"), ParseError);
}

TEST(Format, Monomials) {
  EXPECT_EQ(format_monomial(mono({2, 0, 1})), "x1^2*x3");
  EXPECT_EQ(format_monomial(mono({0, 0, 0})), "1");
  EXPECT_EQ(format_monomial(mono({0, 1}), 'y'), "y2");
}

TEST(Format, PolynomialRoundTrip) {
  EXPECT_EQ(format_polynomial(Polynomial(3)), "0");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const FormIdeal ideal = gen::random_artinian_form_ideal(rng, 3, 2 + trial % 2);
    for (const auto& g : ideal.generators()) {
      const std::string text = format_polynomial(g);
      EXPECT_EQ(parse_polynomial(text, 'x', 3), g) << text;
    }
  }
}

TEST(Format, IdealFileRoundTrip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const MonomialIdeal ideal = gen::random_equigenerated(rng, 3 + trial % 2, 2 + trial % 3);
    const ParsedIdeal back = parse_ideal(format_ideal_file(ideal));
    EXPECT_EQ(back.to_monomial_ideal(), ideal);
    std::string joined;
    for (const auto& g : format_generators(ideal)) joined += (joined.empty() ? "" : ",") + g;
    EXPECT_EQ(parse_generator_list(joined, ideal.arity()).to_monomial_ideal(), ideal);
  }
}

TEST(PairsCsv, RoundTrip) {
  const MonomialIdeal ideal = parse_ideal("x1^2\nx2^2\nx3^2\n").to_monomial_ideal();
  const LefschetzReport report = check_slp(QuotientRing(ideal));
  const std::string csv = pairs_csv(report.pairs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kPairsCsvHeader);
  EXPECT_EQ(parse_pairs_csv(csv), report.pairs);
  EXPECT_THROW(parse_pairs_csv("a,b\n"), ParseError);
  EXPECT_EQ(parse_error_of([&] { parse_pairs_csv(std::string(kPairsCsvHeader) + "\n1,0,1,3,1,true\n1,1,3\n"); }).line(),
            3u);
  EXPECT_THROW(parse_pairs_csv(std::string(kPairsCsvHeader) + "\n1,0,1,3,1,yes\n"), ParseError);
}

TEST(SearchConfig, KeysAndErrors) {
  const SearchSpec s = cli::parse_search_config(
      "# campaign\nn = 4\nd=3\nproperty = power\ni = 2\nrange = 2..5\nsymmetry = false\n"
      "budget = 1000\nentry_budget = 99\nseed = 7\nthreads = 2\n");
  EXPECT_EQ(s.n, 4u);
  EXPECT_EQ(s.d, 3u);
  EXPECT_EQ(s.property, Property::Power);
  EXPECT_EQ(s.power, 2u);
  ASSERT_TRUE(s.range.has_value());
  EXPECT_EQ(s.range->lo, 2u);
  EXPECT_EQ(s.range->hi, 5u);
  EXPECT_FALSE(s.symmetry);
  EXPECT_EQ(s.ideal_budget, 1000u);
  EXPECT_EQ(s.entry_budget, 99u);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(s.threads, 2u);
  EXPECT_EQ(parse_error_of([] { cli::parse_search_config("n = 3\nbogus = 1\n"); }).line(), 2u);
  EXPECT_EQ(parse_error_of([] { cli::parse_search_config("n = 3\n\nd = x\n"); }).line(), 3u);
  EXPECT_EQ(parse_error_of([] { cli::parse_search_config("range = a..b\n"); }).line(), 1u);
  EXPECT_THROW(cli::parse_search_config("just words\n"), ParseError);
}
