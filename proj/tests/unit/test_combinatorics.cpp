#include <gtest/gtest.h>

#include <set>

#include "lefschetz/combinatorics.hpp"
#include "lefschetz/errors.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

std::vector<unsigned> v(std::initializer_list<unsigned> e) { return e; }

}  // namespace

TEST(MonomialBasis, SizesMatchBinomials) {
  EXPECT_EQ(monomial_basis(3, 2).size(), 6u);
  EXPECT_EQ(monomial_basis(3, 5).size(), 21u);
  EXPECT_EQ(monomial_basis(4, 2).size(), 10u);
  EXPECT_EQ(monomial_basis(1, 0).size(), 1u);
  EXPECT_EQ(monomial_basis(5, 0).front(), Monomial::one(5));
}

TEST(MonomialBasis, DistinctSortedAndOfRightDegree) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned d = 0; d <= 6; ++d) {
      const auto basis = monomial_basis(n, d);
      EXPECT_EQ(basis.size(), count_monomials(n, d).get_ui());
      EXPECT_EQ(basis.size(), oracle::binomial(n + d - 1, n - 1).get_ui());
      EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
      std::set<Monomial> unique(basis.begin(), basis.end());
      EXPECT_EQ(unique.size(), basis.size());
      for (const auto& m : basis) EXPECT_EQ(m.degree(), d);
    }
  }
}

TEST(MonomialOrder, DegreeThenColex) {
  EXPECT_LT(Monomial(v({0, 0, 1})), Monomial(v({2, 0, 0})));
  // Same degree: the last differing coordinate decides.
  EXPECT_LT(Monomial(v({2, 0, 0})), Monomial(v({0, 2, 0})));
  EXPECT_LT(Monomial(v({1, 1, 0})), Monomial(v({0, 0, 2})));
  const auto basis = monomial_basis(3, 2);
  EXPECT_EQ(basis.front(), Monomial(v({2, 0, 0})));
  EXPECT_EQ(basis.back(), Monomial(v({0, 0, 2})));
}

TEST(Monomial, Arithmetic) {
  Monomial a(v({1, 2, 0})), b(v({1, 0, 3}));
  EXPECT_EQ((a * b), Monomial(v({2, 2, 3})));
  EXPECT_EQ((a * b).degree(), 7u);
  EXPECT_TRUE(a.divides(a * b));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ((a * b).quotient(b), a);
  EXPECT_FALSE(a.quotient(b).has_value());
  EXPECT_TRUE(Monomial::variable(3, 1, 4).is_pure_power());
  EXPECT_FALSE(a.is_pure_power());
  EXPECT_FALSE(Monomial::one(3).is_pure_power());
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(multinomial(2, v({1, 1, 0})), 2);
  EXPECT_EQ(multinomial(3, v({3, 0, 0})), 1);
  EXPECT_EQ(multinomial(3, v({1, 1, 1})), 6);
  EXPECT_THROW(multinomial(3, v({1, 1, 0})), DomainError);
}

TEST(Multinomial, SumsToPowerOfN) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned i = 0; i <= 7; ++i) {
      Integer total = 0;
      for (const auto& m : monomial_basis(n, i)) total += multinomial(i, m.exponents());
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), n, i);
      EXPECT_EQ(total, expected) << "n=" << n << " i=" << i;
    }
  }
}

TEST(Binomial, ConventionsAndOracle) {
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  for (long c = 0; c <= 30; ++c) {
    for (long k = -1; k <= 32; ++k) EXPECT_EQ(binomial(c, k), oracle::binomial(c, k));
  }
  // Values past 64 bits stay exact.
  EXPECT_EQ(binomial(100, 50).get_str(), "100891344545564193334812497256");
}

TEST(MacaulayExpansion, Examples) {
  const auto e = macaulay_expansion(5, 3);
  ASSERT_EQ(e.terms.size(), 2u);
  EXPECT_EQ(e.terms[0], (BinomialTerm{4, 3}));
  EXPECT_EQ(e.terms[1], (BinomialTerm{2, 2}));
  EXPECT_EQ(e.to_string(), "C(4,3) + C(2,2)");
  EXPECT_EQ(macaulay_expansion(1, 1).to_string(), "C(1,1)");
  // Greedy: the largest C(t,2) <= 10 is C(5,2) = 10 itself.
  EXPECT_EQ(macaulay_expansion(10, 2).to_string(), "C(5,2)");
  EXPECT_TRUE(macaulay_expansion(0, 3).terms.empty());
  EXPECT_THROW(macaulay_expansion(5, 0), DomainError);
}

TEST(MacaulayExpansion, RoundTripAgainstGreedyOracle) {
  for (long m = 1; m <= 500; ++m) {
    for (unsigned i = 1; i <= 10; ++i) {
      const auto e = macaulay_expansion(m, i);
      EXPECT_EQ(e.value(), m);
      const auto expected = oracle::expansion(m, i);
      ASSERT_EQ(e.terms.size(), expected.size()) << m << " " << i;
      for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(e.terms[k].top, expected[k].first);
        EXPECT_EQ(e.terms[k].bottom, expected[k].second);
        if (k > 0) {
          EXPECT_GE(e.terms[k - 1].top, e.terms[k].top);
          EXPECT_EQ(e.terms[k - 1].bottom, e.terms[k].bottom + 1);
        }
        EXPECT_GE(e.terms[k].top, Integer(e.terms[k].bottom));
      }
    }
  }
}

TEST(MacaulayLower, Examples) {
  EXPECT_EQ(macaulay_lower(5, 3), 4);
  EXPECT_EQ(macaulay_lower(0, 2), 0);
  EXPECT_EQ(macaulay_lower(10, 2), 4);
}

TEST(MacaulayLower, WorkedIdentity) {
  for (unsigned d = 2; d <= 10; ++d) {
    for (long m = d + 1; m <= 2 * static_cast<long>(d) - 1; ++m) EXPECT_EQ(macaulay_lower(m, d), m - 1);
  }
}

TEST(MacaulayGrowth, Examples) {
  EXPECT_EQ(macaulay_growth(3, 1), 6);
  EXPECT_EQ(macaulay_growth(0, 4), 0);
  EXPECT_EQ(macaulay_growth(5, 3), 6);
}

TEST(MacaulayGrowth, PolynomialRingIsExtremal) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned i = 1; i <= 6; ++i) {
      EXPECT_EQ(macaulay_growth(count_monomials(n, i), i), count_monomials(n, i + 1));
    }
  }
}

TEST(PolynomialRing, DimensionDominatesBound) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (unsigned d = 2; d <= 10; ++d) {
      for (unsigned i = 1; i < d; ++i) EXPECT_GE(binomial(n + d - i - 1, n - 1), Integer(d - i + 2));
    }
  }
}
