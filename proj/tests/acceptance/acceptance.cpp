#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "lefschetz/classify.hpp"
#include "lefschetz/deciders.hpp"
#include "lefschetz/duality.hpp"
#include "lefschetz/exactlinalg.hpp"
#include "lefschetz/harness.hpp"
#include "lefschetz/text_format.hpp"

using namespace lefschetz;

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

SearchSpec spec_of(std::size_t n, unsigned d, Property property = Property::Weak, unsigned power = 0) {
  SearchSpec s;
  s.n = n;
  s.d = d;
  s.property = property;
  s.power = power;
  return s;
}

std::string tag(std::size_t n, unsigned d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

void wlp_bounds(Check& c) {
  const std::vector<std::tuple<std::size_t, unsigned, std::size_t>> cases{
      {3, 3, 6}, {3, 4, 10}, {3, 5, 12}, {4, 2, 4}, {4, 3, 6}};
  for (auto [n, d, bound] : cases) {
    const VerificationReport r = verify_thm1(spec_of(n, d));
    c.expect(r.expected_bound == bound, tag(n, d) + " bound " + std::to_string(r.expected_bound));
    c.expect(!r.partial, tag(n, d) + " partial: " + r.partial_reason);
    c.expect(r.failures_below_bound == 0, tag(n, d) + " failures below the bound");
    c.expect(r.witness_at_bound && r.min_failing_hf == bound, tag(n, d) + " no witness at the bound");
    c.expect(r.confirmed, tag(n, d) + " not confirmed");
  }
}

void slp_bounds(Check& c) {
  const std::vector<std::tuple<std::size_t, unsigned, std::size_t>> cases{
      {3, 3, 3}, {3, 4, 3}, {3, 5, 3}, {4, 3, 3}, {4, 2, 4}, {5, 2, 4}};
  for (auto [n, d, bound] : cases) {
    const VerificationReport r = verify_thm2(spec_of(n, d, Property::Strong));
    c.expect(r.expected_bound == bound, tag(n, d) + " bound " + std::to_string(r.expected_bound));
    c.expect(!r.partial && r.failures_below_bound == 0, tag(n, d) + " failures below the bound or partial");
    c.expect(r.confirmed && r.witness_at_bound, tag(n, d) + " not confirmed");
  }
  for (unsigned d = 3; d <= 6; ++d) {
    const std::string text = "y1^" + std::to_string(d - 2) + "*y2^2 - 2*y1^" + std::to_string(d - 2) + "*y2*y3 + y1^" +
                             std::to_string(d - 2) + "*y3^2";
    const DualElement f = parse_dual_element(text, 3);
    const DualIdeal dual = dual_ideal_from_support(f.support(), 3, d);
    c.expect(extremal_element(3, d, d - 1) == f, "d=" + std::to_string(d) + " extremal element differs");
    QuotientRing ring(dual.ideal);
    c.expect(dual.artinian && ring.dim(d) == 3, "d=" + std::to_string(d) + " HF(R,d) != 3");
    c.expect(!check_slp(ring).verdict, "d=" + std::to_string(d) + " witness has SLP");
  }
}

void power_bounds(Check& c) {
  const LinearForm ell = LinearForm::sum_of_variables(3);
  for (unsigned d = 4; d <= 6; ++d) {
    for (unsigned i = 2; i + 1 <= d; ++i) {
      const ExtremalPair pair = extremal_dual(3, d, i);
      QuotientRing ring(pair.ideal);
      const std::string at = "d=" + std::to_string(d) + " i=" + std::to_string(i);
      c.expect(ring.dim(d) == d - i + 2, at + " HF(R,d) = " + std::to_string(ring.dim(d)));
      const MaximalRank m = has_maximal_rank(ring, ell, i, d - i);
      c.expect(!m.maximal && m.rank < ring.dim(d), at + " l^i is surjective");
    }
  }
  for (unsigned i = 2; i <= 3; ++i) {
    const VerificationReport r = verify_thm2(spec_of(3, 4, Property::Power, i));
    c.expect(!r.partial && r.failures_below_bound == 0 && r.confirmed,
             "(3,4) i=" + std::to_string(i) + " exhaustive check not confirmed");
  }
}

void kernel_supports(Check& c) {
  const std::vector<std::tuple<std::size_t, unsigned, unsigned>> cases{{3, 4, 2}, {3, 5, 2}, {3, 5, 3}, {4, 3, 2}};
  for (auto [n, d, i] : cases) {
    const VerificationReport r = verify_thm37(n, d, i);
    c.expect(r.confirmed && r.min_failing_hf == d - i + 2,
             tag(n, d) + " i=" + std::to_string(i) + " minimum support " +
                 (r.min_failing_hf ? std::to_string(*r.min_failing_hf) : std::string("none")));
  }
}

void shortcut_agreement(Check& c) {
  for (auto [n, d, sample] : std::vector<std::tuple<std::size_t, unsigned, std::size_t>>{
           {3, 2, 0}, {3, 3, 0}, {4, 2, 0}, {3, 4, 500}}) {
    SearchSpec s = spec_of(n, d);
    s.symmetry = false;
    const VerificationReport r = crosscheck_shortcuts(s, sample);
    c.expect(!r.partial && r.disagreements == 0 && r.confirmed,
             tag(n, d) + " " + std::to_string(r.disagreements) + " disagreements");
    if (sample) c.expect(r.ideals_examined == sample, tag(n, d) + " sample size " + std::to_string(r.ideals_examined));
  }
}

void named(Check& c) {
  const VerificationReport r = named_examples();
  for (const auto& k : r.cases) c.expect(k.pass, k.name + ": " + k.observed);
  c.expect(r.confirmed, "named examples not confirmed");
}

void classifier(Check& c) {
  auto seq = [](std::vector<long> v) {
    std::vector<Integer> out(v.begin(), v.end());
    return HilbertSequence(out);
  };
  c.expect(forces_slp(seq({1, 2, 2, 1})), "forces_slp(1,2,2,1) false");
  c.expect(!forces_slp(seq({1, 3, 3, 1})), "forces_slp(1,3,3,1) true");
  c.expect(!forces_wlp(seq({1, 4, 10, 5, 1})), "forces_wlp(1,4,10,5,1) true");
  for (unsigned d = 1; d <= 10; ++d) {
    for (unsigned m = d + 1; m + 1 <= 2 * d; ++m) {
      c.expect(macaulay_lower(m, d) == m - 1, "lower(" + std::to_string(m) + "," + std::to_string(d) + ")");
    }
  }
}

void duality_and_initial_ideals(Check& c) {
  SearchSpec s = spec_of(3, 3);
  s.symmetry = false;
  const LinearForm ell = LinearForm::sum_of_variables(3);
  std::size_t ideals = 0;
  for (const auto& item : enumerate_equigenerated(s)) {
    ++ideals;
    QuotientRing ring(item.ideal);
    const unsigned e = ring.socle_degree();
    for (unsigned i = 1; i <= e; ++i) {
      for (unsigned j = 0; j + i <= e; ++j) {
        c.expect(rank(mult_map_matrix(ring, ell, i, j)) == rank(contraction_matrix(item.ideal, i, j)),
                 "rank duality fails at i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
  }
  c.expect(ideals == 128, "(3,3) enumeration has " + std::to_string(ideals) + " ideals");

  std::mt19937_64 rng(2024);
  std::vector<std::uint64_t> seeds;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned d = 2 + trial % 2;
    const FormIdeal ideal = gen::random_artinian_form_ideal(rng, 3, d);
    const unsigned cap = socle_degree(ideal) + 1;
    const MonomialIdeal ini = initial_ideal(ideal, TermOrder::Degrevlex, cap);
    c.expect(hilbert_function(ini, cap) == hilbert_function(ideal, cap), "trial " + std::to_string(trial) + " HF changed");
    const DeciderOptions randomized{.mode = Mode::Randomized, .trials = 3, .seed = 5000 + static_cast<std::uint64_t>(3 * trial)};
    const LefschetzReport initial_report = check_slp(QuotientRing(ini), randomized);
    seeds.insert(seeds.end(), initial_report.seeds.begin(), initial_report.seeds.end());
    if (initial_report.verdict) {
      c.expect(check_slp(QuotientRing(ideal), randomized).verdict,
               "trial " + std::to_string(trial) + " SLP of the initial ideal did not transfer");
    }
  }
  c.expect(seeds.size() == 300, "recorded " + std::to_string(seeds.size()) + " seeds");
  if (!seeds.empty()) c.detail << (c.pass ? "" : "; ") << "seeds " << seeds.front() << ".." << seeds.back();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"AC1 WLP bounds for equigenerated monomial ideals", wlp_bounds},
      {"AC2 SLP bounds and the y1^{d-2}(y2-y3)^2 witnesses", slp_bounds},
      {"AC3 l^i bounds for n=3, d=4..6", power_bounds},
      {"AC4 minimal kernel supports on E_d", kernel_supports},
      {"AC5 shortcut and full deciders agree", shortcut_agreement},
      {"AC6 named examples", named},
      {"AC7 classifier vectors and the lower-expansion identity", classifier},
      {"AC8 rank duality and initial-ideal properties", duality_and_initial_ideals},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!c.pass) ++failures;
    std::printf("[%s] %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", name.c_str(), secs,
                c.detail.str().empty() ? "" : ": ", c.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
