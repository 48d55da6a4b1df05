#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lefschetz/classify.hpp"
#include "lefschetz/cli.hpp"
#include "lefschetz/deciders.hpp"
#include "lefschetz/duality.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/harness.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/text_format.hpp"

namespace py = pybind11;
using namespace lefschetz;

namespace {

ParsedIdeal parse_gens(const std::string& gens, long n) {
  std::optional<std::size_t> arity;
  if (n > 0) arity = static_cast<std::size_t>(n);
  return parse_generator_list(gens, arity);
}

QuotientRing ring_of(const ParsedIdeal& parsed, const std::string& order) {
  if (parsed.is_monomial()) return QuotientRing(parsed.to_monomial_ideal());
  return QuotientRing(parsed.to_form_ideal(), parse_term_order(order));
}

DeciderOptions options(const std::string& mode, unsigned trials, std::uint64_t seed) {
  DeciderOptions o;
  o.mode = mode == "randomized" ? Mode::Randomized : Mode::Exact;
  o.trials = trials;
  o.seed = seed;
  return o;
}

std::string decide(const std::string& gens, const std::string& property, unsigned i, long n, const std::string& mode,
                   unsigned trials, std::uint64_t seed, const std::string& order) {
  QuotientRing ring = ring_of(parse_gens(gens, n), order);
  const DeciderOptions o = options(mode, trials, seed);
  const Property p = cli::parse_property(property);
  LefschetzReport r = p == Property::Weak     ? check_wlp(ring, o)
                      : p == Property::Strong ? check_slp(ring, o)
                                              : check_power(ring, i, o);
  return to_json(r).dump();
}

SearchSpec spec_of(std::size_t n, unsigned d, bool symmetry, unsigned threads) {
  SearchSpec s;
  s.n = n;
  s.d = d;
  s.symmetry = symmetry;
  s.threads = threads;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lefschetz properties of artinian monomial and form quotients";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<Indeterminate>(m, "Indeterminate", PyExc_RuntimeError);

  m.def(
      "hilbert_function",
      [](const std::string& gens, unsigned upto, long n, const std::string& order) {
        QuotientRing ring = ring_of(parse_gens(gens, n), order);
        std::vector<std::size_t> out;
        for (unsigned k = 0; k <= upto; ++k) out.push_back(ring.dim(k));
        return out;
      },
      py::arg("gens"), py::arg("upto"), py::arg("n") = 0, py::arg("order") = "degrevlex");

  m.def(
      "socle_degree",
      [](const std::string& gens, long n, const std::string& order) {
        return ring_of(parse_gens(gens, n), order).socle_degree();
      },
      py::arg("gens"), py::arg("n") = 0, py::arg("order") = "degrevlex");

  m.def("decide", &decide, py::arg("gens"), py::arg("property"), py::arg("i") = 0, py::arg("n") = 0,
        py::arg("mode") = "exact", py::arg("trials") = 3, py::arg("seed") = 1, py::arg("order") = "degrevlex");

  m.def(
      "extremal",
      [](std::size_t n, unsigned d, unsigned i) {
        ExtremalPair pair = extremal_dual(n, d, i);
        nlohmann::json out{{"element", to_json(pair.f)}, {"ideal", to_json(pair.ideal)}};
        return out.dump();
      },
      py::arg("n"), py::arg("d"), py::arg("i"));

  m.def(
      "min_kernel_support",
      [](std::size_t n, unsigned d, unsigned i, std::size_t bound, std::uint64_t budget) {
        KernelSupportResult r = min_kernel_support(MonomialIdeal::zero(n), d, i, bound, budget);
        nlohmann::json out{{"min_support", r.min_support ? nlohmann::json(*r.min_support) : nlohmann::json(nullptr)},
                           {"witness", r.witness ? to_json(*r.witness) : nlohmann::json(nullptr)},
                           {"rank_calls", r.rank_calls}};
        return out.dump();
      },
      py::arg("n"), py::arg("d"), py::arg("i"), py::arg("bound"), py::arg("budget") = kDefaultSubsetBudget);

  m.def(
      "macaulay_expansion",
      [](long m_value, unsigned i) { return to_json(macaulay_expansion(Integer(m_value), i)).dump(); },
      py::arg("m"), py::arg("i"));
  m.def(
      "macaulay_lower", [](long m_value, unsigned i) { return macaulay_lower(Integer(m_value), i).get_si(); },
      py::arg("m"), py::arg("i"));
  m.def(
      "macaulay_growth", [](long m_value, unsigned i) { return macaulay_growth(Integer(m_value), i).get_si(); },
      py::arg("m"), py::arg("i"));

  m.def(
      "is_o_sequence", [](const std::string& seq) { return is_o_sequence(HilbertSequence(parse_sequence(seq))); },
      py::arg("sequence"));
  m.def(
      "forces",
      [](const std::string& seq, const std::string& property) {
        HilbertSequence h(parse_sequence(seq));
        return cli::parse_property(property) == Property::Weak ? forces_wlp(h) : forces_slp(h);
      },
      py::arg("sequence"), py::arg("property"));

  m.def(
      "verify_thm1",
      [](std::size_t n, unsigned d, bool symmetry, unsigned threads) {
        return to_json(verify_thm1(spec_of(n, d, symmetry, threads)), false).dump();
      },
      py::arg("n"), py::arg("d"), py::arg("symmetry") = true, py::arg("threads") = 1);
  m.def(
      "verify_thm2",
      [](std::size_t n, unsigned d, unsigned i, bool symmetry, unsigned threads) {
        SearchSpec s = spec_of(n, d, symmetry, threads);
        s.property = i ? Property::Power : Property::Strong;
        s.power = i;
        return to_json(verify_thm2(s), false).dump();
      },
      py::arg("n"), py::arg("d"), py::arg("i") = 0, py::arg("symmetry") = true, py::arg("threads") = 1);
  m.def(
      "verify_thm37",
      [](std::size_t n, unsigned d, unsigned i) { return to_json(verify_thm37(n, d, i), false).dump(); },
      py::arg("n"), py::arg("d"), py::arg("i"));
  m.def("named_examples", [] { return to_json(named_examples(), false).dump(); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
