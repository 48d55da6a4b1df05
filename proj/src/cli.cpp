#include "lefschetz/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefschetz/classify.hpp"
#include "lefschetz/deciders.hpp"
#include "lefschetz/duality.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/text_format.hpp"

namespace lefschetz::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string ideal_path;
  std::string gens;
  std::string element;
  std::string sequence;
  std::string config_path;
  std::string range;
  std::string property;
  std::string order = "degrevlex";
  std::string mode = "exact";
  std::string format = "json";
  long n = -1;
  long d = -1;
  long i = -1;
  long k = -1;
  long upto = -1;
  long bound = -1;
  unsigned trials = 3;
  std::uint64_t seed = 1;
  long long coefficient_bound = 1000;
  unsigned threads = 1;
  std::uint64_t budget = 0;
  std::uint64_t entry_budget = 0;
  std::size_t sample = 0;
  bool no_timestamp = false;
  bool no_symmetry = false;
  bool shortcut = false;
  bool symmetry = false;
  bool seed_given = false;
  bool threads_given = false;
};

struct Outcome {
  json body = json::object();
  int code = kHolds;
  std::string csv;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t need(long value, const char* flag) {
  if (value < 0) throw UsageError(std::string("missing required option ") + flag);
  return static_cast<std::size_t>(value);
}

struct LoadedIdeal {
  std::optional<MonomialIdeal> monomial;
  std::optional<FormIdeal> form;

  std::size_t arity() const { return monomial ? monomial->arity() : form->arity(); }
  json to_json() const { return monomial ? lefschetz::to_json(*monomial) : lefschetz::to_json(*form); }
  QuotientRing ring(TermOrder order) const { return monomial ? QuotientRing(*monomial) : QuotientRing(*form, order); }
};

LoadedIdeal load_ideal(const Args& a) {
  if (a.ideal_path.empty() == a.gens.empty()) throw UsageError("give exactly one of --ideal or --gens");
  std::optional<std::size_t> arity;
  if (a.n >= 0) arity = static_cast<std::size_t>(a.n);
  ParsedIdeal parsed = a.gens.empty() ? parse_ideal(read_file(a.ideal_path), arity) : parse_generator_list(a.gens, arity);
  LoadedIdeal out;
  if (parsed.is_monomial()) out.monomial = parsed.to_monomial_ideal();
  else out.form = parsed.to_form_ideal();
  return out;
}

DeciderOptions decider_options(const Args& a) {
  DeciderOptions o;
  if (a.mode == "exact") o.mode = Mode::Exact;
  else if (a.mode == "randomized") o.mode = Mode::Randomized;
  else throw UsageError("--mode must be exact or randomized");
  if (a.trials == 0) throw UsageError("--trials must be positive");
  o.trials = a.trials;
  o.seed = a.seed;
  o.coefficient_bound = a.coefficient_bound;
  return o;
}

std::string csv_hilbert(const HilbertValues& hf) {
  std::ostringstream out;
  out << "k,dim\n";
  for (std::size_t k = 0; k < hf.size(); ++k) out << k << ',' << hf[k] << '\n';
  return out.str();
}

HilbertValues ring_hilbert(const QuotientRing& ring, unsigned upto) {
  HilbertValues hf;
  for (unsigned k = 0; k <= upto; ++k) hf.push_back(ring.dim(k));
  return hf;
}

Outcome cmd_hf(const Args& a) {
  LoadedIdeal ideal = load_ideal(a);
  QuotientRing ring = ideal.ring(parse_term_order(a.order));
  Outcome o;
  json artinian = nullptr;
  unsigned upto;
  if (a.upto >= 0) {
    upto = static_cast<unsigned>(a.upto);
  } else {
    try {
      upto = ring.socle_degree() + 1;
      artinian = true;
    } catch (const NotArtinian&) {
      upto = ring.default_cap();
      artinian = false;
    } catch (const Indeterminate&) {
      upto = ring.default_cap();
    }
  }
  if (artinian.is_null()) {
    try {
      artinian = ring.is_artinian();
    } catch (const Indeterminate&) {
    }
  }
  HilbertValues hf = ring_hilbert(ring, upto);
  o.body["ideal"] = ideal.to_json();
  o.body["upto"] = upto;
  o.body["hilbert_function"] = hf;
  o.body["artinian"] = artinian;
  o.csv = csv_hilbert(hf);
  return o;
}

Outcome cmd_socle(const Args& a) {
  LoadedIdeal ideal = load_ideal(a);
  QuotientRing ring = ideal.ring(parse_term_order(a.order));
  std::optional<unsigned> cap;
  if (a.upto >= 0) cap = static_cast<unsigned>(a.upto);
  const unsigned e = ring.socle_degree(cap);
  Outcome o;
  HilbertValues hf = ring_hilbert(ring, e);
  o.body["ideal"] = ideal.to_json();
  o.body["socle_degree"] = e;
  o.body["hilbert_function"] = hf;
  o.csv = csv_hilbert(hf);
  return o;
}

Outcome cmd_decide(const Args& a, Property property) {
  LoadedIdeal ideal = load_ideal(a);
  DeciderOptions options = decider_options(a);
  if (a.upto >= 0) options.socle_cap = static_cast<unsigned>(a.upto);
  QuotientRing ring = ideal.ring(parse_term_order(a.order));
  unsigned power = 0;
  if (property == Property::Power) {
    power = static_cast<unsigned>(need(a.i, "--i"));
    if (power == 0) throw UsageError("--i must be at least 1");
  }
  if (a.shortcut && property == Property::Weak) throw UsageError("--shortcut applies to slp and power only");
  LefschetzReport report;
  if (property == Property::Weak) report = check_wlp(ring, options);
  else if (property == Property::Strong) report = a.shortcut ? check_slp_shortcut(ring, options) : check_slp(ring, options);
  else report = a.shortcut ? check_power_shortcut(ring, power, options) : check_power(ring, power, options);
  Outcome o;
  o.body["ideal"] = ideal.to_json();
  o.body["mode"] = ideal.form ? "randomized" : a.mode;
  o.body["report"] = to_json(report);
  o.code = report.verdict ? kHolds : kFails;
  o.csv = pairs_csv(report.pairs);
  return o;
}

Outcome cmd_dual(const Args& a) {
  Outcome o;
  if (!a.element.empty()) {
    std::optional<std::size_t> arity;
    if (a.n >= 0) arity = static_cast<std::size_t>(a.n);
    DualElement f = parse_dual_element(a.element, arity);
    o.body["element"] = to_json(f);
    DualIdeal dual = dual_ideal_from_support(f.support(), f.arity(), f.degree());
    o.body["dual_ideal"] = dual.ideal.is_zero() ? json(nullptr) : to_json(dual.ideal);
    o.body["artinian"] = dual.artinian;
    o.body["hf_d"] = f.support_size();
    if (a.i >= 0) {
      const unsigned i = static_cast<unsigned>(a.i);
      DualElement image = ell_power_contract(f, i);
      o.body["contraction"] = {{"i", i}, {"result", to_json(image)}, {"annihilated", image.is_zero()}};
    }
    return o;
  }
  LoadedIdeal ideal = load_ideal(a);
  if (!ideal.monomial) throw UsageError("dual --k needs a monomial ideal");
  const unsigned k = static_cast<unsigned>(need(a.k, "--k"));
  InverseSystemPiece piece = inverse_system_piece(*ideal.monomial, k);
  json basis = json::array();
  for (const auto& m : piece.dual_basis) basis.push_back(format_monomial(m, 'y'));
  o.body["ideal"] = ideal.to_json();
  o.body["degree"] = k;
  o.body["dual_basis"] = basis;
  o.body["dimension"] = piece.dual_basis.size();
  return o;
}

Outcome cmd_extremal(const Args& a) {
  const std::size_t n = need(a.n, "--n");
  const unsigned d = static_cast<unsigned>(need(a.d, "--d"));
  const unsigned i = static_cast<unsigned>(need(a.i, "--i"));
  DualElement f = extremal_element(n, d, i);
  DualIdeal dual = dual_ideal_from_support(f.support(), n, d);
  Outcome o;
  o.body["n"] = n;
  o.body["d"] = d;
  o.body["i"] = i;
  o.body["element"] = to_json(f);
  o.body["expected_hf"] = d - i + 2;
  o.body["artinian"] = dual.artinian;
  o.body["dual_ideal"] = dual.ideal.is_zero() ? json(nullptr) : to_json(dual.ideal);
  DualElement image = ell_power_contract(f, i);
  o.body["annihilated"] = image.is_zero();
  if (dual.artinian && !dual.ideal.is_zero()) {
    QuotientRing ring(dual.ideal);
    const MaximalRank r = has_maximal_rank(ring, LinearForm::sum_of_variables(n), i, d - i);
    o.body["hf_d"] = ring.dim(d);
    o.body["map"] = {{"i", i},
                     {"j", d - i},
                     {"source_dim", ring.dim(d - i)},
                     {"target_dim", ring.dim(d)},
                     {"rank", r.rank},
                     {"maximal", r.maximal}};
  } else {
    o.body["hf_d"] = f.support_size();
    o.body["map"] = nullptr;
  }
  return o;
}

Outcome cmd_minsupport(const Args& a) {
  const unsigned d = static_cast<unsigned>(need(a.d, "--d"));
  const unsigned i = static_cast<unsigned>(need(a.i, "--i"));
  std::optional<MonomialIdeal> ideal;
  if (!a.ideal_path.empty() || !a.gens.empty()) {
    LoadedIdeal loaded = load_ideal(a);
    if (!loaded.monomial) throw UsageError("minsupport needs a monomial ideal");
    ideal = *loaded.monomial;
  } else {
    ideal = MonomialIdeal::zero(need(a.n, "--n"));
  }
  const std::size_t bound = a.bound >= 0 ? static_cast<std::size_t>(a.bound) : std::numeric_limits<std::size_t>::max();
  const std::uint64_t budget = a.budget ? a.budget : kDefaultSubsetBudget;
  KernelSupportResult r = min_kernel_support(*ideal, d, i, bound, budget);
  Outcome o;
  o.body["ideal"] = to_json(*ideal);
  o.body["d"] = d;
  o.body["i"] = i;
  o.body["bound"] = a.bound >= 0 ? json(a.bound) : json(nullptr);
  o.body["lower_bound"] = d >= i ? d - i + 2 : 0;
  o.body["min_support"] = r.min_support ? json(*r.min_support) : json(nullptr);
  o.body["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  o.body["rank_calls"] = r.rank_calls;
  o.code = r.min_support ? kHolds : kFails;
  return o;
}

json sequence_json(const HilbertSequence& h) {
  json out = json::array();
  for (const auto& v : h.values()) out.push_back(to_json(v));
  return out;
}

Outcome cmd_classify(const Args& a) {
  if (a.sequence.empty()) throw UsageError("missing required option --sequence");
  HilbertSequence h(parse_sequence(a.sequence));
  const Property p = parse_property(a.property.empty() ? "wlp" : a.property);
  if (p == Property::Power) throw UsageError("classify --property must be wlp or slp");
  const bool forces = p == Property::Weak ? forces_wlp(h) : forces_slp(h);
  Outcome o;
  o.body["sequence"] = sequence_json(h);
  o.body["property"] = to_string(p);
  o.body["o_sequence"] = true;
  o.body["t"] = t_index(h);
  o.body["forces"] = forces;
  o.code = forces ? kHolds : kFails;
  return o;
}

Outcome cmd_osequence(const Args& a) {
  if (a.sequence.empty()) throw UsageError("missing required option --sequence");
  HilbertSequence h(parse_sequence(a.sequence));
  json bounds = json::array();
  json violation = nullptr;
  for (std::size_t i = 1; i <= h.socle_degree(); ++i) {
    const Integer bound = macaulay_growth(h[i], static_cast<unsigned>(i));
    bounds.push_back({{"degree", i + 1}, {"bound", to_json(bound)}, {"value", to_json(h[i + 1])}});
    if (violation.is_null() && h[i + 1] > bound) violation = i + 1;
  }
  const bool ok = is_o_sequence(h);
  Outcome o;
  o.body["sequence"] = sequence_json(h);
  o.body["o_sequence"] = ok;
  o.body["growth_bounds"] = bounds;
  o.body["first_violation"] = violation;
  o.code = ok ? kHolds : kFails;
  return o;
}

HfRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like LO..HI");
  }
}

SearchSpec search_spec(const Args& a) {
  SearchSpec spec;
  if (!a.config_path.empty()) spec = parse_search_config(read_file(a.config_path), spec);
  if (a.n >= 0) spec.n = static_cast<std::size_t>(a.n);
  if (a.d >= 0) spec.d = static_cast<unsigned>(a.d);
  if (a.config_path.empty() && (a.n < 0 || a.d < 0)) throw UsageError("missing --n/--d (or --config)");
  if (!a.property.empty()) spec.property = parse_property(a.property);
  if (a.i >= 0) {
    spec.power = static_cast<unsigned>(a.i);
    spec.property = Property::Power;
  }
  if (!a.range.empty()) spec.range = parse_range(a.range);
  if (a.no_symmetry) spec.symmetry = false;
  if (a.budget) spec.ideal_budget = a.budget;
  if (a.entry_budget) spec.entry_budget = a.entry_budget;
  if (a.threads_given) spec.threads = a.threads;
  if (a.seed_given) spec.seed = a.seed;
  return spec;
}

Outcome verification_outcome(const VerificationReport& r, bool elapsed) {
  Outcome o;
  o.body["verification"] = to_json(r, elapsed);
  o.code = r.partial ? kBudget : (r.confirmed ? kHolds : kFails);
  o.csv = r.cases.empty() ? verification_csv(r) : cases_csv(r.cases);
  return o;
}

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  throw DomainError("expected a boolean, got '" + v + "'");
}

}  // namespace

Property parse_property(const std::string& name) {
  if (name == "wlp" || name == "WLP" || name == "weak") return Property::Weak;
  if (name == "slp" || name == "SLP" || name == "strong") return Property::Strong;
  if (name == "power") return Property::Power;
  throw UsageError("unknown property '" + name + "' (expected wlp, slp or power)");
}

SearchSpec parse_search_config(std::string_view text, SearchSpec spec) {
  std::istringstream in{std::string(text)};
  std::string row;
  std::size_t line = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, row)) {
    ++line;
    row = trim(row.substr(0, row.find('#')));
    if (row.empty()) continue;
    const auto eq = row.find('=');
    if (eq == std::string::npos) throw ParseError(line, 1, "expected key = value");
    const std::string key = trim(row.substr(0, eq));
    const std::string value = trim(row.substr(eq + 1));
    const std::size_t column = row.find_first_not_of(" \t", eq + 1) + 1;
    try {
      if (key == "n") spec.n = std::stoull(value);
      else if (key == "d") spec.d = static_cast<unsigned>(std::stoul(value));
      else if (key == "property") spec.property = parse_property(value);
      else if (key == "i" || key == "power") {
        spec.power = static_cast<unsigned>(std::stoul(value));
        spec.property = Property::Power;
      } else if (key == "range") spec.range = parse_range(value);
      else if (key == "symmetry") spec.symmetry = parse_bool(value);
      else if (key == "budget") spec.ideal_budget = std::stoull(value);
      else if (key == "entry_budget") spec.entry_budget = std::stoull(value);
      else if (key == "seed") spec.seed = std::stoull(value);
      else if (key == "threads") spec.threads = static_cast<unsigned>(std::stoul(value));
      else throw ParseError(line, 1, "unknown key '" + key + "'");
    } catch (const std::logic_error&) {
      throw ParseError(line, column, "malformed value for '" + key + "'");
    } catch (const UsageError& e) {
      throw ParseError(line, column, e.what());
    } catch (const DomainError& e) {
      throw ParseError(line, column, e.what());
    }
  }
  return spec;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Lefschetz properties of artinian monomial and form quotients", "lefschetz"};
  app.require_subcommand(1, 1);
  Args a;

  auto ideal_opts = [&](CLI::App* c) {
    c->add_option("--ideal", a.ideal_path, "Ideal file (one generator per line)");
    c->add_option("--gens", a.gens, "Comma-separated generators, e.g. x1^3,x2^3,x1*x2");
    c->add_option("--n", a.n, "Number of variables (defaults to the largest index used)");
    c->add_option("--order", a.order, "Term order for form ideals: degrevlex, lex, grlex");
  };
  auto decider_opts = [&](CLI::App* c) {
    c->add_option("--mode", a.mode, "exact (l = x1 + ... + xn) or randomized");
    c->add_option("--seed", a.seed, "Seed of the first random form");
    c->add_option("--trials", a.trials, "Random forms per check");
    c->add_option("--bound", a.coefficient_bound, "Random coefficients are drawn from [1, bound]");
    c->add_option("--upto", a.upto, "Cap on the socle degree search");
  };
  auto format_opt = [&](CLI::App* c) {
    c->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_flag("--no-timestamp", a.no_timestamp, "Omit timestamps and elapsed times");
  };
  auto campaign_opts = [&](CLI::App* c) {
    c->add_option("--n", a.n, "Number of variables");
    c->add_option("--d", a.d, "Generator degree");
    c->add_option("--config", a.config_path, "Campaign config file");
    c->add_option("--range", a.range, "HF(R,d) range LO..HI");
    c->add_option("--threads", a.threads, "Worker threads");
    c->add_option("--budget", a.budget, "Maximum number of ideals");
    c->add_option("--entry-budget", a.entry_budget, "Maximum number of matrix entries");
    c->add_option("--seed", a.seed, "Seed for sampling");
    c->add_flag("--no-symmetry", a.no_symmetry, "Do not reduce by permutations of the variables");
  };

  std::map<std::string, std::function<Outcome()>> handlers;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    format_opt(c);
    return c;
  };

  CLI::App* c = sub("hf", "Hilbert function of S/I");
  ideal_opts(c);
  c->add_option("--upto", a.upto, "Last degree to report");
  handlers["hf"] = [&] { return cmd_hf(a); };

  c = sub("socle", "Socle degree of an artinian quotient");
  ideal_opts(c);
  c->add_option("--upto", a.upto, "Cap on the search");
  handlers["socle"] = [&] { return cmd_socle(a); };

  c = sub("wlp", "Weak Lefschetz property");
  ideal_opts(c);
  decider_opts(c);
  handlers["wlp"] = [&] { return cmd_decide(a, Property::Weak); };

  c = sub("slp", "Strong Lefschetz property");
  ideal_opts(c);
  decider_opts(c);
  c->add_flag("--shortcut", a.shortcut, "Decide from l^{d-1}: R_1 -> R_d when its hypotheses hold");
  handlers["slp"] = [&] { return cmd_decide(a, Property::Strong); };

  c = sub("power", "Maximal rank of l^i in every degree");
  ideal_opts(c);
  decider_opts(c);
  c->add_option("--i", a.i, "Power of the linear form")->required();
  c->add_flag("--shortcut", a.shortcut, "Decide from l^i: R_{d-i} -> R_d when its hypotheses hold");
  handlers["power"] = [&] { return cmd_decide(a, Property::Power); };

  c = sub("dual", "Inverse system piece, or the ideal dual to a dual element's support");
  ideal_opts(c);
  c->add_option("--k", a.k, "Degree of the inverse system piece");
  c->add_option("--element", a.element, "Dual element in y1..yn, e.g. \"y1*y2^2 - y1*y3^2\"");
  c->add_option("--i", a.i, "Also contract the element by l^i");
  handlers["dual"] = [&] { return cmd_dual(a); };

  c = sub("extremal", "y1^{i-1}(y2-y3)^{d-i+1} and its dual ideal");
  c->add_option("--n", a.n)->required();
  c->add_option("--d", a.d)->required();
  c->add_option("--i", a.i)->required();
  handlers["extremal"] = [&] { return cmd_extremal(a); };

  c = sub("minsupport", "Smallest support of a dual element killed by l^i");
  ideal_opts(c);
  c->add_option("--d", a.d)->required();
  c->add_option("--i", a.i)->required();
  c->add_option("--bound", a.bound, "Largest support size to search");
  c->add_option("--budget", a.budget, "Maximum number of subset tests");
  handlers["minsupport"] = [&] { return cmd_minsupport(a); };

  c = sub("classify", "Does every algebra with this Hilbert function have the WLP/SLP?");
  c->add_option("--sequence", a.sequence, "h_0,h_1,...,h_e or a JSON array")->required();
  c->add_option("--property", a.property, "wlp or slp");
  handlers["classify"] = [&] { return cmd_classify(a); };

  c = sub("osequence", "Macaulay admissibility of a Hilbert function");
  c->add_option("--sequence", a.sequence, "h_0,h_1,...,h_e or a JSON array")->required();
  handlers["osequence"] = [&] { return cmd_osequence(a); };

  c = sub("verify-thm1", "WLP failure bound for equigenerated monomial ideals");
  campaign_opts(c);
  handlers["verify-thm1"] = [&] { return verification_outcome(verify_thm1(search_spec(a)), !a.no_timestamp); };

  c = sub("verify-thm2", "SLP failure bound, or the bound for l^i with --i");
  campaign_opts(c);
  c->add_option("--i", a.i, "Power of the linear form");
  handlers["verify-thm2"] = [&] {
    SearchSpec spec = search_spec(a);
    if (spec.property == Property::Weak) spec.property = Property::Strong;
    return verification_outcome(verify_thm2(spec), !a.no_timestamp);
  };

  c = sub("verify-thm37", "Smallest support of a dual element killed by l^i on all of E_d");
  c->add_option("--n", a.n)->required();
  c->add_option("--d", a.d)->required();
  c->add_option("--i", a.i)->required();
  c->add_option("--budget", a.budget, "Maximum number of subset tests");
  handlers["verify-thm37"] = [&] {
    return verification_outcome(
        verify_thm37(need(a.n, "--n"), static_cast<unsigned>(need(a.d, "--d")), static_cast<unsigned>(need(a.i, "--i")),
                     a.budget ? a.budget : kDefaultSubsetBudget),
        !a.no_timestamp);
  };

  c = sub("crosscheck", "Compare shortcut and full deciders on enumerated ideals");
  campaign_opts(c);
  c->add_option("--sample", a.sample, "Number of sampled ideals (0 = all)");
  c->add_flag("--symmetry", a.symmetry, "Reduce by permutations of the variables");
  handlers["crosscheck"] = [&] {
    SearchSpec spec = search_spec(a);
    if (a.config_path.empty()) spec.symmetry = a.symmetry && !a.no_symmetry;
    return verification_outcome(crosscheck_shortcuts(spec, a.sample), !a.no_timestamp);
  };

  c = sub("named", "Canonical examples with known answers");
  handlers["named"] = [&] { return verification_outcome(named_examples(), !a.no_timestamp); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kHolds : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kHolds : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  auto given = [&](const std::string& flag) {
    const CLI::Option* opt = chosen->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  a.seed_given = given("--seed");
  a.threads_given = given("--threads");
  Outcome o;
  try {
    o = handlers.at(name)();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Indeterminate& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kBudget;
  }

  if (a.format == "csv") {
    if (o.csv.empty()) {
      err << "error: " << name << " has no CSV form\n";
      return kUsage;
    }
    out << o.csv;
    return o.code;
  }
  json doc{{"schema", kReportSchema}, {"command", name}, {"exit_code", o.code}};
  doc.update(o.body);
  if (!a.no_timestamp) {
    doc["timestamp"] = timestamp_now();
    doc["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  out << doc.dump(2) << '\n';
  return o.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"lefschetz"};
  for (const auto& s : args) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lefschetz::cli
