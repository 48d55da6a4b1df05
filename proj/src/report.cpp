#include "lefschetz/report.hpp"

#include <sstream>

#include "lefschetz/errors.hpp"
#include "lefschetz/text_format.hpp"

namespace lefschetz {

using nlohmann::json;

json to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

json to_json(const Monomial& m, char variable) {
  return json{{"exponents", std::vector<unsigned>(m.exponents().begin(), m.exponents().end())},
              {"text", format_monomial(m, variable)}};
}

json to_json(const MonomialIdeal& ideal) {
  return json{{"kind", "monomial"}, {"arity", ideal.arity()}, {"generators", format_generators(ideal)}};
}

json to_json(const FormIdeal& ideal) {
  return json{{"kind", "form"}, {"arity", ideal.arity()}, {"generators", format_generators(ideal)}};
}

json to_json(const DualElement& f) {
  json support = json::array();
  for (const auto& [m, c] : f.polynomial().terms()) {
    support.push_back({{"monomial", format_monomial(m, 'y')}, {"coefficient", c.get_str()}});
  }
  return json{{"arity", f.arity()},
              {"degree", f.degree()},
              {"text", format_polynomial(f.polynomial(), 'y')},
              {"support_size", f.support_size()},
              {"support", support}};
}

json to_json(const PairRecord& p) {
  return json{{"i", p.power},       {"j", p.degree}, {"source_dim", p.source_dim},
              {"target_dim", p.target_dim}, {"rank", p.rank}, {"maximal", p.maximal}};
}

json to_json(const LefschetzReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back(to_json(p));
  json out{{"property", to_string(r.property)},
           {"verdict", r.verdict},
           {"method", to_string(r.method)},
           {"fallback", r.fallback},
           {"socle_degree", r.socle_degree},
           {"trials", r.trials},
           {"seeds", r.seeds},
           {"matrix_entries", r.matrix_entries},
           {"pairs", pairs},
           {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
  if (r.property == Property::Power) out["power"] = r.power;
  if (r.fallback) out["fallback_reason"] = r.fallback_reason;
  return out;
}

json to_json(const BinomialExpansion& e) {
  json terms = json::array();
  for (const auto& t : e.terms) terms.push_back({{"top", to_json(t.top)}, {"bottom", t.bottom}});
  return json{{"index", e.index}, {"value", to_json(e.value())}, {"terms", terms}, {"text", e.to_string()}};
}

namespace {

json config_json(const SearchSpec& s) {
  json out{{"n", s.n},
           {"d", s.d},
           {"property", to_string(s.property)},
           {"symmetry", s.symmetry},
           {"threads", s.threads},
           {"ideal_budget", s.ideal_budget},
           {"entry_budget", s.entry_budget},
           {"seed", s.seed}};
  const HfRange r = s.effective_range();
  out["range"] = {r.lo, r.hi};
  if (s.property == Property::Power) out["power"] = s.power;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join_support(const std::vector<Monomial>& support) {
  std::string out;
  for (const auto& m : support) out += (out.empty() ? "" : " ") + format_monomial(m, 'y');
  return out;
}

}  // namespace

json to_json(const VerificationReport& r, bool include_elapsed) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json support = json::array();
    for (const auto& m : w.support) support.push_back(format_monomial(m, 'y'));
    witnesses.push_back({{"note", w.note},
                         {"hf", w.hf},
                         {"support", support},
                         {"ideal", to_json(w.ideal)},
                         {"report", to_json(w.report)}});
  }
  json cases = json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  }
  json out{{"campaign", r.campaign},
           {"config", config_json(r.config)},
           {"ideals_examined", r.ideals_examined},
           {"expected_bound", r.expected_bound},
           {"failures_below_bound", r.failures_below_bound},
           {"min_failing_hf", r.min_failing_hf ? json(*r.min_failing_hf) : json(nullptr)},
           {"witness_at_bound", r.witness_at_bound},
           {"witnesses", witnesses},
           {"cases", cases},
           {"agreements", r.agreements},
           {"disagreements", r.disagreements},
           {"fallbacks", r.fallbacks},
           {"matrix_entries", r.matrix_entries},
           {"partial", r.partial},
           {"confirmed", r.confirmed}};
  if (r.power) out["power"] = *r.power;
  if (r.partial) out["partial_reason"] = r.partial_reason;
  if (include_elapsed) out["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

std::string pairs_csv(const std::vector<PairRecord>& pairs) {
  std::ostringstream out;
  out << kPairsCsvHeader << '\n';
  for (const auto& p : pairs) {
    out << p.power << ',' << p.degree << ',' << p.source_dim << ',' << p.target_dim << ',' << p.rank << ','
        << (p.maximal ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<PairRecord> parse_pairs_csv(std::string_view text) {
  std::vector<PairRecord> out;
  std::istringstream in{std::string(text)};
  std::string row;
  std::size_t line = 0;
  while (std::getline(in, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (line == 1) {
      if (row != kPairsCsvHeader) throw ParseError(1, 1, "unexpected header");
      continue;
    }
    if (row.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream cells(row);
    for (std::string cell; std::getline(cells, cell, ',');) fields.push_back(cell);
    if (fields.size() != 6) throw ParseError(line, 1, "expected 6 fields");
    PairRecord p;
    try {
      p.power = static_cast<unsigned>(std::stoul(fields[0]));
      p.degree = static_cast<unsigned>(std::stoul(fields[1]));
      p.source_dim = std::stoull(fields[2]);
      p.target_dim = std::stoull(fields[3]);
      p.rank = std::stoull(fields[4]);
    } catch (const std::logic_error&) {
      throw ParseError(line, 1, "malformed number");
    }
    if (fields[5] != "true" && fields[5] != "false") throw ParseError(line, 1, "maximal must be true or false");
    p.maximal = fields[5] == "true";
    out.push_back(p);
  }
  if (line == 0) throw ParseError(1, 1, "missing header");
  return out;
}

std::string verification_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "campaign,n,d,property,power,expected_bound,ideals_examined,failures_below_bound,min_failing_hf,"
         "witness_at_bound,partial,confirmed\n";
  out << r.campaign << ',' << r.config.n << ',' << r.config.d << ',' << to_string(r.config.property) << ','
      << (r.power ? std::to_string(*r.power) : "") << ',' << r.expected_bound << ',' << r.ideals_examined << ','
      << r.failures_below_bound << ',' << (r.min_failing_hf ? std::to_string(*r.min_failing_hf) : "") << ','
      << (r.witness_at_bound ? "true" : "false") << ',' << (r.partial ? "true" : "false") << ','
      << (r.confirmed ? "true" : "false") << '\n';
  if (!r.witnesses.empty()) {
    out << "\nwitness,hf,verdict,support\n";
    for (const auto& w : r.witnesses) {
      out << csv_field(w.note) << ',' << w.hf << ',' << (w.report.verdict ? "true" : "false") << ','
          << csv_field(join_support(w.support)) << '\n';
    }
  }
  return out.str();
}

std::string cases_csv(const std::vector<CaseRecord>& cases) {
  std::ostringstream out;
  out << "name,expected,observed,pass\n";
  for (const auto& c : cases) {
    out << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.observed) << ','
        << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace lefschetz
