#include "lefschetz/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

struct RawTerm {
  Rational coefficient = 1;
  std::map<std::size_t, unsigned> exponents;  // 1-based variable index
};

struct RawGenerator {
  std::size_t line = 1;
  std::size_t column = 1;
  bool is_vector = false;
  std::vector<unsigned> vector;
  std::vector<RawTerm> terms;
  std::size_t max_index = 0;
};

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t column0)
      : text_(text), line_(line), column0_(column0) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  std::size_t column() const { return column0_ + pos_; }
  std::size_t line() const { return line_; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }

  [[noreturn]] void unexpected() const {
    if (done()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + peek() + "'");
  }

  Integer integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    return Integer(digits);
  }

  unsigned small(const char* what) {
    const std::size_t at = column();
    Integer v = integer();
    if (v > std::numeric_limits<unsigned>::max() / 2) throw ParseError(line_, at, std::string(what) + " is too large");
    return static_cast<unsigned>(v.get_ui());
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

bool is_exponent_vector(std::string_view text) {
  bool digit = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return digit;
}

RawGenerator parse_raw(std::string_view text, std::size_t line, std::size_t column0, char variable) {
  RawGenerator gen;
  gen.line = line;
  gen.column = column0;
  Cursor cur(text, line, column0);
  cur.skip_space();
  gen.column = cur.column();
  if (is_exponent_vector(text)) {
    gen.is_vector = true;
    while (!cur.done()) {
      gen.vector.push_back(cur.small("exponent"));
      cur.skip_space();
    }
    return gen;
  }
  bool first = true;
  for (;;) {
    cur.skip_space();
    if (cur.done()) {
      if (first) cur.fail("empty generator");
      break;
    }
    RawTerm term;
    if (cur.peek() == '+' || cur.peek() == '-') {
      if (cur.peek() == '-') term.coefficient = -1;
      cur.advance();
      cur.skip_space();
    } else if (!first) {
      cur.fail(std::string("expected '+' or '-' before '") + cur.peek() + "'");
    }
    bool has_coefficient = false;
    bool need_factor = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      Integer num = cur.integer();
      Integer den = 1;
      if (cur.peek() == '/') {
        cur.advance();
        const std::size_t at = cur.column();
        den = cur.integer();
        if (den == 0) throw ParseError(line, at, "zero denominator");
      }
      term.coefficient *= Rational(num, den);
      term.coefficient.canonicalize();
      has_coefficient = true;
      cur.skip_space();
      if (cur.peek() == '*') {
        cur.advance();
        cur.skip_space();
        need_factor = true;
      }
    }
    bool has_factor = false;
    while (cur.peek() == variable) {
      cur.advance();
      const std::size_t at = cur.column();
      const unsigned index = cur.small("variable index");
      if (index == 0) throw ParseError(line, at, "variable indices start at 1");
      unsigned power = 1;
      if (cur.peek() == '^') {
        cur.advance();
        power = cur.small("exponent");
      }
      term.exponents[index] += power;
      gen.max_index = std::max<std::size_t>(gen.max_index, index);
      has_factor = true;
      need_factor = false;
      cur.skip_space();
      if (cur.peek() == '*') {
        cur.advance();
        cur.skip_space();
        need_factor = true;
      }
    }
    if (need_factor) {
      if (cur.done()) cur.fail("expected a variable after '*'");
      cur.fail(std::string("expected a variable ") + variable + "K, found '" + cur.peek() + "'");
    }
    if (!has_coefficient && !has_factor) cur.unexpected();
    gen.terms.push_back(std::move(term));
    first = false;
  }
  return gen;
}

Polynomial build(const RawGenerator& gen, std::size_t arity) {
  Polynomial p(arity);
  if (gen.is_vector) {
    if (gen.vector.size() != arity) {
      throw ParseError(gen.line, gen.column,
                       "exponent vector of length " + std::to_string(gen.vector.size()) + " in arity " +
                           std::to_string(arity));
    }
    p.add_term(Monomial(gen.vector), 1);
    return p;
  }
  if (gen.max_index > arity) {
    throw ParseError(gen.line, gen.column,
                     "variable index " + std::to_string(gen.max_index) + " exceeds the arity " + std::to_string(arity));
  }
  for (const auto& term : gen.terms) {
    std::vector<unsigned> e(arity, 0);
    for (const auto& [index, power] : term.exponents) e[index - 1] = power;
    p.add_term(Monomial(std::move(e)), term.coefficient);
  }
  return p;
}

std::size_t infer_arity(const std::vector<RawGenerator>& gens, std::optional<std::size_t> arity) {
  std::size_t needed = 0;
  std::optional<std::size_t> vector_length;
  for (const auto& g : gens) {
    if (g.is_vector) {
      if (vector_length && *vector_length != g.vector.size()) {
        throw ParseError(g.line, g.column, "exponent vectors of different lengths");
      }
      vector_length = g.vector.size();
    }
    needed = std::max(needed, g.is_vector ? g.vector.size() : g.max_index);
  }
  if (arity) return *arity;
  if (needed == 0) throw ParseError(gens.front().line, gens.front().column, "cannot infer the number of variables");
  return needed;
}

ParsedIdeal finish(const std::vector<RawGenerator>& raw, std::optional<std::size_t> arity) {
  if (raw.empty()) throw ParseError(1, 1, "no generators");
  ParsedIdeal out;
  out.arity = infer_arity(raw, arity);
  for (const auto& g : raw) {
    Polynomial p = build(g, out.arity);
    if (p.is_zero()) throw ParseError(g.line, g.column, "generator is zero");
    auto degree = p.homogeneous_degree();
    if (!degree) throw ParseError(g.line, g.column, "generator is not homogeneous");
    if (*degree == 0) throw ParseError(g.line, g.column, "generator is a nonzero constant");
    out.generators.push_back(std::move(p));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool ParsedIdeal::is_monomial() const {
  return std::all_of(generators.begin(), generators.end(), [](const Polynomial& p) { return p.support_size() == 1; });
}

MonomialIdeal ParsedIdeal::to_monomial_ideal() const {
  if (!is_monomial()) throw DomainError("ideal has a generator with more than one term");
  std::vector<Monomial> gens;
  for (const auto& p : generators) gens.push_back(p.terms().begin()->first);
  return MonomialIdeal::minimalize(arity, std::move(gens));
}

FormIdeal ParsedIdeal::to_form_ideal() const { return FormIdeal(arity, generators); }

ParsedIdeal parse_ideal(std::string_view text, std::optional<std::size_t> arity) {
  std::vector<RawGenerator> raw;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const std::size_t end = text.find('\n');
    std::string_view row = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    row = row.substr(0, row.find('#'));
    if (trim(row).empty()) continue;
    raw.push_back(parse_raw(row, line, 1, 'x'));
  }
  return finish(raw, arity);
}

ParsedIdeal parse_generator_list(std::string_view text, std::optional<std::size_t> arity) {
  std::vector<RawGenerator> raw;
  std::size_t offset = 0;
  for (;;) {
    const std::size_t end = text.find(',', offset);
    std::string_view piece = text.substr(offset, end == std::string_view::npos ? std::string_view::npos : end - offset);
    if (trim(piece).empty()) throw ParseError(1, offset + 1, "empty generator");
    raw.push_back(parse_raw(piece, 1, offset + 1, 'x'));
    if (end == std::string_view::npos) break;
    offset = end + 1;
  }
  return finish(raw, arity);
}

Polynomial parse_polynomial(std::string_view text, char variable, std::optional<std::size_t> arity) {
  RawGenerator raw = parse_raw(text, 1, 1, variable);
  if (raw.is_vector) {
    // A bare integer is a constant, not an exponent vector, in this context.
    std::string_view t = trim(text);
    if (t.find_first_of(" \t") != std::string_view::npos) throw ParseError(1, 1, "expected a polynomial");
    RawTerm term;
    term.coefficient = Rational(Integer(std::string(t)));
    raw.is_vector = false;
    raw.terms = {term};
  }
  std::size_t n = arity.value_or(std::max<std::size_t>(raw.max_index, 1));
  return build(raw, n);
}

DualElement parse_dual_element(std::string_view text, std::optional<std::size_t> arity) {
  Polynomial p = parse_polynomial(text, 'y', arity);
  if (p.is_zero()) throw ParseError(1, 1, "dual element is zero");
  auto degree = p.homogeneous_degree();
  if (!degree) throw ParseError(1, 1, "dual element is not homogeneous");
  return DualElement(std::move(p), *degree);
}

std::vector<Integer> parse_sequence(std::string_view text) {
  std::string_view t = trim(text);
  std::vector<Integer> out;
  if (!t.empty() && t.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, e.byte, "malformed JSON array");
    }
    if (!j.is_array()) throw ParseError(1, 1, "expected a JSON array");
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError(1, 1, "sequence entries must be integers");
      out.emplace_back(std::to_string(v.get<long long>()));
    }
  } else {
    std::size_t offset = 0;
    for (;;) {
      const std::size_t end = text.find(',', offset);
      std::string_view piece = text.substr(offset, end == std::string_view::npos ? std::string_view::npos : end - offset);
      Cursor cur(piece, 1, offset + 1);
      cur.skip_space();
      bool negative = false;
      if (cur.peek() == '-') {
        negative = true;
        cur.advance();
      }
      Integer v = cur.integer();
      cur.skip_space();
      if (!cur.done()) cur.unexpected();
      out.push_back(negative ? Integer(-v) : v);
      if (end == std::string_view::npos) break;
      offset = end + 1;
    }
  }
  if (out.empty()) throw ParseError(1, 1, "empty sequence");
  return out;
}

std::string format_monomial(const Monomial& m, char variable) {
  std::string out;
  for (std::size_t t = 0; t < m.arity(); ++t) {
    if (m[t] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable + std::to_string(t + 1);
    if (m[t] > 1) out += '^' + std::to_string(m[t]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational a = abs(c);
    const bool constant = m.degree() == 0;
    if (constant) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + '*';
      out += format_monomial(m, variable);
    }
  }
  return out;
}

std::vector<std::string> format_generators(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(format_monomial(g));
  return out;
}

std::vector<std::string> format_generators(const FormIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(format_polynomial(g));
  return out;
}

std::string format_ideal_file(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "# " << ideal.arity() << " variables\n";
  for (const auto& g : ideal.generators()) {
    for (std::size_t t = 0; t < g.arity(); ++t) out << (t ? " " : "") << g[t];
    out << '\n';
  }
  return out.str();
}

}  // namespace lefschetz
