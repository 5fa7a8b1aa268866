#include "envlab/spec_parser.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace envlab {

namespace {

struct Cursor {
  const std::string& s;
  int line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return pos < s.size() ? s[pos] : '\0'; }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col()); }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && !isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }
  long integer(const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer " + what);
    return std::stol(s.substr(start, pos - start));
  }

  // Rational literal p or p/q with optional sign.
  Rational rational(const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    const auto lit = s.substr(start, pos - start);
    const auto r = Rational::parse(lit);
    if (!r) fail("expected rational coefficient " + what);
    return *r;
  }
};

}  // namespace

AlgebraSpec parse_spec_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  std::optional<std::string> name;
  std::optional<int> dim;
  std::optional<WeightStructure> weights;
  std::vector<LieAlgebra::BracketLine> brackets;
  std::vector<std::pair<int, int>> seen_pairs;

  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string lstr = (hash == std::string::npos) ? raw : raw.substr(0, hash);
    Cursor cur{lstr, lineno};
    if (cur.done()) continue;

    if (cur.peek() == '[') {
      if (!dim) cur.fail("bracket line before 'dim'");
      cur.expect('[', "to open a bracket");
      const long i = cur.integer("generator index");
      cur.expect(',', "between bracket indices");
      const long j = cur.integer("generator index");
      cur.expect(']', "to close the bracket");
      if (i < 1 || j < 1 || i > *dim || j > *dim) cur.fail("bracket index out of range");
      if (i >= j) cur.fail("bracket entries must have i < j; the rest is antisymmetric");
      for (const auto& [a, b] : seen_pairs)
        if (a == i && b == j) cur.fail("duplicate bracket line");
      seen_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      cur.expect('=', "after the bracket");

      LieAlgebra::BracketLine bl{static_cast<int>(i) - 1, static_cast<int>(j) - 1, {}};
      bool first = true;
      while (!cur.done()) {
        int sign = 1;
        if (cur.eat('+')) {
          sign = 1;
        } else if (cur.eat('-')) {
          sign = -1;
        } else if (!first) {
          cur.fail("expected '+' or '-' between terms");
        }
        first = false;
        cur.skip_ws();
        Rational coeff(1);
        if (isdigit(static_cast<unsigned char>(cur.peek()))) {
          coeff = cur.rational("");
          cur.eat('*');
        }
        cur.skip_ws();
        if (cur.peek() == 'e') {
          ++cur.pos;
          const long k = cur.integer("generator index after 'e'");
          if (k < 1 || k > *dim) cur.fail("term index out of range");
          bl.terms.push_back({static_cast<int>(k) - 1, Rational(sign) * coeff});
        } else if (coeff.is_zero()) {
          // explicit zero bracket
        } else {
          cur.fail("expected generator 'e<k>'");
        }
      }
      brackets.push_back(std::move(bl));
      continue;
    }

    Cursor head{lstr, lineno};
    const std::string key = head.token();
    if (key == "name") {
      name = head.token();
      if (name->empty()) head.fail("expected a name");
    } else if (key == "dim") {
      const long d = head.integer("dimension");
      if (d < 1) head.fail("dimension must be positive");
      dim = static_cast<int>(d);
    } else if (key == "weights") {
      if (!dim) head.fail("'weights' before 'dim'");
      const std::string kind = head.token();
      WeightStructure ws;
      if (kind == "grading")
        ws.kind = WeightKind::Grading;
      else if (kind == "filtration")
        ws.kind = WeightKind::Filtration;
      else
        head.fail("weight kind must be 'grading' or 'filtration'");
      for (int t = 0; t < *dim; ++t) {
        const long w = head.integer("weight");
        if (w < 1) head.fail("weights must be positive");
        ws.weights.push_back(static_cast<int>(w));
      }
      if (!head.done()) head.fail("trailing tokens after weights");
      weights = std::move(ws);
    } else {
      head.fail("unknown key '" + key + "'");
    }
    if ((key == "name" || key == "dim") && !head.done())
      head.fail("trailing tokens after '" + key + "'");
  }

  if (!dim) throw ParseError("missing 'dim'", lineno, 1);
  AlgebraSpec spec{LieAlgebra(*dim, brackets, name.value_or("unnamed")), weights};
  return spec;
}

AlgebraSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

}  // namespace envlab
