#include "curvejac/dsl.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "curvejac/error.hpp"

namespace curvejac {

std::string Diagnostic::to_string() const {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << message;
  if (!token.empty()) os << " (at '" << token << "')";
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    if (ch == '(' || ch == ')') {
      out.push_back({std::string(1, ch), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '(' && line[i] != ')') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(first) && s[0] != '_') return false;
  for (const char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '-' && c != '.') return false;
  }
  return true;
}

/// Thrown inside the per-line parser; converted into a Diagnostic.
struct LineError {
  int column;
  std::string token;
  std::string message;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_length)
      : tokens_(std::move(tokens)), end_column_(line_length + 1) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  int column() const { return done() ? end_column_ : peek().column; }

  [[noreturn]] void fail(const std::string& message) const {
    throw LineError{column(), done() ? std::string() : peek().text, message};
  }

  Token next(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  void expect(const char* keyword) {
    if (done() || peek().text != keyword) fail(std::string("expected '") + keyword + "'");
    ++pos_;
  }

  bool accept(const char* keyword) {
    if (!done() && peek().text == keyword) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier(const char* what) {
    if (done() || !is_identifier(peek().text)) fail(std::string("expected ") + what);
    return tokens_[pos_++].text;
  }

  int integer(const char* what, int min_value) {
    if (done()) fail(std::string("expected ") + what);
    const std::string& s = peek().text;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < min_value) {
      fail(std::string("expected ") + what);
    }
    ++pos_;
    return value;
  }

  P1Point point() {
    if (done()) fail("expected a point (integer, a/b or inf)");
    try {
      P1Point p = P1Point::parse(peek().text);
      ++pos_;
      return p;
    } catch (const MathError&) {
      fail("expected a point (integer, a/b or inf)");
    }
  }

  void finish() {
    if (!done()) fail("unexpected trailing token");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_column_;
};

Branch parse_branch(LineParser& p, bool allow_mult) {
  p.expect("(");
  Branch b;
  b.component = p.identifier("a component id");
  p.expect("at");
  b.point = p.point();
  if (!p.done() && p.peek().text == "mult" && !allow_mult) p.fail("'mult' is only allowed in pinch branches");
  if (p.accept("mult")) {
    b.multiplicity = p.integer("a positive multiplicity", 1);
  }
  p.expect(")");
  return b;
}

}  // namespace

ParseResult parse_curve_dsl(std::string_view text) {
  ParseResult result;
  CurveDoc doc;
  doc.source = std::string(text);
  bool have_name = false;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const SourceLocation here{line_no, tokens.front().column};
    LineParser p(std::move(tokens), static_cast<int>(line.size()));
    try {
      const Token head = p.next("a declaration");
      if (head.text == "curve") {
        const std::string name = p.identifier("a curve name");
        p.finish();
        if (have_name) throw LineError{head.column, head.text, "duplicate 'curve' declaration"};
        doc.config.name = name;
        doc.locations["curve"] = here;
        have_name = true;
      } else if (head.text == "component") {
        Component c;
        c.id = p.identifier("a component id");
        if (p.accept("genus")) c.genus = p.integer("a nonnegative genus", 0);
        p.finish();
        doc.locations.emplace("component:" + c.id, here);
        doc.config.components.push_back(std::move(c));
      } else if (head.text == "sing") {
        Singularity s;
        s.id = p.identifier("a singularity id");
        const Token kind = p.next("pinch, node or cusp");
        if (kind.text == "pinch") {
          do {
            s.branches.push_back(parse_branch(p, true));
          } while (!p.done());
        } else if (kind.text == "node") {
          while (!p.done()) {
            if (s.branches.size() == 2) p.fail("node requires exactly two branches");
            s.branches.push_back(parse_branch(p, false));
          }
          if (s.branches.size() != 2) p.fail("node requires exactly two branches");
        } else if (kind.text == "cusp") {
          s.branches.push_back(parse_branch(p, false));
          if (!p.done()) p.fail("cusp takes exactly one branch");
          s.branches.back().multiplicity = 2;
        } else {
          throw LineError{kind.column, kind.text, "expected pinch, node or cusp"};
        }
        doc.locations.emplace("sing:" + s.id, here);
        doc.config.singularities.push_back(std::move(s));
      } else if (head.text == "base") {
        const std::string comp = p.identifier("a component id");
        p.expect("at");
        const P1Point pt = p.point();
        p.finish();
        if (!doc.config.basepoints.emplace(comp, pt).second) {
          throw LineError{here.column, head.text, "duplicate basepoint for '" + comp + "'"};
        }
        doc.locations.emplace("base:" + comp, here);
      } else {
        throw LineError{head.column, head.text, "unknown declaration"};
      }
    } catch (const LineError& e) {
      result.diagnostics.push_back({line_no, e.column, e.token, e.message});
    }
    if (end == text.size()) break;
  }

  if (!have_name && result.diagnostics.empty()) {
    result.diagnostics.push_back({1, 1, "", "missing 'curve <name>' declaration"});
  }
  if (result.diagnostics.empty()) result.doc = std::move(doc);
  return result;
}

std::string print_curve_dsl(const CurveConfig& config) {
  std::ostringstream os;
  os << "curve " << config.name << "\n";
  for (const auto& c : config.components) os << "component " << c.id << " genus " << c.genus << "\n";
  for (const auto& s : config.singularities) {
    os << "sing " << s.id << " pinch";
    for (const auto& b : s.branches) {
      os << " (" << b.component << " at " << b.point.to_string();
      if (b.multiplicity != 1) os << " mult " << b.multiplicity;
      os << ")";
    }
    os << "\n";
  }
  for (const auto& [comp, p] : config.basepoints) os << "base " << comp << " at " << p.to_string() << "\n";
  return os.str();
}

}  // namespace curvejac
