#include "kmu/problem_file.hpp"

#include <cctype>
#include <set>

#include "kmu/error.hpp"

namespace kmu {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("+-*^/(),;=:").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Cursor {
 public:
  Cursor(const std::vector<Token>& toks, std::size_t pos, std::size_t end) : toks_(toks), pos_(pos), end_(end) {}

  const Token& peek() const { return pos_ < end_ ? toks_[pos_] : toks_[end_]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < end_) ++pos_;
    return t;
  }
  bool at_end() const { return pos_ >= end_; }
  bool is_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
  bool accept(char c) {
    if (!is_sym(c)) return false;
    next();
    return true;
  }
  const Token& expect(char c, const char* what) {
    if (!is_sym(c)) fail(peek(), std::string("expected '") + c + "' " + what);
    return next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(peek(), std::string("expected ") + what);
    return next();
  }
  const Token& expect_int(const char* what) {
    if (peek().kind != Tok::Int) fail(peek(), std::string("expected ") + what);
    return next();
  }
  std::size_t pos() const { return pos_; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    std::string where = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, msg + " (found " + where + ")");
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
};

class PolyParser {
 public:
  PolyParser(Cursor& cur, const RingPtr& ring) : cur_(cur), ring_(ring) {}

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (cur_.accept('-')) negate = true;
    else
      cur_.accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (cur_.accept('+'))
        acc += term();
      else if (cur_.accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (cur_.accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (cur_.accept('^')) {
      const Token& e = cur_.expect_int("an exponent after '^'");
      if (e.text.size() > 5 || std::stol(e.text) > 65535) Cursor::fail(e, "exponent too large");
      long n = std::stol(e.text);
      Polynomial out = Polynomial::constant(ring_, 1);
      for (long k = 0; k < n; ++k) out = out * base;
      return out;
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = cur_.peek();
    if (t.kind == Tok::Int) {
      cur_.next();
      Scalar c(ring_->field(), mpz_class(t.text));
      if (cur_.is_sym('/')) {
        cur_.next();
        const Token& d = cur_.expect_int("a denominator after '/'");
        Scalar den(ring_->field(), mpz_class(d.text));
        if (den.is_zero()) Cursor::fail(d, "division by zero");
        c /= den;
      }
      return Polynomial::constant(ring_, c);
    }
    if (t.kind == Tok::Ident) {
      cur_.next();
      auto idx = ring_->index_of(t.text);
      if (!idx) Cursor::fail(t, "unknown variable '" + t.text + "'");
      return Polynomial::variable(ring_, *idx);
    }
    if (cur_.accept('(')) {
      Polynomial inner = expr();
      cur_.expect(')', "to close '('");
      return inner;
    }
    Cursor::fail(t, "expected a number, variable or '('");
  }

  Cursor& cur_;
  const RingPtr& ring_;
};

struct IdealSpan {
  std::string name;
  std::size_t begin;
  std::size_t end;  // index of the closing ';'
};

std::string value_text(Cursor& cur, const char* what) {
  std::string out;
  if (cur.is_sym(';')) Cursor::fail(cur.peek(), std::string("expected ") + what);
  while (!cur.is_sym(';')) {
    const Token& t = cur.next();
    if (t.kind == Tok::End) Cursor::fail(t, "expected ';'");
    out += t.text;
  }
  cur.next();
  return out;
}

const std::set<std::string> kOptionKeys{"mode", "field", "oracle_depth", "var", "name"};

void check_option(const Token& at, const std::string& key, const std::string& value) {
  if (!kOptionKeys.count(key)) Cursor::fail(at, "unknown option '" + key + "'");
  if (key == "mode" && value != "auto" && value != "graded" && value != "affine")
    Cursor::fail(at, "mode must be auto, graded or affine");
  if (key == "oracle_depth" &&
      (value.empty() || value.size() > 4 || value.find_first_not_of("0123456789") != std::string::npos))
    Cursor::fail(at, "oracle_depth must be a non-negative integer");
  if (key == "var" && (value.empty() || !(std::isalpha(static_cast<unsigned char>(value[0])) || value[0] == '_')))
    Cursor::fail(at, "var must be an identifier");
}

}  // namespace

const std::vector<Polynomial>* ProblemFile::ideal(const std::string& name) const {
  for (const auto& [n, gens] : ideals)
    if (n == name) return &gens;
  return nullptr;
}

std::string ProblemFile::option(const std::string& key, const std::string& fallback) const {
  auto it = options.find(key);
  return it == options.end() ? fallback : it->second;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return same_ring(a.ring, b.ring) && a.options == b.options && a.ideals == b.ideals;
}

ProblemFile parse_problem(std::string_view text, const std::optional<Field>& field_override) {
  const std::vector<Token> toks = lex(text);
  Cursor cur(toks, 0, toks.size() - 1);

  std::vector<std::string> names;
  std::vector<int> weights;
  std::optional<Token> ring_tok;
  std::optional<Field> field;
  std::map<std::string, std::string> options;
  std::vector<IdealSpan> spans;

  auto parse_field = [&](const Token& at, const std::string& value) {
    try {
      return Field::parse(value);
    } catch (const std::exception& e) {
      Cursor::fail(at, e.what());
    }
  };

  while (!cur.at_end()) {
    const Token& kw = cur.expect_ident("'ring', 'field', 'option' or 'ideal'");
    if (kw.text == "ring") {
      if (ring_tok) Cursor::fail(kw, "ring declared twice");
      ring_tok = kw;
      do {
        const Token& v = cur.expect_ident("a variable name");
        for (const auto& n : names)
          if (n == v.text) Cursor::fail(v, "duplicate variable '" + v.text + "'");
        cur.expect('(', "before the variable weight");
        const Token& w = cur.expect_int("a positive weight");
        if (w.text.size() > 6 || std::stol(w.text) < 1) Cursor::fail(w, "weights must be positive integers");
        cur.expect(')', "after the variable weight");
        names.push_back(v.text);
        weights.push_back(static_cast<int>(std::stol(w.text)));
      } while (cur.accept(','));
      cur.expect(';', "after the ring declaration");
    } else if (kw.text == "field") {
      const Token& at = cur.peek();
      field = parse_field(at, value_text(cur, "a field (q, fp or fp:<p>)"));
    } else if (kw.text == "option") {
      const Token& key = cur.expect_ident("an option name");
      cur.expect('=', "after the option name");
      const Token& at = cur.peek();
      std::string value = value_text(cur, "an option value");
      check_option(at, key.text, value);
      if (key.text == "field") field = parse_field(at, value);
      options[key.text] = value;
    } else if (kw.text == "ideal") {
      const Token& name = cur.expect_ident("an ideal name");
      for (const auto& s : spans)
        if (s.name == name.text) Cursor::fail(name, "ideal '" + name.text + "' declared twice");
      cur.expect('=', "after the ideal name");
      const std::size_t begin = cur.pos();
      while (!cur.is_sym(';')) {
        if (cur.peek().kind == Tok::End) Cursor::fail(cur.peek(), "expected ';' to end the ideal");
        cur.next();
      }
      spans.push_back({name.text, begin, cur.pos()});
      cur.next();
    } else {
      Cursor::fail(kw, "expected 'ring', 'field', 'option' or 'ideal'");
    }
  }
  if (!ring_tok) Cursor::fail(toks.back(), "missing ring declaration");
  if (field_override) field = *field_override;
  if (options.count("field") && field_override) options["field"] = field_override->to_string();

  ProblemFile out;
  out.options = std::move(options);
  out.ring = make_ring(names, weights, field.value_or(Field::rationals()));
  for (const auto& span : spans) {
    Cursor sub(toks, span.begin, span.end);
    std::vector<Polynomial> gens;
    if (sub.at_end()) Cursor::fail(toks[span.end], "expected a polynomial");
    do {
      const Token start = sub.peek();
      PolyParser pp(sub, out.ring);
      Polynomial g = pp.expr();
      if (!g.is_homogeneous()) {
        std::set<int> degs;
        for (const auto& t : g.terms()) degs.insert(out.ring->wdeg(t.mono));
        std::string list;
        for (int d : degs) list += (list.empty() ? "" : ", ") + std::to_string(d);
        throw ParseError(start.line, start.column,
                         "generator " + std::to_string(gens.size() + 1) + " of ideal " + span.name +
                             " is not homogeneous (term degrees " + list + ")");
      }
      gens.push_back(std::move(g));
    } while (sub.accept(','));
    if (!sub.at_end()) Cursor::fail(sub.peek(), "expected ',' or ';'");
    out.ideals.emplace_back(span.name, std::move(gens));
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  const std::vector<Token> toks = lex(text);
  Cursor cur(toks, 0, toks.size() - 1);
  PolyParser pp(cur, ring);
  Polynomial p = pp.expr();
  if (!cur.at_end()) Cursor::fail(cur.peek(), "unexpected trailing input");
  return p;
}

std::string format_problem(const ProblemFile& p) {
  const Ring& r = *p.ring;
  std::string out = "ring ";
  for (std::size_t i = 0; i < r.arity(); ++i) {
    if (i) out += ", ";
    out += r.names()[i] + "(" + std::to_string(r.weights()[i]) + ")";
  }
  out += ";\nfield " + r.field().to_string() + ";\n";
  for (const auto& [k, v] : p.options) out += "option " + k + " = " + v + ";\n";
  for (const auto& [name, gens] : p.ideals) {
    out += "ideal " + name + " = ";
    if (gens.empty()) out += "0";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + to_string(gens[i]);
    out += ";\n";
  }
  return out;
}

}  // namespace kmu
