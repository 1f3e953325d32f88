#include "apolar/poly_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <functional>
#include <map>

namespace apolar {

std::vector<std::string> default_var_names(std::size_t nvars, Ring ring) {
  std::vector<std::string> names;
  const bool upper = ring == Ring::dual;
  if (nvars <= 3) {
    const char* letters = upper ? "XYZ" : "xyz";
    for (std::size_t i = 0; i < nvars; ++i) names.emplace_back(1, letters[i]);
  } else {
    for (std::size_t i = 0; i < nvars; ++i) names.push_back((upper ? "X" : "x") + std::to_string(i));
  }
  return names;
}

std::string coeff_to_string(const Rat& c) { return to_string(c); }

std::string coeff_to_string(const CycElem& c) {
  if (c.is_rational()) return to_string(c[0]);
  return "(" + c.to_string() + ")";
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_unit(const Rat& c, int sign) { return c == Rat(sign); }
bool is_unit(const CycElem& c, int sign) { return c == CycElem(static_cast<long>(sign)); }
bool is_unit(const ComplexF&, int) { return false; }

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string coeff_to_string(const ComplexF& c0) {
  // Adding +0.0 folds -0.0 into 0.0 so "-0" never reaches the text.
  const ComplexF c(c0.real() + 0.0, c0.imag() + 0.0);
  std::string im = format_double(c.imag());
  if (im.front() != '-') im = "+" + im;
  return "(" + format_double(c.real()) + im + "*I)";
}

template <class K>
std::string to_string(const Poly<K>& p, const std::vector<std::string>& names) {
  if (names.size() != p.nvars()) throw DimensionError("variable name list has wrong length");
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = monomial_string(e, names);
    std::string term;
    if (mono.empty()) {
      term = coeff_to_string(c);
    } else if (is_unit(c, 1)) {
      term = mono;
    } else if (is_unit(c, -1)) {
      term = "-" + mono;
    } else {
      term = coeff_to_string(c) + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

template std::string to_string(const Poly<Rat>&, const std::vector<std::string>&);
template std::string to_string(const Poly<CycElem>&, const std::vector<std::string>&);
template std::string to_string(const Poly<ComplexF>&, const std::vector<std::string>&);

Poly<Rat> to_rational(const Poly<CycElem>& p) {
  return map_coeffs<Rat>(p, [](const CycElem& c) {
    if (!c.is_rational()) throw DomainError("coefficient " + c.to_string() + " is not rational");
    return c[0];
  });
}

Poly<CycElem> to_cyclotomic(const Poly<Rat>& p) {
  return map_coeffs<CycElem>(p, [](const Rat& c) { return CycElem(c); });
}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> tokenize(std::string_view s, bool decimals) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cc = col;
    if (std::isdigit(static_cast<unsigned char>(c)) || (decimals && c == '.')) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (decimals) {
        if (j < s.size() && s[j] == '.') {
          ++j;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        }
        if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
          if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            j = k;
          }
        }
      }
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({k, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

/// Resolution of identifiers for one parse.
template <class K>
struct Symbols {
  std::size_t nvars = 0;
  Ring ring = Ring::primal;
  std::map<std::string, std::size_t> variables;
  std::map<std::string, K> constants;
  std::function<K(const Token&)> number;
  bool allow_conj = false;
};

template <class K>
class Parser {
 public:
  Parser(std::vector<Token> toks, const Symbols<K>& sym) : toks_(std::move(toks)), sym_(sym) {}

  Poly<K> parse() {
    Poly<K> p = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  using T = field_traits<K>;

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }
  Poly<K> constant(const K& c) const { return Poly<K>::constant(sym_.nvars, c, sym_.ring); }

  Poly<K> expr() {
    Poly<K> acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      Poly<K> rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  Poly<K> term() {
    Poly<K> acc = factor();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token op = take();
      Poly<K> rhs = factor();
      if (op.kind == Tok::star) {
        acc *= rhs;
      } else {
        if (rhs.degree() > 0)
          throw ParseError("division by a non-constant expression", op.line, op.col);
        if (rhs.is_zero()) throw ParseError("division by zero", op.line, op.col);
        acc *= T::inv(rhs.terms().begin()->second);
      }
    }
    return acc;
  }

  Poly<K> factor() {
    if (peek().kind == Tok::minus) {
      ++pos_;
      return -factor();
    }
    if (peek().kind == Tok::plus) {
      ++pos_;
      return factor();
    }
    Poly<K> base = primary();
    if (peek().kind == Tok::caret) {
      ++pos_;
      if (peek().kind != Tok::number) fail("expected a non-negative integer exponent");
      const Token& t = take();
      unsigned e = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), e);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError("exponent must be a non-negative integer", t.line, t.col);
      return pow(base, e);
    }
    return base;
  }

  Poly<K> primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::number:
        ++pos_;
        return constant(sym_.number(t));
      case Tok::lparen: {
        ++pos_;
        Poly<K> inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident: {
        ++pos_;
        if (t.text == "conj" && sym_.allow_conj) {
          expect(Tok::lparen, "'(' after conj");
          Poly<K> inner = expr();
          expect(Tok::rparen, "')'");
          return apolar::conj(inner);
        }
        if (auto v = sym_.variables.find(t.text); v != sym_.variables.end())
          return Poly<K>::variable(sym_.nvars, v->second, sym_.ring);
        if (auto c = sym_.constants.find(t.text); c != sym_.constants.end()) return constant(c->second);
        throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
      }
      default:
        fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  const Symbols<K>& sym_;
  std::size_t pos_ = 0;
};

const std::map<std::string, CycElem>& exact_constants() {
  static const std::map<std::string, CycElem> table{
      {"i", CycElem::imag_unit()}, {"z12", CycElem::zeta()},   {"alpha", CycElem::alpha()},
      {"a", CycElem::alpha()},     {"omega", CycElem::omega()}, {"eta", CycElem::eta()},
      {"beta", CycElem::beta()},
  };
  return table;
}

bool is_letter_var(const std::string& s) {
  return s.size() == 1 && std::string_view("xyzXYZ").find(s[0]) != std::string_view::npos;
}

bool is_indexed_var(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'X')) return false;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

Symbols<CycElem> exact_symbols(const std::vector<Token>& toks, const ParseOptions& opts) {
  bool letters = false, indexed = false, upper = false, lower = false;
  std::size_t max_index = 0;
  for (const auto& t : toks) {
    if (t.kind != Tok::ident) continue;
    if (is_letter_var(t.text)) {
      letters = true;
    } else if (is_indexed_var(t.text)) {
      indexed = true;
      max_index = std::max<std::size_t>(max_index, std::stoul(t.text.substr(1)));
    } else {
      continue;
    }
    (std::isupper(static_cast<unsigned char>(t.text[0])) ? upper : lower) = true;
    if ((letters && indexed) || (upper && lower))
      throw ParseError("mixed variable naming schemes", t.line, t.col);
  }
  Symbols<CycElem> sym;
  sym.ring = upper ? Ring::dual : Ring::primal;
  sym.nvars = opts.nvars.value_or(indexed ? max_index + 1 : 3);
  if (indexed && max_index >= sym.nvars)
    throw DimensionError("variable index exceeds the declared variable count");
  const char base = upper ? 'X' : 'x';
  if (indexed) {
    for (std::size_t k = 0; k < sym.nvars; ++k) sym.variables[std::string(1, base) + std::to_string(k)] = k;
  } else {
    const char* letters3 = upper ? "XYZ" : "xyz";
    for (std::size_t k = 0; k < std::min<std::size_t>(3, sym.nvars); ++k)
      sym.variables[std::string(1, letters3[k])] = k;
  }
  sym.constants = exact_constants();
  sym.allow_conj = true;
  sym.number = [](const Token& t) { return CycElem(parse_rat(t.text)); };
  return sym;
}

}  // namespace

Poly<CycElem> parse_poly(std::string_view text, const ParseOptions& opts) {
  auto toks = tokenize(text, false);
  const Symbols<CycElem> sym = exact_symbols(toks, opts);
  return Parser<CycElem>(std::move(toks), sym).parse();
}

Poly<Rat> parse_rational_poly(std::string_view text, const ParseOptions& opts) {
  return to_rational(parse_poly(text, opts));
}

CycElem parse_constant(std::string_view text) {
  auto toks = tokenize(text, false);
  Symbols<CycElem> sym;
  sym.nvars = 0;
  sym.constants = exact_constants();
  sym.allow_conj = true;
  sym.number = [](const Token& t) { return CycElem(parse_rat(t.text)); };
  const Poly<CycElem> p = Parser<CycElem>(std::move(toks), sym).parse();
  return p.is_zero() ? CycElem() : p.terms().begin()->second;
}

Poly<ComplexF> parse_complex_poly(std::string_view text, const std::vector<std::string>& names) {
  auto toks = tokenize(text, true);
  Symbols<ComplexF> sym;
  sym.nvars = names.size();
  for (std::size_t k = 0; k < names.size(); ++k) sym.variables[names[k]] = k;
  sym.constants["I"] = ComplexF(0.0, 1.0);
  sym.number = [](const Token& t) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw ParseError("malformed number '" + t.text + "'", t.line, t.col);
    return ComplexF(v, 0.0);
  };
  return Parser<ComplexF>(std::move(toks), sym).parse();
}

}  // namespace apolar
