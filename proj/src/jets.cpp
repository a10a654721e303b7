#include "hitchin/jets.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace hitchin {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, Comma, Semi, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= s_.size()) return {Tok::End, "", line, col};
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        id += advance();
      return {Tok::Ident, id, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) num += advance();
      return {Tok::Number, num, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      case ',': return {Tok::Comma, ",", line, col};
      case ';': return {Tok::Semi, ";", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  char advance() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { shift(); }

  AffineVariety parse() {
    expect_keyword("vars");
    AffineVariety v;
    v.vars.push_back(expect_ident());
    while (cur_.kind == Tok::Comma) {
      shift();
      v.vars.push_back(expect_ident());
    }
    for (std::size_t i = 0; i < v.vars.size(); ++i) {
      if (index_.count(v.vars[i]))
        throw ParseError(cur_.line, cur_.col, "duplicate variable '" + v.vars[i] + "'");
      index_[v.vars[i]] = static_cast<int>(i);
    }
    nvars_ = static_cast<int>(v.vars.size());
    expect(Tok::Semi, "';' after variable declarations");
    while (cur_.kind != Tok::End) {
      MultiPoly g = expr();
      if (g.is_zero()) v.zeroGenerators.push_back(static_cast<int>(v.generators.size()));
      v.generators.push_back(std::move(g));
      if (cur_.kind == Tok::Semi) {
        shift();
        continue;
      }
      if (cur_.kind != Tok::End)
        throw ParseError(cur_.line, cur_.col, "expected ';' or end of input");
    }
    return v;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  void expect(Tok k, const std::string& what) {
    if (cur_.kind != k) throw ParseError(cur_.line, cur_.col, "expected " + what);
    shift();
  }

  void expect_keyword(const std::string& kw) {
    if (cur_.kind != Tok::Ident || cur_.text != kw)
      throw ParseError(cur_.line, cur_.col, "expected '" + kw + "'");
    shift();
  }

  std::string expect_ident() {
    if (cur_.kind != Tok::Ident) throw ParseError(cur_.line, cur_.col, "expected identifier");
    std::string s = cur_.text;
    shift();
    return s;
  }

  MultiPoly expr() {
    bool neg = false;
    if (cur_.kind == Tok::Minus) {
      neg = true;
      shift();
    } else if (cur_.kind == Tok::Plus) {
      shift();
    }
    MultiPoly acc = term();
    if (neg) acc = -acc;
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      shift();
      MultiPoly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (cur_.kind == Tok::Star) {
      shift();
      acc = acc * factor();
    }
    return acc;
  }

  MultiPoly factor() {
    if (cur_.kind == Tok::Minus) {
      shift();
      return -factor();
    }
    MultiPoly b = base();
    if (cur_.kind == Tok::Caret) {
      shift();
      if (cur_.kind != Tok::Number)
        throw ParseError(cur_.line, cur_.col, "expected integer exponent");
      int e = std::stoi(cur_.text);
      shift();
      b = b.pow(e);
    }
    return b;
  }

  MultiPoly base() {
    switch (cur_.kind) {
      case Tok::Ident: {
        auto it = index_.find(cur_.text);
        if (it == index_.end())
          throw ParseError(cur_.line, cur_.col, "undeclared identifier '" + cur_.text + "'");
        shift();
        return MultiPoly::variable(nvars_, it->second);
      }
      case Tok::Number: {
        Integer num(cur_.text);
        shift();
        Integer den(1);
        if (cur_.kind == Tok::Slash) {
          shift();
          if (cur_.kind != Tok::Number)
            throw ParseError(cur_.line, cur_.col, "expected denominator");
          den = Integer(cur_.text);
          if (den == 0) throw ParseError(cur_.line, cur_.col, "zero denominator");
          shift();
        }
        return MultiPoly::constant(nvars_, Rational(num, den));
      }
      case Tok::LParen: {
        shift();
        MultiPoly e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::End:
        throw ParseError(cur_.line, cur_.col, "unexpected end of input");
      default:
        throw ParseError(cur_.line, cur_.col, "unexpected token '" + cur_.text + "'");
    }
  }

  Lexer lex_;
  Token cur_{};
  std::map<std::string, int> index_;
  int nvars_ = 0;
};

// Truncated polynomial in t with MultiPoly coefficients.
using TPoly = std::vector<MultiPoly>;

TPoly t_mul(const TPoly& a, const TPoly& b, int n, int nvars) {
  TPoly c(static_cast<std::size_t>(n + 1), MultiPoly(nvars));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      if (a[static_cast<std::size_t>(i)].is_zero() || b[static_cast<std::size_t>(j)].is_zero())
        continue;
      c[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  return c;
}

TPoly t_pow(const TPoly& a, int e, int n, int nvars) {
  TPoly acc(static_cast<std::size_t>(n + 1), MultiPoly(nvars));
  acc[0] = MultiPoly::constant(nvars, 1);
  TPoly b = a;
  while (e > 0) {
    if (e & 1) acc = t_mul(acc, b, n, nvars);
    e >>= 1;
    if (e) b = t_mul(b, b, n, nvars);
  }
  return acc;
}

}  // namespace

AffineVariety parse_system(const std::string& text) { return Parser(text).parse(); }

JetScheme jet_equations(const AffineVariety& V, int n) {
  if (n < 0) throw std::invalid_argument("jet order must be >= 0");
  const int N = static_cast<int>(V.vars.size());
  const int jetVars = N * (n + 1);
  JetScheme J;
  J.order = n;
  J.baseVars = N;
  J.baseNames = V.vars;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k <= n; ++k) J.vars.push_back(V.vars[static_cast<std::size_t>(i)] + "_" + std::to_string(k));

  // Substituted series x_i -> sum_k y_{i,k} t^k.
  std::vector<TPoly> subs;
  for (int i = 0; i < N; ++i) {
    TPoly s(static_cast<std::size_t>(n + 1), MultiPoly(jetVars));
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(k)] = MultiPoly::variable(jetVars, i * (n + 1) + k);
    subs.push_back(std::move(s));
  }

  for (std::size_t l = 0; l < V.generators.size(); ++l) {
    TPoly acc(static_cast<std::size_t>(n + 1), MultiPoly(jetVars));
    for (const auto& [e, c] : V.generators[l].terms()) {
      TPoly mono(static_cast<std::size_t>(n + 1), MultiPoly(jetVars));
      mono[0] = MultiPoly::constant(jetVars, c);
      for (int i = 0; i < N; ++i)
        if (e[static_cast<std::size_t>(i)] > 0)
          mono = t_mul(mono, t_pow(subs[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)], n, jetVars), n, jetVars);
      for (int k = 0; k <= n; ++k) acc[static_cast<std::size_t>(k)] += mono[static_cast<std::size_t>(k)];
    }
    for (int k = 0; k <= n; ++k) {
      J.equations.push_back(acc[static_cast<std::size_t>(k)]);
      J.eqIndex.emplace_back(static_cast<int>(l), k);
    }
  }
  return J;
}

bool truncation_check(const JetScheme& jn, const JetScheme& jnm1) {
  if (jn.baseNames != jnm1.baseNames)
    throw std::invalid_argument("truncation_check: schemes come from different varieties");
  if (jn.order != jnm1.order + 1)
    throw std::invalid_argument("truncation_check: orders are not consecutive");
  const int n = jn.order;
  const int N = jn.baseVars;
  // Variable inclusion: (i, k) for k <= n-1 maps to the same pair downstairs.
  std::vector<int> var_map(static_cast<std::size_t>(N) * (n + 1), -1);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < n; ++k) var_map[static_cast<std::size_t>(i * (n + 1) + k)] = i * n + k;

  std::map<std::pair<int, int>, const MultiPoly*> low;
  for (std::size_t idx = 0; idx < jnm1.equations.size(); ++idx)
    low[jnm1.eqIndex[idx]] = &jnm1.equations[idx];

  for (std::size_t idx = 0; idx < jn.equations.size(); ++idx) {
    auto [l, k] = jn.eqIndex[idx];
    if (k > n - 1) continue;
    auto it = low.find({l, k});
    if (it == low.end()) return false;
    // A coefficient of t^k only involves jet variables of order <= k; a
    // corrupted scheme may not, so check before remapping.
    bool uses_high = false;
    for (const auto& [e, c] : jn.equations[idx].terms())
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] > 0 && var_map[v] < 0) uses_high = true;
    if (uses_high) return false;
    if (!(jn.equations[idx].remap(N * n, var_map) == *it->second)) return false;
  }
  return true;
}

}  // namespace hitchin
