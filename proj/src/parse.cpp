#include "sjord/parse.hpp"

#include <cctype>

namespace sjord {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : text_(text), symbols_(symbols) {}

  Expr parse_all() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+'))
        terms.push_back(term());
      else if (accept('-'))
        terms.push_back(-term());
      else
        break;
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    const bool negate = accept('-');
    std::vector<Expr> factors{factor()};
    int h_div = 0;
    for (;;) {
      if (accept('*')) {
        factors.push_back(factor());
      } else if (accept('/')) {
        Expr d = factor();
        if (d.kind() != Expr::Kind::Scalar) fail("divisor must be a scalar monomial c*h^k");
        const HPoly& p = d.scalar();
        const int k = p.valuation();
        if (k < 0 || p.degree() != k) fail("divisor must be a scalar monomial c*h^k");
        factors.emplace_back(Rational(1) / p.coeff(static_cast<std::size_t>(k)));
        h_div += k;
      } else {
        break;
      }
    }
    Expr t = Expr::product(std::move(factors));
    if (h_div > 0) t = Expr::div_h(t, h_div);
    return negate ? -t : t;
  }

  // Exponent as numerator / denominator, denominator in {1, 2}.
  std::pair<long, long> exponent() {
    if (accept('(')) {
      const bool neg = accept('-');
      long num = integer();
      long den = 1;
      if (accept('/')) den = integer();
      expect(')');
      return {neg ? -num : num, den};
    }
    const bool neg = accept('-');
    const long num = integer();
    return {neg ? -num : num, 1};
  }

  Expr factor() {
    Expr base = atom();
    if (!accept('^')) return base;
    auto [num, den] = exponent();
    if (base.is_leaf(Label::T())) {
      if (den == 2 && (num == 1 || num == -1)) return Expr(num > 0 ? Label::THalf() : Label::TInvHalf());
      if (den != 1) fail("unsupported fractional power of T");
      if (num == 0) return Expr(1L);
      return pow(Expr(num > 0 ? Label::T() : Label::TInv()), static_cast<int>(num > 0 ? num : -num));
    }
    if (den != 1 || num < 0) fail("only T admits negative or fractional powers");
    if (base.kind() == Expr::Kind::Scalar) {
      HPoly acc(1L);
      for (long k = 0; k < num; ++k) acc = acc * base.scalar();
      return Expr(acc);
    }
    return pow(base, static_cast<int>(num));
  }

  Expr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      Expr a = expr();
      expect(',');
      Expr b = expr();
      expect(']');
      return comm(a, b);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "h") return Expr(h_var());
      auto it = symbols_.find(name);
      if (it == symbols_.end()) throw UnknownGenerator(std::string(name));
      return it->second;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const SymbolTable& symbols) { return Parser(text, symbols).parse_all(); }

Relation parse_relation(const std::string& id, std::string_view text, const SymbolTable& symbols) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw Error("relation needs exactly one '=': " + std::string(text));
  return Relation{id, parse_expr(text.substr(0, eq), symbols), parse_expr(text.substr(eq + 1), symbols)};
}

}  // namespace sjord
