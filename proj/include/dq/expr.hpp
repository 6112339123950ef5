#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dq/errors.hpp"
#include "dq/super_poly.hpp"

namespace dq {

/// Term tree produced by parse_expr.
struct Expr {
  enum class Kind { number, symbol, add, sub, mul, div, pow, neg };
  Kind kind;
  Rational number;       // Kind::number
  std::string name;      // Kind::symbol ("I", "hbar", or a generator name)
  int exponent = 0;      // Kind::pow
  std::size_t position = 0;
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  static ExprPtr node(Expr::Kind kind, std::size_t pos, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->position = pos;
    e->args = std::move(args);
    return e;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    for (;;) {
      std::size_t at = (skip_space(), pos_);
      if (accept('+'))
        lhs = node(Expr::Kind::add, at, {lhs, product()});
      else if (accept('-'))
        lhs = node(Expr::Kind::sub, at, {lhs, product()});
      else
        return lhs;
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (;;) {
      std::size_t at = (skip_space(), pos_);
      if (accept('*'))
        lhs = node(Expr::Kind::mul, at, {lhs, unary()});
      else if (accept('/'))
        lhs = node(Expr::Kind::div, at, {lhs, unary()});
      else
        return lhs;
    }
  }

  ExprPtr unary() {
    std::size_t at = (skip_space(), pos_);
    if (accept('-')) return node(Expr::Kind::neg, at, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    std::size_t at = (skip_space(), pos_);
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a nonnegative integer exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    auto e = node(Expr::Kind::pow, at, {base});
    std::const_pointer_cast<Expr>(e)->exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return e;
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto e = node(Expr::Kind::number, start, {});
      std::const_pointer_cast<Expr>(e)->number = Rational(std::string(text_.substr(start, pos_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto e = node(Expr::Kind::symbol, start, {});
      std::const_pointer_cast<Expr>(e)->name = std::string(text_.substr(start, pos_ - start));
      return e;
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: sums, products, quotients by constants, unary minus, integer
/// powers, parentheses, integer literals, `I`, `hbar` and generator names.
inline ExprPtr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Evaluates a term tree over the given generators. Unknown names are errors.
inline SuperPoly evaluate(const Expr& e, const LayoutPtr& layout, int truncation = kDefaultTruncation) {
  switch (e.kind) {
    case Expr::Kind::number:
      return SuperPoly::constant(layout, Scalar(e.number), truncation);
    case Expr::Kind::symbol: {
      if (e.name == "I") return SuperPoly::constant(layout, Scalar::i(), truncation);
      if (e.name == "hbar") return SuperPoly::hbar_power(layout, 1, Scalar(1), truncation);
      int id = layout->find(e.name);
      if (id < 0) throw ParseError("unknown identifier '" + e.name + "'", e.position);
      return SuperPoly::generator(layout, id, truncation);
    }
    case Expr::Kind::add:
      return evaluate(*e.args[0], layout, truncation) + evaluate(*e.args[1], layout, truncation);
    case Expr::Kind::sub:
      return evaluate(*e.args[0], layout, truncation) - evaluate(*e.args[1], layout, truncation);
    case Expr::Kind::mul:
      return evaluate(*e.args[0], layout, truncation) * evaluate(*e.args[1], layout, truncation);
    case Expr::Kind::neg:
      return -evaluate(*e.args[0], layout, truncation);
    case Expr::Kind::div: {
      SuperPoly den = evaluate(*e.args[1], layout, truncation);
      auto unit = den.unit_key();
      bool constant = den.terms().size() == 1 && den.terms().begin()->first == unit;
      if (!constant) throw ParseError("division only by nonzero constants", e.position);
      const HbarPoly& h = den.terms().begin()->second;
      for (int k = 1; k <= h.truncation(); ++k)
        if (!h[k].is_zero()) throw ParseError("division only by nonzero constants", e.position);
      return evaluate(*e.args[0], layout, truncation) * (Scalar(1) / h[0]);
    }
    case Expr::Kind::pow: {
      SuperPoly base = evaluate(*e.args[0], layout, truncation);
      SuperPoly r = SuperPoly::constant(layout, Scalar(1), truncation);
      for (int k = 0; k < e.exponent; ++k) r *= base;
      return r;
    }
  }
  throw InvariantError("unhandled expression node");
}

inline SuperPoly parse_super(std::string_view text, const LayoutPtr& layout,
                             int truncation = kDefaultTruncation) {
  return evaluate(*parse_expr(text), layout, truncation);
}

/// Layout of plain coordinates x1..xd.
inline LayoutPtr coordinate_layout(int d) {
  std::vector<Variable> vars;
  for (int i = 1; i <= d; ++i) vars.push_back({"x" + std::to_string(i), Parity::even});
  return std::make_shared<const Layout>(std::move(vars));
}

/// Parses a polynomial in x1..xd (no hbar, no odd generators).
inline Polynomial parse_polynomial(std::string_view text, int d) {
  SuperPoly s = parse_super(text, coordinate_layout(d), 0);
  Polynomial p(d);
  for (const auto& [k, c] : s.terms()) p.add_term(k.even, c[0]);
  return p;
}

namespace detail {

inline std::string coefficient_text(const Scalar& c, bool has_factor) {
  if (c.is_real()) {
    if (!has_factor) return to_string(c.re());
    if (c.re() == 1) return "";
    if (c.re() == -1) return "-";
    return to_string(c.re()) + "*";
  }
  if (sgn(c.re()) == 0) {
    std::string im = c.im() == 1 ? "I" : c.im() == -1 ? "-I" : to_string(c.im()) + "*I";
    return has_factor ? im + "*" : im;
  }
  std::string s = "(" + to_string(c.re()) + (sgn(c.im()) > 0 ? "+" : "-");
  Rational a = abs(c.im());
  s += (a == 1 ? std::string("I") : to_string(a) + "*I") + ")";
  return has_factor ? s + "*" : s;
}

}  // namespace detail

/// Canonical printer; the output parses back to the same element.
inline std::string to_expr(const SuperPoly& p) {
  const Layout& layout = *p.layout();
  std::vector<int> even_ids, odd_ids;
  for (int id = 0; id < layout.size(); ++id)
    (layout.parity(id) == Parity::even ? even_ids : odd_ids).push_back(id);
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    for (int h = 0; h <= c.truncation(); ++h) {
      if (c[h].is_zero()) continue;
      std::vector<std::string> factors;
      if (h == 1) factors.push_back("hbar");
      if (h > 1) factors.push_back("hbar^" + std::to_string(h));
      for (int id : even_ids) {
        int e = k.even[layout.slot(id)];
        if (e == 1) factors.push_back(layout.var(id).name);
        if (e > 1) factors.push_back(layout.var(id).name + "^" + std::to_string(e));
      }
      for (int id : odd_ids)
        if (k.odd >> layout.slot(id) & 1) factors.push_back(layout.var(id).name);
      std::string term = detail::coefficient_text(c[h], !factors.empty());
      for (std::size_t m = 0; m < factors.size(); ++m) term += (m ? "*" : "") + factors[m];
      if (out.empty())
        out = term;
      else if (term[0] == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string to_expr(const Polynomial& p) {
  SuperPoly s(coordinate_layout(p.dim()), 0);
  for (const auto& [e, c] : p.terms()) s.add_term({e, 0}, HbarPoly(c, 0));
  return to_expr(s);
}

}  // namespace dq
