#pragma once

// Text <-> BivarPoly.
//
//   poly        := ws ['+'|'-'] term (ws ('+'|'-') ws term)* ws
//   term        := factor (ws '*' ws factor | juxt-factor)*
//   factor      := base ('^' uint)?
//   base        := 'X' | 'Y' | 'i' | number | '(' poly ')'
//   number      := uint ('/' uint)? | uint '.' digits
//   juxt-factor := 'X' | 'Y' | 'i' (with optional '^' uint) written directly
//                  after a number, as in "2X" or "1/2i"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qhgerm/bivar_poly.hpp"
#include "qhgerm/errors.hpp"
#include "qhgerm/gaussian.hpp"

namespace qhgerm {

/// Unexpanded expression tree produced by the parser.
struct PolyExpr {
  enum class Kind { Sum, Product, Power, Negate, VarX, VarY, ImagUnit, Rational, Decimal };

  Kind kind = Kind::Rational;
  std::vector<PolyExpr> children;
  unsigned exponent = 0;       // Power
  qhgerm::Rational value = 0;  // Rational, Decimal

  bool contains_decimal() const {
    if (kind == Kind::Decimal) return true;
    return std::any_of(children.begin(), children.end(), [](const PolyExpr& c) { return c.contains_decimal(); });
  }
};

namespace detail {

class Parser {
 public:
  static constexpr unsigned kMaxExponent = 100000;

  explicit Parser(std::string_view text) : text_(text) {}

  PolyExpr parse() {
    skip_ws();
    if (at_end()) throw ParseError(ErrorCode::EmptyInput, pos_, "empty input");
    PolyExpr expr = parse_poly();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return expr;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(ErrorCode::Parse, pos_, message); }

  PolyExpr parse_poly() {
    PolyExpr sum{PolyExpr::Kind::Sum, {}, 0, 0};
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
      skip_ws();
    }
    sum.children.push_back(signed_term(negate));
    for (;;) {
      const std::size_t save = pos_;
      skip_ws();
      if (peek() != '+' && peek() != '-') {
        pos_ = save;
        break;
      }
      negate = peek() == '-';
      ++pos_;
      skip_ws();
      sum.children.push_back(signed_term(negate));
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  PolyExpr signed_term(bool negate) {
    PolyExpr t = parse_term();
    if (!negate) return t;
    return PolyExpr{PolyExpr::Kind::Negate, {std::move(t)}, 0, 0};
  }

  PolyExpr parse_term() {
    PolyExpr product{PolyExpr::Kind::Product, {}, 0, 0};
    bool last_was_number = false;
    product.children.push_back(parse_factor(last_was_number));
    for (;;) {
      if (last_was_number && (peek() == 'X' || peek() == 'Y' || peek() == 'i')) {
        product.children.push_back(parse_factor(last_was_number));
        last_was_number = false;
        continue;
      }
      const std::size_t save = pos_;
      skip_ws();
      if (peek() != '*') {
        pos_ = save;
        break;
      }
      ++pos_;
      skip_ws();
      product.children.push_back(parse_factor(last_was_number));
    }
    if (product.children.size() == 1) return std::move(product.children.front());
    return product;
  }

  PolyExpr parse_factor(bool& is_number) {
    is_number = false;
    PolyExpr base = parse_base(is_number);
    if (peek() != '^') return base;
    ++pos_;
    if (peek() == '-') throw ParseError(ErrorCode::NegativeExponent, pos_, "negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
    const std::size_t start = pos_;
    BigInt e = parse_uint();
    if (e > kMaxExponent) throw ParseError(ErrorCode::Parse, start, "exponent too large");
    return PolyExpr{PolyExpr::Kind::Power, {std::move(base)}, static_cast<unsigned>(e.get_ui()), 0};
  }

  PolyExpr parse_base(bool& is_number) {
    const char c = peek();
    switch (c) {
      case 'X': ++pos_; return PolyExpr{PolyExpr::Kind::VarX, {}, 0, 0};
      case 'Y': ++pos_; return PolyExpr{PolyExpr::Kind::VarY, {}, 0, 0};
      case 'i': ++pos_; return PolyExpr{PolyExpr::Kind::ImagUnit, {}, 0, 0};
      case '(': {
        const std::size_t open = pos_;
        ++pos_;
        skip_ws();
        if (peek() == ')') fail("empty parentheses");
        PolyExpr inner = parse_poly();
        skip_ws();
        if (peek() != ')') {
          if (at_end()) throw ParseError(ErrorCode::Parse, open, "unbalanced '('");
          fail(std::string("expected ')' but found '") + peek() + "'");
        }
        ++pos_;
        return inner;
      }
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      is_number = true;
      return parse_number();
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  BigInt parse_uint() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  PolyExpr parse_number() {
    BigInt whole = parse_uint();
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
      const std::size_t den_pos = pos_;
      BigInt den = parse_uint();
      if (den == 0) throw ParseError(ErrorCode::Parse, den_pos, "zero denominator");
      return PolyExpr{PolyExpr::Kind::Rational, {}, 0, make_rational(whole, den)};
    }
    if (peek() == '.') {
      ++pos_;
      const std::size_t start = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits after '.'");
      BigInt frac = parse_uint();
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos_ - start);
      return PolyExpr{PolyExpr::Kind::Decimal, {}, 0, make_rational(whole * scale + frac, scale)};
    }
    return PolyExpr{PolyExpr::Kind::Rational, {}, 0, qhgerm::Rational(whole)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text into an expression tree without expanding it.
inline PolyExpr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

/// Fully expands an expression tree.
inline BivarPoly expand(const PolyExpr& e) {
  using K = PolyExpr::Kind;
  switch (e.kind) {
    case K::Sum: {
      BivarPoly out;
      for (const auto& c : e.children) out += expand(c);
      return out;
    }
    case K::Product: {
      BivarPoly out = BivarPoly::constant(1);
      for (const auto& c : e.children) out = out * expand(c);
      return out;
    }
    case K::Power: return expand(e.children.front()).pow(e.exponent);
    case K::Negate: return -expand(e.children.front());
    case K::VarX: return BivarPoly::x();
    case K::VarY: return BivarPoly::y();
    case K::ImagUnit: return BivarPoly::constant(GaussianRational::i());
    case K::Rational:
    case K::Decimal: return BivarPoly::constant(GaussianRational(e.value));
  }
  return {};
}

/// Parses and expands; decimal literals are kept exact but flag the result numeric.
inline BivarPoly parse_poly(std::string_view text) {
  PolyExpr e = parse_expr(text);
  BivarPoly p = expand(e);
  p.set_mode(e.contains_decimal() ? CoefficientMode::Numeric : CoefficientMode::Exact);
  return p;
}

enum class FormatStyle { Expanded, Json };

namespace detail {

/// Printing order: ascending total degree, then descending Y exponent.
inline std::vector<std::pair<Monomial, GaussianRational>> ordered_terms(const BivarPoly& p) {
  std::vector<std::pair<Monomial, GaussianRational>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
    return a.first.j > b.first.j;
  });
  return out;
}

/// Coefficient text that the parser reads back as a single factor chain.
inline std::string coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return c.re().get_str();
  if (c.re() == 0) return c.im().get_str() + "i";
  return "(" + c.str() + ")";
}

inline std::string monomial_text(Monomial m) {
  std::string out;
  auto append = [&out](const char* var, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  append("X", m.i);
  append("Y", m.j);
  return out;
}

/// True when the printed coefficient carries a leading minus we can pull out.
inline bool prints_negative(const GaussianRational& c) {
  if (c.is_real()) return c.re() < 0;
  if (c.re() == 0) return c.im() < 0;
  return c.re() < 0;
}

}  // namespace detail

inline std::string format_poly(const BivarPoly& p, FormatStyle style = FormatStyle::Expanded) {
  const auto terms = detail::ordered_terms(p);
  if (style == FormatStyle::Json) {
    std::string out = "{\"terms\":[";
    bool first = true;
    for (const auto& [mono, c] : terms) {
      if (!first) out += ",";
      first = false;
      out += "{\"i\":" + std::to_string(mono.i) + ",\"j\":" + std::to_string(mono.j) + ",\"re\":\"" +
             c.re().get_str() + "\",\"im\":\"" + c.im().get_str() + "\"}";
    }
    out += "],\"mode\":\"";
    out += to_string(p.mode());
    out += "\"}";
    return out;
  }
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms) {
    const bool negative = detail::prints_negative(c);
    const GaussianRational mag = negative ? -c : c;
    const std::string mono_text = detail::monomial_text(mono);
    std::string body;
    if (mono_text.empty()) {
      body = detail::coefficient_text(mag);
    } else if (mag.is_one()) {
      body = mono_text;
    } else {
      body = detail::coefficient_text(mag) + "*" + mono_text;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace qhgerm
