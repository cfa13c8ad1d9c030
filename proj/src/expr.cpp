#include "capelli/expr.hpp"

#include <cctype>

namespace capelli {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

ExprPtr Expr::atom(Kind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}

ExprPtr Expr::number(const Rational& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->value = v;
  return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::power(ExprPtr base, unsigned exp) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->lhs = std::move(base);
  e->exponent = exp;
  return e;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::F:
    case Expr::Kind::Theta:
    case Expr::Kind::Delta:
      return true;
    case Expr::Kind::Number:
      return a.value == b.value;
    case Expr::Kind::Pow:
      return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    default:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (accept('+'))
        e = Expr::binary(Expr::Kind::Add, e, term());
      else if (accept('-'))
        e = Expr::binary(Expr::Kind::Sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (accept('*')) e = Expr::binary(Expr::Kind::Mul, e, factor());
    return e;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    std::string_view n = digits();
    if (n.empty()) fail("expected a non-negative integer exponent");
    if (n.size() > 9 || std::stoul(std::string(n)) > kMaxExponent)
      throw ParseError("exponent overflow (max " + std::to_string(kMaxExponent) + ")", at);
    return Expr::power(base, static_cast<unsigned>(std::stoul(std::string(n))));
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (digits().empty()) fail("expected denominator");
      }
      try {
        return Expr::number(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "f") return Expr::atom(Expr::Kind::F);
      if (word == "theta") return Expr::atom(Expr::Kind::Theta);
      if (word == "delta") return Expr::atom(Expr::Kind::Delta);
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
      return 2;
    case Expr::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = fmt_expr(e);
  return parens ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string fmt_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::F:
      return "f";
    case Expr::Kind::Theta:
      return "theta";
    case Expr::Kind::Delta:
      return "delta";
    case Expr::Kind::Number:
      if (sgn(e.value) < 0) throw std::invalid_argument("negative literal has no surface syntax");
      return to_string(e.value);
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return wrap(*e.lhs, false) + (e.kind == Expr::Kind::Add ? " + " : " - ") + wrap(*e.rhs, precedence(*e.rhs) <= 1);
    case Expr::Kind::Mul:
      return wrap(*e.lhs, precedence(*e.lhs) < 2) + "*" + wrap(*e.rhs, precedence(*e.rhs) <= 2);
    case Expr::Kind::Pow:
      return wrap(*e.lhs, precedence(*e.lhs) < 4) + "^" + std::to_string(e.exponent);
  }
  return "";
}

AElement evaluate(const Expr& e, const PresentationPtr& pres) {
  switch (e.kind) {
    case Expr::Kind::F:
      return AElement::f_power(pres, 1);
    case Expr::Kind::Theta:
      return AElement::theta_poly(pres, UniPoly::identity(Symbol::Theta));
    case Expr::Kind::Delta:
      return AElement::delta_power(pres, 1);
    case Expr::Kind::Number:
      return AElement::scalar(pres, e.value);
    case Expr::Kind::Add:
      return evaluate(*e.lhs, pres) + evaluate(*e.rhs, pres);
    case Expr::Kind::Sub:
      return evaluate(*e.lhs, pres) - evaluate(*e.rhs, pres);
    case Expr::Kind::Mul:
      return evaluate(*e.lhs, pres) * evaluate(*e.rhs, pres);
    case Expr::Kind::Pow: {
      const AElement base = evaluate(*e.lhs, pres);
      AElement acc = AElement::scalar(pres, Rational(1));
      for (unsigned i = 0; i < e.exponent; ++i) acc = acc * base;
      return acc;
    }
  }
  return AElement(pres);
}

}  // namespace capelli
