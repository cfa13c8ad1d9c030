#include "capelli/rational.hpp"

#include <cctype>

namespace capelli {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r;
  r.get_num() = Integer(std::to_string(num));
  r.get_den() = Integer(std::to_string(den));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Rational r;
  r.get_num() = Integer(std::string(num));
  r.get_den() = Integer(std::string(den));
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, unsigned exp) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  out.canonicalize();
  return out;
}

}  // namespace capelli
