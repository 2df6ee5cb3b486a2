#include "trigvee/rational.hpp"

#include <ostream>

#include "trigvee/errors.hpp"

namespace trigvee {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  // U+2212 MINUS SIGN, UTF-8 encoded
  static const std::string kUnicodeMinus = "\xE2\x88\x92";
  if (s.rfind(kUnicodeMinus, 0) == 0) s = "-" + s.substr(kUnicodeMinus.size());

  bool negative = false;
  std::string_view body(s);
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  // Low limbs of numerator and denominator are enough to spread buckets.
  const std::size_t n = mpz_getlimbn(q_.get_num_mpz_t(), 0);
  const std::size_t d = mpz_getlimbn(q_.get_den_mpz_t(), 0);
  const std::size_t s = static_cast<std::size_t>(sgn(q_) + 1);
  return (n * 0x9E3779B97F4A7C15ULL) ^ (d + 0x632BE59BD9B4E019ULL + (n << 6) + (n >> 2)) ^ s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, int exponent) {
  Rational result(1);
  const Rational b = exponent < 0 ? base.inverse() : base;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) result *= b;
  return result;
}

}  // namespace trigvee
