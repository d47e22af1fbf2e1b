#include "c4count/exact.hpp"

#include <cmath>
#include <sstream>

#include "c4count/errors.hpp"

namespace c4count {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value has no exact rational");
  Rational r(x);  // mpq_set_d is exact
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw InputError("not a rational: " + text);
    r.canonicalize();
    if (r.get_den() == 0) throw InputError("zero denominator: " + text);
    return r;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t scale = text.size() - dot - 1;
  BigInt num;
  if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) {
    throw InputError("not a decimal: " + text);
  }
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::int64_t exact_sqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c) {
    if (c * c == n) return c;
  }
  return -1;
}

Quadratic::Quadratic(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ <= 0) throw InputError("quadratic radicand must be positive");
  normalize();
}

void Quadratic::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  std::int64_t r = exact_sqrt(d_);
  if (r >= 0) {
    a_ += b_ * Rational(r);
    b_ = 0;
    d_ = 1;
  }
  if (b_ == 0) d_ = 1;
}

std::int64_t Quadratic::common_radicand(const Quadratic& o) const {
  if (b_ == 0) return o.d_;
  if (o.b_ == 0) return d_;
  if (d_ != o.d_) throw InputError("quadratic values over different radicands");
  return d_;
}

int Quadratic::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b√d have opposite signs: compare a² with b²d.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

double Quadratic::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string Quadratic::str() const {
  if (b_ == 0) return a_.get_str();
  std::ostringstream os;
  if (a_ != 0) os << a_.get_str() << " + ";
  os << b_.get_str() << "*sqrt(" << d_ << ")";
  return os.str();
}

Quadratic Quadratic::operator+(const Quadratic& o) const {
  return Quadratic(a_ + o.a_, b_ + o.b_, common_radicand(o));
}

Quadratic Quadratic::operator-(const Quadratic& o) const {
  return Quadratic(a_ - o.a_, b_ - o.b_, common_radicand(o));
}

Quadratic Quadratic::operator*(const Quadratic& o) const {
  std::int64_t d = common_radicand(o);
  return Quadratic(a_ * o.a_ + b_ * o.b_ * Rational(d), a_ * o.b_ + b_ * o.a_, d);
}

}  // namespace c4count
