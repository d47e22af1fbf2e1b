#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace c4count {

using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
/// Exact value of a finite double.
Rational rational_from_double(double x);
/// "p/q" or "p".
std::string to_string(const Rational& r);
/// Parse "p", "p/q", or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

/// Returns r if n is a perfect square with root r, else -1.
std::int64_t exact_sqrt(std::int64_t n);

/// Exact element a + b·√d of the quadratic field Q(√d), d a positive
/// integer. When d is a perfect square the value is folded into `a`.
class Quadratic {
 public:
  Quadratic() = default;
  explicit Quadratic(Rational a, Rational b = 0, std::int64_t d = 1);

  static Quadratic sqrt_of(std::int64_t d) { return Quadratic(0, 1, d); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  double to_double() const;
  std::string str() const;

  Quadratic operator+(const Quadratic& o) const;
  Quadratic operator-(const Quadratic& o) const;
  Quadratic operator*(const Quadratic& o) const;
  Quadratic operator-() const { return Quadratic(-a_, -b_, d_); }
  Quadratic scaled(const Rational& r) const { return Quadratic(a_ * r, b_ * r, d_); }
  Quadratic abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return (x - y).sign() == 0;
  }
  friend bool operator<(const Quadratic& x, const Quadratic& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Quadratic& x, const Quadratic& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Quadratic& x, const Quadratic& y) { return (x - y).sign() > 0; }

 private:
  void normalize();
  std::int64_t common_radicand(const Quadratic& o) const;

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 1;
};

}  // namespace c4count
