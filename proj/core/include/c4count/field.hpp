#pragma once

#include <vector>

namespace c4count {

/// Finite field F_q for the prime powers q <= 27 used by the polarity
/// construction. Elements are 0..q-1; for q = p^k, element Σ c_i p^i is the
/// polynomial Σ c_i x^i reduced modulo a fixed irreducible polynomial.
/// Full addition and multiplication tables are built and checked against the
/// field axioms at construction.
class FiniteField {
 public:
  static const std::vector<int>& supported_orders();

  /// Throws InputError for unsupported q or if the tables fail an axiom.
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }

 private:
  void check_axioms() const;

  int q_, p_, k_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace c4count
