#include "c4count/field.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "c4count/errors.hpp"

namespace c4count {
namespace {

struct FieldDef {
  int p;
  int k;
  // Monic irreducible modulus, low coefficient first, leading 1 omitted.
  std::vector<int> modulus;
};

const std::map<int, FieldDef>& definitions() {
  static const std::map<int, FieldDef> defs = {
      {2, {2, 1, {}}},         {3, {3, 1, {}}},        {5, {5, 1, {}}},
      {7, {7, 1, {}}},         {11, {11, 1, {}}},      {13, {13, 1, {}}},
      {17, {17, 1, {}}},       {19, {19, 1, {}}},      {23, {23, 1, {}}},
      {4, {2, 2, {1, 1}}},     // x^2 + x + 1
      {8, {2, 3, {1, 1, 0}}},  // x^3 + x + 1
      {16, {2, 4, {1, 1, 0, 0}}},  // x^4 + x + 1
      {9, {3, 2, {1, 0}}},     // x^2 + 1
      {27, {3, 3, {1, 2, 0}}},  // x^3 + 2x + 1
      {25, {5, 2, {2, 0}}},    // x^2 + 2
  };
  return defs;
}

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = a % p;
    a /= p;
  }
  return out;
}

int undigits(const std::vector<int>& c, int p) {
  int a = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) a = a * p + c[i];
  return a;
}

}  // namespace

const std::vector<int>& FiniteField::supported_orders() {
  static const std::vector<int> orders = [] {
    std::vector<int> out;
    for (const auto& [q, def] : definitions()) out.push_back(q);
    return out;
  }();
  return orders;
}

FiniteField::FiniteField(int q) : q_(q) {
  auto it = definitions().find(q);
  if (it == definitions().end()) {
    throw InputError("unsupported field order q=" + std::to_string(q));
  }
  const FieldDef& def = it->second;
  p_ = def.p;
  k_ = def.k;
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p_, k_);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<int> sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = undigits(sum, p_);

      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      // Reduce: x^k = -(modulus) for each degree >= k, top down.
      for (int d = 2 * k_ - 2; d >= k_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k_; ++i) {
          prod[d - k_ + i] = ((prod[d - k_ + i] - c * def.modulus[i]) % p_ + p_) % p_;
        }
      }
      prod.resize(k_);
      mul_[a * q + b] = undigits(prod, p_);
    }
  }
  neg_.assign(q, -1);
  inv_.assign(q, -1);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  check_axioms();
}

void FiniteField::check_axioms() const {
  auto fail = [&](const std::string& what) {
    throw InputError("F_" + std::to_string(q_) + " table violates " + what);
  };
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a) fail("identity");
    if (neg_[a] < 0) fail("additive inverse");
    if (a != 0 && inv_[a] < 0) fail("multiplicative inverse");
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

}  // namespace c4count
