// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MGT_POLY_HPP
#define MGT_POLY_HPP

#include <string>
#include <vector>

#include "mgt/errors.hpp"

namespace mgt {

// Dense univariate polynomial over an exact field scalar K.
//
// K must provide, via ADL-visible free functions:
//   zero_like(k), one_like(k), is_zero(k), add(a,b), sub(a,b), mul(a,b),
//   div(a,b), neg(a), eq(a,b)
// Scalars carry their own field context (modulus, descriptor, ...), which is
// why zeros and ones are synthesized from an existing element rather than
// default-constructed.
//
// Invariant: coefficients have no trailing zeros; the zero polynomial is the
// empty coefficient vector.
template <typename K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly constant(K k) {
    Poly p;
    if (!is_zero(k)) p.c_.push_back(std::move(k));
    return p;
  }
  // x-monomial c * x^n
  static Poly monomial(K k, std::size_t n) {
    Poly p;
    if (is_zero(k)) return p;
    p.c_.resize(n, zero_like(k));
    p.c_.push_back(std::move(k));
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& leading() const { return c_.back(); }
  const K& operator[](std::size_t i) const { return c_[i]; }

  bool is_monic() const {
    if (c_.empty()) return false;
    return eq(c_.back(), one_like(c_.back()));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!eq(a.c_[i], b.c_[i])) return false;
    return true;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.c_.empty()) return b;
    if (b.c_.empty()) return a;
    std::vector<K> r;
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < a.c_.size() && i < b.c_.size())
        r.push_back(add(a.c_[i], b.c_[i]));
      else if (i < a.c_.size())
        r.push_back(a.c_[i]);
      else
        r.push_back(b.c_[i]);
    }
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + b.negated(); }

  Poly negated() const {
    std::vector<K> r;
    r.reserve(c_.size());
    for (const K& k : c_) r.push_back(neg(k));
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly{};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = add(r[i + j], mul(a.c_[i], b.c_[j]));
    return Poly(std::move(r));
  }

  Poly scaled(const K& k) const {
    if (is_zero(k)) return Poly{};
    std::vector<K> r;
    r.reserve(c_.size());
    for (const K& x : c_) r.push_back(mul(x, k));
    return Poly(std::move(r));
  }

  // Euclidean division; the divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.c_.empty()) throw ZeroDivisionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<K> rem = a.c_;
    std::vector<K> quot(a.c_.size() - b.c_.size() + 1, zero_like(a.c_.front()));
    const K& lead = b.c_.back();
    for (int i = static_cast<int>(rem.size()) - 1;
         i >= static_cast<int>(b.c_.size()) - 1; --i) {
      if (is_zero(rem[i])) continue;
      K q = div(rem[i], lead);
      const std::size_t shift = i - (b.c_.size() - 1);
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        rem[shift + j] = sub(rem[shift + j], mul(q, b.c_[j]));
      quot[shift] = std::move(q);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  Poly make_monic() const {
    if (c_.empty()) return *this;
    return scaled(div(one_like(c_.back()), c_.back()));
  }

  // Monic gcd.
  friend Poly gcd(Poly a, Poly b) {
    while (!b.c_.empty()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.make_monic();
  }

  K eval(const K& x) const {
    if (c_.empty()) return zero_like(x);
    K acc = c_.back();
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i)
      acc = add(mul(acc, x), c_[i]);
    return acc;
  }

  Poly pow(unsigned long e) const {
    if (c_.empty()) return Poly{};
    Poly r = Poly::constant(one_like(c_.front()));
    Poly base = *this;
    while (e > 0) {
      if (e & 1UL) r = r * base;
      base = base * base;
      e >>= 1UL;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

}  // namespace mgt

#endif  // MGT_POLY_HPP
