// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "mgt/fields.hpp"

#include <cctype>
#include <sstream>

namespace mgt {

// --------------------------------------------------------------------------
// FieldDescriptor
// --------------------------------------------------------------------------

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t i = 3; i <= n / i; i += 2)
    if (n % i == 0) return false;
  return true;
}

bool is_squarefree_int(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t i = 2; i <= n / i; ++i) {
    if (n % (i * i) == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::rationals() { return FieldDescriptor{}; }

FieldDescriptor FieldDescriptor::prime_field(std::int64_t p) {
  if (!is_prime_int(p)) throw DescriptorError("prime field modulus must be prime, got " + std::to_string(p));
  FieldDescriptor f;
  f.family = FieldFamily::PrimeField;
  f.p = p;
  return f;
}

FieldDescriptor FieldDescriptor::rational_function_field(std::string variable) {
  if (variable.empty() || !std::isalpha(static_cast<unsigned char>(variable[0])))
    throw DescriptorError("function field variable must start with a letter");
  FieldDescriptor f;
  f.family = FieldFamily::FunctionField;
  f.p = 0;
  f.variable = std::move(variable);
  return f;
}

FieldDescriptor FieldDescriptor::prime_function_field(std::int64_t p, std::string variable) {
  FieldDescriptor f = rational_function_field(std::move(variable));
  if (!is_prime_int(p)) throw DescriptorError("function field base modulus must be prime, got " + std::to_string(p));
  f.p = p;
  return f;
}

FieldDescriptor FieldDescriptor::real_quadratic(std::int64_t d) {
  if (d <= 1 || !is_squarefree_int(d))
    throw DescriptorError("real quadratic radicand must be squarefree and > 1, got " + std::to_string(d));
  FieldDescriptor f;
  f.family = FieldFamily::RealQuadratic;
  f.d = d;
  return f;
}

std::int64_t FieldDescriptor::characteristic() const {
  switch (family) {
    case FieldFamily::PrimeField:
      return p;
    case FieldFamily::FunctionField:
      return p;  // 0 when the base is Q
    default:
      return 0;
  }
}

std::string FieldDescriptor::to_string() const {
  switch (family) {
    case FieldFamily::Rationals:
      return "Q";
    case FieldFamily::PrimeField:
      return "F" + std::to_string(p);
    case FieldFamily::FunctionField:
      return (p == 0 ? "Q(" : "F" + std::to_string(p) + "(") + variable + ")";
    case FieldFamily::RealQuadratic:
      return "Q(sqrt(" + std::to_string(d) + "))";
  }
  return "?";
}

// --------------------------------------------------------------------------
// FpScalar
// --------------------------------------------------------------------------

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  if (a == 0) throw ZeroDivisionError("inverse of 0 in F_p");
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return mod_norm(t, p);
}

void check_same_p(const FpScalar& a, const FpScalar& b) {
  if (a.p != b.p) throw FieldMismatchError("F_p scalars with different moduli");
}

}  // namespace

FpScalar zero_like(const FpScalar& x) { return {0, x.p}; }
FpScalar one_like(const FpScalar& x) { return {x.p == 1 ? 0 : 1, x.p}; }
bool is_zero(const FpScalar& x) { return x.v == 0; }
bool eq(const FpScalar& a, const FpScalar& b) { return a.p == b.p && a.v == b.v; }
FpScalar add(const FpScalar& a, const FpScalar& b) {
  check_same_p(a, b);
  return {mod_norm(a.v + b.v, a.p), a.p};
}
FpScalar sub(const FpScalar& a, const FpScalar& b) {
  check_same_p(a, b);
  return {mod_norm(a.v - b.v, a.p), a.p};
}
FpScalar mul(const FpScalar& a, const FpScalar& b) {
  check_same_p(a, b);
  return {mod_mul(a.v, b.v, a.p), a.p};
}
FpScalar div(const FpScalar& a, const FpScalar& b) {
  check_same_p(a, b);
  return {mod_mul(a.v, mod_inv(b.v, a.p), a.p), a.p};
}
FpScalar neg(const FpScalar& a) { return {mod_norm(-a.v, a.p), a.p}; }

// --------------------------------------------------------------------------
// mpq_class scalar interface
// --------------------------------------------------------------------------

mpq_class zero_like(const mpq_class&) { return mpq_class(0); }
mpq_class one_like(const mpq_class&) { return mpq_class(1); }
bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
bool eq(const mpq_class& a, const mpq_class& b) { return cmp(a, b) == 0; }
mpq_class add(const mpq_class& a, const mpq_class& b) { return a + b; }
mpq_class sub(const mpq_class& a, const mpq_class& b) { return a - b; }
mpq_class mul(const mpq_class& a, const mpq_class& b) { return a * b; }
mpq_class div(const mpq_class& a, const mpq_class& b) {
  if (sgn(b) == 0) throw ZeroDivisionError("rational division by zero");
  return a / b;
}
mpq_class neg(const mpq_class& a) { return -a; }

// --------------------------------------------------------------------------
// RatFun canonicalization
// --------------------------------------------------------------------------

namespace {

template <typename K>
RatFun<K> canonical_ratfun(Poly<K> num, Poly<K> den) {
  if (den.is_zero_poly()) throw ZeroDivisionError("zero denominator in function field element");
  if (num.is_zero_poly()) {
    Poly<K> one = Poly<K>::constant(one_like(den.leading()));
    return {Poly<K>{}, std::move(one)};
  }
  Poly<K> g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  // make denominator monic
  K lead = den.leading();
  K inv = div(one_like(lead), lead);
  num = num.scaled(inv);
  den = den.scaled(inv);
  return {std::move(num), std::move(den)};
}

template <typename K>
bool ratfun_is_zero(const RatFun<K>& f) {
  return f.num.is_zero_poly();
}

template <typename K>
RatFun<K> ratfun_add(const RatFun<K>& a, const RatFun<K>& b) {
  return canonical_ratfun(a.num * b.den + b.num * a.den, a.den * b.den);
}
template <typename K>
RatFun<K> ratfun_sub(const RatFun<K>& a, const RatFun<K>& b) {
  return canonical_ratfun(a.num * b.den - b.num * a.den, a.den * b.den);
}
template <typename K>
RatFun<K> ratfun_mul(const RatFun<K>& a, const RatFun<K>& b) {
  return canonical_ratfun(a.num * b.num, a.den * b.den);
}
template <typename K>
RatFun<K> ratfun_div(const RatFun<K>& a, const RatFun<K>& b) {
  if (ratfun_is_zero(b)) throw ZeroDivisionError("function field division by zero");
  return canonical_ratfun(a.num * b.den, a.den * b.num);
}

}  // namespace

// --------------------------------------------------------------------------
// FieldElement
// --------------------------------------------------------------------------

FieldElement::FieldElement() : desc_(FieldDescriptor::rationals()), payload_(mpq_class(0)) {}

FieldElement::FieldElement(FieldDescriptor desc, Payload payload)
    : desc_(std::move(desc)), payload_(std::move(payload)) {
  canonicalize();
}

void FieldElement::canonicalize() {
  switch (desc_.family) {
    case FieldFamily::Rationals: {
      auto& q = std::get<mpq_class>(payload_);
      q.canonicalize();
      break;
    }
    case FieldFamily::PrimeField: {
      auto& s = std::get<FpScalar>(payload_);
      s.p = desc_.p;
      s.v = mod_norm(s.v, s.p);
      break;
    }
    case FieldFamily::RealQuadratic: {
      auto& s = std::get<QuadScalar>(payload_);
      s.a.canonicalize();
      s.b.canonicalize();
      s.d = desc_.d;
      break;
    }
    case FieldFamily::FunctionField: {
      if (desc_.p == 0) {
        auto& f = std::get<RatFunQ>(payload_);
        payload_ = canonical_ratfun(f.num, f.den);
      } else {
        auto& f = std::get<RatFunP>(payload_);
        payload_ = canonical_ratfun(f.num, f.den);
      }
      break;
    }
  }
}

FieldElement FieldElement::zero(const FieldDescriptor& f) {
  return from_integer(f, 0);
}

FieldElement FieldElement::one(const FieldDescriptor& f) {
  return from_integer(f, 1);
}

FieldElement FieldElement::from_integer(const FieldDescriptor& f, const mpz_class& n) {
  return from_rational(f, mpq_class(n));
}

FieldElement FieldElement::from_rational(const FieldDescriptor& f, const mpq_class& q) {
  switch (f.family) {
    case FieldFamily::Rationals:
      return FieldElement(f, q);
    case FieldFamily::PrimeField: {
      mpz_class den(q.get_den());
      mpz_class p(static_cast<long>(f.p));
      mpz_class deninv;
      if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw ZeroDivisionError("denominator not invertible mod p");
      mpz_class r = (q.get_num() % p) * deninv % p;
      return FieldElement(f, FpScalar{mpz_class(r % p).get_si(), f.p});
    }
    case FieldFamily::RealQuadratic:
      return FieldElement(f, QuadScalar{q, mpq_class(0), f.d});
    case FieldFamily::FunctionField: {
      if (f.p == 0) {
        return FieldElement(f, RatFunQ{PolyQ::constant(q), PolyQ::constant(mpq_class(1))});
      }
      FieldElement c = from_rational(FieldDescriptor::prime_field(f.p), q);
      FpScalar s = std::get<FpScalar>(c.payload_);
      return FieldElement(f, RatFunP{PolyP::constant(s), PolyP::constant(one_like(s))});
    }
  }
  throw DescriptorError("unknown field family");
}

FieldElement FieldElement::sqrt_radical(const FieldDescriptor& f) {
  if (f.family != FieldFamily::RealQuadratic)
    throw FieldMismatchError("sqrt radical only exists in real quadratic fields");
  return FieldElement(f, QuadScalar{mpq_class(0), mpq_class(1), f.d});
}

FieldElement FieldElement::variable(const FieldDescriptor& f) {
  if (f.family != FieldFamily::FunctionField)
    throw FieldMismatchError("variable only exists in function fields");
  if (f.p == 0)
    return FieldElement(f, RatFunQ{PolyQ::monomial(mpq_class(1), 1), PolyQ::constant(mpq_class(1))});
  return FieldElement(f, RatFunP{PolyP::monomial(FpScalar{1, f.p}, 1), PolyP::constant(FpScalar{1, f.p})});
}

bool FieldElement::is_zero_elem() const {
  switch (desc_.family) {
    case FieldFamily::Rationals:
      return sgn(std::get<mpq_class>(payload_)) == 0;
    case FieldFamily::PrimeField:
      return std::get<FpScalar>(payload_).v == 0;
    case FieldFamily::RealQuadratic: {
      const auto& s = std::get<QuadScalar>(payload_);
      return sgn(s.a) == 0 && sgn(s.b) == 0;
    }
    case FieldFamily::FunctionField:
      return desc_.p == 0 ? std::get<RatFunQ>(payload_).num.is_zero_poly()
                          : std::get<RatFunP>(payload_).num.is_zero_poly();
  }
  return false;
}

bool FieldElement::is_one_elem() const { return *this == one(desc_); }

bool FieldElement::is_root_of_unity() const {
  if (is_zero_elem()) return false;
  switch (desc_.family) {
    case FieldFamily::Rationals: {
      const auto& q = std::get<mpq_class>(payload_);
      return q == 1 || q == -1;
    }
    case FieldFamily::PrimeField:
      return true;  // F_p^* is finite
    case FieldFamily::RealQuadratic: {
      const auto& s = std::get<QuadScalar>(payload_);
      return sgn(s.b) == 0 && (s.a == 1 || s.a == -1);
    }
    case FieldFamily::FunctionField: {
      // Roots of unity are the roots of unity of the constant field.
      if (desc_.p == 0) {
        const auto& f = std::get<RatFunQ>(payload_);
        if (f.num.degree() != 0 || f.den.degree() != 0) return false;
        const mpq_class& c = f.num[0];
        return c == 1 || c == -1;
      }
      const auto& f = std::get<RatFunP>(payload_);
      return f.num.degree() == 0 && f.den.degree() == 0;
    }
  }
  return false;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!(desc_ == o.desc_))
    throw FieldMismatchError("field mismatch: " + desc_.to_string() + " vs " + o.desc_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  switch (desc_.family) {
    case FieldFamily::Rationals:
      return FieldElement(desc_, std::get<mpq_class>(payload_) + std::get<mpq_class>(o.payload_));
    case FieldFamily::PrimeField:
      return FieldElement(desc_, add(std::get<FpScalar>(payload_), std::get<FpScalar>(o.payload_)));
    case FieldFamily::RealQuadratic: {
      const auto& x = std::get<QuadScalar>(payload_);
      const auto& y = std::get<QuadScalar>(o.payload_);
      return FieldElement(desc_, QuadScalar{x.a + y.a, x.b + y.b, desc_.d});
    }
    case FieldFamily::FunctionField:
      if (desc_.p == 0)
        return FieldElement(desc_, ratfun_add(std::get<RatFunQ>(payload_), std::get<RatFunQ>(o.payload_)));
      return FieldElement(desc_, ratfun_add(std::get<RatFunP>(payload_), std::get<RatFunP>(o.payload_)));
  }
  throw DescriptorError("unknown field family");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  switch (desc_.family) {
    case FieldFamily::Rationals:
      return FieldElement(desc_, std::get<mpq_class>(payload_) * std::get<mpq_class>(o.payload_));
    case FieldFamily::PrimeField:
      return FieldElement(desc_, mul(std::get<FpScalar>(payload_), std::get<FpScalar>(o.payload_)));
    case FieldFamily::RealQuadratic: {
      const auto& x = std::get<QuadScalar>(payload_);
      const auto& y = std::get<QuadScalar>(o.payload_);
      mpq_class dd(static_cast<long>(desc_.d));
      return FieldElement(desc_, QuadScalar{x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, desc_.d});
    }
    case FieldFamily::FunctionField:
      if (desc_.p == 0)
        return FieldElement(desc_, ratfun_mul(std::get<RatFunQ>(payload_), std::get<RatFunQ>(o.payload_)));
      return FieldElement(desc_, ratfun_mul(std::get<RatFunP>(payload_), std::get<RatFunP>(o.payload_)));
  }
  throw DescriptorError("unknown field family");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  if (o.is_zero_elem()) throw ZeroDivisionError("division by zero field element");
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  switch (desc_.family) {
    case FieldFamily::Rationals:
      return FieldElement(desc_, -std::get<mpq_class>(payload_));
    case FieldFamily::PrimeField:
      return FieldElement(desc_, neg(std::get<FpScalar>(payload_)));
    case FieldFamily::RealQuadratic: {
      const auto& s = std::get<QuadScalar>(payload_);
      return FieldElement(desc_, QuadScalar{-s.a, -s.b, desc_.d});
    }
    case FieldFamily::FunctionField:
      if (desc_.p == 0) {
        const auto& f = std::get<RatFunQ>(payload_);
        return FieldElement(desc_, RatFunQ{f.num.negated(), f.den});
      } else {
        const auto& f = std::get<RatFunP>(payload_);
        return FieldElement(desc_, RatFunP{f.num.negated(), f.den});
      }
  }
  throw DescriptorError("unknown field family");
}

FieldElement FieldElement::inverse() const {
  if (is_zero_elem()) throw ZeroDivisionError("inverse of zero field element");
  switch (desc_.family) {
    case FieldFamily::Rationals:
      return FieldElement(desc_, 1 / std::get<mpq_class>(payload_));
    case FieldFamily::PrimeField: {
      const auto& s = std::get<FpScalar>(payload_);
      return FieldElement(desc_, FpScalar{mod_inv(s.v, s.p), s.p});
    }
    case FieldFamily::RealQuadratic: {
      // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d); the norm is
      // nonzero because d is not a rational square.
      const auto& s = std::get<QuadScalar>(payload_);
      mpq_class dd(static_cast<long>(desc_.d));
      mpq_class n = s.a * s.a - s.b * s.b * dd;
      return FieldElement(desc_, QuadScalar{s.a / n, -s.b / n, desc_.d});
    }
    case FieldFamily::FunctionField:
      if (desc_.p == 0) {
        const auto& f = std::get<RatFunQ>(payload_);
        return FieldElement(desc_, RatFunQ{f.den, f.num});
      } else {
        const auto& f = std::get<RatFunP>(payload_);
        return FieldElement(desc_, RatFunP{f.den, f.num});
      }
  }
  throw DescriptorError("unknown field family");
}

FieldElement FieldElement::pow(const mpz_class& e) const {
  if (sgn(e) < 0) return inverse().pow(-e);
  FieldElement base = *this;
  FieldElement acc = one(desc_);
  mpz_class k = e;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    k >>= 1;
    if (sgn(k) > 0) base = base * base;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!(desc_ == o.desc_)) return false;
  switch (desc_.family) {
    case FieldFamily::Rationals:
      return eq(std::get<mpq_class>(payload_), std::get<mpq_class>(o.payload_));
    case FieldFamily::PrimeField:
      return eq(std::get<FpScalar>(payload_), std::get<FpScalar>(o.payload_));
    case FieldFamily::RealQuadratic: {
      const auto& x = std::get<QuadScalar>(payload_);
      const auto& y = std::get<QuadScalar>(o.payload_);
      return eq(x.a, y.a) && eq(x.b, y.b);
    }
    case FieldFamily::FunctionField:
      if (desc_.p == 0) {
        const auto& f = std::get<RatFunQ>(payload_);
        const auto& g = std::get<RatFunQ>(o.payload_);
        return f.num == g.num && f.den == g.den;
      } else {
        const auto& f = std::get<RatFunP>(payload_);
        const auto& g = std::get<RatFunP>(o.payload_);
        return f.num == g.num && f.den == g.den;
      }
  }
  return false;
}

const mpq_class& FieldElement::rational() const {
  if (desc_.family != FieldFamily::Rationals) throw FieldMismatchError("not a rational element");
  return std::get<mpq_class>(payload_);
}

const QuadScalar& FieldElement::quadratic() const {
  if (desc_.family != FieldFamily::RealQuadratic) throw FieldMismatchError("not a quadratic element");
  return std::get<QuadScalar>(payload_);
}

const FpScalar& FieldElement::prime_residue() const {
  if (desc_.family != FieldFamily::PrimeField) throw FieldMismatchError("not a prime field element");
  return std::get<FpScalar>(payload_);
}

const RatFunQ& FieldElement::rational_function_q() const {
  if (desc_.family != FieldFamily::FunctionField || desc_.p != 0)
    throw FieldMismatchError("not a Q(t) element");
  return std::get<RatFunQ>(payload_);
}

const RatFunP& FieldElement::rational_function_p() const {
  if (desc_.family != FieldFamily::FunctionField || desc_.p == 0)
    throw FieldMismatchError("not an F_p(t) element");
  return std::get<RatFunP>(payload_);
}

FieldElement FieldElement::conjugate() const {
  if (desc_.family != FieldFamily::RealQuadratic) return *this;
  const auto& s = std::get<QuadScalar>(payload_);
  return FieldElement(desc_, QuadScalar{s.a, -s.b, desc_.d});
}

// --------------------------------------------------------------------------
// Printing
// --------------------------------------------------------------------------

namespace {

std::string q_to_string(const mpq_class& q) { return q.get_str(); }

std::string coeff_term(const std::string& coeff, bool coeff_is_one, bool coeff_is_neg_one,
                       const std::string& var, std::size_t power) {
  std::string v;
  if (power == 0) return coeff;
  v = power == 1 ? var : var + "^" + std::to_string(power);
  if (coeff_is_one) return v;
  if (coeff_is_neg_one) return "-" + v;
  return coeff + "*" + v;
}

template <typename K, typename ToStr, typename IsOne, typename IsNegOne>
std::string poly_to_string(const Poly<K>& p, const std::string& var, ToStr to_str, IsOne is_one,
                           IsNegOne is_neg_one) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const K& c = p[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    std::string term = coeff_term(to_str(c), is_one(c), is_neg_one(c), var, static_cast<std::size_t>(i));
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string polyq_to_string(const PolyQ& p, const std::string& var) {
  return poly_to_string(
      p, var, [](const mpq_class& c) { return c.get_str(); },
      [](const mpq_class& c) { return c == 1; }, [](const mpq_class& c) { return c == -1; });
}

std::string polyp_to_string(const PolyP& p, const std::string& var) {
  return poly_to_string(
      p, var, [](const FpScalar& c) { return std::to_string(c.v); },
      [](const FpScalar& c) { return c.v == 1; }, [](const FpScalar&) { return false; });
}

template <typename K, typename PrintPoly>
std::string ratfun_to_string(const RatFun<K>& f, const std::string& var, PrintPoly print) {
  if (f.num.is_zero_poly()) return "0";
  const bool den_is_one = f.den.degree() == 0 && eq(f.den[0], one_like(f.den[0]));
  if (den_is_one) return print(f.num, var);
  return "(" + print(f.num, var) + ")/(" + print(f.den, var) + ")";
}

}  // namespace

std::string FieldElement::to_string() const {
  switch (desc_.family) {
    case FieldFamily::Rationals:
      return q_to_string(std::get<mpq_class>(payload_));
    case FieldFamily::PrimeField:
      return std::to_string(std::get<FpScalar>(payload_).v);
    case FieldFamily::RealQuadratic: {
      const auto& s = std::get<QuadScalar>(payload_);
      const std::string rad = "sqrt(" + std::to_string(desc_.d) + ")";
      if (sgn(s.b) == 0) return q_to_string(s.a);
      std::string bpart;
      mpq_class babs = abs(s.b);
      if (babs == 1)
        bpart = rad;
      else
        bpart = q_to_string(babs) + "*" + rad;
      if (sgn(s.a) == 0) return (sgn(s.b) < 0 ? "-" : "") + bpart;
      return q_to_string(s.a) + (sgn(s.b) < 0 ? " - " : " + ") + bpart;
    }
    case FieldFamily::FunctionField:
      if (desc_.p == 0) return ratfun_to_string(std::get<RatFunQ>(payload_), desc_.variable, polyq_to_string);
      return ratfun_to_string(std::get<RatFunP>(payload_), desc_.variable, polyp_to_string);
  }
  return "?";
}

// --------------------------------------------------------------------------
// Parsing: expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
// factor := ('-')* atom ('^' uint)? ; atom := uint | var | sqrt '(' uint ')'
//         | '(' expr ')'
// --------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const FieldDescriptor& f, const std::string& s) : f_(f), s_(s) {}

  FieldElement run() {
    FieldElement e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input at position " + std::to_string(pos_));
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  FieldElement expr() {
    FieldElement acc = term();
    for (;;) {
      if (consume('+'))
        acc = acc + term();
      else if (consume('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  FieldElement term() {
    FieldElement acc = factor();
    for (;;) {
      if (consume('*'))
        acc = acc * factor();
      else if (consume('/'))
        acc = acc / factor();
      else
        return acc;
    }
  }

  FieldElement factor() {
    if (consume('-')) return -factor();
    FieldElement a = atom();
    skip_ws();
    if (consume('^')) {
      mpz_class e = integer();
      return a.pow(e);
    }
    return a;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer at position " + std::to_string(start));
    if (pos_ < s_.size() && s_[pos_] == '.')
      throw ParseError("decimal literals are not accepted in exact fields");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  FieldElement atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement e = expr();
      if (!consume(')')) throw ParseError("missing closing parenthesis");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return FieldElement::from_integer(f_, integer());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "sqrt") {
        if (!consume('(')) throw ParseError("expected '(' after sqrt");
        mpz_class rad = integer();
        if (!consume(')')) throw ParseError("missing ')' after sqrt radicand");
        if (f_.family != FieldFamily::RealQuadratic || rad != f_.d)
          throw ParseError("sqrt(" + rad.get_str() + ") does not live in " + f_.to_string());
        return FieldElement::sqrt_radical(f_);
      }
      if (f_.family == FieldFamily::FunctionField && name == f_.variable)
        return FieldElement::variable(f_);
      throw ParseError("unknown symbol '" + name + "' in " + f_.to_string());
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }

  const FieldDescriptor& f_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement FieldElement::parse(const FieldDescriptor& f, const std::string& text) {
  if (text.find('.') != std::string::npos)
    throw ParseError("decimal literals are not accepted in exact fields");
  return Parser(f, text).run();
}

// --------------------------------------------------------------------------
// FieldElement as a Poly scalar
// --------------------------------------------------------------------------

FieldElement zero_like(const FieldElement& x) { return FieldElement::zero(x.field()); }
FieldElement one_like(const FieldElement& x) { return FieldElement::one(x.field()); }
bool is_zero(const FieldElement& x) { return x.is_zero_elem(); }
bool eq(const FieldElement& a, const FieldElement& b) { return a == b; }
FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement div(const FieldElement& a, const FieldElement& b) { return a / b; }
FieldElement neg(const FieldElement& a) { return -a; }

std::string fpoly_to_string(const FPoly& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const FieldElement& c = p[static_cast<std::size_t>(i)];
    if (c.is_zero_elem()) continue;
    std::string cs = c.to_string();
    bool one = c.is_one_elem();
    bool negone = (-c).is_one_elem();
    std::string term;
    if (i == 0)
      term = cs;
    else {
      std::string v = i == 1 ? var : var + "^" + std::to_string(i);
      if (one)
        term = v;
      else if (negone)
        term = "-" + v;
      else
        term = "(" + cs + ")*" + v;
    }
    if (out.empty())
      out = term;
    else if (!term.empty() && term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

}  // namespace mgt
