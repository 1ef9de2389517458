// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MGT_FIELDS_HPP
#define MGT_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mgt/errors.hpp"
#include "mgt/poly.hpp"

namespace mgt {

enum class FieldFamily { Rationals, PrimeField, FunctionField, RealQuadratic };

// One of four exact field families:
//   Rationals        Q
//   PrimeField       F_p, p prime
//   FunctionField    Q(t) or F_p(t)
//   RealQuadratic    Q(sqrt(d)), d squarefree > 1
struct FieldDescriptor {
  FieldFamily family = FieldFamily::Rationals;
  std::int64_t p = 0;    // PrimeField modulus; FunctionField base modulus (0 = Q)
  std::string variable;  // FunctionField only
  std::int64_t d = 0;    // RealQuadratic radicand

  static FieldDescriptor rationals();
  static FieldDescriptor prime_field(std::int64_t p);
  static FieldDescriptor rational_function_field(std::string variable);
  static FieldDescriptor prime_function_field(std::int64_t p, std::string variable);
  static FieldDescriptor real_quadratic(std::int64_t d);

  // 0 for Q, Q(t), Q(sqrt d); p for F_p and F_p(t).
  std::int64_t characteristic() const;

  bool operator==(const FieldDescriptor&) const = default;
  std::string to_string() const;
};

bool is_prime_int(std::int64_t n);
bool is_squarefree_int(std::int64_t n);

// ---------------------------------------------------------------------------
// Scalar payload types. Each carries its field context so that
// zero_like/one_like can synthesize constants without a descriptor at hand.
// ---------------------------------------------------------------------------

struct FpScalar {
  std::int64_t v = 0;  // 0 <= v < p
  std::int64_t p = 0;
};

FpScalar zero_like(const FpScalar&);
FpScalar one_like(const FpScalar&);
bool is_zero(const FpScalar&);
bool eq(const FpScalar&, const FpScalar&);
FpScalar add(const FpScalar&, const FpScalar&);
FpScalar sub(const FpScalar&, const FpScalar&);
FpScalar mul(const FpScalar&, const FpScalar&);
FpScalar div(const FpScalar&, const FpScalar&);
FpScalar neg(const FpScalar&);

// Poly scalar interface for mpq_class.
mpq_class zero_like(const mpq_class&);
mpq_class one_like(const mpq_class&);
bool is_zero(const mpq_class&);
bool eq(const mpq_class&, const mpq_class&);
mpq_class add(const mpq_class&, const mpq_class&);
mpq_class sub(const mpq_class&, const mpq_class&);
mpq_class mul(const mpq_class&, const mpq_class&);
mpq_class div(const mpq_class&, const mpq_class&);
mpq_class neg(const mpq_class&);

using PolyQ = Poly<mpq_class>;
using PolyP = Poly<FpScalar>;

// a + b*sqrt(d) with rational a, b.
struct QuadScalar {
  mpq_class a;
  mpq_class b;
  std::int64_t d = 0;
};

// Reduced fraction of polynomials with monic denominator.
template <typename K>
struct RatFun {
  Poly<K> num;
  Poly<K> den;  // monic; gcd(num, den) = 1; zero element: num = 0, den = 1
};

using RatFunQ = RatFun<mpq_class>;
using RatFunP = RatFun<FpScalar>;

// ---------------------------------------------------------------------------
// FieldElement: an exact scalar in one of the four families, always kept in
// canonical form. Canonical form is the identity contract: equal elements
// have identical payloads, so string serialization doubles as a hash key.
// ---------------------------------------------------------------------------
class FieldElement {
 public:
  using Payload = std::variant<mpq_class, FpScalar, QuadScalar, RatFunQ, RatFunP>;

  FieldElement();  // 0 in Q
  FieldElement(FieldDescriptor desc, Payload payload);  // canonicalizes

  static FieldElement zero(const FieldDescriptor&);
  static FieldElement one(const FieldDescriptor&);
  static FieldElement from_integer(const FieldDescriptor&, const mpz_class&);
  static FieldElement from_rational(const FieldDescriptor&, const mpq_class&);
  // sqrt(d) in Q(sqrt d); the variable t in a function field.
  static FieldElement sqrt_radical(const FieldDescriptor&);
  static FieldElement variable(const FieldDescriptor&);

  // Exact parser for the canonical string forms; rejects decimal literals.
  static FieldElement parse(const FieldDescriptor&, const std::string& text);

  const FieldDescriptor& field() const { return desc_; }
  const Payload& payload() const { return payload_; }

  bool is_zero_elem() const;
  bool is_one_elem() const;
  // Exactly the torsion of the unit group: +-1 in Q and Q(sqrt d); any
  // nonzero element of F_p; nonzero constants in F_p(t); +-1 in Q(t).
  bool is_root_of_unity() const;

  FieldElement operator+(const FieldElement&) const;
  FieldElement operator-(const FieldElement&) const;
  FieldElement operator*(const FieldElement&) const;
  FieldElement operator/(const FieldElement&) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(const mpz_class& e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

  // Rationals / PrimeField / RealQuadratic accessors (throw on wrong family).
  const mpq_class& rational() const;
  const QuadScalar& quadratic() const;
  const FpScalar& prime_residue() const;
  const RatFunQ& rational_function_q() const;
  const RatFunP& rational_function_p() const;

  // Image of a RealQuadratic element under the nontrivial automorphism
  // sqrt(d) -> -sqrt(d); identity on the other families.
  FieldElement conjugate() const;

 private:
  void canonicalize();
  void check_same_field(const FieldElement& o) const;

  FieldDescriptor desc_;
  Payload payload_;
};

// Poly scalar interface for FieldElement, enabling Poly<FieldElement>
// (used for characteristic polynomials).
FieldElement zero_like(const FieldElement&);
FieldElement one_like(const FieldElement&);
bool is_zero(const FieldElement&);
bool eq(const FieldElement&, const FieldElement&);
FieldElement add(const FieldElement&, const FieldElement&);
FieldElement sub(const FieldElement&, const FieldElement&);
FieldElement mul(const FieldElement&, const FieldElement&);
FieldElement div(const FieldElement&, const FieldElement&);
FieldElement neg(const FieldElement&);

using FPoly = Poly<FieldElement>;

std::string fpoly_to_string(const FPoly&, const std::string& var = "x");

}  // namespace mgt

#endif  // MGT_FIELDS_HPP
