// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MGT_ABSOLUTE_VALUE_HPP
#define MGT_ABSOLUTE_VALUE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "mgt/fields.hpp"
#include "mgt/interval.hpp"

namespace mgt {

enum class AvKind {
  Trivial,
  PAdic,                // |.|_p on Q
  ArchimedeanRational,  // usual |.| on Q
  DegreeValuation,      // eps(f/g) = e^(deg f - deg g) on k(t)
  PolyAdic,             // pi(t)-adic on k(t), eps = e^(-v)
  QuadraticEmbedding,   // |sigma(x)| for sigma(sqrt d) = +-sqrt d
  QuadraticPAdic        // p-adic on Q(sqrt d) via a Hensel branch, d a QR mod p
};

class LogMagnitude;

// A named multiplicative evaluation eps on one of the four fields.
// Discrete kinds (PAdic, DegreeValuation, PolyAdic, QuadraticPAdic) expose an
// exact integer valuation v with log eps(x) = -v(x) * log(base constant),
// where the base constant is p for the p-adic kinds and e for the function
// field kinds.
class AbsoluteValue {
 public:
  static AbsoluteValue trivial(FieldDescriptor target);
  static AbsoluteValue p_adic(std::int64_t p);
  static AbsoluteValue archimedean_rational();
  static AbsoluteValue degree_valuation(FieldDescriptor function_field);
  // pi must be a nonconstant polynomial (denominator 1), monic, irreducible.
  static AbsoluteValue poly_adic(FieldElement pi);
  static AbsoluteValue quadratic_embedding(std::int64_t d, int sign);
  // Requires p odd, p not dividing d, and d a nonzero square mod p.
  // branch 0 picks the root s of s^2 = d mod p with s < p/2, branch 1 the other.
  static AbsoluteValue quadratic_p_adic(std::int64_t d, std::int64_t p, int branch);

  AvKind kind() const { return kind_; }
  const FieldDescriptor& target() const { return target_; }
  bool discrete() const;
  // 0 means the natural-log scale (base constant e); otherwise the prime p.
  std::int64_t log_base_integer() const;
  std::int64_t prime() const { return p_; }
  int sign() const { return sign_; }
  const FieldElement& uniformizer() const { return pi_; }

  // Exact integer valuation; discrete kinds only, x != 0.
  mpz_class valuation(const FieldElement& x) const;
  // Enclosure of eps(x); archimedean kinds (used by operator norms).
  Interval magnitude_interval(const FieldElement& x, mpfr_prec_t prec) const;
  // Certified enclosure of log eps(x); x != 0.
  LogMagnitude eval(const FieldElement& x, mpfr_prec_t prec) const;

  std::string describe() const;
  bool operator==(const AbsoluteValue&) const;

 private:
  AbsoluteValue() = default;
  AvKind kind_ = AvKind::Trivial;
  FieldDescriptor target_;
  std::int64_t p_ = 0;
  int sign_ = 0;  // QuadraticEmbedding: +1/-1; QuadraticPAdic: branch 0/1
  FieldElement pi_;
};

// Certified dyadic enclosure of log eps(x).
//
// When the value is an exact integer combination of logarithms of integers
// (always the case for discrete valuations), the combination is carried
// symbolically: terms_[1] is a plain rational summand and terms_[n] for n >= 2
// is the coefficient of ln(n). Sums, maxima and scalar multiples of such
// values stay exact, which is what makes certificate inequalities decidable
// even when the two sides are mathematically equal.
class LogMagnitude {
 public:
  using Terms = std::map<std::int64_t, mpq_class>;

  static LogMagnitude exact_zero(mpfr_prec_t prec = 64);
  static LogMagnitude from_terms(Terms terms, mpfr_prec_t prec);
  static LogMagnitude from_interval(Interval iv);
  // value = -v * log(base); base 0 encodes the natural-log scale.
  static LogMagnitude from_valuation(const mpz_class& v, std::int64_t base, mpfr_prec_t prec);

  const Interval& interval() const { return iv_; }
  mpfr_prec_t precision() const { return iv_.precision(); }
  bool exact() const { return terms_.has_value(); }
  const std::optional<Terms>& terms() const { return terms_; }
  // Exact integer valuation when this magnitude came from a discrete kind.
  const std::optional<mpz_class>& valuation() const { return valuation_; }

  // Recompute at higher precision and intersect with the current enclosure;
  // never widens. Values without an exact form or provenance are returned
  // unchanged.
  LogMagnitude refine(mpfr_prec_t extra_bits) const;

  LogMagnitude add(const LogMagnitude&) const;
  LogMagnitude sub(const LogMagnitude&) const;
  LogMagnitude negated() const;
  LogMagnitude abs() const;
  LogMagnitude mul_mpq(const mpq_class&) const;
  static LogMagnitude max(const LogMagnitude&, const LogMagnitude&);

  // Clamp the lower endpoint to 0 for quantities that are nonnegative by
  // construction (operator-norm maxima).
  LogMagnitude clamped_nonnegative() const;

  enum class Sign { Negative, Zero, Positive, Unknown };
  // Certified sign, refining exact forms up to max_prec when needed.
  Sign certify_sign(mpfr_prec_t max_prec = 4096) const;

  // Certified comparison a <= b up to refinement; Unknown when the interval
  // data cannot decide and no exact form is available.
  static Sign compare(const LogMagnitude& a, const LogMagnitude& b, mpfr_prec_t max_prec = 4096);

  std::string to_string() const;

  // Provenance for refine(); set by AbsoluteValue::eval.
  void set_provenance(AbsoluteValue av, FieldElement x);

 private:
  explicit LogMagnitude(Interval iv) : iv_(std::move(iv)) {}
  static Interval eval_terms(const Terms&, mpfr_prec_t prec);

  Interval iv_{64};
  std::optional<Terms> terms_;
  std::optional<mpz_class> valuation_;
  std::shared_ptr<const std::pair<AbsoluteValue, FieldElement>> provenance_;
};

}  // namespace mgt

#endif  // MGT_ABSOLUTE_VALUE_HPP
