// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MGT_INTERVAL_HPP
#define MGT_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>

#include "mgt/errors.hpp"

namespace mgt {

// Closed interval [lo, hi] with dyadic endpoints, computed with directed
// rounding so that the true real value is always enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(const Interval&);
  Interval(Interval&&) noexcept;
  Interval& operator=(const Interval&);
  Interval& operator=(Interval&&) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return prec_; }

  static Interval exact_zero(mpfr_prec_t prec = 64);
  static Interval from_mpq(const mpq_class&, mpfr_prec_t prec);
  static Interval from_mpz(const mpz_class&, mpfr_prec_t prec);
  // log of a positive rational / integer.
  static Interval log_of_mpq(const mpq_class&, mpfr_prec_t prec);
  static Interval log_of_integer(std::int64_t n, mpfr_prec_t prec);
  static Interval sqrt_of_integer(std::int64_t n, mpfr_prec_t prec);
  static Interval from_endpoints(const std::string& lo_hex, const std::string& hi_hex,
                                 mpfr_prec_t prec);

  Interval add(const Interval&) const;
  Interval sub(const Interval&) const;
  Interval negated() const;
  Interval mul(const Interval&) const;
  Interval mul_mpq(const mpq_class&) const;
  Interval mul_mpz(const mpz_class&) const;
  Interval abs() const;
  // Requires certainly_positive().
  Interval log() const;
  Interval exp() const;
  Interval reciprocal() const;
  static Interval max(const Interval&, const Interval&);
  static Interval min(const Interval&, const Interval&);
  // Narrow to the intersection; the arguments must overlap.
  Interval intersect(const Interval&) const;

  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains_zero() const;
  // a.hi < b.lo
  static bool certainly_less(const Interval& a, const Interval& b);
  bool contains_mpq(const mpq_class&) const;

  double lo_double() const;
  double hi_double() const;
  double width_double() const;
  double mid_double() const;

  // Exact hex-float serialization of the endpoints.
  std::string lo_hex() const;
  std::string hi_hex() const;
  std::string brief() const;  // human-readable decimal approximation

 private:
  static std::string hex_of(const mpfr_t&);
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

}  // namespace mgt

#endif  // MGT_INTERVAL_HPP
