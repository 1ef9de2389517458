// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "mgt/interval.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace mgt {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact_zero(mpfr_prec_t prec) { return Interval(prec); }

Interval Interval::from_mpq(const mpq_class& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_mpz(const mpz_class& z, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::log_of_mpq(const mpq_class& q, mpfr_prec_t prec) {
  if (sgn(q) <= 0) throw Error("log of a non-positive rational");
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_log(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log_of_integer(std::int64_t n, mpfr_prec_t prec) {
  return log_of_mpq(mpq_class(static_cast<long>(n)), prec);
}

Interval Interval::sqrt_of_integer(std::int64_t n, mpfr_prec_t prec) {
  if (n < 0) throw Error("sqrt of a negative integer");
  Interval r(prec);
  mpfr_set_si(r.lo_, static_cast<long>(n), MPFR_RNDD);
  mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_si(r.hi_, static_cast<long>(n), MPFR_RNDU);
  mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::from_endpoints(const std::string& lo_hex, const std::string& hi_hex,
                                  mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_str(r.lo_, lo_hex.c_str(), 0, MPFR_RNDD) != 0)
    throw ParseError("bad interval endpoint: " + lo_hex);
  if (mpfr_set_str(r.hi_, hi_hex.c_str(), 0, MPFR_RNDU) != 0)
    throw ParseError("bad interval endpoint: " + hi_hex);
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw ParseError("interval endpoints out of order");
  return r;
}

Interval Interval::add(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sub(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::negated() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::mul(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  // min/max over the four endpoint products, each with outward rounding.
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  bool first = true;
  const mpfr_srcptr as[2] = {lo_, hi_};
  const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::mul_mpq(const mpq_class& q) const {
  Interval r(prec_);
  if (sgn(q) >= 0) {
    mpfr_mul_q(r.lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(r.lo_, hi_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, lo_, q.get_mpq_t(), MPFR_RNDU);
  }
  return r;
}

Interval Interval::mul_mpz(const mpz_class& z) const { return mul_mpq(mpq_class(z)); }

Interval Interval::abs() const {
  if (!contains_zero()) {
    return certainly_negative() ? negated() : *this;
  }
  Interval r(prec_);
  mpfr_set_zero(r.lo_, 1);
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_neg(t, lo_, MPFR_RNDU);
  if (mpfr_cmp(t, hi_) > 0)
    mpfr_set(r.hi_, t, MPFR_RNDU);
  else
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::log() const {
  if (!certainly_positive()) throw PrecisionExhaustedError("interval log needs a certainly positive argument");
  Interval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::reciprocal() const {
  if (contains_zero()) throw PrecisionExhaustedError("interval reciprocal across zero");
  Interval r(prec_);
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::min(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::intersect(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw Error("intersection of disjoint intervals");
  return r;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::certainly_less(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi_, b.lo_) < 0;
}

bool Interval::contains_mpq(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::width_double() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

double Interval::mid_double() const { return 0.5 * (lo_double() + hi_double()); }

std::string Interval::hex_of(const mpfr_t& x) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra", x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Interval::lo_hex() const { return hex_of(lo_); }
std::string Interval::hi_hex() const { return hex_of(hi_); }

std::string Interval::brief() const {
  std::ostringstream os;
  os.precision(12);
  os << "[" << lo_double() << ", " << hi_double() << "]";
  return os.str();
}

}  // namespace mgt
