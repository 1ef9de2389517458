// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "mgt/absolute_value.hpp"

#include <algorithm>

namespace mgt {

namespace {

// Multiplicity of p in z (z != 0).
mpz_class padic_valuation(const mpz_class& z, std::int64_t p) {
  if (sgn(z) == 0) throw AbsoluteValueError("valuation of zero");
  mpz_class rest;
  mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t());
  return mpz_class(static_cast<unsigned long>(k));
}

// Multiplicity of the polynomial pi in f (f != 0), by repeated exact division.
template <typename K>
long poly_multiplicity(Poly<K> f, const Poly<K>& pi) {
  long m = 0;
  for (;;) {
    auto [q, r] = divmod(f, pi);
    if (!r.is_zero_poly()) return m;
    ++m;
    f = std::move(q);
  }
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((static_cast<__int128>(r) * b) % m);
    b = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % m);
    e >>= 1;
  }
  return r;
}

// Square root of a mod odd prime p (a a nonzero QR), Tonelli-Shanks.
std::int64_t sqrt_mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s;
  std::int64_t c = mod_pow(z, q, p);
  std::int64_t t = mod_pow(a, q, p);
  std::int64_t r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = static_cast<std::int64_t>((static_cast<__int128>(tt) * tt) % p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j)
      b = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % p);
    m = i;
    c = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % p);
    t = static_cast<std::int64_t>((static_cast<__int128>(t) * c) % p);
    r = static_cast<std::int64_t>((static_cast<__int128>(r) * b) % p);
  }
  return r;
}

}  // namespace

// --------------------------------------------------------------------------
// AbsoluteValue constructors
// --------------------------------------------------------------------------

AbsoluteValue AbsoluteValue::trivial(FieldDescriptor target) {
  AbsoluteValue a;
  a.kind_ = AvKind::Trivial;
  a.target_ = std::move(target);
  return a;
}

AbsoluteValue AbsoluteValue::p_adic(std::int64_t p) {
  if (!is_prime_int(p)) throw AbsoluteValueError("p-adic evaluation needs a prime, got " + std::to_string(p));
  AbsoluteValue a;
  a.kind_ = AvKind::PAdic;
  a.target_ = FieldDescriptor::rationals();
  a.p_ = p;
  return a;
}

AbsoluteValue AbsoluteValue::archimedean_rational() {
  AbsoluteValue a;
  a.kind_ = AvKind::ArchimedeanRational;
  a.target_ = FieldDescriptor::rationals();
  return a;
}

AbsoluteValue AbsoluteValue::degree_valuation(FieldDescriptor function_field) {
  if (function_field.family != FieldFamily::FunctionField)
    throw AbsoluteValueError("degree valuation lives on a function field");
  AbsoluteValue a;
  a.kind_ = AvKind::DegreeValuation;
  a.target_ = std::move(function_field);
  return a;
}

AbsoluteValue AbsoluteValue::poly_adic(FieldElement pi) {
  const FieldDescriptor& f = pi.field();
  if (f.family != FieldFamily::FunctionField)
    throw AbsoluteValueError("poly-adic evaluation lives on a function field");
  bool ok;
  if (f.p == 0) {
    const auto& r = pi.rational_function_q();
    ok = r.den.degree() == 0 && r.num.degree() >= 1;
  } else {
    const auto& r = pi.rational_function_p();
    ok = r.den.degree() == 0 && r.num.degree() >= 1;
  }
  if (!ok) throw AbsoluteValueError("poly-adic uniformizer must be a nonconstant polynomial");
  AbsoluteValue a;
  a.kind_ = AvKind::PolyAdic;
  a.target_ = f;
  a.pi_ = std::move(pi);
  return a;
}

AbsoluteValue AbsoluteValue::quadratic_embedding(std::int64_t d, int sign) {
  if (sign != 1 && sign != -1) throw AbsoluteValueError("embedding sign must be +1 or -1");
  AbsoluteValue a;
  a.kind_ = AvKind::QuadraticEmbedding;
  a.target_ = FieldDescriptor::real_quadratic(d);
  a.sign_ = sign;
  return a;
}

AbsoluteValue AbsoluteValue::quadratic_p_adic(std::int64_t d, std::int64_t p, int branch) {
  FieldDescriptor target = FieldDescriptor::real_quadratic(d);
  if (!is_prime_int(p) || p == 2) throw AbsoluteValueError("quadratic p-adic evaluation needs an odd prime");
  if (d % p == 0) throw AbsoluteValueError("p divides d: valuation is ramified, not supported");
  if (mod_pow(d % p, (p - 1) / 2, p) != 1)
    throw AbsoluteValueError(std::to_string(d) + " is not a quadratic residue mod " + std::to_string(p));
  if (branch != 0 && branch != 1) throw AbsoluteValueError("branch must be 0 or 1");
  AbsoluteValue a;
  a.kind_ = AvKind::QuadraticPAdic;
  a.target_ = std::move(target);
  a.p_ = p;
  a.sign_ = branch;
  return a;
}

bool AbsoluteValue::discrete() const {
  switch (kind_) {
    case AvKind::PAdic:
    case AvKind::DegreeValuation:
    case AvKind::PolyAdic:
    case AvKind::QuadraticPAdic:
      return true;
    default:
      return false;
  }
}

std::int64_t AbsoluteValue::log_base_integer() const {
  switch (kind_) {
    case AvKind::PAdic:
    case AvKind::QuadraticPAdic:
      return p_;
    case AvKind::DegreeValuation:
    case AvKind::PolyAdic:
      return 0;
    default:
      throw AbsoluteValueError("log base only defined for discrete kinds");
  }
}

// --------------------------------------------------------------------------
// Valuations
// --------------------------------------------------------------------------

namespace {

// v_p of the image of a + b sqrt(d) in Q_p under sqrt(d) |-> s, where s is a
// Hensel lift of the chosen square root of d mod p. Lifts modulo p^k for
// growing k until the valuation of the image is pinned below k.
mpz_class quadratic_padic_valuation(const QuadScalar& x, std::int64_t p, std::int64_t s0,
                                    std::int64_t d) {
  // Common denominator: x = (A + B sqrt d) / Q.
  mpz_class A = x.a.get_num() * x.b.get_den();
  mpz_class B = x.b.get_num() * x.a.get_den();
  mpz_class Q = x.a.get_den() * x.b.get_den();
  mpz_class vq = padic_valuation(Q, p);

  mpz_class pz(static_cast<long>(p));
  mpz_class pk = pz;        // p^k
  mpz_class s(static_cast<long>(s0));  // sqrt(d) mod p^k
  long k = 1;
  const long k_cap = 1 << 16;
  for (;;) {
    // Double k: Newton step s <- s - (s^2 - d) / (2s) mod p^(2k).
    long nk = k * 2;
    mpz_class pk2 = pk * pk;
    mpz_class twos = 2 * s;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), twos.get_mpz_t(), pk2.get_mpz_t()) == 0)
      throw AbsoluteValueError("Hensel lift failed (2s not invertible)");
    mpz_class num = s * s - mpz_class(static_cast<long>(d));
    s = (s - num * inv) % pk2;
    if (sgn(s) < 0) s += pk2;
    pk = pk2;
    k = nk;

    mpz_class w = (A + B * s) % pk;
    if (sgn(w) != 0) {
      mpz_class v = padic_valuation(w, p);
      if (v < k) return v - vq;
    }
    if (k > k_cap)
      throw PrecisionExhaustedError("quadratic p-adic valuation did not stabilize");
  }
}

}  // namespace

mpz_class AbsoluteValue::valuation(const FieldElement& x) const {
  if (!(x.field() == target_)) throw FieldMismatchError("absolute value applied to the wrong field");
  if (x.is_zero_elem()) throw AbsoluteValueError("valuation of zero");
  switch (kind_) {
    case AvKind::PAdic: {
      const mpq_class& q = x.rational();
      return padic_valuation(mpq_class(q.get_num()), p_) - padic_valuation(mpq_class(q.get_den()), p_);
    }
    case AvKind::DegreeValuation: {
      // eps(f/g) = e^(deg f - deg g), so v = deg g - deg f.
      long num_deg, den_deg;
      if (target_.p == 0) {
        const auto& r = x.rational_function_q();
        num_deg = r.num.degree();
        den_deg = r.den.degree();
      } else {
        const auto& r = x.rational_function_p();
        num_deg = r.num.degree();
        den_deg = r.den.degree();
      }
      return mpz_class(den_deg - num_deg);
    }
    case AvKind::PolyAdic: {
      if (target_.p == 0) {
        const auto& r = x.rational_function_q();
        const auto& pi = pi_.rational_function_q().num;
        return mpz_class(poly_multiplicity(r.num, pi) - poly_multiplicity(r.den, pi));
      }
      const auto& r = x.rational_function_p();
      const auto& pi = pi_.rational_function_p().num;
      return mpz_class(poly_multiplicity(r.num, pi) - poly_multiplicity(r.den, pi));
    }
    case AvKind::QuadraticPAdic: {
      std::int64_t s = sqrt_mod_p(target_.d % p_, p_);
      std::int64_t smin = std::min(s, p_ - s);
      std::int64_t chosen = (sign_ == 0) ? smin : p_ - smin;
      return quadratic_padic_valuation(x.quadratic(), p_, chosen, target_.d);
    }
    default:
      throw AbsoluteValueError("valuation only defined for discrete kinds");
  }
}

// --------------------------------------------------------------------------
// Magnitude intervals (archimedean kinds)
// --------------------------------------------------------------------------

Interval AbsoluteValue::magnitude_interval(const FieldElement& x, mpfr_prec_t prec) const {
  if (!(x.field() == target_)) throw FieldMismatchError("absolute value applied to the wrong field");
  switch (kind_) {
    case AvKind::Trivial:
      return x.is_zero_elem() ? Interval::exact_zero(prec)
                              : Interval::from_mpq(mpq_class(1), prec);
    case AvKind::ArchimedeanRational: {
      mpq_class q = ::abs(x.rational());
      return Interval::from_mpq(q, prec);
    }
    case AvKind::QuadraticEmbedding: {
      const QuadScalar& s = x.quadratic();
      if (sgn(s.b) == 0) return Interval::from_mpq(::abs(s.a), prec);
      if (sgn(s.a) == 0) {
        return Interval::sqrt_of_integer(target_.d, prec).mul_mpq(::abs(s.b));
      }
      // |a + b*sign*sqrt(d)|: widen precision until the sign is resolved;
      // the value is nonzero because sqrt(d) is irrational.
      mpq_class b_signed = sign_ > 0 ? s.b : mpq_class(-s.b);
      mpfr_prec_t pr = prec;
      for (;;) {
        Interval v = Interval::from_mpq(s.a, pr).add(Interval::sqrt_of_integer(target_.d, pr).mul_mpq(b_signed));
        if (!v.contains_zero()) return v.abs();
        if (pr > 1 << 16)
          throw PrecisionExhaustedError("embedding magnitude did not separate from zero");
        pr *= 2;
      }
    }
    default: {
      // Discrete kinds: eps(x) = base^(-v) as an enclosure.
      if (x.is_zero_elem()) return Interval::exact_zero(prec);
      mpz_class v = valuation(x);
      std::int64_t base = log_base_integer();
      if (base == 0) {
        // eps(x) = e^(-v)
        return Interval::from_mpz(-v, prec).exp();
      }
      mpq_class m;
      mpz_class av = ::abs(v);
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), mpz_class(static_cast<long>(base)).get_mpz_t(), av.get_ui());
      if (sgn(v) >= 0)
        m = mpq_class(1) / mpq_class(pw);
      else
        m = mpq_class(pw);
      return Interval::from_mpq(m, prec);
    }
  }
}

// --------------------------------------------------------------------------
// av_eval
// --------------------------------------------------------------------------

LogMagnitude AbsoluteValue::eval(const FieldElement& x, mpfr_prec_t prec) const {
  if (!(x.field() == target_))
    throw FieldMismatchError("absolute value target " + target_.to_string() + " does not match element field " +
                             x.field().to_string());
  if (x.is_zero_elem()) throw AbsoluteValueError("log magnitude of zero");
  // Guard bits keep the enclosure width near 2^-prec for unit-scale values.
  const mpfr_prec_t work = prec + 8;
  LogMagnitude out = LogMagnitude::exact_zero(prec);
  switch (kind_) {
    case AvKind::Trivial:
      out = LogMagnitude::exact_zero(prec);
      break;
    case AvKind::PAdic:
    case AvKind::QuadraticPAdic: {
      mpz_class v = valuation(x);
      out = LogMagnitude::from_valuation(v, p_, work);
      break;
    }
    case AvKind::DegreeValuation:
    case AvKind::PolyAdic: {
      mpz_class v = valuation(x);
      out = LogMagnitude::from_valuation(v, 0, work);
      break;
    }
    case AvKind::ArchimedeanRational: {
      mpq_class q = ::abs(x.rational());
      out = LogMagnitude::from_interval(Interval::log_of_mpq(q, work));
      break;
    }
    case AvKind::QuadraticEmbedding: {
      Interval m = magnitude_interval(x, work);
      mpfr_prec_t pr = work;
      while (!m.certainly_positive()) {
        pr *= 2;
        if (pr > 1 << 16) throw PrecisionExhaustedError("embedding magnitude not certifiably positive");
        m = magnitude_interval(x, pr);
      }
      out = LogMagnitude::from_interval(m.log());
      break;
    }
  }
  out.set_provenance(*this, x);
  return out;
}

std::string AbsoluteValue::describe() const {
  switch (kind_) {
    case AvKind::Trivial:
      return "trivial on " + target_.to_string();
    case AvKind::PAdic:
      return std::to_string(p_) + "-adic on Q";
    case AvKind::ArchimedeanRational:
      return "archimedean |.| on Q";
    case AvKind::DegreeValuation:
      return "degree valuation on " + target_.to_string();
    case AvKind::PolyAdic:
      return "(" + pi_.to_string() + ")-adic on " + target_.to_string();
    case AvKind::QuadraticEmbedding:
      return std::string("embedding sqrt(") + std::to_string(target_.d) + ")->" +
             (sign_ > 0 ? "+" : "-") + "sqrt(" + std::to_string(target_.d) + ")";
    case AvKind::QuadraticPAdic:
      return std::to_string(p_) + "-adic on " + target_.to_string() + " (branch " +
             std::to_string(sign_) + ")";
  }
  return "?";
}

bool AbsoluteValue::operator==(const AbsoluteValue& o) const {
  return kind_ == o.kind_ && target_ == o.target_ && p_ == o.p_ && sign_ == o.sign_ &&
         (kind_ != AvKind::PolyAdic || pi_ == o.pi_);
}

// --------------------------------------------------------------------------
// LogMagnitude
// --------------------------------------------------------------------------

LogMagnitude LogMagnitude::exact_zero(mpfr_prec_t prec) {
  LogMagnitude m{Interval::exact_zero(prec)};
  m.terms_ = Terms{};
  return m;
}

Interval LogMagnitude::eval_terms(const Terms& t, mpfr_prec_t prec) {
  Interval acc = Interval::exact_zero(prec);
  for (const auto& [base, coeff] : t) {
    if (sgn(coeff) == 0) continue;
    if (base == 1)
      acc = acc.add(Interval::from_mpq(coeff, prec));
    else
      acc = acc.add(Interval::log_of_integer(base, prec).mul_mpq(coeff));
  }
  return acc;
}

LogMagnitude LogMagnitude::from_terms(Terms terms, mpfr_prec_t prec) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (sgn(it->second) == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  LogMagnitude m{eval_terms(terms, prec)};
  m.terms_ = std::move(terms);
  return m;
}

LogMagnitude LogMagnitude::from_interval(Interval iv) { return LogMagnitude{std::move(iv)}; }

LogMagnitude LogMagnitude::from_valuation(const mpz_class& v, std::int64_t base, mpfr_prec_t prec) {
  Terms t;
  if (base == 0)
    t[1] = mpq_class(-v);
  else
    t[base] = mpq_class(-v);
  LogMagnitude m = from_terms(std::move(t), prec);
  m.valuation_ = v;
  return m;
}

void LogMagnitude::set_provenance(AbsoluteValue av, FieldElement x) {
  provenance_ = std::make_shared<const std::pair<AbsoluteValue, FieldElement>>(std::move(av), std::move(x));
}

LogMagnitude LogMagnitude::refine(mpfr_prec_t extra_bits) const {
  const mpfr_prec_t target = iv_.precision() + extra_bits;
  if (terms_) {
    LogMagnitude m{eval_terms(*terms_, target).intersect(iv_)};
    m.terms_ = terms_;
    m.valuation_ = valuation_;
    m.provenance_ = provenance_;
    return m;
  }
  if (provenance_) {
    LogMagnitude fresh = provenance_->first.eval(provenance_->second, target);
    LogMagnitude m{fresh.interval().intersect(iv_)};
    m.terms_ = fresh.terms_;
    m.valuation_ = fresh.valuation_;
    m.provenance_ = provenance_;
    return m;
  }
  return *this;  // fixed enclosure; "narrower or equal" allows equal
}

LogMagnitude LogMagnitude::add(const LogMagnitude& o) const {
  LogMagnitude m{iv_.add(o.iv_)};
  if (terms_ && o.terms_) {
    Terms t = *terms_;
    for (const auto& [b, c] : *o.terms_) {
      auto [it, inserted] = t.emplace(b, c);
      if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t.erase(it);
      }
    }
    m.terms_ = std::move(t);
  }
  return m;
}

LogMagnitude LogMagnitude::sub(const LogMagnitude& o) const { return add(o.negated()); }

LogMagnitude LogMagnitude::negated() const {
  LogMagnitude m{iv_.negated()};
  if (terms_) {
    Terms t;
    for (const auto& [b, c] : *terms_) t[b] = -c;
    m.terms_ = std::move(t);
  }
  if (valuation_) m.valuation_ = -*valuation_;
  return m;
}

LogMagnitude LogMagnitude::mul_mpq(const mpq_class& q) const {
  LogMagnitude m{iv_.mul_mpq(q)};
  if (terms_) {
    Terms t;
    if (sgn(q) != 0)
      for (const auto& [b, c] : *terms_) t[b] = c * q;
    m.terms_ = std::move(t);
  }
  return m;
}

LogMagnitude::Sign LogMagnitude::certify_sign(mpfr_prec_t max_prec) const {
  if (terms_) {
    if (terms_->empty()) return Sign::Zero;
    // A nonempty reduced combination of 1 and logs of distinct integers >= 2
    // can still be zero (e.g. log 4 vs 2 log 2), so decide by interval,
    // refining as needed; multiplicatively dependent bases are collapsed by
    // the caller in practice.
    LogMagnitude cur = *this;
    for (;;) {
      if (cur.iv_.certainly_positive()) return Sign::Positive;
      if (cur.iv_.certainly_negative()) return Sign::Negative;
      if (cur.iv_.precision() >= max_prec) return Sign::Unknown;
      cur = cur.refine(cur.iv_.precision());
    }
  }
  LogMagnitude cur = *this;
  for (;;) {
    if (cur.iv_.certainly_positive()) return Sign::Positive;
    if (cur.iv_.certainly_negative()) return Sign::Negative;
    if (!provenance_ || cur.iv_.precision() >= max_prec) return Sign::Unknown;
    cur = cur.refine(cur.iv_.precision());
  }
}

LogMagnitude::Sign LogMagnitude::compare(const LogMagnitude& a, const LogMagnitude& b,
                                         mpfr_prec_t max_prec) {
  return a.sub(b).certify_sign(max_prec);
}

LogMagnitude LogMagnitude::abs() const {
  Sign s = certify_sign();
  switch (s) {
    case Sign::Zero:
      return LogMagnitude::exact_zero(iv_.precision());
    case Sign::Negative:
      return negated();
    case Sign::Positive:
      return *this;
    case Sign::Unknown: {
      LogMagnitude m{iv_.abs()};
      return m;  // enclosure only; exact form lost
    }
  }
  return *this;
}

LogMagnitude LogMagnitude::max(const LogMagnitude& a, const LogMagnitude& b) {
  Sign s = compare(a, b, 512);
  if (s == Sign::Zero) return a;
  if (s == Sign::Positive) return a;
  if (s == Sign::Negative) return b;
  LogMagnitude m{Interval::max(a.iv_, b.iv_)};
  return m;
}

LogMagnitude LogMagnitude::clamped_nonnegative() const {
  if (!iv_.contains_zero() || terms_) return *this;
  Interval z = Interval::exact_zero(iv_.precision());
  LogMagnitude m{Interval::max(iv_, z)};
  m.provenance_ = provenance_;
  return m;
}

std::string LogMagnitude::to_string() const {
  std::string s = iv_.brief();
  if (valuation_) s += " (v=" + valuation_->get_str() + ")";
  return s;
}

}  // namespace mgt
