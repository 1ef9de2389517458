// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Root extraction over the four implemented fields. Anything the candidate
// searches cannot reach is returned as a nonsplit factor, never approximated.

#include <algorithm>
#include <map>

#include "mgt/matrix.hpp"

namespace mgt {

namespace {

// ---------- integer helpers ----------

struct IntFactorization {
  std::map<mpz_class, int> primes;
  mpz_class leftover{1};  // composite part beyond the trial division cap
};

IntFactorization factor_integer(mpz_class n, long cap = 1000000) {
  IntFactorization f;
  n = abs(n);
  if (n == 0) return f;
  for (mpz_class p = 2; p * p <= n && p <= cap; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++f.primes[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 32))
      ++f.primes[n];
    else
      f.leftover = n;
  }
  return f;
}

std::vector<mpz_class> divisors_from_factorization(const IntFactorization& f, std::size_t cap = 4096) {
  std::vector<mpz_class> divs{1};
  auto extend = [&](const mpz_class& p, int mult) {
    std::vector<mpz_class> out;
    out.reserve(divs.size() * (mult + 1));
    for (const auto& d : divs) {
      mpz_class acc = d;
      out.push_back(acc);
      for (int i = 0; i < mult; ++i) {
        acc *= p;
        out.push_back(acc);
      }
    }
    divs = std::move(out);
  };
  for (const auto& [p, m] : f.primes) {
    extend(p, m);
    if (divs.size() > cap) return divs;  // truncated; search stays a candidate search
  }
  if (f.leftover > 1) extend(f.leftover, 1);
  return divs;
}

std::optional<mpq_class> mpq_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return mpq_class(0);
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den().get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
  return mpq_class(rn) / mpq_class(rd);
}

// ---------- generic peeling ----------

// Divides out (x - root) as often as it divides p; returns multiplicity.
int peel_root(FPoly& p, const FieldElement& root) {
  const FieldDescriptor& f = root.field();
  FPoly lin(std::vector<FieldElement>{-root, FieldElement::one(f)});
  int mult = 0;
  for (;;) {
    auto [q, r] = divmod(p, lin);
    if (!r.is_zero_poly()) return mult;
    p = q;
    ++mult;
  }
}

void sort_roots(std::vector<std::pair<FieldElement, int>>& roots) {
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.first.to_string() < b.first.to_string();
  });
}

// ---------- rationals ----------

std::vector<mpq_class> rational_root_candidates(const FPoly& p) {
  // Clear denominators to an integer polynomial.
  mpz_class den_lcm = 1;
  for (const FieldElement& c : p.coeffs()) {
    mpz_class d = c.rational().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::vector<mpz_class> ic;
  ic.reserve(p.coeffs().size());
  for (const FieldElement& c : p.coeffs()) {
    mpq_class q = c.rational() * mpq_class(den_lcm);
    ic.push_back(q.get_num());
  }
  // candidates +-u/v with u | |a0|, v | |ad|
  const mpz_class a0 = ic.front();
  const mpz_class ad = ic.back();
  std::vector<mpq_class> cands;
  for (const mpz_class& u : divisors_from_factorization(factor_integer(a0)))
    for (const mpz_class& v : divisors_from_factorization(factor_integer(ad))) {
      mpq_class q(u, v);
      q.canonicalize();
      cands.push_back(q);
      cands.push_back(-q);
    }
  std::sort(cands.begin(), cands.end(), [](const mpq_class& a, const mpq_class& b) { return cmp(a, b) < 0; });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const mpq_class& a, const mpq_class& b) { return cmp(a, b) == 0; }),
              cands.end());
  return cands;
}

RootExtraction extract_roots_rationals(FPoly p) {
  RootExtraction out;
  const FieldDescriptor f = p.leading().field();
  // x = 0 first
  if (!p.is_zero_poly() && p[0].is_zero_elem()) {
    FieldElement zero = FieldElement::zero(f);
    int m = peel_root(p, zero);
    out.roots.emplace_back(zero, m);
  }
  bool progress = true;
  while (progress && p.degree() > 0) {
    progress = false;
    for (const mpq_class& cand : rational_root_candidates(p)) {
      FieldElement r = FieldElement::from_rational(f, cand);
      if (p.eval(r).is_zero_elem()) {
        int m = peel_root(p, r);
        out.roots.emplace_back(r, m);
        progress = true;
        break;
      }
    }
  }
  out.nonsplit = p;
  sort_roots(out.roots);
  return out;
}

// ---------- prime fields ----------

RootExtraction extract_roots_prime_field(FPoly p) {
  RootExtraction out;
  const FieldDescriptor f = p.leading().field();
  if (f.p > 100000) throw NeedsExtensionError("exhaustive root search not attempted for p > 1e5");
  for (std::int64_t v = 0; v < f.p && p.degree() > 0; ++v) {
    FieldElement r(f, FpScalar{v, f.p});
    if (p.eval(r).is_zero_elem()) {
      int m = peel_root(p, r);
      out.roots.emplace_back(r, m);
    }
  }
  out.nonsplit = p;
  sort_roots(out.roots);
  return out;
}

// ---------- real quadratic ----------

std::optional<FieldElement> sqrt_in_quadratic(const FieldElement& x) {
  const FieldDescriptor& f = x.field();
  const QuadScalar& s = x.quadratic();
  const mpq_class dd(static_cast<long>(f.d));
  if (sgn(s.b) == 0) {
    if (auto r = mpq_sqrt(s.a)) return FieldElement(f, QuadScalar{*r, mpq_class(0), f.d});
    if (auto r = mpq_sqrt(s.a / dd)) return FieldElement(f, QuadScalar{mpq_class(0), *r, f.d});
    return std::nullopt;
  }
  // (u + v sqrt d)^2 = e + f sqrt d  =>  u^2 = (e +- sqrt(e^2 - f^2 d)) / 2, v = f/(2u)
  mpq_class norm = s.a * s.a - s.b * s.b * dd;
  auto r = mpq_sqrt(norm);
  if (!r) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    mpq_class w = (s.a + (sign == 0 ? *r : mpq_class(-*r))) / 2;
    if (auto u = mpq_sqrt(w)) {
      if (sgn(*u) == 0) continue;
      mpq_class v = s.b / (2 * *u);
      FieldElement cand(f, QuadScalar{*u, v, f.d});
      if (cand * cand == x) return cand;
    }
  }
  return std::nullopt;
}

RootExtraction extract_roots_quadratic(FPoly p) {
  RootExtraction out;
  const FieldDescriptor f = p.leading().field();
  const FieldElement one = FieldElement::one(f);
  const FieldElement two = one + one;

  bool progress = true;
  while (progress && p.degree() > 0) {
    progress = false;
    if (p.degree() == 1) {
      FieldElement r = -p[0] / p[1];
      out.roots.emplace_back(r, peel_root(p, r));
      progress = true;
      continue;
    }
    if (p.degree() == 2) {
      FieldElement b = p[1] / p[2];
      FieldElement c = p[0] / p[2];
      FieldElement disc = b * b - (two + two) * c;
      if (auto sq = sqrt_in_quadratic(disc)) {
        FieldElement r1 = (-b + *sq) / two;
        FieldElement r2 = (-b - *sq) / two;
        out.roots.emplace_back(r1, peel_root(p, r1));
        if (!(r2 == r1) && p.degree() > 0) out.roots.emplace_back(r2, peel_root(p, r2));
        progress = true;
      }
      if (progress) continue;
      break;
    }
    // degree >= 3: rational roots are common roots of the rational and surd
    // coordinate polynomials.
    std::vector<mpq_class> ca, cb;
    bool surd_all_zero = true;
    for (const FieldElement& coeff : p.coeffs()) {
      const QuadScalar& s = coeff.quadratic();
      ca.push_back(s.a);
      cb.push_back(s.b);
      if (sgn(s.b) != 0) surd_all_zero = false;
    }
    FieldDescriptor q = FieldDescriptor::rationals();
    auto lift = [&](const std::vector<mpq_class>& v) {
      std::vector<FieldElement> c;
      for (const auto& x : v) c.emplace_back(q, x);
      return FPoly(std::move(c));
    };
    FPoly pa = lift(ca), pb = lift(cb);
    FPoly g = surd_all_zero ? pa : gcd(pa, pb);
    for (const mpq_class& cand : g.degree() >= 1 ? rational_root_candidates(g) : std::vector<mpq_class>{}) {
      FieldElement r = FieldElement::from_rational(f, cand);
      if (p.eval(r).is_zero_elem()) {
        out.roots.emplace_back(r, peel_root(p, r));
        progress = true;
        break;
      }
    }
  }
  out.nonsplit = p;
  sort_roots(out.roots);
  return out;
}

// ---------- function fields ----------

template <typename K>
struct KtFactorization {
  std::vector<std::pair<Poly<K>, int>> factors;  // monic, pairwise distinct
  bool complete = true;
};

// Roots of a polynomial over the base field k (k = Q or F_p), as base scalars.
std::vector<mpq_class> base_roots(const Poly<mpq_class>& p) {
  std::vector<FieldElement> c;
  FieldDescriptor q = FieldDescriptor::rationals();
  for (const auto& x : p.coeffs()) c.emplace_back(q, x);
  FPoly fp(std::move(c));
  std::vector<mpq_class> out;
  if (fp.degree() < 1) return out;
  for (const auto& [r, m] : extract_roots_rationals(fp).roots)
    for (int i = 0; i < m; ++i) out.push_back(r.rational());
  return out;
}

std::vector<FpScalar> base_roots(const Poly<FpScalar>& p) {
  std::vector<FpScalar> out;
  if (p.degree() < 1) return out;
  const std::int64_t mod = p.leading().p;
  Poly<FpScalar> cur = p;
  for (std::int64_t v = 0; v < mod && cur.degree() > 0; ++v) {
    FpScalar r{v, mod};
    while (cur.degree() > 0 && is_zero(cur.eval(r))) {
      Poly<FpScalar> lin(std::vector<FpScalar>{neg(r), one_like(r)});
      auto [q, rem] = divmod(cur, lin);
      if (!rem.is_zero_poly()) break;
      cur = q;
      out.push_back(r);
    }
  }
  return out;
}

// Enumerate all monic polynomials of a given degree over F_p.
void enumerate_monic(std::int64_t p, int deg, std::vector<Poly<FpScalar>>& out) {
  std::vector<std::int64_t> digits(static_cast<std::size_t>(deg), 0);
  for (;;) {
    std::vector<FpScalar> c;
    for (std::int64_t v : digits) c.push_back(FpScalar{v, p});
    c.push_back(FpScalar{1, p});
    out.push_back(Poly<FpScalar>(std::move(c)));
    int i = 0;
    while (i < deg && ++digits[static_cast<std::size_t>(i)] == p) {
      digits[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == deg) break;
  }
}

template <typename K>
void factor_linear_part(Poly<K>& rest, KtFactorization<K>& out) {
  auto roots = base_roots(rest);
  for (const auto& r : roots) {
    Poly<K> lin(std::vector<K>{neg(r), one_like(r)});
    auto [q, rem] = divmod(rest, lin);
    (void)rem;
    rest = q;
    bool found = false;
    for (auto& [f, m] : out.factors)
      if (f == lin) {
        ++m;
        found = true;
      }
    if (!found) out.factors.emplace_back(lin, 1);
  }
}

KtFactorization<mpq_class> factor_kt(Poly<mpq_class> f) {
  KtFactorization<mpq_class> out;
  factor_linear_part(f, out);
  if (f.degree() >= 1) {
    // Root-free of degree 2 or 3 is irreducible over Q; beyond that the
    // remainder is kept as an atomic divisor candidate.
    out.factors.emplace_back(f.make_monic(), 1);
    if (f.degree() >= 4) out.complete = false;
  }
  return out;
}

KtFactorization<FpScalar> factor_kt(Poly<FpScalar> f) {
  KtFactorization<FpScalar> out;
  factor_linear_part(f, out);
  if (f.degree() >= 2) {
    const std::int64_t p = f.leading().p;
    for (int deg = 2; f.degree() >= 2 * deg;) {
      mpz_class count;
      mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(deg));
      if (count <= 4096) {
        std::vector<Poly<FpScalar>> cands;
        enumerate_monic(p, deg, cands);
        bool divided = false;
        for (const auto& cand : cands) {
          auto [q, r] = divmod(f, cand);
          if (r.is_zero_poly() && !base_roots(cand).size()) {
            f = q;
            bool found = false;
            for (auto& [g, m] : out.factors)
              if (g == cand) {
                ++m;
                found = true;
              }
            if (!found) out.factors.emplace_back(cand, 1);
            divided = true;
            break;
          }
        }
        if (!divided) ++deg;
      } else {
        out.complete = false;
        break;
      }
    }
    if (f.degree() >= 1) out.factors.emplace_back(f.make_monic(), 1);
  }
  return out;
}

template <typename K>
std::vector<Poly<K>> monic_divisors(const KtFactorization<K>& fac, std::size_t cap = 512) {
  std::vector<Poly<K>> divs;
  Poly<K> one;
  if (!fac.factors.empty())
    one = Poly<K>::constant(one_like(fac.factors.front().first.leading()));
  else
    return divs;  // caller handles the constant-only case
  divs.push_back(one);
  for (const auto& [f, m] : fac.factors) {
    std::vector<Poly<K>> next;
    for (const auto& d : divs) {
      Poly<K> acc = d;
      next.push_back(acc);
      for (int i = 0; i < m; ++i) {
        acc = acc * f;
        next.push_back(acc);
      }
    }
    divs = std::move(next);
    if (divs.size() > cap) break;
  }
  return divs;
}

// Roots in k(t) of P via candidates c * u/v; u, v monic divisors of the
// extreme coefficients, the constant c solved for exactly.
template <typename K>
struct FunctionFieldRootSearch {
  const FieldDescriptor& field;

  FieldElement make_elem(Poly<K> num, Poly<K> den) const {
    return FieldElement(field, RatFun<K>{std::move(num), std::move(den)});
  }

  std::optional<FieldElement> find_root(const FPoly& p) const {
    const int deg = p.degree();
    // Clear denominators: common multiple of coefficient denominators.
    Poly<K> common;
    std::vector<RatFun<K>> coeffs;
    for (int i = 0; i <= deg; ++i) {
      const auto& rf = get_ratfun(p[static_cast<std::size_t>(i)]);
      coeffs.push_back(rf);
      if (i == 0)
        common = rf.den;
      else {
        Poly<K> g = gcd(common, rf.den);
        common = divmod(common * rf.den, g).first;
      }
    }
    std::vector<Poly<K>> a;  // integer (polynomial) coefficients
    for (int i = 0; i <= deg; ++i) {
      auto [q, r] = divmod(common, coeffs[static_cast<std::size_t>(i)].den);
      a.push_back(coeffs[static_cast<std::size_t>(i)].num * q);
    }
    if (a.front().is_zero_poly()) {
      // x = 0 is a root
      return make_elem(Poly<K>{}, Poly<K>::constant(one_like(common.leading())));
    }

    auto fac0 = factor_kt(a.front());
    auto facd = factor_kt(a.back());
    auto divs0 = monic_divisors(fac0);
    auto divsd = monic_divisors(facd);
    const K one = one_like(a.front().is_zero_poly() ? a.back().leading() : a.front().leading());
    if (divs0.empty()) divs0.push_back(Poly<K>::constant(one));
    if (divsd.empty()) divsd.push_back(Poly<K>::constant(one));

    for (const auto& u : divs0) {
      for (const auto& v : divsd) {
        if (gcd(u, v).degree() > 0) continue;
        // N(t, c) = sum_i a_i c^i u^i v^(deg-i); collect coefficient
        // polynomials in c per power of t and intersect their root sets.
        std::vector<Poly<K>> t_terms(static_cast<std::size_t>(deg) + 1);
        int max_tdeg = -1;
        for (int i = 0; i <= deg; ++i) {
          t_terms[static_cast<std::size_t>(i)] =
              a[static_cast<std::size_t>(i)] * u.pow(static_cast<unsigned long>(i)) *
              v.pow(static_cast<unsigned long>(deg - i));
          max_tdeg = std::max(max_tdeg, t_terms[static_cast<std::size_t>(i)].degree());
        }
        Poly<K> g;  // gcd over j of g_j(c)
        bool first = true;
        for (int j = 0; j <= max_tdeg; ++j) {
          std::vector<K> gc;
          for (int i = 0; i <= deg; ++i) {
            const auto& tt = t_terms[static_cast<std::size_t>(i)];
            gc.push_back(j <= tt.degree() ? tt[static_cast<std::size_t>(j)] : zero_like(one));
          }
          Poly<K> gj(std::move(gc));
          if (first) {
            g = gj;
            first = false;
          } else {
            g = gcd(g, gj);
          }
          if (g.degree() == 0 && !g.is_zero_poly()) break;
        }
        if (g.is_zero_poly() || g.degree() < 1) continue;
        for (const K& c : base_roots(g)) {
          if (is_zero(c)) continue;
          FieldElement cand = make_elem(u.scaled(c), v);
          if (p.eval(cand).is_zero_elem()) return cand;
        }
      }
    }
    return std::nullopt;
  }

  static const RatFun<K>& get_ratfun(const FieldElement& x);
};

template <>
const RatFun<mpq_class>& FunctionFieldRootSearch<mpq_class>::get_ratfun(const FieldElement& x) {
  return x.rational_function_q();
}
template <>
const RatFun<FpScalar>& FunctionFieldRootSearch<FpScalar>::get_ratfun(const FieldElement& x) {
  return x.rational_function_p();
}

template <typename K>
RootExtraction extract_roots_function_field(FPoly p) {
  RootExtraction out;
  const FieldDescriptor f = p.leading().field();
  FunctionFieldRootSearch<K> search{f};
  while (p.degree() > 0) {
    if (p.degree() == 1) {
      FieldElement r = -p[0] / p[1];
      out.roots.emplace_back(r, peel_root(p, r));
      continue;
    }
    auto root = search.find_root(p);
    if (!root) break;
    out.roots.emplace_back(*root, peel_root(p, *root));
  }
  out.nonsplit = p;
  sort_roots(out.roots);
  return out;
}

}  // namespace

RootExtraction extract_roots(const FPoly& p) {
  if (p.degree() < 1) {
    RootExtraction out;
    out.nonsplit = p;
    return out;
  }
  const FieldDescriptor& f = p.leading().field();
  switch (f.family) {
    case FieldFamily::Rationals:
      return extract_roots_rationals(p);
    case FieldFamily::PrimeField:
      return extract_roots_prime_field(p);
    case FieldFamily::RealQuadratic:
      return extract_roots_quadratic(p);
    case FieldFamily::FunctionField:
      if (f.p == 0) return extract_roots_function_field<mpq_class>(p);
      return extract_roots_function_field<FpScalar>(p);
  }
  throw DescriptorError("unknown field family");
}

}  // namespace mgt
