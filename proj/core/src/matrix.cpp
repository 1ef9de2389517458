// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "mgt/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace mgt {

SquareMatrix::SquareMatrix(FieldDescriptor field, int dim, std::vector<FieldElement> row_major)
    : field_(std::move(field)), dim_(dim), e_(std::move(row_major)) {
  if (dim_ <= 0) throw Error("matrix dimension must be positive");
  if (e_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw Error("matrix entry count does not match dimension");
  for (const FieldElement& x : e_)
    if (!(x.field() == field_)) throw FieldMismatchError("matrix entry in the wrong field");
}

SquareMatrix SquareMatrix::identity(const FieldDescriptor& f, int dim) {
  std::vector<FieldElement> e(static_cast<std::size_t>(dim) * dim, FieldElement::zero(f));
  for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] = FieldElement::one(f);
  return SquareMatrix(f, dim, std::move(e));
}

SquareMatrix SquareMatrix::from_rows(const FieldDescriptor& f,
                                     const std::vector<std::vector<FieldElement>>& rows) {
  const int d = static_cast<int>(rows.size());
  std::vector<FieldElement> e;
  e.reserve(static_cast<std::size_t>(d) * d);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != d) throw Error("ragged matrix rows");
    for (const auto& x : r) e.push_back(x);
  }
  return SquareMatrix(f, d, std::move(e));
}

SquareMatrix SquareMatrix::parse_entries(const FieldDescriptor& f, int dim,
                                         const std::vector<std::string>& entries) {
  if (entries.size() != static_cast<std::size_t>(dim) * dim)
    throw ParseError("matrix entry count does not match dimension");
  std::vector<FieldElement> e;
  e.reserve(entries.size());
  for (const std::string& s : entries) e.push_back(FieldElement::parse(f, s));
  return SquareMatrix(f, dim, std::move(e));
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  if (!(field_ == o.field_) || dim_ != o.dim_) throw FieldMismatchError("matrix product shape/field mismatch");
  std::vector<FieldElement> r(e_.size(), FieldElement::zero(field_));
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero_elem()) continue;
      for (int j = 0; j < dim_; ++j) {
        const FieldElement& bkj = o.at(k, j);
        if (bkj.is_zero_elem()) continue;
        std::size_t idx = static_cast<std::size_t>(i) * dim_ + j;
        r[idx] = r[idx] + aik * bkj;
      }
    }
  return SquareMatrix(field_, dim_, std::move(r));
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
  if (!(field_ == o.field_) || dim_ != o.dim_) throw FieldMismatchError("matrix sum shape/field mismatch");
  std::vector<FieldElement> r;
  r.reserve(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.push_back(e_[i] + o.e_[i]);
  return SquareMatrix(field_, dim_, std::move(r));
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
  if (!(field_ == o.field_) || dim_ != o.dim_) throw FieldMismatchError("matrix sum shape/field mismatch");
  std::vector<FieldElement> r;
  r.reserve(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.push_back(e_[i] - o.e_[i]);
  return SquareMatrix(field_, dim_, std::move(r));
}

bool SquareMatrix::operator==(const SquareMatrix& o) const {
  if (!(field_ == o.field_) || dim_ != o.dim_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

FieldElement SquareMatrix::determinant() const {
  // Gaussian elimination with exact division.
  std::vector<FieldElement> a = e_;
  auto el = [&](int i, int j) -> FieldElement& { return a[static_cast<std::size_t>(i) * dim_ + j]; };
  FieldElement det = FieldElement::one(field_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (!el(r, col).is_zero_elem()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return FieldElement::zero(field_);
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) std::swap(el(pivot, j), el(col, j));
      det = -det;
    }
    det = det * el(col, col);
    FieldElement inv = el(col, col).inverse();
    for (int r = col + 1; r < dim_; ++r) {
      if (el(r, col).is_zero_elem()) continue;
      FieldElement factor = el(r, col) * inv;
      for (int j = col; j < dim_; ++j) el(r, j) = el(r, j) - factor * el(col, j);
    }
  }
  return det;
}

SquareMatrix SquareMatrix::inverse() const {
  std::vector<FieldElement> a = e_;
  SquareMatrix inv = identity(field_, dim_);
  auto el = [&](int i, int j) -> FieldElement& { return a[static_cast<std::size_t>(i) * dim_ + j]; };
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (!el(r, col).is_zero_elem()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrixError("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < dim_; ++j) {
        std::swap(el(pivot, j), el(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    FieldElement piv_inv = el(col, col).inverse();
    for (int j = 0; j < dim_; ++j) {
      el(col, j) = el(col, j) * piv_inv;
      inv.at(col, j) = inv.at(col, j) * piv_inv;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col || el(r, col).is_zero_elem()) continue;
      FieldElement factor = el(r, col);
      for (int j = 0; j < dim_; ++j) {
        el(r, j) = el(r, j) - factor * el(col, j);
        inv.at(r, j) = inv.at(r, j) - factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

SquareMatrix SquareMatrix::pow(const mpz_class& e) const {
  if (sgn(e) < 0) return inverse().pow(-e);
  SquareMatrix acc = identity(field_, dim_);
  SquareMatrix base = *this;
  mpz_class k = e;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    k >>= 1;
    if (sgn(k) > 0) base = base * base;
  }
  return acc;
}

bool SquareMatrix::is_identity() const { return *this == identity(field_, dim_); }

bool SquareMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero_elem()) return false;
  return true;
}

bool SquareMatrix::is_upper_triangular() const {
  for (int i = 1; i < dim_; ++i)
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_zero_elem()) return false;
  return true;
}

bool SquareMatrix::commutes_with(const SquareMatrix& o) const { return (*this * o) == (o * *this); }

std::string SquareMatrix::canonical_key() const {
  std::string s = field_.to_string();
  s += '#';
  s += std::to_string(dim_);
  for (const auto& x : e_) {
    s += '|';
    s += x.to_string();
  }
  return s;
}

std::string SquareMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < dim_; ++i) {
    os << "[";
    for (int j = 0; j < dim_; ++j) {
      os << at(i, j).to_string();
      if (j + 1 < dim_) os << ", ";
    }
    os << "]";
    if (i + 1 < dim_) os << ", ";
  }
  os << "]";
  return os.str();
}

// --------------------------------------------------------------------------
// Characteristic polynomial: determinant of xI - M over F[x] by column-subset
// expansion (ring operations only, so it works in any characteristic).
// --------------------------------------------------------------------------

FPoly char_poly(const SquareMatrix& m) {
  const int d = m.dim();
  const FieldDescriptor& f = m.field();
  const FieldElement zero = FieldElement::zero(f);
  const FieldElement one = FieldElement::one(f);

  // Entries of xI - M as degree-<=1 polynomials.
  std::vector<FPoly> entry(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<FieldElement> c;
      c.push_back(-m.at(i, j));
      if (i == j) c.push_back(one);
      entry[static_cast<std::size_t>(i) * d + j] = FPoly(std::move(c));
    }

  // D[S] = det of the submatrix with rows S and columns 0..|S|-1.
  std::vector<FPoly> dp(std::size_t(1) << d);
  dp[0] = FPoly::constant(one);
  for (std::size_t s = 1; s < dp.size(); ++s) {
    const int col = __builtin_popcountll(s) - 1;
    FPoly acc;
    int parity = 0;
    for (int i = 0; i < d; ++i) {
      if (!(s >> i & 1)) continue;
      const FPoly& e = entry[static_cast<std::size_t>(i) * d + col];
      if (!e.is_zero_poly()) {
        FPoly term = dp[s ^ (std::size_t(1) << i)] * e;
        acc = (parity % 2 == 0) ? acc + term : acc - term;
      }
      ++parity;
    }
    dp[s] = std::move(acc);
  }
  FPoly p = dp.back();
  // det(xI - M) is monic of degree d by construction.
  return p;
}

bool is_unipotent(const SquareMatrix& m) {
  SquareMatrix n = m - SquareMatrix::identity(m.field(), m.dim());
  SquareMatrix acc = n;
  for (int i = 1; i < m.dim(); ++i) {
    if (acc.is_zero()) return true;
    acc = acc * n;
  }
  return acc.is_zero();
}

std::optional<long> finite_order(const SquareMatrix& m, long bound) {
  SquareMatrix acc = m;
  for (long k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------
// virtually_unipotent
// --------------------------------------------------------------------------

namespace {

// Euler phi for small m.
long euler_phi(long m) {
  long r = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

// All eigenvalues of a rational matrix are roots of unity iff repeatedly
// stripping gcd(c, R) from the characteristic polynomial c exhausts it, where
// R = prod_{phi(m) <= d} (x^m - 1) collects every possible cyclotomic factor.
bool all_eigenvalues_roots_of_unity_q(const SquareMatrix& m) {
  FPoly c = char_poly(m);
  const FieldDescriptor& f = m.field();
  const int d = m.dim();
  FPoly big = FPoly::constant(FieldElement::one(f));
  // Bound: phi(m) >= sqrt(m/2), so phi(m) <= d forces m <= 2 d^2 + 1.
  for (long mm = 1; mm <= 2L * d * d + 1; ++mm) {
    if (euler_phi(mm) > d) continue;
    std::vector<FieldElement> xm(static_cast<std::size_t>(mm) + 1, FieldElement::zero(f));
    xm[0] = -FieldElement::one(f);
    xm[static_cast<std::size_t>(mm)] = FieldElement::one(f);
    big = big * FPoly(std::move(xm));
  }
  for (int pass = 0; pass <= d; ++pass) {
    if (c.degree() <= 0) return true;
    FPoly g = gcd(c, big);
    if (g.degree() <= 0) return false;
    c = divmod(c, g).first;
  }
  return c.degree() <= 0;
}

}  // namespace

VirtuallyUnipotentResult virtually_unipotent(const SquareMatrix& m, long bound) {
  if (bound < 1) throw Error("virtually_unipotent bound must be >= 1");
  VirtuallyUnipotentResult res;

  SquareMatrix acc = m;
  for (long k = 1; k <= bound; ++k) {
    if (is_unipotent(acc)) {
      res.status = VirtuallyUnipotentResult::Status::FoundPower;
      res.k = k;
      return res;
    }
    if (k < bound) acc = acc * m;
  }

  const std::int64_t p = m.field().characteristic();
  if (p > 0) {
    // Prop-style probe just past the bound: unipotent parts in character-
    // istic p surface at prime power exponents.
    mpz_class pe(static_cast<long>(p));
    for (int e = 1; e <= 4 && pe <= 4 * mpz_class(bound); ++e) {
      if (pe > bound && is_unipotent(m.pow(pe))) {
        res.status = VirtuallyUnipotentResult::Status::FoundPower;
        res.k = pe.get_si();
        res.note = "prime power probe past bound";
        return res;
      }
      pe *= p;
    }
  }

  if (m.field().family == FieldFamily::Rationals) {
    if (!all_eigenvalues_roots_of_unity_q(m)) {
      res.status = VirtuallyUnipotentResult::Status::ExactNo;
      res.note = "characteristic polynomial has a non-cyclotomic factor";
      return res;
    }
    res.note = "eigenvalues are roots of unity; a unipotent power exists beyond the bound";
  }

  res.status = VirtuallyUnipotentResult::Status::NoneUpToBound;
  res.k = bound;
  return res;
}

std::vector<std::pair<FieldElement, int>> split_roots(const FPoly& p) {
  RootExtraction r = extract_roots(p);
  if (r.nonsplit.degree() > 0)
    throw NeedsExtensionError("polynomial does not split over " + r.nonsplit.leading().field().to_string() +
                              ": remaining factor " + fpoly_to_string(r.nonsplit));
  return r.roots;
}

}  // namespace mgt
