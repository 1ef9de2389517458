// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MGT_MATRIX_HPP
#define MGT_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "mgt/fields.hpp"

namespace mgt {

// Exact dense square matrix over one of the four fields. Entries are kept in
// canonical form, so equality and the serialization key are exact.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(FieldDescriptor field, int dim, std::vector<FieldElement> row_major);

  static SquareMatrix identity(const FieldDescriptor&, int dim);
  static SquareMatrix from_rows(const FieldDescriptor&,
                                const std::vector<std::vector<FieldElement>>& rows);
  // Entries parsed from canonical strings, row-major.
  static SquareMatrix parse_entries(const FieldDescriptor&, int dim,
                                    const std::vector<std::string>& entries);

  const FieldDescriptor& field() const { return field_; }
  int dim() const { return dim_; }
  const FieldElement& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  FieldElement& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const std::vector<FieldElement>& entries() const { return e_; }

  SquareMatrix operator*(const SquareMatrix&) const;
  SquareMatrix operator+(const SquareMatrix&) const;
  SquareMatrix operator-(const SquareMatrix&) const;
  bool operator==(const SquareMatrix&) const;
  bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

  FieldElement determinant() const;
  SquareMatrix inverse() const;  // throws SingularMatrixError
  SquareMatrix pow(const mpz_class& e) const;

  bool is_identity() const;
  bool is_zero() const;
  bool is_upper_triangular() const;
  bool commutes_with(const SquareMatrix&) const;

  // Exact dedup key: field, dimension and canonical entry strings.
  std::string canonical_key() const;
  std::string to_string() const;

 private:
  FieldDescriptor field_;
  int dim_ = 0;
  std::vector<FieldElement> e_;
};

// Monic characteristic polynomial det(xI - M), exact over the entry field.
FPoly char_poly(const SquareMatrix&);

// (M - I)^d = 0, equivalently all eigenvalues are 1.
bool is_unipotent(const SquareMatrix&);

// Smallest k <= bound with M^k = I.
std::optional<long> finite_order(const SquareMatrix&, long bound);

struct VirtuallyUnipotentResult {
  enum class Status {
    FoundPower,   // smallest k <= bound with M^k unipotent
    NoneUpToBound,  // no such k found; explicitly a bound, not a "no"
    ExactNo       // rationals only: some eigenvalue is not a root of unity
  };
  Status status = Status::NoneUpToBound;
  long k = 0;
  std::string note;
};

// Searches k = 1..bound for M^k unipotent. Over Q additionally runs the exact
// cyclotomic criterion and may return ExactNo. In characteristic p the prime
// powers p^e are probed even past the bound.
VirtuallyUnipotentResult virtually_unipotent(const SquareMatrix&, long bound);

// ---------------------------------------------------------------------------
// Root extraction over the implemented fields (used by triangularization).
// ---------------------------------------------------------------------------

struct RootExtraction {
  std::vector<std::pair<FieldElement, int>> roots;  // (root, multiplicity), canonical order
  FPoly nonsplit;  // remaining factor without roots in the field (constant if fully split)
};

// Extracts the roots of p that lie in its coefficient field.
//   Q:            rational root search on the integer normalization
//   F_p:          exhaustive search
//   Q(sqrt d):    linear/quadratic formulas plus rational candidates from the
//                 norm polynomial
//   k(t):         candidates c * u/v with u, v monic divisors of the extreme
//                 coefficients and c solved for exactly
RootExtraction extract_roots(const FPoly& p);

// Convenience: all roots with multiplicity; throws NeedsExtensionError if the
// polynomial does not split into linear factors over its field.
std::vector<std::pair<FieldElement, int>> split_roots(const FPoly& p);

}  // namespace mgt

#endif  // MGT_MATRIX_HPP
