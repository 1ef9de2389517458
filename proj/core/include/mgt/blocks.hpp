// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MGT_BLOCKS_HPP
#define MGT_BLOCKS_HPP

#include <vector>

#include "mgt/matrix.hpp"

namespace mgt {

// Result of simultaneously upper-triangularizing a commuting family:
// basis_change * g * basis_change^-1 is upper triangular for every input g.
struct TriangularForm {
  SquareMatrix basis_change;               // P
  SquareMatrix basis_change_inv;           // P^-1
  std::vector<SquareMatrix> transformed;   // P g P^-1, in input order

  // d diagonal entries of the i-th transformed generator; these are its
  // eigenvalues with multiplicity, and position-wise they define a
  // homomorphism from the generated subgroup to (F*)^d.
  std::vector<FieldElement> diagonal(std::size_t i) const;
};

// Simultaneous triangularization of pairwise commuting matrices whose
// characteristic polynomials split over the implemented field.
// Throws CommutativityError / NeedsExtensionError.
TriangularForm triangularize_commuting(const std::vector<SquareMatrix>& gens);

// G-invariant block refinement induced by a central commuting family: in the
// new basis every central generator is block diagonal with each block upper
// triangular with constant diagonal, and every ambient generator is block
// diagonal with the same block sizes.
struct BlockDecomposition {
  std::vector<int> block_dims;             // d_1..d_k in order
  SquareMatrix basis_change;               // P
  SquareMatrix basis_change_inv;           // P^-1
  // block_eigenvalues[i][j]: the single eigenvalue of central generator i on
  // block j (the constant diagonal value).
  std::vector<std::vector<FieldElement>> block_eigenvalues;

  int block_count() const { return static_cast<int>(block_dims.size()); }
  int block_start(int j) const;
};

BlockDecomposition central_block_split(const std::vector<SquareMatrix>& ambient_gens,
                                       const std::vector<SquareMatrix>& central_gens);

// Verifies that g is block diagonal under dec and returns the per-block
// determinants (det_1(g), ..., det_k(g)).
std::vector<FieldElement> block_determinants(const BlockDecomposition& dec, const SquareMatrix& g);

}  // namespace mgt

#endif  // MGT_BLOCKS_HPP
