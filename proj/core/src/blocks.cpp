// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "mgt/blocks.hpp"

#include <algorithm>

#include "dense_linalg.hpp"

namespace mgt {

using detail::Mat;

namespace {

void check_square_family(const std::vector<SquareMatrix>& gens) {
  if (gens.empty()) throw Error("empty matrix family");
  for (const auto& g : gens)
    if (!(g.field() == gens.front().field()) || g.dim() != gens.front().dim())
      throw FieldMismatchError("matrix family must share field and dimension");
}

void check_pairwise_commuting(const std::vector<SquareMatrix>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].commutes_with(gens[j]))
        throw CommutativityError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                 " do not commute");
}

// Restriction of m to the invariant subspace spanned by the columns of basis
// (n x k): solves m * basis = basis * r for the k x k matrix r.
Mat restrict_to_subspace(const SquareMatrix& m, const Mat& basis) {
  const FieldDescriptor& f = m.field();
  const int n = basis.rows;
  const int k = basis.cols;
  Mat mb = Mat::zero(f, n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      FieldElement acc = FieldElement::zero(f);
      for (int l = 0; l < n; ++l) acc = acc + m.at(i, l) * basis.at(l, j);
      mb.at(i, j) = acc;
    }
  Mat r = Mat::zero(f, k, k);
  for (int j = 0; j < k; ++j) {
    std::vector<FieldElement> rhs;
    rhs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rhs.push_back(mb.at(i, j));
    std::vector<FieldElement> x = detail::solve(basis, rhs);
    for (int i = 0; i < k; ++i) r.at(i, j) = x[static_cast<std::size_t>(i)];
  }
  return r;
}

SquareMatrix mat_to_square(const Mat& m) {
  return SquareMatrix(m.e.front().field(), m.rows, m.e);
}

// One common eigenvector of a commuting family (coordinates of the ambient
// space of the family). Requires each restriction's characteristic polynomial
// to have a root in the field.
std::vector<FieldElement> common_eigenvector(const std::vector<SquareMatrix>& mats) {
  const FieldDescriptor& f = mats.front().field();
  const int n = mats.front().dim();
  // Current subspace, initially everything.
  Mat basis = Mat::zero(f, n, n);
  for (int i = 0; i < n; ++i) basis.at(i, i) = FieldElement::one(f);

  for (const auto& m : mats) {
    if (basis.cols == 1) break;
    Mat r = restrict_to_subspace(m, basis);
    SquareMatrix rs = mat_to_square(r);
    RootExtraction roots = extract_roots(char_poly(rs));
    if (roots.roots.empty())
      throw NeedsExtensionError("no eigenvalue in the field: characteristic polynomial " +
                                fpoly_to_string(char_poly(rs)) + " has no root in " + f.to_string());
    const FieldElement& lambda = roots.roots.front().first;
    // Eigenspace of the restriction.
    Mat shifted = r;
    for (int i = 0; i < shifted.rows; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
    auto ker = detail::kernel_basis(shifted);
    if (ker.empty()) throw Error("eigenvalue without eigenvector");
    // Map kernel coordinates back to ambient coordinates.
    Mat next = Mat::zero(f, n, static_cast<int>(ker.size()));
    for (std::size_t kv = 0; kv < ker.size(); ++kv)
      for (int i = 0; i < n; ++i) {
        FieldElement acc = FieldElement::zero(f);
        for (int j = 0; j < basis.cols; ++j) acc = acc + basis.at(i, j) * ker[kv][static_cast<std::size_t>(j)];
        next.at(i, static_cast<int>(kv)) = acc;
      }
    basis = std::move(next);
  }
  std::vector<FieldElement> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(basis.at(i, 0));
  return v;
}

SquareMatrix conjugate(const SquareMatrix& p, const SquareMatrix& g, const SquareMatrix& p_inv) {
  return p * g * p_inv;
}

// Recursive simultaneous triangularization; returns P with P g P^-1 upper
// triangular for all inputs.
SquareMatrix triangularize_rec(const std::vector<SquareMatrix>& gens) {
  const FieldDescriptor& f = gens.front().field();
  const int n = gens.front().dim();
  if (n == 1) return SquareMatrix::identity(f, 1);

  std::vector<FieldElement> v = common_eigenvector(gens);
  Mat q = detail::complete_basis(f, {v}, n);
  SquareMatrix qs = mat_to_square(q);
  SquareMatrix qs_inv = qs.inverse();

  // In the new basis each generator is [[lambda, *], [0, G']]; recurse on G'.
  std::vector<SquareMatrix> sub;
  sub.reserve(gens.size());
  for (const auto& g : gens) {
    SquareMatrix t = qs_inv * g * qs;
    std::vector<FieldElement> e;
    e.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) e.push_back(t.at(i, j));
    sub.emplace_back(f, n - 1, std::move(e));
  }
  SquareMatrix p_sub = triangularize_rec(sub);

  // P = diag(1, P_sub) * Q^-1.
  SquareMatrix embed = SquareMatrix::identity(f, n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) embed.at(i + 1, j + 1) = p_sub.at(i, j);
  return embed * qs_inv;
}

}  // namespace

std::vector<FieldElement> TriangularForm::diagonal(std::size_t i) const {
  std::vector<FieldElement> d;
  const SquareMatrix& t = transformed.at(i);
  d.reserve(static_cast<std::size_t>(t.dim()));
  for (int j = 0; j < t.dim(); ++j) d.push_back(t.at(j, j));
  return d;
}

TriangularForm triangularize_commuting(const std::vector<SquareMatrix>& gens) {
  check_square_family(gens);
  check_pairwise_commuting(gens);

  TriangularForm out;
  const FieldDescriptor& f = gens.front().field();
  const int n = gens.front().dim();

  bool already = std::all_of(gens.begin(), gens.end(),
                             [](const SquareMatrix& g) { return g.is_upper_triangular(); });
  SquareMatrix p = already ? SquareMatrix::identity(f, n) : triangularize_rec(gens);
  SquareMatrix p_inv = p.inverse();

  out.basis_change = p;
  out.basis_change_inv = p_inv;
  for (const auto& g : gens) {
    SquareMatrix t = conjugate(p, g, p_inv);
    if (!t.is_upper_triangular())
      throw Error("internal: triangularization produced a non-triangular matrix");
    out.transformed.push_back(std::move(t));
  }
  return out;
}

int BlockDecomposition::block_start(int j) const {
  int s = 0;
  for (int i = 0; i < j; ++i) s += block_dims[static_cast<std::size_t>(i)];
  return s;
}

BlockDecomposition central_block_split(const std::vector<SquareMatrix>& ambient_gens,
                                       const std::vector<SquareMatrix>& central_gens) {
  check_square_family(central_gens);
  if (!ambient_gens.empty()) check_square_family(ambient_gens);
  const FieldDescriptor& f = central_gens.front().field();
  const int n = central_gens.front().dim();
  for (const auto& a : central_gens)
    for (const auto& g : ambient_gens)
      if (!a.commutes_with(g))
        throw CentralityError("central generator does not commute with an ambient generator");
  check_pairwise_commuting(central_gens);

  // Refine blocks until every central generator has a single eigenvalue on
  // each block. Blocks are column bases of invariant subspaces.
  std::vector<Mat> blocks;
  {
    Mat full = Mat::zero(f, n, n);
    for (int i = 0; i < n; ++i) full.at(i, i) = FieldElement::one(f);
    blocks.push_back(std::move(full));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : central_gens) {
      std::vector<Mat> next;
      for (const auto& blk : blocks) {
        Mat r = restrict_to_subspace(a, blk);
        SquareMatrix rs = mat_to_square(r);
        std::vector<std::pair<FieldElement, int>> roots;
        try {
          roots = split_roots(char_poly(rs));
        } catch (const NeedsExtensionError& e) {
          throw NeedsExtensionError(std::string("splitting field unavailable: ") + e.what());
        }
        if (roots.size() <= 1) {
          next.push_back(blk);
          continue;
        }
        // Split into generalized eigenspaces of the restriction.
        changed = true;
        int total = 0;
        for (const auto& [lambda, mult] : roots) {
          Mat shifted = r;
          for (int i = 0; i < shifted.rows; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
          // (r - lambda)^dim
          Mat power = shifted;
          for (int e = 1; e < r.rows; ++e) power = detail::mat_mul(power, shifted);
          auto ker = detail::kernel_basis(power);
          if (ker.empty()) throw Error("internal: empty generalized eigenspace");
          Mat sub = Mat::zero(f, n, static_cast<int>(ker.size()));
          for (std::size_t kv = 0; kv < ker.size(); ++kv)
            for (int i = 0; i < n; ++i) {
              FieldElement acc = FieldElement::zero(f);
              for (int j = 0; j < blk.cols; ++j)
                acc = acc + blk.at(i, j) * ker[kv][static_cast<std::size_t>(j)];
              sub.at(i, static_cast<int>(kv)) = acc;
            }
          total += sub.cols;
          next.push_back(std::move(sub));
        }
        if (total != blk.cols) throw Error("internal: generalized eigenspaces do not fill the block");
      }
      blocks = std::move(next);
    }
  }

  // Inside each block, triangularize the restrictions of the central family.
  std::vector<Mat> final_cols;
  std::vector<int> dims;
  for (const auto& blk : blocks) {
    std::vector<SquareMatrix> restr;
    restr.reserve(central_gens.size());
    for (const auto& a : central_gens) restr.push_back(mat_to_square(restrict_to_subspace(a, blk)));
    TriangularForm tf = triangularize_commuting(restr);
    // New block columns: blk * T^-1.
    Mat cols = Mat::zero(f, n, blk.cols);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < blk.cols; ++j) {
        FieldElement acc = FieldElement::zero(f);
        for (int k = 0; k < blk.cols; ++k)
          acc = acc + blk.at(i, k) * tf.basis_change_inv.at(k, j);
        cols.at(i, j) = acc;
      }
    final_cols.push_back(std::move(cols));
    dims.push_back(blk.cols);
  }

  // Assemble the global change of basis.
  Mat b = Mat::zero(f, n, n);
  int col = 0;
  for (const auto& cols : final_cols)
    for (int j = 0; j < cols.cols; ++j, ++col)
      for (int i = 0; i < n; ++i) b.at(i, col) = cols.at(i, j);
  SquareMatrix basis = mat_to_square(b);
  SquareMatrix basis_inv = basis.inverse();

  BlockDecomposition dec;
  dec.block_dims = dims;
  dec.basis_change = basis_inv;  // P = B^-1 so that P g P^-1 = B^-1 g B
  dec.basis_change_inv = basis;

  // Verify the advertised structure exactly.
  auto check_block_diagonal = [&](const SquareMatrix& g) {
    SquareMatrix t = basis_inv * g * basis;
    int start = 0;
    for (int bd : dims) {
      for (int i = start; i < start + bd; ++i)
        for (int j = 0; j < n; ++j)
          if ((j < start || j >= start + bd) && !t.at(i, j).is_zero_elem())
            throw BlockStructureError("matrix does not preserve the block decomposition");
      start += bd;
    }
    return t;
  };
  for (const auto& g : ambient_gens) check_block_diagonal(g);
  dec.block_eigenvalues.resize(central_gens.size());
  for (std::size_t ai = 0; ai < central_gens.size(); ++ai) {
    SquareMatrix t = check_block_diagonal(central_gens[ai]);
    int start = 0;
    for (int bd : dims) {
      for (int i = start; i < start + bd; ++i)
        for (int j = start; j < i; ++j)
          if (!t.at(i, j).is_zero_elem())
            throw Error("internal: central block is not upper triangular");
      const FieldElement mu = t.at(start, start);
      for (int i = start; i < start + bd; ++i)
        if (!(t.at(i, i) == mu)) throw Error("internal: central block diagonal is not constant");
      dec.block_eigenvalues[ai].push_back(mu);
      start += bd;
    }
  }
  return dec;
}

std::vector<FieldElement> block_determinants(const BlockDecomposition& dec, const SquareMatrix& g) {
  SquareMatrix t = dec.basis_change * g * dec.basis_change_inv;
  const int n = t.dim();
  int start = 0;
  std::vector<FieldElement> dets;
  for (int bd : dec.block_dims) {
    for (int i = start; i < start + bd; ++i)
      for (int j = 0; j < n; ++j)
        if ((j < start || j >= start + bd) && !t.at(i, j).is_zero_elem())
          throw BlockStructureError("matrix does not preserve the block decomposition");
    std::vector<FieldElement> e;
    e.reserve(static_cast<std::size_t>(bd) * bd);
    for (int i = start; i < start + bd; ++i)
      for (int j = start; j < start + bd; ++j) e.push_back(t.at(i, j));
    dets.push_back(SquareMatrix(t.field(), bd, std::move(e)).determinant());
    start += bd;
  }
  return dets;
}

}  // namespace mgt
