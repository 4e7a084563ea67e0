#pragma once

#include <map>
#include <vector>

#include <Eigen/SparseCore>

#include "hyperlap/simplex.hpp"

namespace hyperlap {

using SpMat = Eigen::SparseMatrix<double>;

// The operators built here are all unsigned shared-neighbor counting
// matrices over a registry, at unit simplex weights:
//
//   L_k        square over k-simplices; diagonal = #neighbors + 1,
//              off-diagonal (i,j) = #simplices adjacent to both i and j
//              (the mediators range over every other dimension).
//   D_{p,r}    binary incidence, rows r-simplices x cols p-simplices,
//              1 iff the p-simplex is a proper subset of the r-simplex.
//   C_{p,r}    cross block: 2*D_{p,r} plus, per mediating dimension
//              q not in {p,r}, the count of q-simplices adjacent to both.
//   L_H        block matrix over all simplices, dimension-major: diagonal
//              blocks L_k, off-diagonal blocks C_{p,r} and transposes.
//
// Entries are held in doubles but are exact small integers, so equality
// tests against counting definitions are legitimate.

/// Binary membership matrix: rows = dim-simplices, cols = vertices.
SpMat vertex_incidence(const SimplexRegistry& reg, int dim);

/// D_{p,r}; requires 0 <= p < r <= max dim (ArgumentError otherwise).
SpMat build_incidence(const SimplexRegistry& reg, int p, int r);

/// Single-mediator Gram term of L_k: contributions through dimension l != k.
SpMat cross_dim_term(const SimplexRegistry& reg, int k, int l);

/// L_k = I + sum over l != k of cross_dim_term(k, l).
SpMat build_Lk(const SimplexRegistry& reg, int k);

/// Cross block C_{p,r} (rows r-simplices, cols p-simplices), p < r.
SpMat build_cross_block(const SimplexRegistry& reg, int p, int r);

/// The full block Laplacian over all simplices.
SpMat assemble_LH(const SimplexRegistry& reg);

enum class Direction { Up, Down, Both };

/// Classical weighted up/down Laplacians of a simplicial complex:
///   up_i   = W_i^-1 D_i^T W_{i+1} D_i          (D_i = incidence(i, i+1))
///   down_i = D_{i-1} W_{i-1}^-1 D_{i-1}^T W_i
/// PreconditionError when the registry is not closed under faces for the
/// dimensions involved; the missing face is named in the message.
SpMat build_updown(const SimplexRegistry& reg, int i, Direction dir);

/// Caches incidence matrices so that repeated block builds share work.
/// Not thread-safe while filling; the produced matrices are plain values.
class LaplacianBuilder {
public:
    explicit LaplacianBuilder(const SimplexRegistry& reg) : reg_(&reg) {}

    const SpMat& incidence(int p, int r);
    SpMat lk(int k);
    SpMat cross_block(int p, int r);
    SpMat lh();

private:
    const SimplexRegistry* reg_;
    std::map<std::pair<int, int>, SpMat> incidence_cache_;
};

} // namespace hyperlap
