#pragma once

#include "steg/matrix.hpp"
#include "steg/simd/kernels.hpp"

namespace steg {

// Single-level 2D decomposition. LH holds vertical detail (row differences),
// HL horizontal detail (column differences), HH the diagonal.
struct SubbandSet {
  CoeffMatrix ll;
  CoeffMatrix lh;
  CoeffMatrix hl;
  CoeffMatrix hh;
};

// Orthonormal Haar analysis of every disjoint 2x2 block
// [p00 p01; p10 p11]:
//   LL = (p00+p01+p10+p11)/2   LH = (p00+p01-p10-p11)/2
//   HL = (p00-p01+p10-p11)/2   HH = (p00-p01-p10+p11)/2
// Throws EmptyInput, OddDimension, NonFinite.
SubbandSet dwt2_haar(const CoeffMatrix& plane);
SubbandSet dwt2_haar(const CoeffMatrix& plane, const simd::Kernels& kernels);

// Exact inverse of dwt2_haar. Throws ShapeMismatch, EmptyInput.
CoeffMatrix idwt2_haar(const SubbandSet& bands);
CoeffMatrix idwt2_haar(const SubbandSet& bands, const simd::Kernels& kernels);

// Orthonormal type-II DCT over the whole matrix, with the alpha
// normalization applied per dimension so non-square inputs are supported.
// Evaluated separably as B_rows * X * B_cols^T. Throws EmptyInput, NonFinite.
CoeffMatrix dct2(const CoeffMatrix& m);
CoeffMatrix dct2(const CoeffMatrix& m, const simd::Kernels& kernels);

CoeffMatrix idct2(const CoeffMatrix& c);
CoeffMatrix idct2(const CoeffMatrix& c, const simd::Kernels& kernels);

// n x n orthonormal DCT-II basis: row u holds alpha(u) cos(pi (2x+1) u / 2n).
CoeffMatrix dct_basis(std::size_t n);

}  // namespace steg
