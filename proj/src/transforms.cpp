#include "steg/transforms.hpp"

#include <cmath>
#include <numbers>

namespace steg {
namespace {

void require_nonempty(const CoeffMatrix& m, const char* what) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(Errc::EmptyInput, std::string(what) + ": input has a zero dimension");
  }
}

void require_finite(const CoeffMatrix& m, const char* what) {
  for (double v : m.values()) {
    if (!std::isfinite(v)) {
      throw Error(Errc::NonFinite, std::string(what) + ": input contains NaN or infinity");
    }
  }
}

CoeffMatrix transpose(const CoeffMatrix& m) {
  CoeffMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

// out = left * in, accumulated row by row with axpy.
CoeffMatrix left_multiply(const CoeffMatrix& left, const CoeffMatrix& in,
                          const simd::Kernels& k) {
  CoeffMatrix out(left.rows(), in.cols(), 0.0);
  for (std::size_t i = 0; i < left.rows(); ++i) {
    double* dst = out.row(i).data();
    for (std::size_t x = 0; x < left.cols(); ++x) {
      k.axpy(left(i, x), in.row(x).data(), dst, in.cols());
    }
  }
  return out;
}

// out = in * right^T, each entry a contiguous dot product.
CoeffMatrix right_multiply_transposed(const CoeffMatrix& in, const CoeffMatrix& right,
                                      const simd::Kernels& k) {
  CoeffMatrix out(in.rows(), right.rows());
  for (std::size_t r = 0; r < in.rows(); ++r) {
    const double* src = in.row(r).data();
    for (std::size_t v = 0; v < right.rows(); ++v) {
      out(r, v) = k.dot(src, right.row(v).data(), in.cols());
    }
  }
  return out;
}

}  // namespace

CoeffMatrix dct_basis(std::size_t n) {
  CoeffMatrix basis(n, n);
  const double dn = static_cast<double>(n);
  const double a0 = std::sqrt(1.0 / dn);
  const double ak = std::sqrt(2.0 / dn);
  for (std::size_t u = 0; u < n; ++u) {
    const double alpha = u == 0 ? a0 : ak;
    for (std::size_t x = 0; x < n; ++x) {
      // (2x+1)u fits exactly in a double for any realistic n.
      const double angle = std::numbers::pi * static_cast<double>((2 * x + 1) * u) / (2.0 * dn);
      basis(u, x) = alpha * std::cos(angle);
    }
  }
  return basis;
}

SubbandSet dwt2_haar(const CoeffMatrix& plane) { return dwt2_haar(plane, simd::active()); }

SubbandSet dwt2_haar(const CoeffMatrix& plane, const simd::Kernels& k) {
  require_nonempty(plane, "dwt2_haar");
  if (plane.rows() % 2 != 0 || plane.cols() % 2 != 0) {
    throw Error(Errc::OddDimension, "dwt2_haar: rows and cols must both be even");
  }
  require_finite(plane, "dwt2_haar");

  const std::size_t hr = plane.rows() / 2;
  const std::size_t hc = plane.cols() / 2;
  SubbandSet out{CoeffMatrix(hr, hc), CoeffMatrix(hr, hc), CoeffMatrix(hr, hc),
                 CoeffMatrix(hr, hc)};
  for (std::size_t i = 0; i < hr; ++i) {
    k.haar_forward_rows(plane.row(2 * i).data(), plane.row(2 * i + 1).data(),
                        out.ll.row(i).data(), out.lh.row(i).data(),
                        out.hl.row(i).data(), out.hh.row(i).data(), hc);
  }
  return out;
}

CoeffMatrix idwt2_haar(const SubbandSet& bands) { return idwt2_haar(bands, simd::active()); }

CoeffMatrix idwt2_haar(const SubbandSet& bands, const simd::Kernels& k) {
  if (!bands.ll.same_shape(bands.lh) || !bands.ll.same_shape(bands.hl) ||
      !bands.ll.same_shape(bands.hh)) {
    throw Error(Errc::ShapeMismatch, "idwt2_haar: subbands differ in shape");
  }
  require_nonempty(bands.ll, "idwt2_haar");

  const std::size_t hr = bands.ll.rows();
  const std::size_t hc = bands.ll.cols();
  CoeffMatrix out(2 * hr, 2 * hc);
  for (std::size_t i = 0; i < hr; ++i) {
    k.haar_inverse_rows(bands.ll.row(i).data(), bands.lh.row(i).data(),
                        bands.hl.row(i).data(), bands.hh.row(i).data(),
                        out.row(2 * i).data(), out.row(2 * i + 1).data(), hc);
  }
  return out;
}

CoeffMatrix dct2(const CoeffMatrix& m) { return dct2(m, simd::active()); }

CoeffMatrix dct2(const CoeffMatrix& m, const simd::Kernels& k) {
  require_nonempty(m, "dct2");
  require_finite(m, "dct2");
  const CoeffMatrix row_basis = dct_basis(m.rows());
  const CoeffMatrix col_basis = dct_basis(m.cols());
  // C = B_M * X * B_N^T
  return left_multiply(row_basis, right_multiply_transposed(m, col_basis, k), k);
}

CoeffMatrix idct2(const CoeffMatrix& c) { return idct2(c, simd::active()); }

CoeffMatrix idct2(const CoeffMatrix& c, const simd::Kernels& k) {
  require_nonempty(c, "idct2");
  require_finite(c, "idct2");
  const CoeffMatrix row_basis_t = transpose(dct_basis(c.rows()));
  const CoeffMatrix col_basis_t = transpose(dct_basis(c.cols()));
  // X = B_M^T * C * B_N
  return left_multiply(row_basis_t, right_multiply_transposed(c, col_basis_t, k), k);
}

}  // namespace steg
