#include "lieclass/connection.hpp"

namespace lieclass {

Vec4 Connection::covariant(std::size_t i, std::size_t j) const {
  return Vec4(gamma_(i, j, 0), gamma_(i, j, 1), gamma_(i, j, 2), gamma_(i, j, 3));
}

Vec4 Connection::covariant(const Vec4& u, const Vec4& v) const {
  Vec4 r = Vec4::zero(mode());
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < kDim; ++k) r[k] += uv * gamma_(i, j, k);
    }
  }
  return r;
}

Connection levi_civita(const LieAlgebra4& L) {
  const Tensor3& c = L.constants();
  Tensor3 gamma = Tensor3::zero(L.mode());
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      for (std::size_t k = 0; k < kDim; ++k) {
        gamma(i, j, k) = (c(i, j, k) - c(j, k, i) + c(k, i, j)) / 2;
      }
    }
  }
  return Connection(std::move(gamma));
}

Vec4 curvature_operator(const Connection& C, const LieAlgebra4& L, const Vec4& u, const Vec4& v,
                        const Vec4& w) {
  return C.covariant(u, C.covariant(v, w)) - C.covariant(v, C.covariant(u, w)) -
         C.covariant(bracket(L, u, v), w);
}

Scalar sectional_curvature(const Connection& C, const LieAlgebra4& L, const Vec4& u, const Vec4& v) {
  Scalar uv = dot(u, v);
  Scalar gram = dot(u, u) * dot(v, v) - uv * uv;
  if (gram.is_zero()) throw DegeneratePlane("vectors do not span a plane");
  return dot(curvature_operator(C, L, u, v, v), u) / gram;
}

Vec4 horizontal(const Vec4& v) {
  Scalar z = Scalar::zero(v.mode());
  return Vec4(v[X], v[Y], z, z);
}

Vec4 vertical(const Vec4& v) {
  Scalar z = Scalar::zero(v.mode());
  return Vec4(z, z, v[Z], v[W]);
}

Vec4 FoliationData::mean_curvature() const { return trace_bv * (Scalar::one(trace_bv.mode()) / 2); }

FoliationData foliation_data(const Connection& C) {
  auto sym = [&](std::size_t a, std::size_t b) {
    return (C.covariant(a, b) + C.covariant(b, a)) * (Scalar::one(C.mode()) / 2);
  };
  FoliationData f;
  f.bv_zz = horizontal(C.covariant(Z, Z));
  f.bv_ww = horizontal(C.covariant(W, W));
  f.bv_zw = horizontal(sym(Z, W));
  f.trace_bv = f.bv_zz + f.bv_ww;
  f.bh_xx = vertical(C.covariant(X, X));
  f.bh_yy = vertical(C.covariant(Y, Y));
  f.bh_xy = vertical(sym(X, Y));

  f.minimal = f.trace_bv.is_zero();
  f.conformal = (f.bh_xx - f.bh_yy).is_zero() && f.bh_xy.is_zero();
  if (f.conformal) f.conformal_witness = f.bh_xx;
  f.riemannian = f.conformal && f.bh_xx.is_zero();
  f.totally_geodesic = f.bv_zz.is_zero() && f.bv_ww.is_zero() && f.bv_zw.is_zero();
  return f;
}

}  // namespace lieclass
