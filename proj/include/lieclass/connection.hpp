#pragma once

#include <optional>
#include <stdexcept>

#include "lieclass/lie_algebra.hpp"

namespace lieclass {

/// Levi-Civita connection of a left-invariant metric, by Christoffel-type
/// coefficients gamma(i,j,k) = g(nabla_{e_i} e_j, e_k).
class Connection {
 public:
  explicit Connection(Tensor3 gamma) : gamma_(std::move(gamma)) {}

  ScalarMode mode() const { return gamma_.mode(); }
  const Tensor3& gamma() const { return gamma_; }

  /// nabla_{e_i} e_j.
  Vec4 covariant(std::size_t i, std::size_t j) const;
  /// nabla_u v for left-invariant u, v.
  Vec4 covariant(const Vec4& u, const Vec4& v) const;

 private:
  Tensor3 gamma_;
};

/// Koszul formula: 2 g(nabla_u v, w) = g([u,v],w) - g([v,w],u) + g([w,u],v).
Connection levi_civita(const LieAlgebra4& L);

/// R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w.
Vec4 curvature_operator(const Connection& C, const LieAlgebra4& L, const Vec4& u, const Vec4& v,
                        const Vec4& w);

class DegeneratePlane : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// g(R(u,v)v,u) / (|u|^2 |v|^2 - g(u,v)^2). Throws DegeneratePlane.
Scalar sectional_curvature(const Connection& C, const LieAlgebra4& L, const Vec4& u, const Vec4& v);

/// Second fundamental forms of the foliation by the vertical span{Z,W}.
struct FoliationData {
  /// H(nabla_Z Z + nabla_W W).
  Vec4 trace_bv;
  Vec4 bv_zz, bv_ww, bv_zw;
  Vec4 bh_xx, bh_yy, bh_xy;
  /// V with B^H = g (x) V; present when the foliation is conformal.
  std::optional<Vec4> conformal_witness;
  bool minimal = false;
  bool conformal = false;
  bool riemannian = false;
  bool totally_geodesic = false;

  /// trace B^V divided by the leaf dimension.
  Vec4 mean_curvature() const;
};

FoliationData foliation_data(const Connection& C);

/// Projections onto span{X,Y} and span{Z,W}.
Vec4 horizontal(const Vec4& v);
Vec4 vertical(const Vec4& v);

}  // namespace lieclass
