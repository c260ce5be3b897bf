#pragma once

#include <array>

#include "lieclass/connection.hpp"

namespace lieclass {

/// The adapted almost complex structure JX=Y, JY=-X, JZ=W, JW=-Z.
class AlmostComplexJ {
 public:
  explicit AlmostComplexJ(ScalarMode mode);

  ScalarMode mode() const { return m_[0][0].mode(); }
  /// Entry (row, col); column j holds J e_j.
  const Scalar& operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }
  Vec4 apply(const Vec4& v) const;
  Vec4 image(std::size_t basis_index) const;

 private:
  std::array<std::array<Scalar, kDim>, kDim> m_;
};

/// omega(u, v) = g(Ju, v).
Scalar kahler_form(const AlmostComplexJ& J, const Vec4& u, const Vec4& v);

/// Exterior derivative of omega from the full invariant formula. The
/// directional-derivative terms are evaluated and vanish for left-invariant
/// fields.
Scalar d_omega_general(const LieAlgebra4& L, const AlmostComplexJ& J, const Vec4& u, const Vec4& v,
                       const Vec4& w);

/// -g(J[u,v],w) - g(J[v,w],u) - g(J[w,u],v).
Scalar d_omega_fast(const LieAlgebra4& L, const AlmostComplexJ& J, const Vec4& u, const Vec4& v,
                    const Vec4& w);

/// Full table of d omega on basis triples (fast formula).
Tensor3 d_omega_table(const LieAlgebra4& L, const AlmostComplexJ& J);

/// values(i,j,k) = (nabla_{e_i} omega)(e_j, e_k).
struct NablaOmega {
  Tensor3 values;
};

/// g(nabla_{e_i} e_j, J e_k) - g(J e_j, nabla_{e_i} e_k) through the connection.
NablaOmega nabla_omega(const LieAlgebra4& L, const AlmostComplexJ& J);
/// The same table with the connection expanded into brackets.
NablaOmega nabla_omega_from_brackets(const LieAlgebra4& L, const AlmostComplexJ& J);

/// (nabla_u J) v = nabla_u(Jv) - J nabla_u v.
Vec4 nabla_J(const Connection& C, const AlmostComplexJ& J, const Vec4& u, const Vec4& v);

/// N(u,v) = [u,v] + J[Ju,v] + J[u,Jv] - [Ju,Jv].
Vec4 nijenhuis(const LieAlgebra4& L, const AlmostComplexJ& J, const Vec4& u, const Vec4& v);

/// Largest component of N over all basis pairs.
Scalar nijenhuis_max_abs(const LieAlgebra4& L, const AlmostComplexJ& J);

/// g(Jw, N(v,u)) + g(Jv, N(u,w)) + g(Ju, N(v,w)).
Scalar nijenhuis_cyclic_sum(const LieAlgebra4& L, const AlmostComplexJ& J, const Vec4& u, const Vec4& v,
                            const Vec4& w);

}  // namespace lieclass
