#include "lieclass/hermitian.hpp"

namespace lieclass {

AlmostComplexJ::AlmostComplexJ(ScalarMode mode) {
  for (auto& row : m_) row.fill(Scalar::zero(mode));
  Scalar one = Scalar::one(mode);
  m_[Y][X] = one;
  m_[X][Y] = -one;
  m_[W][Z] = one;
  m_[Z][W] = -one;
}

Vec4 AlmostComplexJ::apply(const Vec4& v) const {
  Vec4 r = Vec4::zero(mode());
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!m_[i][j].is_literal_zero()) r[i] += m_[i][j] * v[j];
    }
  }
  return r;
}

Vec4 AlmostComplexJ::image(std::size_t basis_index) const {
  return Vec4(m_[0][basis_index], m_[1][basis_index], m_[2][basis_index], m_[3][basis_index]);
}

Scalar kahler_form(const AlmostComplexJ& J, const Vec4& u, const Vec4& v) { return dot(J.apply(u), v); }

namespace {

/// Derivative of the function omega(v, w) along u. For left-invariant fields
/// that function is constant.
Scalar directional_derivative_of_constant(const Vec4& u, const Scalar&) { return Scalar::zero(u.mode()); }

}  // namespace

Scalar d_omega_general(const LieAlgebra4& L, const AlmostComplexJ& J, const Vec4& u, const Vec4& v,
                       const Vec4& w) {
  Scalar derivatives = directional_derivative_of_constant(u, kahler_form(J, v, w)) -
                       directional_derivative_of_constant(v, kahler_form(J, u, w)) +
                       directional_derivative_of_constant(w, kahler_form(J, u, v));
  Scalar brackets = -kahler_form(J, bracket(L, u, v), w) + kahler_form(J, bracket(L, u, w), v) -
                    kahler_form(J, bracket(L, v, w), u);
  return derivatives + brackets;
}

Scalar d_omega_fast(const LieAlgebra4& L, const AlmostComplexJ& J, const Vec4& u, const Vec4& v,
                    const Vec4& w) {
  return -dot(J.apply(bracket(L, u, v)), w) - dot(J.apply(bracket(L, v, w)), u) -
         dot(J.apply(bracket(L, w, u)), v);
}

Tensor3 d_omega_table(const LieAlgebra4& L, const AlmostComplexJ& J) {
  ScalarMode mode = L.mode();
  Tensor3 t = Tensor3::zero(mode);
  // Alternating: evaluate on i < j < k and fill the other orders by sign.
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i + 1; j < kDim; ++j) {
      for (std::size_t k = j + 1; k < kDim; ++k) {
        Scalar v = d_omega_fast(L, J, Vec4::basis(i, mode), Vec4::basis(j, mode), Vec4::basis(k, mode));
        t(i, j, k) = v;
        t(j, k, i) = v;
        t(k, i, j) = v;
        t(j, i, k) = -v;
        t(i, k, j) = -v;
        t(k, j, i) = -v;
      }
    }
  }
  return t;
}

NablaOmega nabla_omega(const LieAlgebra4& L, const AlmostComplexJ& J) {
  Connection C = levi_civita(L);
  NablaOmega n{Tensor3::zero(L.mode())};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      for (std::size_t k = 0; k < kDim; ++k) {
        n.values(i, j, k) = dot(C.covariant(i, j), J.image(k)) - dot(J.image(j), C.covariant(i, k));
      }
    }
  }
  return n;
}

NablaOmega nabla_omega_from_brackets(const LieAlgebra4& L, const AlmostComplexJ& J) {
  ScalarMode mode = L.mode();
  NablaOmega n{Tensor3::zero(mode)};
  for (std::size_t i = 0; i < kDim; ++i) {
    Vec4 x = Vec4::basis(i, mode);
    for (std::size_t j = 0; j < kDim; ++j) {
      Vec4 y = Vec4::basis(j, mode);
      Vec4 jy = J.image(j);
      for (std::size_t k = 0; k < kDim; ++k) {
        Vec4 z = Vec4::basis(k, mode);
        Vec4 jz = J.image(k);
        Scalar first = dot(jz, bracket(L, x, y)) + dot(bracket(L, jz, x), y) + dot(x, bracket(L, jz, y));
        Scalar second = dot(jy, bracket(L, x, z)) + dot(bracket(L, jy, x), z) + dot(x, bracket(L, jy, z));
        n.values(i, j, k) = (first - second) / 2;
      }
    }
  }
  return n;
}

Vec4 nabla_J(const Connection& C, const AlmostComplexJ& J, const Vec4& u, const Vec4& v) {
  return C.covariant(u, J.apply(v)) - J.apply(C.covariant(u, v));
}

Vec4 nijenhuis(const LieAlgebra4& L, const AlmostComplexJ& J, const Vec4& u, const Vec4& v) {
  Vec4 ju = J.apply(u);
  Vec4 jv = J.apply(v);
  return bracket(L, u, v) + J.apply(bracket(L, ju, v)) + J.apply(bracket(L, u, jv)) - bracket(L, ju, jv);
}

Scalar nijenhuis_max_abs(const LieAlgebra4& L, const AlmostComplexJ& J) {
  ScalarMode mode = L.mode();
  Scalar m = Scalar::zero(mode);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i + 1; j < kDim; ++j) {
      Scalar a = nijenhuis(L, J, Vec4::basis(i, mode), Vec4::basis(j, mode)).max_abs();
      if (m < a) m = a;
    }
  }
  return m;
}

Scalar nijenhuis_cyclic_sum(const LieAlgebra4& L, const AlmostComplexJ& J, const Vec4& u, const Vec4& v,
                            const Vec4& w) {
  return dot(J.apply(w), nijenhuis(L, J, v, u)) + dot(J.apply(v), nijenhuis(L, J, u, w)) +
         dot(J.apply(u), nijenhuis(L, J, v, w));
}

}  // namespace lieclass
