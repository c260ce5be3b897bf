#include "lieclass/gray_hervella.hpp"

namespace lieclass {

namespace {

using Slot = std::size_t;

/// t(i,j,k) = a(e_i, J e_j, J e_k).
Tensor3 twist_last_two(const Tensor3& a, const AlmostComplexJ& J) {
  Tensor3 t = Tensor3::zero(a.mode());
  for (Slot i = 0; i < kDim; ++i) {
    for (Slot j = 0; j < kDim; ++j) {
      for (Slot k = 0; k < kDim; ++k) {
        Scalar s = Scalar::zero(a.mode());
        for (Slot p = 0; p < kDim; ++p) {
          if (J(p, j).is_zero()) continue;
          for (Slot q = 0; q < kDim; ++q) {
            if (J(q, k).is_zero()) continue;
            s += J(p, j) * J(q, k) * a(i, p, q);
          }
        }
        t(i, j, k) = s;
      }
    }
  }
  return t;
}

/// t(i,j,k) = a(J e_i, J e_j, e_k).
Tensor3 twist_first_two(const Tensor3& a, const AlmostComplexJ& J) {
  Tensor3 t = Tensor3::zero(a.mode());
  for (Slot i = 0; i < kDim; ++i) {
    for (Slot j = 0; j < kDim; ++j) {
      for (Slot k = 0; k < kDim; ++k) {
        Scalar s = Scalar::zero(a.mode());
        for (Slot p = 0; p < kDim; ++p) {
          if (J(p, i).is_zero()) continue;
          for (Slot q = 0; q < kDim; ++q) {
            if (J(q, j).is_zero()) continue;
            s += J(p, i) * J(q, j) * a(p, q, k);
          }
        }
        t(i, j, k) = s;
      }
    }
  }
  return t;
}

Tensor3 half(Tensor3 t) {
  t *= Scalar::one(t.mode()) / 2;
  return t;
}

}  // namespace

Scalar w_membership_defect(const Tensor3& alpha) {
  AlmostComplexJ J(alpha.mode());
  Tensor3 twisted = twist_last_two(alpha, J);
  Scalar m = Scalar::zero(alpha.mode());
  for (Slot i = 0; i < kDim; ++i) {
    for (Slot j = 0; j < kDim; ++j) {
      for (Slot k = 0; k < kDim; ++k) {
        Scalar d1 = (alpha(i, j, k) + alpha(i, k, j)).abs();
        Scalar d2 = (alpha(i, j, k) + twisted(i, j, k)).abs();
        if (m < d1) m = d1;
        if (m < d2) m = d2;
      }
    }
  }
  return m;
}

WTensor::WTensor(Tensor3 alpha) : alpha_(std::move(alpha)) {
  Scalar defect = w_membership_defect(alpha_);
  if (!defect.is_zero()) throw NotInW("tensor is not in W (membership defect " + defect.to_string() + ")");
}

WTensor WTensor::project(const Tensor3& raw) {
  Tensor3 skew = Tensor3::zero(raw.mode());
  for (Slot i = 0; i < kDim; ++i) {
    for (Slot j = 0; j < kDim; ++j) {
      for (Slot k = 0; k < kDim; ++k) skew(i, j, k) = (raw(i, j, k) - raw(i, k, j)) / 2;
    }
  }
  AlmostComplexJ J(raw.mode());
  return WTensor(half(skew - twist_last_two(skew, J)));
}

Scalar bar(const WTensor& alpha, const Vec4& z) { return dot(bar_vector(alpha), z); }

Vec4 bar_vector(const WTensor& alpha) {
  Vec4 v = Vec4::zero(alpha.mode());
  for (Slot k = 0; k < kDim; ++k) {
    for (Slot i = 0; i < kDim; ++i) v[k] += alpha(i, i, k);
  }
  return v;
}

Scalar w_inner(const WTensor& a, const WTensor& b) {
  Scalar s = Scalar::zero(a.mode());
  for (Slot i = 0; i < kDim; ++i) {
    for (Slot j = 0; j < kDim; ++j) {
      for (Slot k = 0; k < kDim; ++k) s += a(i, j, k) * b(i, j, k);
    }
  }
  return s;
}

std::pair<WTensor, WTensor> project_12_34(const WTensor& alpha) {
  AlmostComplexJ J(alpha.mode());
  Tensor3 a12 = half(alpha.tensor() - twist_first_two(alpha.tensor(), J));
  Tensor3 a34 = alpha.tensor() - a12;
  return {WTensor(std::move(a12), WTensor::Unchecked{}), WTensor(std::move(a34), WTensor::Unchecked{})};
}

WDecomposition project_fine(const WTensor& alpha) {
  ScalarMode mode = alpha.mode();
  auto [a12, a34] = project_12_34(alpha);

  Tensor3 a1 = Tensor3::zero(mode);
  for (Slot i = 0; i < kDim; ++i) {
    for (Slot j = 0; j < kDim; ++j) {
      for (Slot k = 0; k < kDim; ++k) a1(i, j, k) = (a12(i, j, k) + a12(j, k, i) + a12(k, i, j)) / 3;
    }
  }
  Tensor3 a2 = a12.tensor() - a1;

  AlmostComplexJ J(mode);
  Vec4 b = bar_vector(a34);
  Vec4 jb = Vec4::zero(mode);  // jb[k] = bar(J e_k)
  for (Slot k = 0; k < kDim; ++k) jb[k] = dot(b, J.image(k));
  Tensor3 a4 = Tensor3::zero(mode);
  for (Slot i = 0; i < kDim; ++i) {
    for (Slot j = 0; j < kDim; ++j) {
      for (Slot k = 0; k < kDim; ++k) {
        // g(e_i, J e_j) = J(i, j)
        Scalar s = Scalar::zero(mode);
        if (i == j) s += b[k];
        if (i == k) s -= b[j];
        s -= J(i, j) * jb[k];
        s += J(i, k) * jb[j];
        a4(i, j, k) = s / 2;
      }
    }
  }
  Tensor3 a3 = a34.tensor() - a4;

  WTensor w1(std::move(a1), WTensor::Unchecked{});
  WTensor w2(std::move(a2), WTensor::Unchecked{});
  WTensor w3(std::move(a3), WTensor::Unchecked{});
  WTensor w4(std::move(a4), WTensor::Unchecked{});
  std::array<Scalar, 4> norms{w_inner(w1, w1), w_inner(w2, w2), w_inner(w3, w3), w_inner(w4, w4)};
  return WDecomposition{std::move(w1), std::move(w2), std::move(w3), std::move(w4), std::move(norms)};
}

WDecomposition project_fine(const Tensor3& alpha) { return project_fine(WTensor(alpha)); }

std::string_view class_label(HermitianClass c) {
  switch (c) {
    case HermitianClass::AlmostHermitian: return "W";
    case HermitianClass::AlmostKahler: return "AK";
    case HermitianClass::Integrable: return "I";
    case HermitianClass::Kahler: return "K";
  }
  return "?";
}

HermitianClass class_from_decomposition(const WDecomposition& d) {
  bool ak = d.w4.tensor().is_zero();
  bool integrable = d.w2.tensor().is_zero();
  if (ak && integrable) return HermitianClass::Kahler;
  if (ak) return HermitianClass::AlmostKahler;
  if (integrable) return HermitianClass::Integrable;
  return HermitianClass::AlmostHermitian;
}

}  // namespace lieclass
