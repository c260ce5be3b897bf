#include "lieclass/tensor.hpp"

#include <sstream>

namespace lieclass {

Vec4::Vec4(Scalar x, Scalar y, Scalar z, Scalar w)
    : c_{std::move(x), std::move(y), std::move(z), std::move(w)} {
  for (std::size_t i = 1; i < kDim; ++i) {
    if (!(c_[i].mode() == c_[0].mode())) throw ModeMismatch("Vec4 components in different modes");
  }
}

Vec4 Vec4::zero(ScalarMode mode) {
  Scalar z = Scalar::zero(mode);
  return Vec4(z, z, z, z);
}

Vec4 Vec4::basis(std::size_t i, ScalarMode mode) {
  Vec4 v = zero(mode);
  v[i] = Scalar::one(mode);
  return v;
}

bool Vec4::is_zero() const {
  for (const auto& s : c_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Scalar Vec4::max_abs() const {
  Scalar m = Scalar::zero(mode());
  for (const auto& s : c_) {
    Scalar a = s.abs();
    if (m < a) m = a;
  }
  return m;
}

Vec4 Vec4::operator-() const {
  Vec4 r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

Vec4& Vec4::operator+=(const Vec4& o) {
  for (std::size_t i = 0; i < kDim; ++i) c_[i] += o.c_[i];
  return *this;
}

Vec4& Vec4::operator-=(const Vec4& o) {
  for (std::size_t i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec4& Vec4::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator==(const Vec4& a, const Vec4& b) {
  for (std::size_t i = 0; i < kDim; ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

std::string Vec4::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kDim; ++i) {
    const Scalar& s = c_[i];
    if (s.is_zero()) continue;
    bool negative = s.sign() < 0;
    Scalar mag = s.abs();
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string m = mag.to_string();
    bool unit = mag == 1;
    if (!unit) {
      os << m;
      if (m.find('/') != std::string::npos || m.find_first_of(".e") != std::string::npos) os << " ";
    }
    os << kBasisNames[i];
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Scalar dot(const Vec4& u, const Vec4& v) {
  Scalar s = u[0] * v[0];
  for (std::size_t i = 1; i < kDim; ++i) {
    if (!u[i].is_literal_zero() && !v[i].is_literal_zero()) s += u[i] * v[i];
  }
  return s;
}

Tensor3 Tensor3::zero(ScalarMode mode) {
  Tensor3 t;
  Scalar z = Scalar::zero(mode);
  for (auto& e : t.e_) e = z;
  return t;
}

Scalar Tensor3::eval(const Vec4& u, const Vec4& v, const Vec4& w) const {
  Scalar s = Scalar::zero(mode());
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < kDim; ++k) {
        s += uv * w[k] * (*this)(i, j, k);
      }
    }
  }
  return s;
}

bool Tensor3::is_zero() const {
  for (const auto& e : e_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Scalar Tensor3::max_abs() const {
  Scalar m = Scalar::zero(mode());
  for (const auto& e : e_) {
    Scalar a = e.abs();
    if (m < a) m = a;
  }
  return m;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  for (std::size_t n = 0; n < e_.size(); ++n) e_[n] += o.e_[n];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  for (std::size_t n = 0; n < e_.size(); ++n) e_[n] -= o.e_[n];
  return *this;
}

Tensor3& Tensor3::operator*=(const Scalar& s) {
  for (auto& e : e_) e *= s;
  return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  for (std::size_t n = 0; n < a.e_.size(); ++n) {
    if (!(a.e_[n] == b.e_[n])) return false;
  }
  return true;
}

}  // namespace lieclass
