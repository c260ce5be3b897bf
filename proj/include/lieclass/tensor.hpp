#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "lieclass/scalar.hpp"

namespace lieclass {

/// Basis order of the adapted frame.
enum Basis : std::size_t { X = 0, Y = 1, Z = 2, W = 3 };

inline constexpr std::size_t kDim = 4;
inline constexpr std::array<const char*, kDim> kBasisNames = {"X", "Y", "Z", "W"};

class Vec4 {
 public:
  /// Exact zero vector.
  Vec4() = default;
  Vec4(Scalar x, Scalar y, Scalar z, Scalar w);

  static Vec4 zero(ScalarMode mode);
  static Vec4 basis(std::size_t i, ScalarMode mode);

  ScalarMode mode() const { return c_[0].mode(); }

  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const;
  /// Largest absolute component.
  Scalar max_abs() const;

  Vec4 operator-() const;
  Vec4& operator+=(const Vec4& o);
  Vec4& operator-=(const Vec4& o);
  Vec4& operator*=(const Scalar& s);

  friend Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
  friend Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
  friend Vec4 operator*(const Scalar& s, Vec4 v) { return v *= s; }
  friend Vec4 operator*(Vec4 v, const Scalar& s) { return v *= s; }
  friend bool operator==(const Vec4& a, const Vec4& b);

  /// Readable linear combination, e.g. "2X + 1/2 W" or "0".
  std::string to_string() const;

 private:
  std::array<Scalar, kDim> c_{};
};

/// Euclidean inner product; the frame is orthonormal.
Scalar dot(const Vec4& u, const Vec4& v);

/// Dense 4x4x4 array. Owners decide the meaning of the three slots.
class Tensor3 {
 public:
  Tensor3() = default;
  static Tensor3 zero(ScalarMode mode);

  ScalarMode mode() const { return e_[0].mode(); }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * kDim + j) * kDim + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return e_[(i * kDim + j) * kDim + k];
  }

  /// Trilinear evaluation sum_{ijk} T(i,j,k) u_i v_j w_k.
  Scalar eval(const Vec4& u, const Vec4& v, const Vec4& w) const;

  bool is_zero() const;
  Scalar max_abs() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Scalar& s);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 t) { return t *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b);

 private:
  std::array<Scalar, kDim * kDim * kDim> e_{};
};

}  // namespace lieclass
