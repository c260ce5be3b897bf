#pragma once

#include <array>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "lieclass/hermitian.hpp"

namespace lieclass {

class NotInW : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest violation of a(x,y,z) = -a(x,z,y) and a(x,y,z) = -a(x,Jy,Jz)
/// over basis triples.
Scalar w_membership_defect(const Tensor3& alpha);

struct WDecomposition;
class WTensor;
std::pair<WTensor, WTensor> project_12_34(const WTensor& alpha);
WDecomposition project_fine(const WTensor& alpha);

/// Trilinear form with the symmetries of nabla omega in dimension 4.
class WTensor {
 public:
  /// Throws NotInW when the membership defect is nonzero.
  explicit WTensor(Tensor3 alpha);

  /// Orthogonal projection of an arbitrary tensor into W: antisymmetrise the
  /// last two slots, then remove the part with a(x,Jy,Jz) = a(x,y,z).
  static WTensor project(const Tensor3& raw);

  ScalarMode mode() const { return alpha_.mode(); }
  const Tensor3& tensor() const { return alpha_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return alpha_(i, j, k); }

 private:
  struct Unchecked {};
  WTensor(Tensor3 alpha, Unchecked) : alpha_(std::move(alpha)) {}
  friend std::pair<WTensor, WTensor> project_12_34(const WTensor& alpha);
  friend WDecomposition project_fine(const WTensor& alpha);
  Tensor3 alpha_;
};

/// bar(a)(z) = sum_i a(e_i, e_i, z).
Scalar bar(const WTensor& alpha, const Vec4& z);
/// Components of bar(a) in the frame.
Vec4 bar_vector(const WTensor& alpha);

/// sum_{ijk} a(e_i,e_j,e_k) b(e_i,e_j,e_k).
Scalar w_inner(const WTensor& a, const WTensor& b);

/// (a12, a34) with a12(x,y,z) = (a(x,y,z) - a(Jx,Jy,z))/2, a34 = a - a12.
std::pair<WTensor, WTensor> project_12_34(const WTensor& alpha);

struct WDecomposition {
  WTensor w1, w2, w3, w4;
  /// <w_i, w_i> for i = 1..4.
  std::array<Scalar, 4> norms;
};

/// Splits a into its W1..W4 components. W1 is the totally skew part of a12
/// and W4 is built from bar(a34); W2 and W3 are the remainders.
WDecomposition project_fine(const WTensor& alpha);
/// Throws NotInW for tensors outside W.
WDecomposition project_fine(const Tensor3& alpha);

enum class HermitianClass { AlmostHermitian, AlmostKahler, Integrable, Kahler };

std::string_view class_label(HermitianClass c);

/// AK iff w4 = 0, I iff w2 = 0, K iff both.
HermitianClass class_from_decomposition(const WDecomposition& d);

}  // namespace lieclass
