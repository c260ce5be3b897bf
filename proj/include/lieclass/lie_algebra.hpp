#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "lieclass/tensor.hpp"

namespace lieclass {

/// One entry of a bracket table: [left, right] = value.
struct Bracket {
  Basis left;
  Basis right;
  Vec4 value;
};

/// Metric Lie algebra in an orthonormal frame, stored by structure constants
/// c(i,j,k) with [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra4 {
 public:
  /// Throws std::invalid_argument unless c(i,j,k) = -c(j,i,k) exactly.
  explicit LieAlgebra4(Tensor3 constants);

  static LieAlgebra4 abelian(ScalarMode mode);
  /// Sets each listed bracket and its negated transpose. Throws on a pair
  /// listed twice or a nonzero [e_i, e_i].
  static LieAlgebra4 from_brackets(ScalarMode mode, std::initializer_list<Bracket> table);
  static LieAlgebra4 from_brackets(ScalarMode mode, const std::vector<Bracket>& table);

  ScalarMode mode() const { return c_.mode(); }
  const Tensor3& constants() const { return c_; }
  Vec4 bracket(std::size_t i, std::size_t j) const;

 private:
  Tensor3 c_;
};

/// Largest |c(i,j,k) + c(j,i,k)|; zero for every LieAlgebra4.
Scalar antisymmetry_defect(const Tensor3& c);

Vec4 bracket(const LieAlgebra4& L, const Vec4& u, const Vec4& v);

/// Max-norm of the Jacobi cyclic sum over all basis triples.
Scalar jacobi_defect(const LieAlgebra4& L);

/// Dimensions of g, [g,g], [[g,g],[g,g]], ... until the sequence stabilises.
std::vector<std::size_t> derived_series_dimensions(const LieAlgebra4& L);
/// Dimensions of g, [g,g], [g,[g,g]], ... until the sequence stabilises.
std::vector<std::size_t> lower_central_series_dimensions(const LieAlgebra4& L);
bool is_solvable(const LieAlgebra4& L);
bool is_nilpotent(const LieAlgebra4& L);

}  // namespace lieclass
