#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lieclass/lie_algebra.hpp"

namespace lieclass {

/// Coefficients of the adapted bracket normal form
///   [W,Z] = lambda W
///   [Z,X] = alpha X + beta Y + z1 Z + w1 W
///   [Z,Y] = -beta X + alpha Y + z2 Z + w2 W
///   [W,X] = a X + b Y + z3 Z - z1 W
///   [W,Y] = -b X + a Y + z4 Z - z2 W
///   [Y,X] = r X + theta1 Z + theta2 W
enum class Coef : std::size_t { lambda, alpha, beta, a, b, r, z1, z2, z3, z4, w1, w2, theta1, theta2 };

inline constexpr std::size_t kCoefCount = 14;
inline constexpr std::array<std::string_view, kCoefCount> kCoefNames = {
    "lambda", "alpha", "beta", "a", "b", "r", "z1", "z2", "z3", "z4", "w1", "w2", "theta1", "theta2"};

std::string_view coef_name(Coef c);
/// Accepts the names above; throws std::invalid_argument otherwise.
Coef coef_from_name(std::string_view name);

struct AdaptedParams {
  std::array<Scalar, kCoefCount> values;

  static AdaptedParams zero(ScalarMode mode);

  const Scalar& operator[](Coef c) const { return values[static_cast<std::size_t>(c)]; }
  Scalar& operator[](Coef c) { return values[static_cast<std::size_t>(c)]; }
  ScalarMode mode() const { return values[0].mode(); }

  /// Same values rounded into `mode`.
  AdaptedParams converted(ScalarMode mode) const;

  friend bool operator==(const AdaptedParams& p, const AdaptedParams& q);
};

/// Bracket table of the normal form.
LieAlgebra4 to_algebra(const AdaptedParams& p);

class NotAdapted : public std::runtime_error {
 public:
  explicit NotAdapted(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Reads the 14 coefficients back from a bracket table. Throws NotAdapted
/// listing every entry that breaks the normal form.
AdaptedParams extract_adapted(const LieAlgebra4& L);

/// Closed-form invariants of the normal form.
namespace closed_form {

/// d omega on (X,Y,Z), (X,Y,W), (X,Z,W), (Y,Z,W).
std::array<Scalar, 4> d_omega(const AdaptedParams& p);
/// Z and W components of N_J(Z,X); its X and Y components vanish.
std::array<Scalar, 2> nijenhuis_zx(const AdaptedParams& p);
/// (nabla_Y w)(X,Z), (nabla_X w)(Y,W), (nabla_Z w)(X,W), (nabla_Z w)(Y,W).
std::array<Scalar, 4> nabla_omega(const AdaptedParams& p);

/// theta1 = 2a and theta2 = -2 alpha.
bool almost_kahler(const AdaptedParams& p);
/// 2 z2 + z3 + w1 = 0 and 2 z1 - z4 - w2 = 0.
bool integrable(const AdaptedParams& p);

}  // namespace closed_form

}  // namespace lieclass
