#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lieclass/connection.hpp"
#include "lieclass/families.hpp"
#include "lieclass/gray_hervella.hpp"

namespace lieclass {

struct RouteVerdict {
  bool ak = false;
  bool i = false;
  bool k = false;
  friend bool operator==(const RouteVerdict&, const RouteVerdict&) = default;
};

struct FamilyVerdict {
  FamilyParams params;
  RouteVerdict table;
};

struct ClassificationResult {
  ScalarMode mode = ScalarMode::exact();
  AdaptedParams params;
  Scalar jacobi_defect;

  bool minimal = false;
  bool conformal = false;
  bool riemannian = false;
  bool totally_geodesic = false;

  /// Conditions on the adapted coefficients.
  RouteVerdict closed_form;
  /// d omega and N_J over all basis arguments.
  RouteVerdict direct;
  /// Norms of the W2 and W4 components of nabla omega.
  RouteVerdict projection;
  /// Table row of every matching family.
  std::vector<FamilyVerdict> family_tables;
  bool routes_agree = false;

  bool ak = false;
  bool i = false;
  bool k = false;

  /// d omega on (X,Y,Z), (X,Y,W), (X,Z,W), (Y,Z,W).
  std::array<Scalar, 4> d_omega;
  Vec4 nijenhuis_zx;
  /// <w_i, w_i> for the four components of nabla omega.
  std::array<Scalar, 4> gh_norms;
  /// Largest entries of the W2 and W4 components.
  Scalar w2_max, w4_max;

  /// Present when theta1 = theta2 = 0.
  std::optional<Scalar> k_vertical, k_horizontal;

  IdentifyResult families;

  std::vector<std::size_t> derived_series;
  std::vector<std::size_t> lower_central_series;
};

/// Runs every route on an algebra in adapted form. Throws NotAdapted.
ClassificationResult classify(const LieAlgebra4& L);

}  // namespace lieclass
