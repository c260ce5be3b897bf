#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieclass/adapted.hpp"

namespace lieclass {

/// Families g1..g20 of the adapted normal form.
enum class FamilyId : int {
  g1 = 1, g2, g3, g4, g5, g6, g7, g8, g9, g10,
  g11, g12, g13, g14, g15, g16, g17, g18, g19, g20
};

inline constexpr int kFamilyCount = 20;

/// Split of the normal form by (lambda, r, the X/Y block of [Z,.] and [W,.]):
///   A: lambda != 0, (lambda-alpha)^2 + beta^2 != 0
///   B: lambda != 0, (lambda-alpha)^2 + beta^2 = 0
///   C: lambda = 0, r != 0, a beta - alpha b != 0
///   D: lambda = 0, r != 0, a beta - alpha b = 0
///   E: lambda = 0, r = 0, alpha b - a beta != 0
///   F: lambda = 0, r = 0, alpha b - a beta = 0
enum class CaseTag { A, B, C, D, E, F };

enum class SampleMode { generic, ak, i, k };

inline constexpr std::array<SampleMode, 4> kSampleModes = {SampleMode::generic, SampleMode::ak, SampleMode::i,
                                                          SampleMode::k};

std::string family_name(FamilyId id);
/// Accepts "g7" or "7".
FamilyId parse_family_id(std::string_view text);
std::string_view case_name(CaseTag c);
std::string_view mode_name(SampleMode m);
SampleMode parse_sample_mode(std::string_view text);
CaseTag case_of(const AdaptedParams& p);

/// Values of a family's free parameters, in the order of its signature.
struct FamilyParams {
  FamilyId id;
  std::vector<Scalar> values;

  ScalarMode mode() const { return values.at(0).mode(); }
  const Scalar& get(Coef c) const;
  friend bool operator==(const FamilyParams& p, const FamilyParams& q);
};

class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnachievableMode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One cell of the classification table for a family.
struct ConditionCell {
  enum class Kind { equations, never, always };
  Kind kind = Kind::equations;
  /// The table entry, e.g. "w1 = 0" or "never true".
  std::string text;
  /// All must vanish when kind is equations.
  std::vector<std::function<Scalar(const AdaptedParams&)>> residuals;

  bool holds(const AdaptedParams& full) const;
};

/// Exact certificate that a table cell cannot hold. Each identity lhs = rhs
/// is a polynomial identity of degree at most `degree` in every coordinate,
/// so agreement on a grid with degree + 1 values per coordinate proves it.
struct Certificate {
  FamilyId family;
  SampleMode cell;
  std::string statement;
  /// Coordinates of the domain; they must be nonzero when listed in `nonzero`.
  std::vector<Coef> coordinates;
  std::vector<Coef> nonzero;
  int degree = 1;
  /// Family parameters at a point of the domain.
  std::function<FamilyParams(const AdaptedParams& coords)> point;
  /// Left sides combine direct d omega / Nijenhuis values of the algebra.
  std::vector<std::function<Scalar(const LieAlgebra4&, const AdaptedParams& coords)>> lhs;
  std::vector<std::function<Scalar(const AdaptedParams& coords)>> rhs;
  /// Must be nonzero on the whole domain; the cell's condition forces it to 0.
  std::function<Scalar(const AdaptedParams& coords)> factor;
  std::string conclusion;
};

struct FamilySpec {
  FamilyId id;
  CaseTag case_tag;
  std::vector<Coef> params;
  /// Free parameters that must be nonzero.
  std::vector<Coef> nonzero;
  /// Fills the derived coefficients from the free ones.
  std::function<AdaptedParams(AdaptedParams)> fill;
  ConditionCell ak, i, k;
  /// "solvable", "nilpotent" or "not solvable in general".
  std::string structure;
};

const std::vector<FamilySpec>& all_families();
const FamilySpec& family_spec(FamilyId id);

/// Builds FamilyParams from name/value pairs; every signature name must be
/// given exactly once.
FamilyParams make_params(FamilyId id, const std::vector<std::pair<std::string, Scalar>>& named);

/// Coefficients of the bracket list with no validity check; divisions by a
/// zero parameter throw std::domain_error.
AdaptedParams evaluate_template(const FamilyParams& p);

/// Throws ConstraintViolation naming the failed inequality.
void validate(const FamilyParams& p);

/// Validated coefficients of the family's bracket list.
AdaptedParams adapted_params(const FamilyParams& p);
LieAlgebra4 build(const FamilyParams& p);

struct Conditions {
  bool ak = false;
  bool i = false;
  bool k = false;
};

/// Evaluates the family's table row literally.
Conditions conditions(const FamilyParams& p);

bool mode_achievable(FamilyId id, SampleMode mode);

/// Deterministic rational draw satisfying the family constraints and the
/// mode's condition, returned in `scalar_mode`.
FamilyParams sample(FamilyId id, std::uint64_t seed, SampleMode mode,
                    ScalarMode scalar_mode = ScalarMode::exact());

struct FamilyMatch {
  FamilyParams params;
};

struct NearMiss {
  FamilyId id;
  /// Largest coefficient mismatch between the input and the family template
  /// evaluated at the projected parameters, or empty when the projection
  /// already breaks a constraint.
  std::optional<Scalar> residual;
  std::string reason;
};

struct IdentifyResult {
  CaseTag case_tag;
  std::vector<FamilyMatch> matches;
  /// Families that did not match, with the first failed check.
  std::vector<NearMiss> near_misses;
};

IdentifyResult identify(const AdaptedParams& params);

/// Certificates backing the "never true" cells and the g17 restriction.
const std::vector<Certificate>& impossibility_certificates();

struct CertificateCheck {
  bool identities_hold = false;
  bool factor_nonzero = false;
  std::size_t grid_points = 0;
  std::string detail;
};

/// Evaluates every identity exactly on the proof grid.
CertificateCheck verify_certificate(const Certificate& c);

/// Certificate for a never cell, following K-cells back to the AK or I cell
/// that cannot hold.
const Certificate* certificate_for(FamilyId id, SampleMode cell);

}  // namespace lieclass
