#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieclass/families.hpp"

namespace lieclass {

/// Schema, syntax or I/O problem with an algebra file.
class AlgebraFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk description of a bracket table:
///   {"basis": ["X","Y","Z","W"], "scalars": "rational" | "float",
///    "brackets": [{"pair": ["W","Z"], "coeffs": {"W": "1"}}, ...],
///    "metadata": {"name": ..., "family": "g3", "params": {"alpha": "1", ...}}}
struct AlgebraFile {
  std::array<std::string, kDim> basis{"X", "Y", "Z", "W"};
  LieAlgebra4 algebra = LieAlgebra4::abelian(ScalarMode::exact());
  std::optional<std::string> name;
  std::optional<std::string> family;
  /// Parameter literals in file order.
  std::vector<std::pair<std::string, std::string>> params;
};

/// `tolerance` sets the eps of "float" files.
AlgebraFile parse_algebra_json(std::string_view text, double tolerance = ScalarMode::kDefaultTolerance,
                               const std::string& source = "<input>");
AlgebraFile read_algebra_file(const std::filesystem::path& path,
                              double tolerance = ScalarMode::kDefaultTolerance);
LieAlgebra4 parse_algebra(const std::filesystem::path& path, double tolerance = ScalarMode::kDefaultTolerance);

/// Nonzero brackets in the order [W,Z], [Z,X], [Z,Y], [W,X], [W,Y], [Y,X].
std::string algebra_file_json(const AlgebraFile& file);
void write_algebra_file(const std::filesystem::path& path, const AlgebraFile& file);

/// File for a family instance, with the family and parameters as metadata.
AlgebraFile family_file(const FamilyParams& p);

/// Family parameters recorded in the metadata, if any.
std::optional<FamilyParams> metadata_params(const AlgebraFile& file);

/// The six brackets in display order.
inline constexpr std::array<std::pair<Basis, Basis>, 6> kBracketDisplayOrder = {
    {{W, Z}, {Z, X}, {Z, Y}, {W, X}, {W, Y}, {Y, X}}};

}  // namespace lieclass
