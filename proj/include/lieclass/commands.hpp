#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "lieclass/algebra_file.hpp"
#include "lieclass/classify.hpp"
#include "lieclass/table.hpp"

namespace lieclass {

/// Process exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitMath = 1, kExitInput = 2, kExitNotAdapted = 3 };

/// --tolerance if given, else LIECLASS_TOLERANCE, else the default eps.
/// Throws std::invalid_argument on an unusable value.
double resolve_tolerance(std::optional<double> flag);

enum class OutputFormat { md, csv, json };
OutputFormat parse_format(std::string_view text);

/// "alpha=1,beta=-1/2" into name/value pairs.
std::vector<std::pair<std::string, Scalar>> parse_param_list(std::string_view text, ScalarMode mode);

/// Bracket list of an adapted algebra, one "[W,Z] = ..." line per pair.
std::string render_brackets(const LieAlgebra4& L);

std::string classification_json(const ClassificationResult& r);
std::string classification_markdown(const ClassificationResult& r);

int cmd_check(const std::filesystem::path& path, double tolerance, std::ostream& out, std::ostream& err);

int cmd_classify(const std::filesystem::path& path, OutputFormat format, double tolerance, std::ostream& out,
                 std::ostream& err);

struct FamilyOptions {
  std::string id;
  std::string params;
  std::optional<std::filesystem::path> out_path;
  bool approx = false;
  double tolerance = ScalarMode::kDefaultTolerance;
};
int cmd_family(const FamilyOptions& o, std::ostream& out, std::ostream& err);

struct TableOptions {
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::md;
  std::optional<std::filesystem::path> out_path;
  bool approx = false;
  double tolerance = ScalarMode::kDefaultTolerance;
};
int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err);

int cmd_curvature(const std::filesystem::path& path, const std::string& u, const std::string& v, double tolerance,
                  std::ostream& out, std::ostream& err);

struct SampleOptions {
  std::string id;
  std::string mode = "generic";
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> out_path;
  bool approx = false;
  double tolerance = ScalarMode::kDefaultTolerance;
};
/// Draws one seeded instance and prints it like cmd_family.
int cmd_sample(const SampleOptions& o, std::ostream& out, std::ostream& err);

}  // namespace lieclass
