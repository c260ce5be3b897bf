#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieclass/classify.hpp"

namespace lieclass {

/// Routes evaluated on one family sample.
struct SampleCheck {
  bool jacobi_ok = false;
  RouteVerdict table;
  RouteVerdict closed_form;
  RouteVerdict direct;
  RouteVerdict projection;
  /// Approximate mode only: every witness is below eps or above 1e-6.
  bool separated = true;

  bool routes_agree() const;
};

inline constexpr double kSeparationGap = 1e-6;

SampleCheck check_sample(const FamilyParams& p);

struct TableCell {
  FamilyId id;
  SampleMode mode;
  bool achievable = true;
  std::size_t samples = 0;
  std::size_t jacobi_pass = 0;
  std::size_t route_agreement = 0;
  /// Samples whose routes all report the cell's condition (generic cells:
  /// samples whose table row matches the direct route).
  std::size_t table1_match = 0;
  /// Unachievable cells: exact certificate and falsification search.
  bool certificate_ok = false;
  std::size_t counterexamples = 0;

  bool pass() const;
  /// "PASS", "FAIL", "never true — verified" or "never true — FAILED".
  std::string status() const;
};

struct TableReport {
  ScalarMode mode = ScalarMode::exact();
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<TableCell> cells;

  bool all_pass() const;
  const TableCell& cell(FamilyId id, SampleMode mode) const;
};

/// Samples every (family, mode) cell. Cells run concurrently; the report is
/// independent of scheduling.
TableReport reproduce_table(std::size_t samples, std::uint64_t seed, ScalarMode mode = ScalarMode::exact());

std::string render_markdown(const TableReport& r);
/// Columns: family, mode, samples, jacobi_pass, route_agreement, table1_match.
std::string render_csv(const TableReport& r);

}  // namespace lieclass
