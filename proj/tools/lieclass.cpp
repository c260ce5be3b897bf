#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "lieclass/commands.hpp"

using namespace lieclass;

int main(int argc, char** argv) {
  CLI::App app{"Four-dimensional metric Lie algebras with an adapted almost Hermitian structure"};
  app.require_subcommand(1);

  std::optional<double> tolerance_flag;
  app.add_option("--tolerance", tolerance_flag, "eps for float scalars (fallback: LIECLASS_TOLERANCE)");

  std::string path, format = "md", u, v;
  auto* check = app.add_subcommand("check", "antisymmetry and Jacobi defects of an algebra file");
  check->add_option("file", path)->required();

  auto* classify_cmd = app.add_subcommand("classify", "run every classification route on an adapted algebra");
  classify_cmd->add_option("file", path)->required();
  classify_cmd->add_option("--format", format, "md or json");

  FamilyOptions fam;
  std::string fam_out;
  auto* family = app.add_subcommand("family", "build a family instance and print its brackets");
  family->add_option("id", fam.id, "g1..g20")->required();
  family->add_option("--params", fam.params, "name=value list, e.g. alpha=1,beta=0");
  family->add_option("--out", fam_out, "write the algebra file here");
  family->add_flag("--float", fam.approx, "use floating-point scalars");

  TableOptions tab;
  std::string tab_out;
  auto* table = app.add_subcommand("table", "sample every family and mode and compare the routes");
  table->add_option("--samples", tab.samples, "samples per cell");
  table->add_option("--seed", tab.seed);
  table->add_option("--format", format, "md, csv or json");
  table->add_option("--out", tab_out);
  table->add_flag("--float", tab.approx, "use floating-point scalars");

  auto* curvature = app.add_subcommand("curvature", "sectional curvature of the plane spanned by two basis vectors");
  curvature->add_option("file", path)->required();
  curvature->add_option("u", u)->required();
  curvature->add_option("v", v)->required();

  SampleOptions smp;
  std::string smp_out;
  auto* sample_cmd = app.add_subcommand("sample", "draw one seeded family instance");
  sample_cmd->add_option("id", smp.id)->required();
  sample_cmd->add_option("--mode", smp.mode, "generic, ak, i or k");
  sample_cmd->add_option("--seed", smp.seed);
  sample_cmd->add_option("--out", smp_out);
  sample_cmd->add_flag("--float", smp.approx, "use floating-point scalars");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  double tol;
  OutputFormat fmt;
  try {
    tol = resolve_tolerance(tolerance_flag);
    fmt = parse_format(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*check) return cmd_check(path, tol, std::cout, std::cerr);
    if (*classify_cmd) return cmd_classify(path, fmt, tol, std::cout, std::cerr);
    if (*family) {
      fam.tolerance = tol;
      if (!fam_out.empty()) fam.out_path = fam_out;
      return cmd_family(fam, std::cout, std::cerr);
    }
    if (*table) {
      tab.tolerance = tol;
      tab.format = fmt;
      if (!tab_out.empty()) tab.out_path = tab_out;
      return cmd_table(tab, std::cout, std::cerr);
    }
    if (*curvature) return cmd_curvature(path, u, v, tol, std::cout, std::cerr);
    if (*sample_cmd) {
      smp.tolerance = tol;
      if (!smp_out.empty()) smp.out_path = smp_out;
      return cmd_sample(smp, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  }
  return kExitInput;
}
