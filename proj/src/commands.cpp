#include "lieclass/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lieclass {

using nlohmann::ordered_json;

double resolve_tolerance(std::optional<double> flag) {
  double tol = ScalarMode::kDefaultTolerance;
  if (flag) {
    tol = *flag;
  } else if (const char* env = std::getenv("LIECLASS_TOLERANCE"); env && *env) {
    try {
      std::size_t used = 0;
      tol = std::stod(env, &used);
      if (used != std::string_view(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("LIECLASS_TOLERANCE is not a number: ") + env);
    }
  }
  if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be a positive number");
  return tol;
}

OutputFormat parse_format(std::string_view text) {
  if (text == "md") return OutputFormat::md;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format \"" + std::string(text) + "\" (expected md, csv or json)");
}

std::vector<std::pair<std::string, Scalar>> parse_param_list(std::string_view text, ScalarMode mode) {
  std::vector<std::pair<std::string, Scalar>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) {
      if (end == text.size() && out.empty() && text.empty()) break;
      throw std::invalid_argument("empty entry in parameter list");
    }
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw std::invalid_argument("expected name=value, got \"" + std::string(item) + "\"");
    }
    out.emplace_back(std::string(item.substr(0, eq)), parse_scalar(item.substr(eq + 1), mode));
  }
  return out;
}

std::string render_brackets(const LieAlgebra4& L) {
  std::ostringstream os;
  for (const auto& [i, j] : kBracketDisplayOrder) {
    os << '[' << kBasisNames[i] << ',' << kBasisNames[j] << "] = " << L.bracket(i, j).to_string() << '\n';
  }
  return os.str();
}

namespace {

std::string str(const Scalar& s) { return s.to_string(); }

ordered_json verdict_json(const RouteVerdict& v) { return ordered_json{{"ak", v.ak}, {"i", v.i}, {"k", v.k}}; }

ordered_json params_json(const FamilyParams& p) {
  ordered_json o = ordered_json::object();
  const auto& names = family_spec(p.id).params;
  for (std::size_t n = 0; n < names.size(); ++n) o[std::string(coef_name(names[n]))] = str(p.values[n]);
  return o;
}

const char* kDOmegaLabels[4] = {"XYZ", "XYW", "XZW", "YZW"};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string series(const std::vector<std::size_t>& s) {
  std::string out;
  for (std::size_t n = 0; n < s.size(); ++n) out += (n ? " > " : "") + std::to_string(s[n]);
  return out;
}

[[noreturn]] void fail_input(const std::string& what) { throw AlgebraFileError(what); }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail_input(path.string() + ": cannot write file");
  f << text;
  if (!f) fail_input(path.string() + ": write failed");
}

ScalarMode mode_for(bool approx, double tol) { return approx ? ScalarMode::approx(tol) : ScalarMode::exact(); }

void print_instance(const FamilyParams& p, std::ostream& out) {
  out << family_name(p.id) << " (case " << case_name(family_spec(p.id).case_tag) << ")";
  const auto& names = family_spec(p.id).params;
  for (std::size_t n = 0; n < names.size(); ++n) out << (n ? ", " : ": ") << coef_name(names[n]) << " = " << str(p.values[n]);
  out << '\n' << render_brackets(build(p));
}

}  // namespace

std::string classification_json(const ClassificationResult& r) {
  ordered_json doc;
  doc["scalars"] = r.mode.describe();
  doc["jacobi_defect"] = str(r.jacobi_defect);
  ordered_json adapted = ordered_json::object();
  for (std::size_t n = 0; n < kCoefCount; ++n) adapted[std::string(kCoefNames[n])] = str(r.params.values[n]);
  doc["adapted"] = adapted;
  doc["case"] = std::string(case_name(r.families.case_tag));
  doc["minimal"] = r.minimal;
  doc["conformal"] = r.conformal;
  doc["riemannian"] = r.riemannian;
  doc["totally_geodesic"] = r.totally_geodesic;
  doc["ak"] = r.ak;
  doc["i"] = r.i;
  doc["k"] = r.k;

  ordered_json routes;
  routes["closed_form"] = verdict_json(r.closed_form);
  routes["direct"] = verdict_json(r.direct);
  routes["projection"] = verdict_json(r.projection);
  ordered_json tables = ordered_json::array();
  for (const auto& t : r.family_tables) {
    tables.push_back(ordered_json{{"family", family_name(t.params.id)}, {"verdict", verdict_json(t.table)}});
  }
  routes["family_tables"] = tables;
  routes["agree"] = r.routes_agree;
  doc["routes"] = routes;

  ordered_json w;
  ordered_json dw = ordered_json::object();
  for (std::size_t n = 0; n < 4; ++n) dw[kDOmegaLabels[n]] = str(r.d_omega[n]);
  w["d_omega"] = dw;
  ordered_json nzx = ordered_json::object();
  for (std::size_t k = 0; k < kDim; ++k) nzx[kBasisNames[k]] = str(r.nijenhuis_zx[k]);
  w["nijenhuis_zx"] = nzx;
  ordered_json norms = ordered_json::object();
  for (std::size_t n = 0; n < 4; ++n) norms["w" + std::to_string(n + 1)] = str(r.gh_norms[n]);
  w["gray_hervella_norms"] = norms;
  w["w2_max"] = str(r.w2_max);
  w["w4_max"] = str(r.w4_max);
  doc["witnesses"] = w;

  if (r.k_vertical) {
    doc["curvature"] = ordered_json{{"vertical", str(*r.k_vertical)}, {"horizontal", str(*r.k_horizontal)}};
  } else {
    doc["curvature"] = nullptr;
  }

  ordered_json matches = ordered_json::array();
  for (const auto& m : r.families.matches) {
    matches.push_back(ordered_json{{"family", family_name(m.params.id)}, {"params", params_json(m.params)}});
  }
  doc["family_matches"] = matches;
  ordered_json misses = ordered_json::array();
  for (const auto& m : r.families.near_misses) {
    ordered_json e{{"family", family_name(m.id)}};
    e["residual"] = m.residual ? ordered_json(str(*m.residual)) : ordered_json(nullptr);
    e["reason"] = m.reason;
    misses.push_back(e);
  }
  doc["near_misses"] = misses;
  doc["derived_series"] = r.derived_series;
  doc["lower_central_series"] = r.lower_central_series;
  return doc.dump(2) + "\n";
}

std::string classification_markdown(const ClassificationResult& r) {
  std::ostringstream os;
  os << "# Classification\n\n";
  os << "Scalars: " << r.mode.describe() << ", Jacobi defect: " << str(r.jacobi_defect) << ", case "
     << case_name(r.families.case_tag) << "\n\n";
  os << "Foliation: minimal " << yes_no(r.minimal) << ", conformal " << yes_no(r.conformal) << ", Riemannian "
     << yes_no(r.riemannian) << ", totally geodesic " << yes_no(r.totally_geodesic) << "\n\n";
  os << "| Route | Almost Kähler | Integrable | Kähler |\n|---|---|---|---|\n";
  auto row = [&](const std::string& name, const RouteVerdict& v) {
    os << "| " << name << " | " << yes_no(v.ak) << " | " << yes_no(v.i) << " | " << yes_no(v.k) << " |\n";
  };
  row("closed form", r.closed_form);
  row("d omega / N_J", r.direct);
  row("projection", r.projection);
  for (const auto& t : r.family_tables) row("table " + family_name(t.params.id), t.table);
  os << "\nRoutes agree: " << yes_no(r.routes_agree) << "\n\n";
  os << "Witnesses:\n";
  for (std::size_t n = 0; n < 4; ++n) os << "- d omega(" << kDOmegaLabels[n] << ") = " << str(r.d_omega[n]) << "\n";
  os << "- N_J(Z,X) = " << r.nijenhuis_zx.to_string() << "\n";
  for (std::size_t n = 0; n < 4; ++n) os << "- |w" << n + 1 << "|^2 = " << str(r.gh_norms[n]) << "\n";
  if (r.k_vertical) {
    os << "\nCurvature: K(Z,W) = " << str(*r.k_vertical) << ", K(X,Y) = " << str(*r.k_horizontal) << "\n";
  }
  os << "\nFamilies:";
  if (r.families.matches.empty()) os << " none";
  for (const auto& m : r.families.matches) {
    os << "\n- " << family_name(m.params.id);
    const auto& names = family_spec(m.params.id).params;
    for (std::size_t n = 0; n < names.size(); ++n) {
      os << (n ? ", " : " (") << coef_name(names[n]) << " = " << str(m.params.values[n]);
    }
    os << ")";
  }
  os << "\n";
  for (const auto& m : r.families.near_misses) {
    os << "- near miss " << family_name(m.id) << ": " << m.reason << "\n";
  }
  os << "\nDerived series: " << series(r.derived_series) << ", lower central series: "
     << series(r.lower_central_series) << "\n";
  return os.str();
}

int cmd_check(const std::filesystem::path& path, double tolerance, std::ostream& out, std::ostream& err) {
  AlgebraFile f;
  try {
    f = read_algebra_file(path, tolerance);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  Scalar anti = antisymmetry_defect(f.algebra.constants());
  Scalar jac = jacobi_defect(f.algebra);
  out << "antisymmetry defect: " << str(anti) << '\n';
  out << "jacobi defect: " << str(jac) << '\n';
  bool ok = anti.is_zero() && jac.is_zero();
  out << (ok ? "ok" : "not a Lie algebra") << '\n';
  return ok ? kExitOk : kExitMath;
}

int cmd_classify(const std::filesystem::path& path, OutputFormat format, double tolerance, std::ostream& out,
                 std::ostream& err) {
  AlgebraFile f;
  try {
    f = read_algebra_file(path, tolerance);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  ClassificationResult r;
  try {
    r = classify(f.algebra);
  } catch (const NotAdapted& e) {
    err << "error: not in adapted form\n";
    for (const auto& v : e.violations()) err << "  " << v << '\n';
    return kExitNotAdapted;
  }
  if (format == OutputFormat::csv) {
    err << "error: classify supports md or json\n";
    return kExitInput;
  }
  out << (format == OutputFormat::json ? classification_json(r) : classification_markdown(r));
  if (!r.jacobi_defect.is_zero()) {
    err << "warning: Jacobi identity fails (defect " << str(r.jacobi_defect) << ")\n";
    return kExitMath;
  }
  if (!r.routes_agree) {
    err << "error: classification routes disagree\n";
    return kExitMath;
  }
  return kExitOk;
}

int cmd_family(const FamilyOptions& o, std::ostream& out, std::ostream& err) {
  FamilyParams p{FamilyId::g1, {}};
  try {
    FamilyId id = parse_family_id(o.id);
    p = make_params(id, parse_param_list(o.params, mode_for(o.approx, o.tolerance)));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  try {
    validate(p);
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  }
  print_instance(p, out);
  if (o.out_path) {
    try {
      write_algebra_file(*o.out_path, family_file(p));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
  }
  return kExitOk;
}

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
  if (o.samples == 0) {
    err << "error: --samples must be at least 1\n";
    return kExitInput;
  }
  TableReport r = reproduce_table(o.samples, o.seed, mode_for(o.approx, o.tolerance));
  std::string text;
  switch (o.format) {
    case OutputFormat::md: text = render_markdown(r); break;
    case OutputFormat::csv: text = render_csv(r); break;
    case OutputFormat::json: {
      ordered_json doc;
      doc["scalars"] = r.mode.describe();
      doc["samples"] = r.samples;
      doc["seed"] = r.seed;
      ordered_json cells = ordered_json::array();
      for (const auto& c : r.cells) {
        cells.push_back(ordered_json{{"family", family_name(c.id)},
                                     {"mode", std::string(mode_name(c.mode))},
                                     {"achievable", c.achievable},
                                     {"samples", c.samples},
                                     {"jacobi_pass", c.jacobi_pass},
                                     {"route_agreement", c.route_agreement},
                                     {"table1_match", c.table1_match},
                                     {"counterexamples", c.counterexamples},
                                     {"status", c.status()}});
      }
      doc["cells"] = cells;
      doc["all_pass"] = r.all_pass();
      text = doc.dump(2) + "\n";
      break;
    }
  }
  if (o.out_path) {
    try {
      write_text(*o.out_path, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
  } else {
    out << text;
  }
  return r.all_pass() ? kExitOk : kExitMath;
}

int cmd_curvature(const std::filesystem::path& path, const std::string& u, const std::string& v, double tolerance,
                  std::ostream& out, std::ostream& err) {
  AlgebraFile f;
  try {
    f = read_algebra_file(path, tolerance);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  auto index = [&](const std::string& label) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < kDim; ++i) {
      if (f.basis[i] == label) return i;
    }
    return std::nullopt;
  };
  auto i = index(u);
  auto j = index(v);
  if (!i || !j) {
    err << "error: unknown basis label \"" << (i ? v : u) << "\"\n";
    return kExitInput;
  }
  if (*i == *j) {
    err << "error: plane labels must be distinct\n";
    return kExitInput;
  }
  ScalarMode m = f.algebra.mode();
  try {
    Scalar k = sectional_curvature(levi_civita(f.algebra), f.algebra, Vec4::basis(*i, m), Vec4::basis(*j, m));
    out << "K(" << u << ',' << v << ") = " << str(k) << '\n';
  } catch (const DegeneratePlane& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  }
  return kExitOk;
}

int cmd_sample(const SampleOptions& o, std::ostream& out, std::ostream& err) {
  FamilyParams p{FamilyId::g1, {}};
  try {
    p = sample(parse_family_id(o.id), o.seed, parse_sample_mode(o.mode), mode_for(o.approx, o.tolerance));
  } catch (const UnachievableMode& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  print_instance(p, out);
  if (o.out_path) {
    try {
      write_algebra_file(*o.out_path, family_file(p));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
  }
  return kExitOk;
}

}  // namespace lieclass
