#include "lieclass/algebra_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lieclass {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& source, const std::string& where, const std::string& what) {
  throw AlgebraFileError(source + ": " + where + ": " + what);
}

std::size_t label_index(const std::array<std::string, kDim>& basis, const ordered_json& v, const std::string& source,
                        const std::string& where) {
  if (!v.is_string()) schema_error(source, where, "basis label must be a string");
  const auto& s = v.get_ref<const std::string&>();
  for (std::size_t i = 0; i < kDim; ++i) {
    if (basis[i] == s) return i;
  }
  schema_error(source, where, "unknown basis label \"" + s + "\"");
}

ScalarMode mode_of(const ordered_json& doc, double tolerance, const std::string& source) {
  if (!doc.contains("scalars")) return ScalarMode::exact();
  const ordered_json& s = doc.at("scalars");
  if (s == "rational") return ScalarMode::exact();
  if (s == "float") return ScalarMode::approx(tolerance);
  schema_error(source, "scalars", "expected \"rational\" or \"float\"");
}

}  // namespace

AlgebraFile parse_algebra_json(std::string_view text, double tolerance, const std::string& source) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const json::parse_error& e) {
    throw AlgebraFileError(source + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) schema_error(source, "top level", "expected an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "basis" && key != "scalars" && key != "brackets" && key != "metadata") {
      schema_error(source, key, "unknown field");
    }
  }

  AlgebraFile file;
  if (doc.contains("basis")) {
    const ordered_json& b = doc.at("basis");
    if (!b.is_array() || b.size() != kDim) schema_error(source, "basis", "expected 4 labels");
    for (std::size_t i = 0; i < kDim; ++i) {
      if (!b[i].is_string() || b[i].get_ref<const std::string&>().empty()) {
        schema_error(source, "basis[" + std::to_string(i) + "]", "label must be a nonempty string");
      }
      file.basis[i] = b[i].get<std::string>();
      for (std::size_t j = 0; j < i; ++j) {
        if (file.basis[j] == file.basis[i]) schema_error(source, "basis", "labels must be distinct");
      }
    }
  }
  ScalarMode mode = mode_of(doc, tolerance, source);

  std::map<std::pair<std::size_t, std::size_t>, Vec4> given;
  if (doc.contains("brackets")) {
    const ordered_json& list = doc.at("brackets");
    if (!list.is_array()) schema_error(source, "brackets", "expected an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
      std::string where = "brackets[" + std::to_string(n) + "]";
      const ordered_json& entry = list[n];
      if (!entry.is_object()) schema_error(source, where, "expected an object");
      for (const auto& [key, _] : entry.items()) {
        if (key != "pair" && key != "coeffs") schema_error(source, where + "." + key, "unknown field");
      }
      if (!entry.contains("pair") || !entry.at("pair").is_array() || entry.at("pair").size() != 2) {
        schema_error(source, where + ".pair", "expected two basis labels");
      }
      std::size_t i = label_index(file.basis, entry.at("pair")[0], source, where + ".pair[0]");
      std::size_t j = label_index(file.basis, entry.at("pair")[1], source, where + ".pair[1]");
      if (i == j) schema_error(source, where + ".pair", "a basis vector brackets to zero with itself");
      Vec4 value = Vec4::zero(mode);
      if (entry.contains("coeffs")) {
        const ordered_json& coeffs = entry.at("coeffs");
        if (!coeffs.is_object()) schema_error(source, where + ".coeffs", "expected an object");
        for (const auto& [label, lit] : coeffs.items()) {
          std::string cw = where + ".coeffs." + label;
          std::size_t k = label_index(file.basis, json(label), source, cw);
          if (!lit.is_string()) schema_error(source, cw, "scalar literals must be JSON strings");
          try {
            value[k] = parse_scalar(lit.get<std::string>(), mode);
          } catch (const ScalarParseError& e) {
            schema_error(source, cw, e.what());
          }
        }
      }
      if (given.count({i, j})) schema_error(source, where, "pair listed twice");
      if (auto it = given.find({j, i}); it != given.end()) {
        for (std::size_t k = 0; k < kDim; ++k) {
          if (!it->second[k].identical(-value[k])) {
            schema_error(source, where, "inconsistent with the reversed pair listed earlier");
          }
        }
      }
      given.emplace(std::make_pair(i, j), value);
    }
  }

  Tensor3 c = Tensor3::zero(mode);
  for (const auto& [pair, value] : given) {
    for (std::size_t k = 0; k < kDim; ++k) {
      c(pair.first, pair.second, k) = value[k];
      c(pair.second, pair.first, k) = -value[k];
    }
  }
  file.algebra = LieAlgebra4(std::move(c));

  if (doc.contains("metadata")) {
    const ordered_json& meta = doc.at("metadata");
    if (!meta.is_object()) schema_error(source, "metadata", "expected an object");
    for (const auto& [key, value] : meta.items()) {
      if (key == "name" || key == "family") {
        if (!value.is_string()) schema_error(source, "metadata." + key, "expected a string");
        (key == "name" ? file.name : file.family) = value.get<std::string>();
      } else if (key == "params") {
        if (!value.is_object()) schema_error(source, "metadata.params", "expected an object");
        for (const auto& [pname, lit] : value.items()) {
          if (!lit.is_string()) schema_error(source, "metadata.params." + pname, "expected a string literal");
          file.params.emplace_back(pname, lit.get<std::string>());
        }
      } else {
        schema_error(source, "metadata." + key, "unknown field");
      }
    }
  }
  return file;
}

AlgebraFile read_algebra_file(const std::filesystem::path& path, double tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AlgebraFileError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str(), tolerance, path.string());
}

LieAlgebra4 parse_algebra(const std::filesystem::path& path, double tolerance) {
  return read_algebra_file(path, tolerance).algebra;
}

std::string algebra_file_json(const AlgebraFile& file) {
  ordered_json doc;
  doc["basis"] = file.basis;
  doc["scalars"] = file.algebra.mode().is_exact() ? "rational" : "float";
  ordered_json brackets = ordered_json::array();
  for (const auto& [i, j] : kBracketDisplayOrder) {
    Vec4 v = file.algebra.bracket(i, j);
    ordered_json coeffs = ordered_json::object();
    for (std::size_t k = 0; k < kDim; ++k) {
      if (!v[k].is_zero()) coeffs[file.basis[k]] = v[k].to_string();
    }
    if (coeffs.empty()) continue;
    brackets.push_back(ordered_json{{"pair", {file.basis[i], file.basis[j]}}, {"coeffs", coeffs}});
  }
  doc["brackets"] = brackets;
  if (file.name || file.family || !file.params.empty()) {
    ordered_json meta = ordered_json::object();
    if (file.name) meta["name"] = *file.name;
    if (file.family) meta["family"] = *file.family;
    if (!file.params.empty()) {
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : file.params) params[k] = v;
      meta["params"] = params;
    }
    doc["metadata"] = meta;
  }
  return doc.dump(2) + "\n";
}

void write_algebra_file(const std::filesystem::path& path, const AlgebraFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw AlgebraFileError(path.string() + ": cannot write file");
  out << algebra_file_json(file);
  if (!out) throw AlgebraFileError(path.string() + ": write failed");
}

AlgebraFile family_file(const FamilyParams& p) {
  AlgebraFile f;
  f.algebra = build(p);
  f.family = family_name(p.id);
  f.name = family_name(p.id) + " instance";
  const auto& names = family_spec(p.id).params;
  for (std::size_t n = 0; n < names.size(); ++n) {
    f.params.emplace_back(std::string(coef_name(names[n])), p.values[n].to_string());
  }
  return f;
}

std::optional<FamilyParams> metadata_params(const AlgebraFile& file) {
  if (!file.family) return std::nullopt;
  FamilyId id = parse_family_id(*file.family);
  std::vector<std::pair<std::string, Scalar>> named;
  for (const auto& [k, v] : file.params) named.emplace_back(k, parse_scalar(v, file.algebra.mode()));
  return make_params(id, named);
}

}  // namespace lieclass
