#include <filesystem>

#include "doctest.h"
#include "json.hpp"
#include "lieclass/algebra_file.hpp"

using namespace lieclass;

namespace {

Scalar R(long n, long d = 1) { return Scalar::rational(n, d); }
ScalarMode ex = ScalarMode::exact();

std::string error_of(const std::string& text) {
  try {
    parse_algebra_json(text);
  } catch (const AlgebraFileError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal file") {
  AlgebraFile f = parse_algebra_json(R"({"brackets": [{"pair": ["W","Z"], "coeffs": {"W": "1"}}]})");
  CHECK(f.algebra.bracket(W, Z) == Vec4::basis(W, ex));
  CHECK(f.algebra.bracket(Z, W) == -Vec4::basis(W, ex));
  CHECK(f.algebra.bracket(X, Y).is_zero());
  CHECK(f.algebra.mode().is_exact());
}

TEST_CASE("both orientations are accepted when consistent") {
  AlgebraFile f = parse_algebra_json(
      R"({"brackets": [{"pair": ["W","Z"], "coeffs": {"W": "1"}}, {"pair": ["Z","W"], "coeffs": {"W": "-1"}}]})");
  CHECK(f.algebra.bracket(W, Z)[W] == 1);
  CHECK(error_of(R"({"brackets": [{"pair": ["W","Z"], "coeffs": {"W": "1"}}, {"pair": ["Z","W"], "coeffs": {"W": "1"}}]})")
            .find("reversed") != std::string::npos);
  CHECK(error_of(R"({"brackets": [{"pair": ["W","Z"], "coeffs": {"W": "1"}}, {"pair": ["W","Z"], "coeffs": {"W": "1"}}]})")
            .find("twice") != std::string::npos);
}

TEST_CASE("schema errors carry a location") {
  CHECK(error_of(R"({"brackets": [{"pair": ["W","Z"], "coeffs": {"Q": "1"}}]})").find("unknown basis label") !=
        std::string::npos);
  CHECK(error_of(R"({"brackets": [{"pair": ["W","Q"]}]})").find("brackets[0].pair[1]") != std::string::npos);
  CHECK(error_of(R"({"brackets": [{"pair": ["W","Z"], "coeffs": {"W": 1}}]})").find("JSON strings") !=
        std::string::npos);
  CHECK(error_of(R"({"brackets": [{"pair": ["W","Z"], "coeffs": {"W": "0.5"}}]})").find("brackets[0].coeffs.W") !=
        std::string::npos);
  CHECK(error_of(R"({"brackets": [{"pair": ["W","W"]}]})") != "");
  CHECK(error_of(R"({"bracket": []})").find("unknown field") != std::string::npos);
  CHECK(error_of(R"({"scalars": "complex"})") != "");
  CHECK(error_of(R"({"basis": ["X","X","Z","W"]})").find("distinct") != std::string::npos);
  CHECK(error_of("[1,2").find("invalid JSON") != std::string::npos);
  CHECK(error_of("[1,2]").find("object") != std::string::npos);
}

TEST_CASE("float files and custom labels") {
  AlgebraFile f = parse_algebra_json(
      R"({"basis": ["e1","e2","e3","e4"], "scalars": "float", "brackets": [{"pair": ["e4","e3"], "coeffs": {"e4": "0.5"}}]})",
      1e-7);
  CHECK(f.algebra.mode() == ScalarMode::approx(1e-7));
  CHECK(f.algebra.bracket(W, Z)[W].to_double() == 0.5);
  CHECK(f.basis[0] == "e1");
}

TEST_CASE("family files round-trip exactly") {
  for (int n = 1; n <= kFamilyCount; ++n) {
    FamilyId id = static_cast<FamilyId>(n);
    FamilyParams p = sample(id, 3, SampleMode::generic);
    AlgebraFile f = family_file(p);
    std::string text = algebra_file_json(f);
    AlgebraFile back = parse_algebra_json(text);
    CHECK(extract_adapted(back.algebra) == adapted_params(p));
    CHECK(back.family.value() == family_name(id));
    CHECK(metadata_params(back).value() == p);
    CHECK(algebra_file_json(back) == text);
  }
}

TEST_CASE("files on disk") {
  std::filesystem::path dir = LIECLASS_TEST_TMP;
  std::filesystem::create_directories(dir);
  auto path = dir / "g3.json";
  FamilyParams p = make_params(FamilyId::g3, {{"alpha", R(1)}, {"beta", R(0)}, {"w1", R(0)}, {"w2", R(0)}, {"theta2", R(-2)}});
  write_algebra_file(path, family_file(p));
  LieAlgebra4 L = parse_algebra(path);
  CHECK(L.bracket(Y, X) == R(-2) * Vec4::basis(W, ex));
  CHECK_THROWS_AS(read_algebra_file(dir / "missing.json"), AlgebraFileError);
}

TEST_CASE("bracket order in emitted files") {
  AlgebraFile f;
  f.algebra = LieAlgebra4::from_brackets(ex, {{Y, X, Vec4::basis(Z, ex)}, {W, Z, Vec4::basis(W, ex)}});
  std::string text = algebra_file_json(f);
  auto doc = nlohmann::json::parse(text);
  CHECK(doc["brackets"][0]["pair"] == nlohmann::json({"W", "Z"}));
  CHECK(doc["brackets"][1]["pair"] == nlohmann::json({"Y", "X"}));
  CHECK(text.find("metadata") == std::string::npos);
}
