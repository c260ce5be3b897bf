#include "doctest.h"
#include "lieclass/families.hpp"
#include "lieclass/hermitian.hpp"
#include "lieclass/table.hpp"
#include "support.hpp"

using namespace lieclass;
using namespace testing_support;

namespace {

using C = Coef;
ScalarMode ex = ScalarMode::exact();
Scalar R(long n, long d = 1) { return Scalar::rational(n, d); }

FamilyId fid(int n) { return static_cast<FamilyId>(n); }

bool has_match(const IdentifyResult& r, FamilyId id) {
  for (const auto& m : r.matches)
    if (m.params.id == id) return true;
  return false;
}

const NearMiss* miss_for(const IdentifyResult& r, FamilyId id) {
  for (const auto& m : r.near_misses)
    if (m.id == id) return &m;
  return nullptr;
}

}  // namespace

TEST_CASE("names and parsing") {
  CHECK(family_name(FamilyId::g7) == "g7");
  CHECK(parse_family_id("g17") == FamilyId::g17);
  CHECK(parse_family_id("3") == FamilyId::g3);
  CHECK_THROWS(parse_family_id("g21"));
  CHECK_THROWS(parse_family_id("x"));
  CHECK(parse_sample_mode("ak") == SampleMode::ak);
  CHECK_THROWS(parse_sample_mode("kahler"));
  CHECK(all_families().size() == 20);
  for (int f = 1; f <= kFamilyCount; ++f) CHECK(family_spec(fid(f)).id == fid(f));
}

TEST_CASE("make_params insists on the full signature") {
  CHECK_THROWS_AS(make_params(FamilyId::g1, {{"lambda", R(1)}, {"r", R(1)}, {"w1", R(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(make_params(FamilyId::g1, {{"lambda", R(1)}, {"r", R(1)}, {"w1", R(0)}, {"w2", R(0)}, {"z1", R(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_params(FamilyId::g1, {{"lambda", R(1)}, {"lambda", R(2)}, {"r", R(1)}, {"w1", R(0)}, {"w2", R(0)}}),
      std::invalid_argument);
}

TEST_CASE("templates on hand-computed instances") {
  auto g1 = adapted_params(make_params(FamilyId::g1, {{"lambda", R(1)}, {"r", R(2)}, {"w1", R(3)}, {"w2", R(0)}}));
  CHECK(to_algebra(g1).bracket(Y, X) == Vec4(R(2), R(0), R(0), R(6)));

  auto g4 = adapted_params(make_params(FamilyId::g4, {{"lambda", R(1)}, {"z2", R(1)}, {"w1", R(2)}, {"w2", R(0)}}));
  CHECK(g4[C::alpha] == 1);
  CHECK(g4[C::r] == -1);
  CHECK(g4[C::theta2] == -2);

  // r = 0 breaks the case header, so only the raw template is available here.
  auto g6 = evaluate_template(make_params(
      FamilyId::g6, {{"z1", R(1)}, {"z2", R(0)}, {"z3", R(1)}, {"r", R(0)}, {"theta1", R(0)}, {"theta2", R(0)}}));
  CHECK(g6[C::w1] == -1);
  CHECK(g6[C::z4] == 0);
  CHECK(g6[C::w2] == 0);

  auto g11 = adapted_params(make_params(
      FamilyId::g11, {{"z1", R(2)}, {"z2", R(1)}, {"z3", R(4)}, {"w1", R(6)}, {"theta1", R(0)}, {"theta2", R(0)}}));
  CHECK(g11[C::z4] == 2);
  CHECK(g11[C::w2] == 3);

  auto g17 = adapted_params(make_params(FamilyId::g17, {{"alpha", R(1)}, {"a", R(2)}, {"w1", R(1)}, {"w2", R(1)}}));
  CHECK(g17[C::z1] == -2);
  CHECK(g17[C::z2] == -2);
  CHECK(g17[C::z3] == -4);
  CHECK(g17[C::z4] == -4);

  auto g18 = adapted_params(make_params(
      FamilyId::g18, {{"beta", R(2)}, {"b", R(1)}, {"z3", R(1)}, {"z4", R(1)}, {"theta1", R(0)}, {"theta2", R(0)}}));
  CHECK(g18[C::z1] == 2);
  CHECK(g18[C::w1] == -4);
  CHECK(g18[C::w2] == -4);

  auto g20 = adapted_params(
      make_params(FamilyId::g20, {{"alpha", R(2)}, {"a", R(1)}, {"beta", R(4)}, {"w1", R(2)}, {"w2", R(0)}}));
  CHECK(g20[C::b] == 2);
  CHECK(g20[C::z1] == -1);
  CHECK(g20[C::z3] == R(-1, 2));

  auto g7 = adapted_params(
      make_params(FamilyId::g7, {{"z2", R(3)}, {"w1", R(1)}, {"w2", R(0)}, {"theta1", R(0)}, {"theta2", R(0)}}));
  CHECK(g7[C::r] == 6);
  CHECK(g7[C::z1] == 0);
  CHECK(g7[C::z3] == 0);
  CHECK(g7[C::z4] == 0);
}

TEST_CASE("constraint violations name the inequality") {
  auto msg = [](const FamilyParams& p) -> std::string {
    try {
      validate(p);
    } catch (const ConstraintViolation& e) {
      return e.what();
    }
    return "";
  };
  CHECK(msg(make_params(FamilyId::g10, {{"alpha", R(1)}, {"a", R(0)}, {"beta", R(0)}, {"b", R(0)}})).find("case E") !=
        std::string::npos);
  std::string g7 =
      msg(make_params(FamilyId::g7, {{"z2", R(0)}, {"w1", R(1)}, {"w2", R(0)}, {"theta1", R(0)}, {"theta2", R(0)}}));
  CHECK(g7.find("r != 0") != std::string::npos);
  CHECK(msg(make_params(FamilyId::g1, {{"lambda", R(0)}, {"r", R(1)}, {"w1", R(0)}, {"w2", R(0)}})) ==
        "g1 requires lambda != 0");
  CHECK_THROWS_AS(build(make_params(FamilyId::g1, {{"lambda", R(1)}, {"r", R(0)}, {"w1", R(0)}, {"w2", R(0)}})),
                  ConstraintViolation);
}

TEST_CASE("every sample is a Lie algebra and round-trips through extraction") {
  for (int f = 1; f <= kFamilyCount; ++f)
    for (SampleMode m : kSampleModes) {
      if (!mode_achievable(fid(f), m)) {
        CHECK_THROWS_AS(sample(fid(f), 1, m), UnachievableMode);
        continue;
      }
      for (std::uint64_t s = 0; s < 100; ++s) {
        FamilyParams p = sample(fid(f), s, m);
        AdaptedParams full = adapted_params(p);
        LieAlgebra4 L = to_algebra(full);
        CHECK(jacobi_defect(L) == 0);
        CHECK(extract_adapted(L) == full);
        CHECK(case_of(full) == family_spec(fid(f)).case_tag);
        if (s < 10) {
          IdentifyResult id = identify(full);
          CHECK(has_match(id, fid(f)));
          for (const auto& match : id.matches)
            if (match.params.id == fid(f)) CHECK(match.params == p);
        }
      }
    }
}

TEST_CASE("sampling is deterministic and respects the target cell") {
  for (int f = 1; f <= kFamilyCount; ++f)
    for (SampleMode m : kSampleModes) {
      if (!mode_achievable(fid(f), m)) continue;
      for (std::uint64_t s = 0; s < 20; ++s) {
        FamilyParams p = sample(fid(f), s, m);
        CHECK(p == sample(fid(f), s, m));
        Conditions c = conditions(p);
        if (m == SampleMode::ak) CHECK(c.ak);
        if (m == SampleMode::i) CHECK(c.i);
        if (m == SampleMode::k) CHECK(c.k);
        CHECK(c.k == (c.ak && c.i));
      }
    }
  FamilyParams g1 = sample(FamilyId::g1, 4, SampleMode::ak);
  CHECK(g1.get(C::w1) == 0);
  CHECK_THROWS_AS(sample(FamilyId::g10, 4, SampleMode::k), UnachievableMode);
}

TEST_CASE("table rows agree with the d omega, N and projection routes") {
  for (int f = 1; f <= kFamilyCount; ++f)
    for (SampleMode m : kSampleModes) {
      if (!mode_achievable(fid(f), m)) continue;
      for (std::uint64_t s = 0; s < 10; ++s) {
        SampleCheck sc = check_sample(sample(fid(f), 900 + s, m));
        CHECK(sc.jacobi_ok);
        CHECK(sc.routes_agree());
      }
    }
}

TEST_CASE("approximate samples agree with the exact ones") {
  for (int f = 1; f <= kFamilyCount; ++f)
    for (SampleMode m : kSampleModes) {
      if (!mode_achievable(fid(f), m)) continue;
      FamilyParams q = sample(fid(f), 77, m);
      FamilyParams d = sample(fid(f), 77, m, ScalarMode::approx(1e-9));
      for (std::size_t n = 0; n < q.values.size(); ++n)
        CHECK(d.values[n].to_double() == doctest::Approx(q.values[n].to_double()));
      SampleCheck sq = check_sample(q), sd = check_sample(d);
      CHECK(sd.routes_agree());
      CHECK(sq.direct == sd.direct);
    }
}

TEST_CASE("table cells on named instances") {
  auto g2 = conditions(make_params(FamilyId::g2, {{"lambda", R(1)}, {"alpha", R(0)}, {"beta", R(1)}, {"w1", R(1)}, {"w2", R(1)}}));
  CHECK(g2.ak);
  CHECK_FALSE(g2.i);
  CHECK_FALSE(g2.k);

  for (std::uint64_t s = 0; s < 20; ++s) {
    Conditions g13 = conditions(sample(FamilyId::g13, s, SampleMode::generic));
    CHECK_FALSE(g13.i);
    CHECK_FALSE(g13.k);
  }

  auto g8 = conditions(make_params(FamilyId::g8, {{"z2", R(0)}, {"z4", R(1)}, {"w2", R(-1)}, {"r", R(1)}, {"theta1", R(0)}, {"theta2", R(0)}}));
  CHECK(g8.ak);
  CHECK(g8.i);
  CHECK(g8.k);

  auto g9 = conditions(make_params(FamilyId::g9, {{"z2", R(1)}, {"z3", R(1)}, {"z4", R(0)}, {"theta1", R(1)}, {"theta2", R(0)}}));
  CHECK_FALSE(g9.ak);
  CHECK_FALSE(g9.i);

  auto g10 = make_params(FamilyId::g10, {{"alpha", R(1)}, {"a", R(0)}, {"beta", R(0)}, {"b", R(1)}});
  CHECK_FALSE(conditions(g10).ak);
  CHECK(conditions(g10).i);
}

TEST_CASE("g5 almost Kahler branches match the signed display") {
  AlmostComplexJ J(ex);
  int plus = 0, minus = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    FamilyParams fp = sample(FamilyId::g5, s, SampleMode::ak);
    AdaptedParams p = adapted_params(fp);
    const Scalar &al = p[C::alpha], &a = p[C::a], &be = p[C::beta], &b = p[C::b], &r = p[C::r];
    CHECK(r * r == 4 * (al * b - a * be));
    // r = +-2t with t = sqrt(alpha b - a beta) > 0; the upper signs go with r > 0.
    Scalar t = r.abs() / 2;
    CHECK(t * t == al * b - a * be);
    Scalar sg = r.sign() > 0 ? R(1) : R(-1);
    (r.sign() > 0 ? plus : minus) += 1;
    CHECK(p[C::z1] == -sg * (be * b - al * a) / t);
    CHECK(p[C::w1] == -sg * (al * al - be * be) / t);
    CHECK(p[C::z2] == -sg * (al * b + be * a) / t);
    CHECK(p[C::w2] == sg * 2 * al * be / t);
    CHECK(p[C::z3] == -sg * (b * b - a * a) / t);
    CHECK(p[C::z4] == -sg * 2 * a * b / t);
    CHECK(p[C::theta1] == 2 * a);
    CHECK(p[C::theta2] == -2 * al);
    CHECK(d_omega_table(to_algebra(p), J).is_zero());
  }
  CHECK(plus > 0);
  CHECK(minus > 0);
}

TEST_CASE("identify") {
  auto g1 = adapted_params(make_params(FamilyId::g1, {{"lambda", R(1)}, {"r", R(1)}, {"w1", R(0)}, {"w2", R(0)}}));
  CHECK(has_match(identify(g1), FamilyId::g1));

  AdaptedParams p = AdaptedParams::zero(ex);
  p[C::z1] = R(1);
  p[C::z2] = R(2);
  p[C::z3] = R(3);
  p[C::z4] = R(6);
  IdentifyResult r11 = identify(p);
  CHECK(r11.case_tag == CaseTag::F);
  CHECK(has_match(r11, FamilyId::g11));

  // A g8 point with z2 = z4 = w2 = 0 sits in case D; the g14 pattern misses only on r.
  auto g8 = adapted_params(make_params(FamilyId::g8, {{"z2", R(0)}, {"z4", R(0)}, {"w2", R(0)}, {"r", R(1)}, {"theta1", R(1)}, {"theta2", R(2)}}));
  IdentifyResult r8 = identify(g8);
  CHECK(has_match(r8, FamilyId::g8));
  CHECK_FALSE(has_match(r8, FamilyId::g14));
  const NearMiss* m14 = miss_for(r8, FamilyId::g14);
  REQUIRE(m14 != nullptr);
  REQUIRE(m14->residual.has_value());
  CHECK(*m14->residual == 1);
  CHECK(m14->reason.find("r") != std::string::npos);

  // Not every adapted point is a Lie algebra; such points match nothing.
  std::mt19937_64 rng(61);
  IdentifyResult none = identify(random_params(rng));
  CHECK(none.matches.empty());
  CHECK(none.near_misses.size() == 20);
}

TEST_CASE("impossibility certificates") {
  const auto& certs = impossibility_certificates();
  CHECK_FALSE(certs.empty());
  for (const auto& c : certs) {
    CertificateCheck chk = verify_certificate(c);
    INFO(family_name(c.family), " ", mode_name(c.cell), ": ", c.statement, " / ", chk.detail);
    CHECK(chk.identities_hold);
    CHECK(chk.factor_nonzero);
    CHECK(chk.grid_points > 0);
  }
  for (int f = 1; f <= kFamilyCount; ++f)
    for (SampleMode m : {SampleMode::ak, SampleMode::i, SampleMode::k})
      if (!mode_achievable(fid(f), m)) CHECK(certificate_for(fid(f), m) != nullptr);
}

TEST_CASE("a broken certificate is caught") {
  Certificate c = *certificate_for(FamilyId::g11, SampleMode::i);
  auto rhs = c.rhs.at(0);
  c.rhs.at(0) = [rhs](const AdaptedParams& x) { return rhs(x) + 1; };
  CHECK_FALSE(verify_certificate(c).identities_hold);
}

TEST_CASE("structure labels are informational") {
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(is_nilpotent(build(sample(FamilyId::g13, s, SampleMode::generic))));
  CHECK(family_spec(FamilyId::g16).structure == "not solvable in general");
}
