#include "doctest.h"
#include "lieclass/families.hpp"
#include "lieclass/gray_hervella.hpp"
#include "lieclass/hermitian.hpp"
#include "support.hpp"

using namespace lieclass;
using namespace testing_support;

namespace {

ScalarMode ex = ScalarMode::exact();
AlmostComplexJ J(ex);
Vec4 b(std::size_t i) { return Vec4::basis(i, ex); }
Scalar R(long n, long d = 1) { return Scalar::rational(n, d); }

WTensor random_w(std::mt19937_64& rng) {
  Tensor3 raw = Tensor3::zero(ex);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k) raw(i, j, k) = S(rand_rat(rng));
  return WTensor::project(raw);
}

Scalar bar_oracle(const Tensor3& a, std::size_t z) {
  Scalar s = Scalar();
  for (std::size_t i = 0; i < kDim; ++i) s += a(i, i, z);
  return s;
}

Scalar bar_oracle(const Tensor3& a, const Vec4& z) {
  Scalar s = Scalar();
  for (std::size_t k = 0; k < kDim; ++k) s += z[k] * bar_oracle(a, k);
  return s;
}

/// a(Jx, Jy, z) on basis indices.
Scalar twist_first(const Tensor3& a, std::size_t i, std::size_t j, std::size_t k) {
  return a.eval(J.image(i), J.image(j), b(k));
}

}  // namespace

TEST_CASE("membership defect") {
  Tensor3 t = Tensor3::zero(ex);
  CHECK(w_membership_defect(t) == 0);
  t(X, Y, Z) = R(1);
  CHECK_FALSE(w_membership_defect(t).is_zero());
  CHECK_THROWS_AS(WTensor{t}, NotInW);
  CHECK_THROWS_AS(project_fine(t), NotInW);
}

TEST_CASE("nabla omega lies in W for every family") {
  for (int f = 1; f <= kFamilyCount; ++f)
    for (std::uint64_t s = 0; s < 5; ++s) {
      LieAlgebra4 L = build(sample(static_cast<FamilyId>(f), s, SampleMode::generic));
      CHECK(w_membership_defect(nabla_omega(L, J).values) == 0);
    }
}

TEST_CASE("decomposition of random W tensors") {
  std::mt19937_64 rng(51);
  for (int n = 0; n < 200; ++n) {
    WTensor a = random_w(rng);
    CHECK(w_membership_defect(a.tensor()) == 0);
    WDecomposition d = project_fine(a);
    const WTensor* parts[4] = {&d.w1, &d.w2, &d.w3, &d.w4};
    CHECK(d.w1.tensor() + d.w2.tensor() + d.w3.tensor() + d.w4.tensor() == a.tensor());
    for (int i = 0; i < 4; ++i) {
      CHECK(w_membership_defect(parts[i]->tensor()) == 0);
      CHECK(d.norms[i] == w_inner(*parts[i], *parts[i]));
      for (int j = i + 1; j < 4; ++j) CHECK(w_inner(*parts[i], *parts[j]) == 0);
    }
    CHECK(d.w1.tensor().is_zero());
    CHECK(d.w3.tensor().is_zero());
    CHECK(bar_vector(d.w4) == bar_vector(a));
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        for (std::size_t k = 0; k < kDim; ++k) {
          // W2: cyclic sum vanishes; W4 from the displayed formula with n = 2.
          CHECK(d.w2(i, j, k) + d.w2(k, i, j) + d.w2(j, k, i) == 0);
          CHECK(d.w2(i, j, k) == -twist_first(d.w2.tensor(), i, j, k));
          Vec4 x = b(i), y = b(j), z = b(k);
          Scalar w4 = (dot(x, y) * bar_oracle(a.tensor(), z) - dot(x, z) * bar_oracle(a.tensor(), y) -
                       dot(x, J.apply(y)) * bar_oracle(a.tensor(), J.apply(z)) +
                       dot(x, J.apply(z)) * bar_oracle(a.tensor(), J.apply(y))) /
                      2;
          CHECK(d.w4(i, j, k) == w4);
        }
  }
}

TEST_CASE("coarse split into the J-anti-invariant and J-invariant parts") {
  std::mt19937_64 rng(52);
  for (int n = 0; n < 100; ++n) {
    WTensor a = random_w(rng);
    auto [a12, a34] = project_12_34(a);
    CHECK(a12.tensor() + a34.tensor() == a.tensor());
    CHECK(w_inner(a12, a34) == 0);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        for (std::size_t k = 0; k < kDim; ++k) {
          CHECK(a12(i, j, k) + twist_first(a12.tensor(), i, j, k) == 0);
          CHECK(a34(i, j, k) - twist_first(a34.tensor(), i, j, k) == 0);
        }
    auto [again12, again34] = project_12_34(a12);
    CHECK(again12.tensor() == a12.tensor());
    CHECK(again34.tensor().is_zero());
  }
  WTensor zero = WTensor::project(Tensor3::zero(ex));
  auto [z12, z34] = project_12_34(zero);
  CHECK(z12.tensor().is_zero());
  CHECK(z34.tensor().is_zero());
}

TEST_CASE("inner product and bar operator") {
  std::mt19937_64 rng(53);
  for (int n = 0; n < 50; ++n) {
    WTensor a = random_w(rng), c = random_w(rng);
    Scalar sq = Scalar();
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        for (std::size_t k = 0; k < kDim; ++k) sq += a(i, j, k) * a(i, j, k);
    CHECK(w_inner(a, a) == sq);
    CHECK(w_inner(a, c) == w_inner(c, a));
    CHECK((w_inner(a, a) == 0) == a.tensor().is_zero());
    // bar in a rotated orthonormal frame: rotate X,Y by (3/5, 4/5) and Z,W by (5/13, 12/13).
    Vec4 f[4] = {Vec4(R(3, 5), R(4, 5), R(0), R(0)), Vec4(R(-4, 5), R(3, 5), R(0), R(0)),
                 Vec4(R(0), R(0), R(5, 13), R(12, 13)), Vec4(R(0), R(0), R(-12, 13), R(5, 13))};
    Vec4 z(S(rand_rat(rng)), S(rand_rat(rng)), S(rand_rat(rng)), S(rand_rat(rng)));
    Scalar rotated = Scalar();
    for (const auto& v : f) rotated += a.tensor().eval(v, v, z);
    CHECK(bar(a, z) == rotated);
    CHECK(bar(a, z) == bar_oracle(a.tensor(), z));
  }
}

TEST_CASE("classification of nabla omega matches d omega and N") {
  for (int f = 1; f <= kFamilyCount; ++f)
    for (SampleMode m : kSampleModes) {
      FamilyId id = static_cast<FamilyId>(f);
      if (!mode_achievable(id, m)) continue;
      for (std::uint64_t s = 0; s < 5; ++s) {
        LieAlgebra4 L = build(sample(id, 500 + s, m));
        HermitianClass c = class_from_decomposition(project_fine(nabla_omega(L, J).values));
        bool ak = d_omega_table(L, J).is_zero();
        bool in = nijenhuis_max_abs(L, J).is_zero();
        HermitianClass expect = ak && in ? HermitianClass::Kahler
                                : ak     ? HermitianClass::AlmostKahler
                                : in     ? HermitianClass::Integrable
                                         : HermitianClass::AlmostHermitian;
        CHECK(c == expect);
      }
    }
}

TEST_CASE("spot classifications") {
  auto cls = [](const FamilyParams& p) {
    return class_from_decomposition(project_fine(nabla_omega(build(p), J).values));
  };
  CHECK(cls(make_params(FamilyId::g16, {{"beta", R(1)}, {"w1", R(0)}, {"w2", R(0)}, {"theta1", R(0)}, {"theta2", R(0)}})) == HermitianClass::Kahler);
  CHECK(cls(make_params(FamilyId::g4, {{"lambda", R(1)}, {"z2", R(1)}, {"w1", R(2)}, {"w2", R(0)}})) ==
        HermitianClass::AlmostKahler);
  CHECK(cls(sample(FamilyId::g10, 9, SampleMode::generic)) == HermitianClass::Integrable);

  auto g15 = project_fine(nabla_omega(build(make_params(FamilyId::g15, {{"alpha", R(1)}, {"w1", R(0)}, {"w2", R(0)}})), J).values);
  CHECK(g15.w2.tensor().is_zero());
  CHECK_FALSE(g15.w4.tensor().is_zero());

  WTensor g7(nabla_omega(build(make_params(FamilyId::g7, {{"z2", R(1)}, {"w1", R(1)}, {"w2", R(0)}, {"theta1", R(0)}, {"theta2", R(0)}})), J).values);
  auto [a12, a34] = project_12_34(g7);
  CHECK(a12.tensor() == g7.tensor());
  CHECK(a34.tensor().is_zero());
  CHECK_FALSE(g7.tensor().is_zero());
}

TEST_CASE("labels") {
  CHECK(class_label(HermitianClass::Kahler) == "K");
  CHECK(class_label(HermitianClass::AlmostKahler) == "AK");
  CHECK(class_label(HermitianClass::Integrable) == "I");
}
