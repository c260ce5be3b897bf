#include "lieclass/families.hpp"

#include <charconv>
#include <random>

#include "lieclass/hermitian.hpp"

namespace lieclass {

namespace {

using C = Coef;
using Residual = std::function<Scalar(const AdaptedParams&)>;

Scalar sq(const Scalar& x) { return x * x; }

Residual coef(C c) {
  return [c](const AdaptedParams& p) { return p[c]; };
}

ConditionCell equations(std::string text, std::vector<Residual> residuals) {
  ConditionCell cell;
  cell.kind = ConditionCell::Kind::equations;
  cell.text = std::move(text);
  cell.residuals = std::move(residuals);
  return cell;
}

ConditionCell never() { return ConditionCell{ConditionCell::Kind::never, "never true", {}}; }
ConditionCell always() { return ConditionCell{ConditionCell::Kind::always, "always true", {}}; }

std::vector<Residual> concat(std::vector<Residual> a, const std::vector<Residual>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<Residual> kThetaZero = {coef(C::theta1), coef(C::theta2)};
const std::vector<Residual> kWZero = {coef(C::w1), coef(C::w2)};

AdaptedParams keep(AdaptedParams p) { return p; }

std::vector<FamilySpec> make_families() {
  std::vector<FamilySpec> f;
  auto add = [&](FamilyId id, CaseTag tag, std::vector<C> params, std::vector<C> nonzero,
                 std::function<AdaptedParams(AdaptedParams)> fill, ConditionCell ak, ConditionCell i,
                 ConditionCell k, std::string structure) {
    f.push_back(FamilySpec{id, tag, std::move(params), std::move(nonzero), std::move(fill), std::move(ak),
                           std::move(i), std::move(k), std::move(structure)});
  };

  add(FamilyId::g1, CaseTag::A, {C::lambda, C::r, C::w1, C::w2}, {C::lambda, C::r},
      [](AdaptedParams p) {
        p[C::theta2] = p[C::r] * p[C::w1] / p[C::lambda];
        return p;
      },
      equations("w1 = 0", {coef(C::w1)}), equations("w1 = w2 = 0", kWZero),
      equations("w1 = w2 = 0", kWZero), "solvable");

  add(FamilyId::g2, CaseTag::A, {C::lambda, C::alpha, C::beta, C::w1, C::w2}, {C::lambda}, keep,
      equations("alpha = 0", {coef(C::alpha)}), equations("w1 = w2 = 0", kWZero),
      equations("alpha = 0 and w1 = w2 = 0", concat({coef(C::alpha)}, kWZero)), "solvable");

  Residual g3_ak = [](const AdaptedParams& p) { return p[C::theta2] + 2 * p[C::alpha]; };
  add(FamilyId::g3, CaseTag::A, {C::alpha, C::beta, C::w1, C::w2, C::theta2}, {C::alpha, C::theta2},
      [](AdaptedParams p) {
        p[C::lambda] = -2 * p[C::alpha];
        return p;
      },
      equations("theta2 = -2 alpha != 0", {g3_ak}), equations("w1 = w2 = 0", kWZero),
      equations("theta2 = -2 alpha != 0 and w1 = w2 = 0", concat({g3_ak}, kWZero)), "solvable");

  add(FamilyId::g4, CaseTag::B, {C::lambda, C::z2, C::w1, C::w2}, {C::lambda},
      [](AdaptedParams p) {
        p[C::alpha] = p[C::lambda];
        p[C::r] = -p[C::z2];
        p[C::theta2] = -p[C::z2] * p[C::w1] / p[C::lambda];
        return p;
      },
      equations("2 lambda^2 = z2 w1", {[](const AdaptedParams& p) { return 2 * sq(p[C::lambda]) - p[C::z2] * p[C::w1]; }}),
      equations("w1 = -2 z2 and w2 = 0",
                {[](const AdaptedParams& p) { return p[C::w1] + 2 * p[C::z2]; }, coef(C::w2)}),
      never(), "solvable");

  add(FamilyId::g5, CaseTag::C, {C::alpha, C::a, C::beta, C::b, C::r}, {C::r},
      [](AdaptedParams p) {
        const Scalar& al = p[C::alpha];
        const Scalar& a = p[C::a];
        const Scalar& be = p[C::beta];
        const Scalar& b = p[C::b];
        const Scalar& r = p[C::r];
        Scalar d = a * be - al * b;
        p[C::z1] = r * (be * b - al * a) / (2 * d);
        p[C::w1] = r * (sq(al) - sq(be)) / (2 * d);
        p[C::z2] = r * (al * b + be * a) / (2 * d);
        p[C::w2] = -r * al * be / d;
        p[C::z3] = r * (sq(b) - sq(a)) / (2 * d);
        p[C::z4] = r * a * b / d;
        p[C::theta1] = -a * sq(r) / (2 * d);
        p[C::theta2] = al * sq(r) / (2 * d);
        return p;
      },
      equations("r^2 = 4 (alpha b - a beta)",
                {[](const AdaptedParams& p) {
                  return sq(p[C::r]) - 4 * (p[C::alpha] * p[C::b] - p[C::a] * p[C::beta]);
                }}),
      equations("a = beta and b = -alpha", {[](const AdaptedParams& p) { return p[C::a] - p[C::beta]; },
                                            [](const AdaptedParams& p) { return p[C::b] + p[C::alpha]; }}),
      never(), "solvable");

  std::vector<Residual> g6_i = {
      [](const AdaptedParams& p) { return p[C::r] - (sq(p[C::z1]) + sq(p[C::z3])) / p[C::z3]; },
      [](const AdaptedParams& p) { return p[C::z2] - (sq(p[C::z1]) - sq(p[C::z3])) / (2 * p[C::z3]); }};
  add(FamilyId::g6, CaseTag::D, {C::z1, C::z2, C::z3, C::r, C::theta1, C::theta2}, {C::z1, C::z3},
      [](AdaptedParams p) {
        p[C::z4] = p[C::z3] * (p[C::r] + 2 * p[C::z2]) / (2 * p[C::z1]);
        p[C::w1] = -sq(p[C::z1]) / p[C::z3];
        p[C::w2] = p[C::z1] * (p[C::r] - 2 * p[C::z2]) / (2 * p[C::z3]);
        return p;
      },
      equations("theta1 = theta2 = 0", kThetaZero),
      equations("r = (z1^2 + z3^2)/z3 and z2 = (z1^2 - z3^2)/(2 z3)", g6_i),
      equations("theta1 = theta2 = 0, r = (z1^2 + z3^2)/z3 and z2 = (z1^2 - z3^2)/(2 z3)",
                concat(kThetaZero, g6_i)),
      "solvable");

  std::vector<Residual> g7_i = {[](const AdaptedParams& p) { return p[C::w1] + 2 * p[C::z2]; }, coef(C::w2)};
  add(FamilyId::g7, CaseTag::D, {C::z2, C::w1, C::w2, C::theta1, C::theta2}, {C::w1},
      [](AdaptedParams p) {
        p[C::r] = 2 * p[C::z2];
        return p;
      },
      equations("theta1 = theta2 = 0", kThetaZero), equations("w1 = -2 z2 and w2 = 0", g7_i),
      equations("theta1 = theta2 = 0, w1 = -2 z2 and w2 = 0", concat(kThetaZero, g7_i)), "solvable");

  std::vector<Residual> z2_z4w2 = {coef(C::z2), [](const AdaptedParams& p) { return p[C::z4] + p[C::w2]; }};
  add(FamilyId::g8, CaseTag::D, {C::z2, C::z4, C::w2, C::r, C::theta1, C::theta2}, {}, keep,
      equations("theta1 = theta2 = 0", kThetaZero), equations("2 z2 = z4 + w2 = 0", z2_z4w2),
      equations("theta1 = theta2 = 0 and 2 z2 = z4 + w2 = 0", concat(kThetaZero, z2_z4w2)), "solvable");

  std::vector<Residual> g9_i = {[](const AdaptedParams& p) { return p[C::z3] - p[C::r]; }, coef(C::z4)};
  add(FamilyId::g9, CaseTag::D, {C::z2, C::z3, C::z4, C::theta1, C::theta2}, {C::z3},
      [](AdaptedParams p) {
        p[C::r] = -2 * p[C::z2];
        return p;
      },
      equations("theta1 = theta2 = 0", kThetaZero), equations("z3 = r and z4 = 0", g9_i),
      equations("theta1 = theta2 = 0, z3 = r and z4 = 0", concat(kThetaZero, g9_i)), "solvable");

  add(FamilyId::g10, CaseTag::E, {C::alpha, C::a, C::beta, C::b}, {}, keep, never(), always(), never(),
      "solvable");

  add(FamilyId::g11, CaseTag::F, {C::z1, C::z2, C::z3, C::w1, C::theta1, C::theta2}, {C::z1},
      [](AdaptedParams p) {
        p[C::z4] = p[C::z2] * p[C::z3] / p[C::z1];
        p[C::w2] = p[C::z2] * p[C::w1] / p[C::z1];
        return p;
      },
      equations("theta1 = theta2 = 0", kThetaZero), never(), never(), "solvable");

  std::vector<Residual> g12_i = {[](const AdaptedParams& p) { return p[C::z3] + p[C::w1]; }};
  add(FamilyId::g12, CaseTag::F, {C::z3, C::w1, C::w2, C::theta1, C::theta2}, {C::w1},
      [](AdaptedParams p) {
        p[C::z4] = p[C::z3] * p[C::w2] / p[C::w1];
        return p;
      },
      equations("theta1 = theta2 = 0", kThetaZero), equations("z3 = -w1", g12_i),
      equations("theta1 = theta2 = 0 and z3 = -w1", concat(kThetaZero, g12_i)), "solvable");

  add(FamilyId::g13, CaseTag::F, {C::z3, C::z4, C::theta1, C::theta2}, {C::z3}, keep,
      equations("theta1 = theta2 = 0", kThetaZero), never(), never(), "nilpotent");

  add(FamilyId::g14, CaseTag::F, {C::z2, C::z4, C::w2, C::theta1, C::theta2}, {}, keep,
      equations("theta1 = theta2 = 0", kThetaZero), equations("2 z2 = z4 + w2 = 0", z2_z4w2),
      equations("theta1 = theta2 = 0 and 2 z2 = z4 + w2 = 0", concat(kThetaZero, z2_z4w2)), "solvable");

  add(FamilyId::g15, CaseTag::F, {C::alpha, C::w1, C::w2}, {C::alpha}, keep, never(),
      equations("w1 = w2 = 0", kWZero), never(), "solvable");

  add(FamilyId::g16, CaseTag::F, {C::beta, C::w1, C::w2, C::theta1, C::theta2}, {C::beta}, keep,
      equations("theta1 = theta2 = 0", kThetaZero), equations("w1 = w2 = 0", kWZero),
      equations("theta1 = theta2 = 0 and w1 = w2 = 0", concat(kThetaZero, kWZero)), "not solvable in general");

  add(FamilyId::g17, CaseTag::F, {C::alpha, C::a, C::w1, C::w2}, {C::alpha, C::a},
      [](AdaptedParams p) {
        const Scalar& al = p[C::alpha];
        const Scalar& a = p[C::a];
        p[C::z1] = -a * p[C::w1] / al;
        p[C::z2] = -a * p[C::w2] / al;
        p[C::z3] = -sq(a) * p[C::w1] / sq(al);
        p[C::z4] = -sq(a) * p[C::w2] / sq(al);
        return p;
      },
      never(), equations("w1 = w2 = 0", kWZero), never(), "solvable");

  std::vector<Residual> z3z4 = {coef(C::z3), coef(C::z4)};
  add(FamilyId::g18, CaseTag::F, {C::beta, C::b, C::z3, C::z4, C::theta1, C::theta2}, {C::beta, C::b},
      [](AdaptedParams p) {
        const Scalar& be = p[C::beta];
        const Scalar& b = p[C::b];
        p[C::z1] = be * p[C::z3] / b;
        p[C::z2] = be * p[C::z4] / b;
        p[C::w1] = -sq(be) * p[C::z3] / sq(b);
        p[C::w2] = -sq(be) * p[C::z4] / sq(b);
        return p;
      },
      equations("theta1 = theta2 = 0", kThetaZero), equations("z3 = z4 = 0", z3z4),
      equations("theta1 = theta2 = 0 and z3 = z4 = 0", concat(kThetaZero, z3z4)), "not solvable in general");

  add(FamilyId::g19, CaseTag::F, {C::alpha, C::beta, C::w1, C::w2}, {C::alpha, C::beta}, keep, never(),
      equations("w1 = w2 = 0", kWZero), never(), "solvable");

  add(FamilyId::g20, CaseTag::F, {C::alpha, C::a, C::beta, C::w1, C::w2}, {C::alpha, C::a, C::beta},
      [](AdaptedParams p) {
        const Scalar& al = p[C::alpha];
        const Scalar& a = p[C::a];
        p[C::b] = p[C::beta] * a / al;
        p[C::z1] = -a * p[C::w1] / al;
        p[C::z2] = -a * p[C::w2] / al;
        p[C::z3] = -sq(a) * p[C::w1] / sq(al);
        p[C::z4] = -sq(a) * p[C::w2] / sq(al);
        return p;
      },
      never(), equations("w1 = w2 = 0", kWZero), never(), "solvable");

  return f;
}

const ConditionCell& cell_of(const FamilySpec& s, SampleMode m) {
  switch (m) {
    case SampleMode::ak: return s.ak;
    case SampleMode::i: return s.i;
    case SampleMode::k: return s.k;
    case SampleMode::generic: break;
  }
  throw std::invalid_argument("generic mode has no table cell");
}

/// Draws small rationals for the samplers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long range(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (eng_() & 1u) != 0; }
  Scalar any() { return Scalar::rational(range(-6, 6), range(1, 4)); }
  Scalar nonzero() {
    long n = range(1, 6);
    return Scalar::rational(coin() ? n : -n, range(1, 4));
  }

 private:
  std::mt19937_64 eng_;
};

using Adjust = std::function<void(Rng&, AdaptedParams&)>;

struct Sampler {
  Adjust ak;
  Adjust i;
};

void zero_theta(Rng&, AdaptedParams& p) {
  p[C::theta1] = Scalar();
  p[C::theta2] = Scalar();
}

void zero_w(Rng&, AdaptedParams& p) {
  p[C::w1] = Scalar();
  p[C::w2] = Scalar();
}

void z2_zero_z4_minus_w2(Rng&, AdaptedParams& p) {
  p[C::z2] = Scalar();
  p[C::z4] = -p[C::w2];
}

/// Subfamily constructors for the AK and I cells, applied after a generic
/// draw of the free parameters. Indexed by family number - 1.
std::vector<Sampler> make_samplers() {
  std::vector<Sampler> s(kFamilyCount);
  auto at = [&](FamilyId id) -> Sampler& { return s[static_cast<std::size_t>(id) - 1]; };

  at(FamilyId::g1) = {[](Rng&, AdaptedParams& p) { p[C::w1] = Scalar(); }, zero_w};
  at(FamilyId::g2) = {[](Rng&, AdaptedParams& p) { p[C::alpha] = Scalar(); }, zero_w};
  at(FamilyId::g3) = {[](Rng&, AdaptedParams& p) { p[C::theta2] = -2 * p[C::alpha]; }, zero_w};
  at(FamilyId::g4) = {[](Rng& rng, AdaptedParams& p) {
                        p[C::z2] = rng.nonzero();
                        p[C::w1] = 2 * sq(p[C::lambda]) / p[C::z2];
                      },
                      [](Rng&, AdaptedParams& p) {
                        p[C::w1] = -2 * p[C::z2];
                        p[C::w2] = Scalar();
                      }};
  // alpha b - a beta = t^2 keeps r = 2t or -2t rational.
  at(FamilyId::g5) = {[](Rng& rng, AdaptedParams& p) {
                        Scalar t = rng.nonzero();
                        p[C::b] = rng.nonzero();
                        p[C::alpha] = (sq(t) + p[C::a] * p[C::beta]) / p[C::b];
                        p[C::r] = rng.coin() ? 2 * t : -2 * t;
                      },
                      [](Rng&, AdaptedParams& p) {
                        p[C::a] = p[C::beta];
                        p[C::b] = -p[C::alpha];
                      }};
  at(FamilyId::g6) = {zero_theta, [](Rng&, AdaptedParams& p) {
                        const Scalar& z1 = p[C::z1];
                        const Scalar& z3 = p[C::z3];
                        p[C::r] = (sq(z1) + sq(z3)) / z3;
                        p[C::z2] = (sq(z1) - sq(z3)) / (2 * z3);
                      }};
  at(FamilyId::g7) = {zero_theta, [](Rng& rng, AdaptedParams& p) {
                        p[C::z2] = rng.nonzero();
                        p[C::w1] = -2 * p[C::z2];
                        p[C::w2] = Scalar();
                      }};
  at(FamilyId::g8) = {zero_theta, z2_zero_z4_minus_w2};
  at(FamilyId::g9) = {zero_theta, [](Rng& rng, AdaptedParams& p) {
                        p[C::z2] = rng.nonzero();
                        p[C::z3] = -2 * p[C::z2];
                        p[C::z4] = Scalar();
                      }};
  at(FamilyId::g10) = {nullptr, nullptr};
  at(FamilyId::g11) = {zero_theta, nullptr};
  at(FamilyId::g12) = {zero_theta, [](Rng&, AdaptedParams& p) { p[C::z3] = -p[C::w1]; }};
  at(FamilyId::g13) = {zero_theta, nullptr};
  at(FamilyId::g14) = {zero_theta, z2_zero_z4_minus_w2};
  at(FamilyId::g15) = {nullptr, zero_w};
  at(FamilyId::g16) = {zero_theta, zero_w};
  at(FamilyId::g17) = {nullptr, zero_w};
  at(FamilyId::g18) = {zero_theta, [](Rng&, AdaptedParams& p) {
                         p[C::z3] = Scalar();
                         p[C::z4] = Scalar();
                       }};
  at(FamilyId::g19) = {nullptr, zero_w};
  at(FamilyId::g20) = {nullptr, zero_w};
  return s;
}

const std::vector<Sampler>& samplers() {
  static const std::vector<Sampler> s = make_samplers();
  return s;
}

FamilyParams project(FamilyId id, const AdaptedParams& p) {
  FamilyParams fp{id, {}};
  for (C c : family_spec(id).params) fp.values.push_back(p[c]);
  return fp;
}

AdaptedParams free_slots(const FamilyParams& p) {
  const FamilySpec& s = family_spec(p.id);
  if (p.values.size() != s.params.size()) {
    throw std::invalid_argument(family_name(p.id) + " takes " + std::to_string(s.params.size()) + " parameters");
  }
  AdaptedParams a = AdaptedParams::zero(p.mode());
  for (std::size_t n = 0; n < s.params.size(); ++n) a[s.params[n]] = p.values[n];
  return a;
}

std::optional<std::string> case_violation(CaseTag tag, const AdaptedParams& p) {
  Scalar lam = p[C::lambda];
  Scalar rot = sq(lam - p[C::alpha]) + sq(p[C::beta]);
  Scalar det = p[C::alpha] * p[C::b] - p[C::a] * p[C::beta];
  std::vector<std::string> bad;
  auto need = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  switch (tag) {
    case CaseTag::A:
      need(!lam.is_zero(), "lambda != 0");
      need(!rot.is_zero(), "(lambda - alpha)^2 + beta^2 != 0");
      break;
    case CaseTag::B:
      need(!lam.is_zero(), "lambda != 0");
      need(rot.is_zero(), "(lambda - alpha)^2 + beta^2 = 0");
      break;
    case CaseTag::C:
      need(lam.is_zero(), "lambda = 0");
      need(!p[C::r].is_zero(), "r != 0");
      need(!det.is_zero(), "a beta - alpha b != 0");
      break;
    case CaseTag::D:
      need(lam.is_zero(), "lambda = 0");
      need(!p[C::r].is_zero(), "r != 0");
      need(det.is_zero(), "a beta - alpha b = 0");
      break;
    case CaseTag::E:
      need(lam.is_zero(), "lambda = 0");
      need(p[C::r].is_zero(), "r = 0");
      need(!det.is_zero(), "alpha b - a beta != 0");
      break;
    case CaseTag::F:
      need(lam.is_zero(), "lambda = 0");
      need(p[C::r].is_zero(), "r = 0");
      need(det.is_zero(), "alpha b - a beta = 0");
      break;
  }
  if (bad.empty()) return std::nullopt;
  std::string s;
  for (std::size_t n = 0; n < bad.size(); ++n) s += (n ? " and " : "") + bad[n];
  return s;
}

}  // namespace

std::string family_name(FamilyId id) { return "g" + std::to_string(static_cast<int>(id)); }

FamilyId parse_family_id(std::string_view text) {
  std::string_view t = text;
  if (!t.empty() && (t.front() == 'g' || t.front() == 'G')) t.remove_prefix(1);
  int n = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), n);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || n < 1 || n > kFamilyCount) {
    throw std::invalid_argument("unknown family \"" + std::string(text) + "\" (expected g1..g20)");
  }
  return static_cast<FamilyId>(n);
}

std::string_view case_name(CaseTag c) {
  static constexpr std::array<std::string_view, 6> names = {"A", "B", "C", "D", "E", "F"};
  return names[static_cast<std::size_t>(c)];
}

std::string_view mode_name(SampleMode m) {
  switch (m) {
    case SampleMode::generic: return "generic";
    case SampleMode::ak: return "ak";
    case SampleMode::i: return "i";
    case SampleMode::k: return "k";
  }
  return "?";
}

SampleMode parse_sample_mode(std::string_view text) {
  for (SampleMode m : kSampleModes) {
    if (mode_name(m) == text) return m;
  }
  throw std::invalid_argument("unknown mode \"" + std::string(text) + "\" (expected generic, ak, i or k)");
}

CaseTag case_of(const AdaptedParams& p) {
  for (CaseTag t : {CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::D, CaseTag::E, CaseTag::F}) {
    if (!case_violation(t, p)) return t;
  }
  throw std::logic_error("case split is not exhaustive");
}

const Scalar& FamilyParams::get(Coef c) const {
  const auto& names = family_spec(id).params;
  for (std::size_t n = 0; n < names.size(); ++n) {
    if (names[n] == c) return values.at(n);
  }
  throw std::invalid_argument(family_name(id) + " has no parameter " + std::string(coef_name(c)));
}

bool operator==(const FamilyParams& p, const FamilyParams& q) {
  if (p.id != q.id || p.values.size() != q.values.size()) return false;
  for (std::size_t n = 0; n < p.values.size(); ++n) {
    if (!(p.values[n] == q.values[n])) return false;
  }
  return true;
}

bool ConditionCell::holds(const AdaptedParams& full) const {
  switch (kind) {
    case Kind::never: return false;
    case Kind::always: return true;
    case Kind::equations: break;
  }
  for (const auto& r : residuals) {
    if (!r(full).is_zero()) return false;
  }
  return true;
}

const std::vector<FamilySpec>& all_families() {
  static const std::vector<FamilySpec> f = make_families();
  return f;
}

const FamilySpec& family_spec(FamilyId id) {
  int n = static_cast<int>(id);
  if (n < 1 || n > kFamilyCount) throw std::invalid_argument("family id out of range");
  return all_families()[static_cast<std::size_t>(n - 1)];
}

FamilyParams make_params(FamilyId id, const std::vector<std::pair<std::string, Scalar>>& named) {
  const FamilySpec& s = family_spec(id);
  std::vector<std::optional<Scalar>> slot(s.params.size());
  for (const auto& [name, value] : named) {
    C c = coef_from_name(name);
    std::size_t n = 0;
    while (n < s.params.size() && s.params[n] != c) ++n;
    if (n == s.params.size()) throw std::invalid_argument(family_name(id) + " has no parameter " + name);
    if (slot[n]) throw std::invalid_argument("parameter " + name + " given twice");
    slot[n] = value;
  }
  FamilyParams p{id, {}};
  for (std::size_t n = 0; n < slot.size(); ++n) {
    if (!slot[n]) throw std::invalid_argument(family_name(id) + " needs parameter " + std::string(coef_name(s.params[n])));
    p.values.push_back(*slot[n]);
  }
  ScalarMode m = p.values.front().mode();
  for (const auto& v : p.values) {
    if (!(v.mode() == m)) throw ModeMismatch("family parameters in different scalar modes");
  }
  return p;
}

AdaptedParams evaluate_template(const FamilyParams& p) { return family_spec(p.id).fill(free_slots(p)); }

void validate(const FamilyParams& p) {
  const FamilySpec& s = family_spec(p.id);
  AdaptedParams free = free_slots(p);
  for (C c : s.nonzero) {
    if (free[c].is_zero()) {
      throw ConstraintViolation(family_name(p.id) + " requires " + std::string(coef_name(c)) + " != 0");
    }
  }
  AdaptedParams full;
  try {
    full = s.fill(free);
  } catch (const std::domain_error&) {
    // The template divides by a case quantity; with free slots it is already visible.
    auto bad = case_violation(s.case_tag, free);
    throw ConstraintViolation(family_name(p.id) + " (case " + std::string(case_name(s.case_tag)) + ") requires " +
                              (bad ? *bad : std::string("a nonzero template denominator")));
  }
  if (auto bad = case_violation(s.case_tag, full)) {
    throw ConstraintViolation(family_name(p.id) + " (case " + std::string(case_name(s.case_tag)) + ") requires " +
                              *bad);
  }
}

AdaptedParams adapted_params(const FamilyParams& p) {
  validate(p);
  return evaluate_template(p);
}

LieAlgebra4 build(const FamilyParams& p) { return to_algebra(adapted_params(p)); }

Conditions conditions(const FamilyParams& p) {
  const FamilySpec& s = family_spec(p.id);
  AdaptedParams full = adapted_params(p);
  return Conditions{s.ak.holds(full), s.i.holds(full), s.k.holds(full)};
}

bool mode_achievable(FamilyId id, SampleMode mode) {
  if (mode == SampleMode::generic) return true;
  return cell_of(family_spec(id), mode).kind != ConditionCell::Kind::never;
}

FamilyParams sample(FamilyId id, std::uint64_t seed, SampleMode mode, ScalarMode scalar_mode) {
  const FamilySpec& s = family_spec(id);
  if (!mode_achievable(id, mode)) {
    throw UnachievableMode(family_name(id) + " cannot be sampled in mode " + std::string(mode_name(mode)) +
                           ": its table cell is \"never true\"");
  }
  const Sampler& sm = samplers()[static_cast<std::size_t>(id) - 1];
  std::uint64_t mixed = seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(id) * 0x100000001B3ull +
                        static_cast<std::uint64_t>(mode);
  Rng rng(mixed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    AdaptedParams free = AdaptedParams::zero(ScalarMode::exact());
    for (C c : s.params) {
      bool nz = false;
      for (C z : s.nonzero) nz = nz || z == c;
      free[c] = nz ? rng.nonzero() : rng.any();
    }
    if ((mode == SampleMode::ak || mode == SampleMode::k) && sm.ak) sm.ak(rng, free);
    if ((mode == SampleMode::i || mode == SampleMode::k) && sm.i) sm.i(rng, free);
    FamilyParams p = project(id, free);
    try {
      validate(p);
    } catch (const ConstraintViolation&) {
      continue;
    }
    if (mode != SampleMode::generic) {
      Conditions c = conditions(p);
      bool hit = mode == SampleMode::ak ? c.ak : mode == SampleMode::i ? c.i : c.k;
      if (!hit) throw std::logic_error(family_name(id) + " sampler missed mode " + std::string(mode_name(mode)));
    }
    if (!scalar_mode.is_exact()) {
      for (auto& v : p.values) v = Scalar::from_rational(v.as_rational(), scalar_mode);
    }
    return p;
  }
  throw std::runtime_error("no valid sample for " + family_name(id));
}

IdentifyResult identify(const AdaptedParams& params) {
  IdentifyResult out{case_of(params), {}, {}};
  for (const FamilySpec& s : all_families()) {
    FamilyParams fp = project(s.id, params);
    std::optional<Scalar> residual;
    std::string reason;
    try {
      AdaptedParams t = evaluate_template(fp);
      Scalar worst = Scalar::zero(params.mode());
      std::size_t worst_at = 0;
      for (std::size_t n = 0; n < kCoefCount; ++n) {
        Scalar d = (t.values[n] - params.values[n]).abs();
        if (worst < d) {
          worst = d;
          worst_at = n;
        }
      }
      residual = worst;
      if (!worst.is_zero()) reason = "coefficient " + std::string(kCoefNames[worst_at]) + " differs from the template";
    } catch (const std::domain_error&) {
      reason = "template divides by a zero parameter";
    }
    if (reason.empty()) {
      try {
        validate(fp);
      } catch (const ConstraintViolation& e) {
        reason = e.what();
      }
    }
    if (reason.empty() && s.case_tag != out.case_tag) {
      reason = "parameters are in case " + std::string(case_name(out.case_tag));
    }
    if (reason.empty()) {
      out.matches.push_back(FamilyMatch{std::move(fp)});
    } else {
      out.near_misses.push_back(NearMiss{s.id, residual, std::move(reason)});
    }
  }
  return out;
}

namespace {

using Lhs = std::function<Scalar(const LieAlgebra4&, const AdaptedParams&)>;

Scalar domega(const LieAlgebra4& L, std::size_t i, std::size_t j, std::size_t k) {
  ScalarMode m = L.mode();
  return d_omega_general(L, AlmostComplexJ(m), Vec4::basis(i, m), Vec4::basis(j, m), Vec4::basis(k, m));
}

/// Component c of N_J(Z, X).
Scalar nzx(const LieAlgebra4& L, std::size_t c) {
  ScalarMode m = L.mode();
  return nijenhuis(L, AlmostComplexJ(m), Vec4::basis(Z, m), Vec4::basis(X, m))[c];
}

FamilyParams at_point(FamilyId id, AdaptedParams free) { return project(id, free); }

std::vector<Certificate> make_certificates() {
  std::vector<Certificate> c;

  c.push_back(Certificate{
      FamilyId::g4, SampleMode::k,
      "on the integrable subfamily w1 = -2 z2, w2 = 0: lambda domega(X,Y,Z) = -2 (lambda^2 + z2^2)",
      {C::lambda, C::z2}, {C::lambda}, 2,
      [](const AdaptedParams& x) {
        AdaptedParams f = x;
        f[C::w1] = -2 * x[C::z2];
        f[C::w2] = Scalar::zero(x.mode());
        return at_point(FamilyId::g4, f);
      },
      {[](const LieAlgebra4& L, const AdaptedParams& x) { return x[C::lambda] * domega(L, X, Y, Z); }},
      {[](const AdaptedParams& x) { return -2 * (sq(x[C::lambda]) + sq(x[C::z2])); }},
      [](const AdaptedParams& x) { return sq(x[C::lambda]) + sq(x[C::z2]); },
      "lambda != 0 makes lambda^2 + z2^2 > 0, so no integrable member is almost Kahler"});

  c.push_back(Certificate{
      FamilyId::g5, SampleMode::k,
      "on the integrable subfamily a = beta, b = -alpha: -2 (alpha^2 + beta^2) (alpha domega(X,Y,Z) + beta "
      "domega(X,Y,W)) = (alpha^2 + beta^2) (r^2 + 4 alpha^2 + 4 beta^2)",
      {C::alpha, C::beta, C::r}, {C::alpha, C::beta, C::r}, 4,
      [](const AdaptedParams& x) {
        AdaptedParams f = x;
        f[C::a] = x[C::beta];
        f[C::b] = -x[C::alpha];
        return at_point(FamilyId::g5, f);
      },
      {[](const LieAlgebra4& L, const AdaptedParams& x) {
        Scalar n = sq(x[C::alpha]) + sq(x[C::beta]);
        return -2 * n * (x[C::alpha] * domega(L, X, Y, Z) + x[C::beta] * domega(L, X, Y, W));
      }},
      {[](const AdaptedParams& x) {
        Scalar n = sq(x[C::alpha]) + sq(x[C::beta]);
        return n * (sq(x[C::r]) + 4 * n);
      }},
      [](const AdaptedParams& x) {
        Scalar n = sq(x[C::alpha]) + sq(x[C::beta]);
        return n * (sq(x[C::r]) + 4 * n);
      },
      "alpha b - a beta = -(alpha^2 + beta^2) != 0 and r != 0 keep the right side positive"});

  c.push_back(Certificate{
      FamilyId::g10, SampleMode::ak, "-(b domega(X,Y,Z) - beta domega(X,Y,W))/2 = alpha b - a beta",
      {C::alpha, C::a, C::beta, C::b}, {}, 2,
      [](const AdaptedParams& x) { return at_point(FamilyId::g10, x); },
      {[](const LieAlgebra4& L, const AdaptedParams& x) {
        return -(x[C::b] * domega(L, X, Y, Z) - x[C::beta] * domega(L, X, Y, W)) / 2;
      }},
      {[](const AdaptedParams& x) { return x[C::alpha] * x[C::b] - x[C::a] * x[C::beta]; }},
      [](const AdaptedParams& x) { return x[C::alpha] * x[C::b] - x[C::a] * x[C::beta]; },
      "case E requires alpha b - a beta != 0, so d omega cannot vanish"});

  c.push_back(Certificate{
      FamilyId::g11, SampleMode::i, "z1 N(Z,X)_Z + z2 N(Z,X)_W = 2 (z1^2 + z2^2)",
      {C::z1, C::z2, C::z3, C::w1, C::theta1, C::theta2}, {C::z1}, 2,
      [](const AdaptedParams& x) { return at_point(FamilyId::g11, x); },
      {[](const LieAlgebra4& L, const AdaptedParams& x) { return x[C::z1] * nzx(L, Z) + x[C::z2] * nzx(L, W); }},
      {[](const AdaptedParams& x) { return 2 * (sq(x[C::z1]) + sq(x[C::z2])); }},
      [](const AdaptedParams& x) { return sq(x[C::z1]) + sq(x[C::z2]); },
      "z1 != 0 makes z1^2 + z2^2 > 0, so N_J != 0"});

  c.push_back(Certificate{
      FamilyId::g13, SampleMode::i, "N(Z,X)_W = z3", {C::z3, C::z4, C::theta1, C::theta2}, {C::z3}, 1,
      [](const AdaptedParams& x) { return at_point(FamilyId::g13, x); },
      {[](const LieAlgebra4& L, const AdaptedParams&) { return nzx(L, W); }},
      {[](const AdaptedParams& x) { return x[C::z3]; }}, [](const AdaptedParams& x) { return x[C::z3]; },
      "z3 != 0, so N_J != 0"});

  auto alpha_only = [&](FamilyId id, std::vector<C> coords, std::vector<C> nz) {
    c.push_back(Certificate{
        id, SampleMode::ak, "domega(X,Y,Z) = -2 alpha", std::move(coords), std::move(nz), 1,
        [id](const AdaptedParams& x) { return at_point(id, x); },
        {[](const LieAlgebra4& L, const AdaptedParams&) { return domega(L, X, Y, Z); }},
        {[](const AdaptedParams& x) { return -2 * x[C::alpha]; }},
        [](const AdaptedParams& x) { return x[C::alpha]; }, "alpha != 0, so d omega != 0"});
  };
  alpha_only(FamilyId::g15, {C::alpha, C::w1, C::w2}, {C::alpha});
  alpha_only(FamilyId::g17, {C::alpha, C::a, C::w1, C::w2}, {C::alpha, C::a});
  alpha_only(FamilyId::g19, {C::alpha, C::beta, C::w1, C::w2}, {C::alpha, C::beta});
  alpha_only(FamilyId::g20, {C::alpha, C::a, C::beta, C::w1, C::w2}, {C::alpha, C::a, C::beta});

  c.push_back(Certificate{
      FamilyId::g17, SampleMode::i,
      "alpha^2 ((alpha^2 - a^2) N_W - 2 a alpha N_Z) = (alpha^2 + a^2)^2 w1 and "
      "alpha^2 (-(alpha^2 - a^2) N_Z - 2 a alpha N_W) = (alpha^2 + a^2)^2 w2, with N = N(Z,X)",
      {C::alpha, C::a, C::w1, C::w2}, {C::alpha, C::a}, 4,
      [](const AdaptedParams& x) { return at_point(FamilyId::g17, x); },
      {[](const LieAlgebra4& L, const AdaptedParams& x) {
         const Scalar& al = x[C::alpha];
         const Scalar& a = x[C::a];
         return sq(al) * ((sq(al) - sq(a)) * nzx(L, W) - 2 * a * al * nzx(L, Z));
       },
       [](const LieAlgebra4& L, const AdaptedParams& x) {
         const Scalar& al = x[C::alpha];
         const Scalar& a = x[C::a];
         return sq(al) * (-(sq(al) - sq(a)) * nzx(L, Z) - 2 * a * al * nzx(L, W));
       }},
      {[](const AdaptedParams& x) { return sq(sq(x[C::alpha]) + sq(x[C::a])) * x[C::w1]; },
       [](const AdaptedParams& x) { return sq(sq(x[C::alpha]) + sq(x[C::a])) * x[C::w2]; }},
      [](const AdaptedParams& x) { return sq(sq(x[C::alpha]) + sq(x[C::a])); },
      "alpha != 0, so N_J = 0 forces w1 = w2 = 0"});

  return c;
}

/// Distinct grid values; nonzero coordinates skip 0.
Scalar grid_value(std::size_t n, bool nonzero) {
  static const std::array<std::pair<long, long>, 9> with_zero = {
      {{0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {3, 1}, {-1, 3}, {5, 2}}};
  const auto& v = with_zero.at(nonzero ? n + 1 : n);
  return Scalar::rational(v.first, v.second);
}

}  // namespace

const std::vector<Certificate>& impossibility_certificates() {
  static const std::vector<Certificate> c = make_certificates();
  return c;
}

const Certificate* certificate_for(FamilyId id, SampleMode cell) {
  for (const auto& c : impossibility_certificates()) {
    if (c.family == id && c.cell == cell) return &c;
  }
  if (cell == SampleMode::k) {
    const FamilySpec& s = family_spec(id);
    if (s.ak.kind == ConditionCell::Kind::never) return certificate_for(id, SampleMode::ak);
    if (s.i.kind == ConditionCell::Kind::never) return certificate_for(id, SampleMode::i);
  }
  return nullptr;
}

CertificateCheck verify_certificate(const Certificate& c) {
  CertificateCheck out;
  out.identities_hold = true;
  out.factor_nonzero = true;
  std::size_t per = static_cast<std::size_t>(c.degree) + 1;
  std::size_t total = 1;
  for (std::size_t n = 0; n < c.coordinates.size(); ++n) total *= per;
  std::size_t valid_points = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    AdaptedParams x = AdaptedParams::zero(ScalarMode::exact());
    std::size_t rest = idx;
    for (C coord : c.coordinates) {
      bool nz = false;
      for (C z : c.nonzero) nz = nz || z == coord;
      x[coord] = grid_value(rest % per, nz);
      rest /= per;
    }
    FamilyParams fp = c.point(x);
    LieAlgebra4 L = to_algebra(evaluate_template(fp));
    for (std::size_t n = 0; n < c.lhs.size(); ++n) {
      Scalar l = c.lhs[n](L, x);
      Scalar r = c.rhs[n](x);
      if (!(l == r) && out.identities_hold) {
        out.identities_hold = false;
        out.detail = "identity " + std::to_string(n + 1) + " fails: " + l.to_string() + " vs " + r.to_string();
      }
    }
    bool valid = true;
    try {
      validate(fp);
    } catch (const ConstraintViolation&) {
      valid = false;
    }
    if (valid) {
      ++valid_points;
      if (c.factor(x).is_zero() && out.factor_nonzero) {
        out.factor_nonzero = false;
        if (out.detail.empty()) out.detail = "nonvanishing factor is zero at a valid point";
      }
    }
  }
  out.grid_points = total;
  if (valid_points == 0) {
    out.factor_nonzero = false;
    if (out.detail.empty()) out.detail = "grid has no valid point";
  }
  return out;
}

}  // namespace lieclass
