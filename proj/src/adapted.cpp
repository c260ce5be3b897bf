#include "lieclass/adapted.hpp"

namespace lieclass {

std::string_view coef_name(Coef c) { return kCoefNames[static_cast<std::size_t>(c)]; }

Coef coef_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kCoefCount; ++i) {
    if (kCoefNames[i] == name) return static_cast<Coef>(i);
  }
  throw std::invalid_argument("unknown coefficient name \"" + std::string(name) + "\"");
}

AdaptedParams AdaptedParams::zero(ScalarMode mode) {
  AdaptedParams p;
  p.values.fill(Scalar::zero(mode));
  return p;
}

AdaptedParams AdaptedParams::converted(ScalarMode mode) const {
  AdaptedParams p = zero(mode);
  for (std::size_t i = 0; i < kCoefCount; ++i) {
    const Scalar& v = values[i];
    if (v.is_exact()) {
      p.values[i] = Scalar::from_rational(v.as_rational(), mode);
    } else if (mode.is_exact()) {
      throw ModeMismatch("cannot convert an approximate value to exact mode");
    } else {
      p.values[i] = Scalar::approx(v.to_double(), mode.tolerance());
    }
  }
  return p;
}

bool operator==(const AdaptedParams& p, const AdaptedParams& q) {
  for (std::size_t i = 0; i < kCoefCount; ++i) {
    if (!(p.values[i] == q.values[i])) return false;
  }
  return true;
}

LieAlgebra4 to_algebra(const AdaptedParams& p) {
  ScalarMode m = p.mode();
  Scalar o = Scalar::zero(m);
  using C = Coef;
  return LieAlgebra4::from_brackets(
      m, {
             {W, Z, Vec4(o, o, o, p[C::lambda])},
             {Z, X, Vec4(p[C::alpha], p[C::beta], p[C::z1], p[C::w1])},
             {Z, Y, Vec4(-p[C::beta], p[C::alpha], p[C::z2], p[C::w2])},
             {W, X, Vec4(p[C::a], p[C::b], p[C::z3], -p[C::z1])},
             {W, Y, Vec4(-p[C::b], p[C::a], p[C::z4], -p[C::z2])},
             {Y, X, Vec4(p[C::r], o, p[C::theta1], p[C::theta2])},
         });
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s = "algebra is not in adapted form: ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "; ";
    s += parts[i];
  }
  return s;
}

}  // namespace

NotAdapted::NotAdapted(std::vector<std::string> violations)
    : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

AdaptedParams extract_adapted(const LieAlgebra4& L) {
  const Tensor3& c = L.constants();
  AdaptedParams p = AdaptedParams::zero(L.mode());
  std::vector<std::string> bad;
  auto expect = [&](const Scalar& got, const Scalar& want, const std::string& what) {
    if (!(got == want)) bad.push_back(what + " (found " + got.to_string() + ", expected " + want.to_string() + ")");
  };
  Scalar zero = Scalar::zero(L.mode());
  using C = Coef;

  p[C::lambda] = c(W, Z, W);
  expect(c(W, Z, X), zero, "normal form: coefficient of X in [W,Z] must vanish");
  expect(c(W, Z, Y), zero, "normal form: coefficient of Y in [W,Z] must vanish");
  expect(c(W, Z, Z), zero, "normal form: coefficient of Z in [W,Z] must vanish");

  p[C::alpha] = c(Z, X, X);
  p[C::beta] = c(Z, X, Y);
  p[C::z1] = c(Z, X, Z);
  p[C::w1] = c(Z, X, W);

  expect(c(Z, Y, X), -p[C::beta], "conformality: coefficient of X in [Z,Y] must be -beta");
  expect(c(Z, Y, Y), p[C::alpha], "conformality: coefficient of Y in [Z,Y] must be alpha");
  p[C::z2] = c(Z, Y, Z);
  p[C::w2] = c(Z, Y, W);

  p[C::a] = c(W, X, X);
  p[C::b] = c(W, X, Y);
  p[C::z3] = c(W, X, Z);
  expect(c(W, X, W), -p[C::z1], "minimality: coefficient of W in [W,X] must be -z1");

  expect(c(W, Y, X), -p[C::b], "conformality: coefficient of X in [W,Y] must be -b");
  expect(c(W, Y, Y), p[C::a], "conformality: coefficient of Y in [W,Y] must be a");
  p[C::z4] = c(W, Y, Z);
  expect(c(W, Y, W), -p[C::z2], "minimality: coefficient of W in [W,Y] must be -z2");

  p[C::r] = c(Y, X, X);
  expect(c(Y, X, Y), zero, "normal form: coefficient of Y in [Y,X] must vanish");
  p[C::theta1] = c(Y, X, Z);
  p[C::theta2] = c(Y, X, W);

  if (!bad.empty()) throw NotAdapted(std::move(bad));
  return p;
}

namespace closed_form {

using C = Coef;

std::array<Scalar, 4> d_omega(const AdaptedParams& p) {
  Scalar zero = Scalar::zero(p.mode());
  return {-p[C::theta2] - 2 * p[C::alpha], p[C::theta1] - 2 * p[C::a], zero, zero};
}

std::array<Scalar, 2> nijenhuis_zx(const AdaptedParams& p) {
  return {2 * p[C::z1] - p[C::z4] - p[C::w2], 2 * p[C::z2] + p[C::z3] + p[C::w1]};
}

std::array<Scalar, 4> nabla_omega(const AdaptedParams& p) {
  auto n = nijenhuis_zx(p);
  return {p[C::theta2] / 2 + p[C::alpha], p[C::theta1] / 2 - p[C::a], -n[0] / 2, -n[1] / 2};
}

bool almost_kahler(const AdaptedParams& p) {
  auto d = d_omega(p);
  return d[0].is_zero() && d[1].is_zero();
}

bool integrable(const AdaptedParams& p) {
  auto n = nijenhuis_zx(p);
  return n[0].is_zero() && n[1].is_zero();
}

}  // namespace closed_form

}  // namespace lieclass
