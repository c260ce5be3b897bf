#pragma once

// Test-side generators and brute-force oracles. The oracles work on raw
// mpq_class arrays and do not call into the library's geometry code.

#include <gmpxx.h>

#include <array>
#include <random>

#include "lieclass/adapted.hpp"

namespace testing_support {

using lieclass::AdaptedParams;
using lieclass::Coef;
using lieclass::Scalar;

using Rat = mpq_class;
using Cube = std::array<std::array<std::array<Rat, 4>, 4>, 4>;
using Vec = std::array<Rat, 4>;

inline Rat rand_rat(std::mt19937_64& rng, int span = 6, int den = 4) {
  std::uniform_int_distribution<int> n(-span, span), d(1, den);
  Rat q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

inline Rat rand_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Rat q = rand_rat(rng);
    if (q != 0) return q;
  }
}

inline Scalar S(const Rat& q) { return Scalar::rational(q); }
inline Rat Q(const Scalar& s) { return s.as_rational(); }

inline AdaptedParams random_params(std::mt19937_64& rng) {
  AdaptedParams p = AdaptedParams::zero(lieclass::ScalarMode::exact());
  for (auto& v : p.values) v = S(rand_rat(rng));
  return p;
}

inline Rat P(const AdaptedParams& p, Coef c) { return Q(p[c]); }

/// Structure constants of the normal form, typed out independently.
inline Cube oracle_constants(const AdaptedParams& p) {
  Cube c{};
  for (auto& a : c)
    for (auto& b : a)
      for (auto& x : b) x = 0;
  auto set = [&](int i, int j, Vec v) {
    for (int k = 0; k < 4; ++k) {
      c[i][j][k] = v[k];
      c[j][i][k] = -v[k];
    }
  };
  const int X = 0, Y = 1, Z = 2, W = 3;
  using C = Coef;
  set(W, Z, {0, 0, 0, P(p, C::lambda)});
  set(Z, X, {P(p, C::alpha), P(p, C::beta), P(p, C::z1), P(p, C::w1)});
  set(Z, Y, {-P(p, C::beta), P(p, C::alpha), P(p, C::z2), P(p, C::w2)});
  set(W, X, {P(p, C::a), P(p, C::b), P(p, C::z3), -P(p, C::z1)});
  set(W, Y, {-P(p, C::b), P(p, C::a), P(p, C::z4), -P(p, C::z2)});
  set(Y, X, {P(p, C::r), 0, P(p, C::theta1), P(p, C::theta2)});
  return c;
}

inline Vec oracle_bracket(const Cube& c, const Vec& u, const Vec& v) {
  Vec out{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out[k] += u[i] * v[j] * c[i][j][k];
  return out;
}

inline Vec e(int i) {
  Vec v{0, 0, 0, 0};
  v[i] = 1;
  return v;
}

inline Rat oracle_dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

/// Largest |[[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]| component.
inline Rat oracle_jacobi(const Cube& c) {
  Rat worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Vec a = oracle_bracket(c, oracle_bracket(c, e(i), e(j)), e(k));
        Vec b = oracle_bracket(c, oracle_bracket(c, e(j), e(k)), e(i));
        Vec d = oracle_bracket(c, oracle_bracket(c, e(k), e(i)), e(j));
        for (int m = 0; m < 4; ++m) {
          Rat s = abs(a[m] + b[m] + d[m]);
          if (s > worst) worst = s;
        }
      }
  return worst;
}

/// g(nabla_{e_i} e_j, e_k) from the Koszul formula.
inline Cube oracle_gamma(const Cube& c) {
  Cube g{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) g[i][j][k] = (c[i][j][k] - c[j][k][i] + c[k][i][j]) / 2;
  return g;
}

inline Vec oracle_nabla(const Cube& g, const Vec& u, const Vec& v) {
  Vec out{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out[k] += u[i] * v[j] * g[i][j][k];
  return out;
}

/// JX = Y, JY = -X, JZ = W, JW = -Z.
inline Vec oracle_J(const Vec& v) { return {-v[1], v[0], -v[3], v[2]}; }

/// Nijenhuis tensor by its definition.
inline Vec oracle_nijenhuis(const Cube& c, const Vec& u, const Vec& v) {
  Vec a = oracle_bracket(c, u, v);
  Vec b = oracle_J(oracle_bracket(c, oracle_J(u), v));
  Vec d = oracle_J(oracle_bracket(c, u, oracle_J(v)));
  Vec f = oracle_bracket(c, oracle_J(u), oracle_J(v));
  Vec out;
  for (int k = 0; k < 4; ++k) out[k] = a[k] + b[k] + d[k] - f[k];
  return out;
}

}  // namespace testing_support
