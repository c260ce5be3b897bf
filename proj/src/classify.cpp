#include "lieclass/classify.hpp"

namespace lieclass {

ClassificationResult classify(const LieAlgebra4& L) {
  ClassificationResult r;
  r.mode = L.mode();
  r.params = extract_adapted(L);
  r.jacobi_defect = jacobi_defect(L);
  ScalarMode m = r.mode;

  Connection C = levi_civita(L);
  FoliationData f = foliation_data(C);
  r.minimal = f.minimal;
  r.conformal = f.conformal;
  r.riemannian = f.riemannian;
  r.totally_geodesic = f.totally_geodesic;

  r.closed_form.ak = closed_form::almost_kahler(r.params);
  r.closed_form.i = closed_form::integrable(r.params);
  r.closed_form.k = r.closed_form.ak && r.closed_form.i;

  AlmostComplexJ J(m);
  auto e = [m](std::size_t i) { return Vec4::basis(i, m); };
  r.d_omega = {d_omega_general(L, J, e(X), e(Y), e(Z)), d_omega_general(L, J, e(X), e(Y), e(W)),
               d_omega_general(L, J, e(X), e(Z), e(W)), d_omega_general(L, J, e(Y), e(Z), e(W))};
  r.nijenhuis_zx = nijenhuis(L, J, e(Z), e(X));
  r.direct.ak = d_omega_table(L, J).is_zero();
  r.direct.i = nijenhuis_max_abs(L, J).is_zero();
  r.direct.k = r.direct.ak && r.direct.i;

  NablaOmega nw = nabla_omega(L, J);
  WDecomposition d = project_fine(nw.values);
  r.gh_norms = d.norms;
  r.w2_max = d.w2.tensor().max_abs();
  r.w4_max = d.w4.tensor().max_abs();
  HermitianClass cls = class_from_decomposition(d);
  r.projection.ak = cls == HermitianClass::AlmostKahler || cls == HermitianClass::Kahler;
  r.projection.i = cls == HermitianClass::Integrable || cls == HermitianClass::Kahler;
  r.projection.k = cls == HermitianClass::Kahler;

  r.families = identify(r.params);
  for (const auto& match : r.families.matches) {
    Conditions c = conditions(match.params);
    r.family_tables.push_back(FamilyVerdict{match.params, RouteVerdict{c.ak, c.i, c.k}});
  }

  r.routes_agree = r.closed_form == r.direct && r.direct == r.projection;
  for (const auto& t : r.family_tables) r.routes_agree = r.routes_agree && t.table == r.direct;

  r.ak = r.direct.ak;
  r.i = r.direct.i;
  r.k = r.direct.k;

  if (r.params[Coef::theta1].is_zero() && r.params[Coef::theta2].is_zero()) {
    r.k_vertical = sectional_curvature(C, L, e(Z), e(W));
    r.k_horizontal = sectional_curvature(C, L, e(X), e(Y));
  }

  r.derived_series = derived_series_dimensions(L);
  r.lower_central_series = lower_central_series_dimensions(L);
  return r;
}

}  // namespace lieclass
