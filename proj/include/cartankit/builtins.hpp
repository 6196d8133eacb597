// builtins.hpp
// Built-in first-order Lagrangians and their gauge data, assembled on top
// of the catalog connection models:
//   einstein-cartan      eps_abcd (R^ab V^c V^d - Lambda/6 V^a V^b V^c V^d)
//   macdowell-mansouri   1/2 eps_abcd F^ab F^cd, F^ab = R^ab - eps lam^2 V^a V^b
//   sugra-d4             eps_abcd R^ab V^c V^d + 4 psibar gamma5 gamma_a D psi V^a
//   abelian-topological  dA ^ dA        (total derivative)
//   abelian-cs           A ^ dA         (invariant only up to d(chi ^ dA))
// All Lagrangians are built in the formal-d basis, i.e. with curvature
// definitions already substituted.

#pragma once

#include "cartankit/catalog.hpp"
#include "cartankit/spinor.hpp"
#include "cartankit/variational.hpp"

namespace cartankit {

struct LagrangianBundle {
  std::string name;
  ConnectionModel model;  // softened; owns the world
  LagrangianForm lagrangian;
  GaugeRule gauge;
  OnShellRuleSet torsion_zero;  // the T^a -> 0 rules of the model

  FormWorld& world() { return *model.world; }
};

namespace builtin_detail {

inline FormId conn_of(const ConnectionModel& m, const std::string& key) {
  return m.conn.at(m.algebra.require(key));
}

// omega^{ab} with arbitrary index order as a signed polynomial
inline FormPolynomial rotation_form(const ConnectionModel& m, const std::string& fam, int a, int b) {
  auto [gen, sign] = m.algebra.resolve(fam, {a, b});
  if (!gen) return FormPolynomial::zero();
  return generator_poly(m.conn.at(*gen), sign);
}

// R^{ab} (curvature definition, formal-d basis) with arbitrary index order
inline FormPolynomial rotation_curvature(const ConnectionModel& m, const std::string& fam, int a,
                                         int b) {
  auto [gen, sign] = m.algebra.resolve(fam, {a, b});
  if (!gen) return FormPolynomial::zero();
  return sign * m.curvature_definition(*gen);
}

// Lorentz gauge rules: delta omega^{ab} = d chi^{ab} + [omega, chi]^{ab},
// delta V^a = -chi^a_b V^b, delta psi = -(1/4) chi^{ab} gamma_ab psi.
inline GaugeRule lorentz_gauge(ConnectionModel& model, const std::vector<int>& eta,
                               const GammaRep* rep = nullptr) {
  FormWorld& w = *model.world;
  const int n = static_cast<int>(eta.size());
  GaugeRule rule;
  std::map<std::pair<int, int>, FormId> chi;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      chi[{a, b}] = w.add({"chi", {a, b}, 0, Parity::even, FormClass::parameter});
  for (auto& [ab, id] : chi) rule.parameters.push_back(id);

  auto chi_form = [&](int a, int b) -> FormPolynomial {
    if (a == b) return FormPolynomial::zero();
    if (a < b) return generator_poly(chi[{a, b}]);
    return generator_poly(chi[{b, a}], Scalar(-1));
  };

  for (GenId g = 0; g < model.algebra.size(); ++g) {
    const Generator& gen = model.algebra.generators[g];
    if (gen.name == "M") {
      int a = gen.indices[0], b = gen.indices[1];
      FormPolynomial d = generator_poly(w.formal_d(chi[{a, b}]));
      for (int c = 0; c < n; ++c) {
        // omega^a_c chi^{cb} - chi^a_c omega^{cb}
        d += Scalar(eta[c]) * wedge(w, rotation_form(model, "M", a, c), chi_form(c, b));
        d -= Scalar(eta[c]) * wedge(w, chi_form(a, c), rotation_form(model, "M", c, b));
      }
      rule.delta[model.conn[g]] = std::move(d);
    } else if (gen.name == "P") {
      int a = gen.indices[0];
      FormPolynomial d;
      for (int b = 0; b < n; ++b)
        d -= Scalar(eta[b]) * wedge(w, chi_form(a, b), generator_poly(conn_of(model, "P[" + std::to_string(b) + "]")));
      rule.delta[model.conn[g]] = std::move(d);
    } else if (gen.name == "Q") {
      if (!rep) throw StructuralError("lorentz gauge rules need a gamma representation for spinors");
      int al = gen.indices[0];
      FormPolynomial d;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          Mat gab = *rep->gamma_antisym({std::min(a, b), std::max(a, b)});
          GaussianRational sgn(a < b ? 1 : -1);
          for (int be = 0; be < rep->spinor_size; ++be) {
            GaussianRational cc = gab.at(al, be) * sgn;
            if (cc.is_zero()) continue;
            d -= (Scalar::rational(1, 4) * Scalar(cc)) *
                 wedge(w, chi_form(a, b), generator_poly(conn_of(model, "Q[" + std::to_string(be) + "]")));
          }
        }
      rule.delta[model.conn[g]] = std::move(d);
    }
  }
  return rule;
}

inline OnShellRuleSet torsion_rules(const ConnectionModel& model, const std::string& family = "P") {
  OnShellRuleSet rules;
  for (GenId g = 0; g < model.algebra.size(); ++g)
    if (model.algebra.generators[g].name == family) rules[model.curv.at(g)] = FormPolynomial::zero();
  return rules;
}

}  // namespace builtin_detail

// --------------------------------------------------------------------------
// Einstein-Cartan (vacuum GR with cosmological constant, Lambda formal)
// --------------------------------------------------------------------------

inline LagrangianBundle make_einstein_cartan() {
  using namespace builtin_detail;
  LagrangianBundle b;
  b.name = "einstein-cartan";
  b.model = soften(make_iso(1, 3), ConnectionMode::softened, /*validate=*/false);
  FormWorld& w = b.world();
  std::vector<int> eta{-1, 1, 1, 1};
  auto eps = InvariantPairing::levi_civita(4);
  Scalar lam6 = Scalar::rational(-1, 6) * Scalar::parameter("Lambda");

  FormPolynomial L;
  for (const auto& [idx, sign] : eps.tensor) {
    int a = idx[0], bb = idx[1], c = idx[2], d = idx[3];
    FormPolynomial vc = generator_poly(conn_of(b.model, "P[" + std::to_string(c) + "]"));
    FormPolynomial vd = generator_poly(conn_of(b.model, "P[" + std::to_string(d) + "]"));
    FormPolynomial va = generator_poly(conn_of(b.model, "P[" + std::to_string(a) + "]"));
    FormPolynomial vb = generator_poly(conn_of(b.model, "P[" + std::to_string(bb) + "]"));
    L += sign * wedge(w, rotation_curvature(b.model, "M", a, bb), wedge(w, vc, vd));
    L += (sign * lam6) * wedge(w, wedge(w, va, vb), wedge(w, vc, vd));
  }
  b.lagrangian.form = std::move(L);
  b.lagrangian.degree = 4;
  b.lagrangian.fields = b.model.conn;
  b.gauge = lorentz_gauge(b.model, eta);
  b.torsion_zero = torsion_rules(b.model);
  return b;
}

// --------------------------------------------------------------------------
// MacDowell-Mansouri (eps_sign = +1: de Sitter / so(1,4); -1: AdS / so(2,3))
// --------------------------------------------------------------------------

inline LagrangianBundle make_macdowell_mansouri(int eps_sign) {
  using namespace builtin_detail;
  if (eps_sign != 1 && eps_sign != -1)
    throw CatalogError("macdowell-mansouri expects the sign +1 (dS) or -1 (AdS)");
  LagrangianBundle b;
  b.name = eps_sign > 0 ? "macdowell-mansouri-ds" : "macdowell-mansouri-ads";
  b.model = soften(make_iso(1, 3), ConnectionMode::softened, /*validate=*/false);
  FormWorld& w = b.world();
  std::vector<int> eta{-1, 1, 1, 1};
  auto eps = InvariantPairing::levi_civita(4);
  Scalar lam2 = Scalar::parameter("lambda", 2);

  auto f_block = [&](int a, int bb) {
    FormPolynomial f = rotation_curvature(b.model, "M", a, bb);
    f -= (Scalar(eps_sign) * lam2) *
         wedge(w, generator_poly(conn_of(b.model, "P[" + std::to_string(a) + "]")),
               generator_poly(conn_of(b.model, "P[" + std::to_string(bb) + "]")));
    return f;
  };

  FormPolynomial L;
  for (const auto& [idx, sign] : eps.tensor)
    L += (Scalar::rational(1, 2) * sign) * wedge(w, f_block(idx[0], idx[1]), f_block(idx[2], idx[3]));
  b.lagrangian.form = std::move(L);
  b.lagrangian.degree = 4;
  b.lagrangian.fields = b.model.conn;
  b.gauge = lorentz_gauge(b.model, eta);
  b.torsion_zero = torsion_rules(b.model);
  return b;
}

// --------------------------------------------------------------------------
// D=4 N=1 supergravity, rheonomic 4-form Lagrangian
// --------------------------------------------------------------------------

struct SugraBundle {
  LagrangianBundle base;
  GammaRep rep;
  Mat gamma5;
};

inline SugraBundle make_sugra4() {
  using namespace builtin_detail;
  SugraBundle s{{}, build_gamma(4, {1, 3}), Mat()};
  s.gamma5 = (s.rep.gammas[0] * s.rep.gammas[1] * s.rep.gammas[2] * s.rep.gammas[3])
                 .scaled(GaussianRational::i());
  LagrangianBundle& b = s.base;
  b.name = "sugra-d4";
  b.model = soften(make_super_poincare(4), ConnectionMode::softened, /*validate=*/false);
  FormWorld& w = b.world();
  std::vector<int> eta{-1, 1, 1, 1};
  auto eps = InvariantPairing::levi_civita(4);

  FormPolynomial L;
  for (const auto& [idx, sign] : eps.tensor) {
    FormPolynomial vc = generator_poly(conn_of(b.model, "P[" + std::to_string(idx[2]) + "]"));
    FormPolynomial vd = generator_poly(conn_of(b.model, "P[" + std::to_string(idx[3]) + "]"));
    L += sign * wedge(w, rotation_curvature(b.model, "M", idx[0], idx[1]), wedge(w, vc, vd));
  }
  // 4 psibar gamma5 gamma_a D psi ^ V^a  (D psi is the gravitino curvature
  // definition of the model)
  std::vector<FormPolynomial> psi, dpsi;
  for (int al = 0; al < 4; ++al) {
    GenId q = b.model.algebra.require("Q[" + std::to_string(al) + "]");
    psi.push_back(generator_poly(b.model.conn[q]));
    dpsi.push_back(b.model.curvature_definition(q));
  }
  for (int a = 0; a < 4; ++a) {
    Mat bil = s.rep.conjugation * s.gamma5 * s.rep.gammas[a];
    L += wedge(w, matrix_bilinear(w, bil, psi, dpsi, Scalar(4)),
               generator_poly(conn_of(b.model, "P[" + std::to_string(a) + "]")));
  }
  b.lagrangian.form = std::move(L);
  b.lagrangian.degree = 4;
  b.lagrangian.fields = b.model.conn;
  b.gauge = lorentz_gauge(b.model, eta, &s.rep);
  b.torsion_zero = torsion_rules(b.model);
  return s;
}

// --------------------------------------------------------------------------
// Abelian fixtures
// --------------------------------------------------------------------------

inline LagrangianBundle make_abelian_topological() {
  LagrangianBundle b;
  b.name = "abelian-topological";
  auto alg = make_abelian(1);
  alg.form_names["T"] = "A";
  b.model = soften(alg, ConnectionMode::softened, /*validate=*/false);
  FormWorld& w = b.world();
  FormId a = b.model.conn[0];
  FormId da = w.formal_d(a);
  b.lagrangian.form = wedge(w, generator_poly(da), generator_poly(da));
  b.lagrangian.degree = 4;
  b.lagrangian.fields = {a};
  FormId chi = w.add({"chi", {}, 0, Parity::even, FormClass::parameter});
  b.gauge.parameters = {chi};
  b.gauge.delta[a] = generator_poly(w.formal_d(chi));
  return b;
}

inline LagrangianBundle make_abelian_cs() {
  LagrangianBundle b;
  b.name = "abelian-cs";
  auto alg = make_abelian(1);
  alg.form_names["T"] = "A";
  b.model = soften(alg, ConnectionMode::softened, /*validate=*/false);
  FormWorld& w = b.world();
  FormId a = b.model.conn[0];
  FormId da = w.formal_d(a);
  b.lagrangian.form = wedge(w, generator_poly(a), generator_poly(da));
  b.lagrangian.degree = 3;
  b.lagrangian.fields = {a};
  FormId chi = w.add({"chi", {}, 0, Parity::even, FormClass::parameter});
  b.gauge.parameters = {chi};
  b.gauge.delta[a] = generator_poly(w.formal_d(chi));
  return b;
}

// --------------------------------------------------------------------------
// Generic sector expansion of curvature symbols along a (V, psi) cobasis
// --------------------------------------------------------------------------

// Replaces a curvature symbol by a generic expansion
//   X = X_{ab} V^a V^b + X_{a beta} V^a psi^beta + X_{beta gamma} psi^beta psi^gamma
// with fresh 0-form coefficient symbols of the parity required by grading.
inline FormPolynomial generic_sector_expansion(FormWorld& w, FormId curv,
                                               const std::vector<FormId>& vs,
                                               const std::vector<FormId>& psis) {
  const auto& info = w.info(curv);
  if (info.degree != 2) throw StructuralError("generic expansion expects a 2-form symbol");
  int target = info.total_parity();
  auto coeff = [&](const std::string& tag, std::vector<int> idx, int parity_needed) {
    GeneratorFormInfo ci;
    ci.name = tag + "(" + info.key() + ")";
    ci.indices = std::move(idx);
    ci.degree = 0;
    ci.grassmann = parity_needed ? Parity::odd : Parity::even;
    ci.klass = FormClass::coefficient;
    if (auto f = w.find(ci.key())) return *f;
    return w.add(ci);
  };
  FormPolynomial out;
  for (int a = 0; a < static_cast<int>(vs.size()); ++a)
    for (int bb = a + 1; bb < static_cast<int>(vs.size()); ++bb)
      out += wedge(w, generator_poly(coeff("xVV", {a, bb}, target)),
                   wedge(w, generator_poly(vs[a]), generator_poly(vs[bb])));
  for (int a = 0; a < static_cast<int>(vs.size()); ++a)
    for (int be = 0; be < static_cast<int>(psis.size()); ++be)
      out += wedge(w, generator_poly(coeff("xVp", {a, be}, (target + 1) % 2)),
                   wedge(w, generator_poly(vs[a]), generator_poly(psis[be])));
  for (int be = 0; be < static_cast<int>(psis.size()); ++be)
    for (int ga = be; ga < static_cast<int>(psis.size()); ++ga)
      out += wedge(w, generator_poly(coeff("xpp", {be, ga}, target)),
                   wedge(w, generator_poly(psis[be]), generator_poly(psis[ga])));
  return out;
}

}  // namespace cartankit
