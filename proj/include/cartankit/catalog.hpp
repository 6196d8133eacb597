// catalog.hpp
// Built-in algebra catalog.
//
// Sign and normalization conventions (fixed here once, used everywhere):
//  * mostly-plus metric, eta_00 = -1; "signature (r,s)" counts (timelike,
//    spacelike).  Catalog metrics are arranged Lorentz-first,
//    eta = diag(-1, +1 x s, -1 x (r-1)), so that the so(1,3) block always
//    sits at indices 0..3 and extra directions are appended: index 4 is the
//    de Sitter direction (+1), index 5 the anti-de Sitter one (-1).
//  * rotation generators (M_AB)^C_D = delta^C_A eta_BD - delta^C_B eta_AD,
//    giving [M_AB, M_CD] = eta_BC M_AD - eta_AC M_BD - eta_BD M_AC
//    + eta_AD M_BC and [M_a4, M_b4] = -eta_44 M_ab.  With the arrangement
//    above, so(1,4) has [P,P] = -M (dS, eps = +1) and so(2,3) has
//    [P,P] = +M (AdS, eps = -1).
//  * spinors transform with sigma(M_ab) = (1/2) Gamma_ab and the
//    supertranslation bracket is {Q_a, Q_b} = -i (C Gamma^c)_ab P_c, which
//    reproduces the Maurer-Cartan rule d V^a = (i/2) psibar Gamma^a psi.
//  * osp(1|4) is built in its real sp(4) presentation: P_a -> Gamma_a / 2,
//    M_ab -> Gamma_ab / 2, {Q,Q} expanded exactly in that basis (the i-free
//    convention natural to the real form).

#pragma once

#include <functional>

#include "cartankit/algebra.hpp"
#include "cartankit/clifford.hpp"
#include "cartankit/linalg.hpp"

namespace cartankit {

namespace catalog_detail {

inline std::vector<int> lorentz_first_metric(int r, int s) {
  std::vector<int> eta;
  eta.push_back(-1);
  for (int k = 0; k < s; ++k) eta.push_back(+1);
  for (int k = 0; k < r - 1; ++k) eta.push_back(-1);
  return eta;
}

// Declares the antisymmetric family fam[A B] for A < B < n.
inline void declare_rotations(SuperAlgebra& alg, const std::string& fam, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      alg.add_generator({fam, {a, b}, IndexSymmetry::antisymmetric, Parity::even});
}

// [M_AB, M_CD] = eta_BC M_AD - eta_AC M_BD - eta_BD M_AC + eta_AD M_BC
inline void so_brackets(SuperAlgebra& alg, const std::string& fam, const std::vector<int>& eta) {
  int n = static_cast<int>(eta.size());
  auto term = [&](std::vector<std::pair<GenId, Scalar>>& rhs, int e, int x, int y) {
    if (e == 0) return;
    auto [g, sign] = alg.resolve(fam, {x, y});
    if (!g) return;
    rhs.emplace_back(*g, Scalar(e) * sign);
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (std::make_pair(a, b) > std::make_pair(c, d)) continue;
          std::vector<std::pair<GenId, Scalar>> rhs;
          if (b == c) term(rhs, eta[b], a, d);
          if (a == c) term(rhs, -eta[a], b, d);
          if (b == d) term(rhs, -eta[b], a, c);
          if (a == d) term(rhs, eta[a], b, c);
          if (!rhs.empty())
            alg.add_bracket(alg.require(Generator{fam, {a, b}, IndexSymmetry::antisymmetric}.key()),
                            alg.require(Generator{fam, {c, d}, IndexSymmetry::antisymmetric}.key()), rhs);
        }
}

// [M_AB, X_C] = eta_BC X_A - eta_AC X_B for a vector family X
inline void vector_brackets(SuperAlgebra& alg, const std::string& rot, const std::string& vec,
                            const std::vector<int>& eta, int vec_range) {
  int n = static_cast<int>(eta.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < vec_range; ++c) {
        std::vector<std::pair<GenId, Scalar>> rhs;
        if (b == c) rhs.emplace_back(alg.require(vec + "[" + std::to_string(a) + "]"), Scalar(eta[b]));
        if (a == c) rhs.emplace_back(alg.require(vec + "[" + std::to_string(b) + "]"), Scalar(-eta[a]));
        if (!rhs.empty())
          alg.add_bracket(alg.require(Generator{rot, {a, b}, IndexSymmetry::antisymmetric}.key()),
                          alg.require(vec + "[" + std::to_string(c) + "]"), rhs);
      }
}

// [M_ab, Q_beta] = (1/2) (Gamma_ab)^alpha_beta Q_alpha
inline void spinor_brackets(SuperAlgebra& alg, const std::string& rot, const std::string& spin,
                            const GammaRep& rep, int rot_range) {
  for (int a = 0; a < rot_range; ++a)
    for (int b = a + 1; b < rot_range; ++b) {
      Mat g = *rep.gamma_antisym({a, b});
      for (int beta = 0; beta < rep.spinor_size; ++beta) {
        std::vector<std::pair<GenId, Scalar>> rhs;
        for (int alpha = 0; alpha < rep.spinor_size; ++alpha) {
          GaussianRational c = g.at(alpha, beta);
          if (c.is_zero()) continue;
          rhs.emplace_back(alg.require(spin + "[" + std::to_string(alpha) + "]"),
                           Scalar(c * GaussianRational(Rational(1, 2))));
        }
        if (!rhs.empty())
          alg.add_bracket(alg.require(Generator{rot, {a, b}, IndexSymmetry::antisymmetric}.key()),
                          alg.require(spin + "[" + std::to_string(beta) + "]"), rhs);
      }
    }
}

}  // namespace catalog_detail

// --------------------------------------------------------------------------
// Individual builders
// --------------------------------------------------------------------------

inline SuperAlgebra make_so(int r, int s) {
  using namespace catalog_detail;
  if (r < 1 || s < 1 || r + s < 2 || r + s > 12) throw CatalogError("so(r,s): unsupported signature");
  SuperAlgebra alg;
  alg.name = "so(" + std::to_string(r) + "," + std::to_string(s) + ")";
  alg.spacetime_dimension = r + s;
  alg.signature = {r, s};
  auto eta = lorentz_first_metric(r, s);
  declare_rotations(alg, "M", r + s);
  so_brackets(alg, "M", eta);
  alg.form_names = {{"M", "omega"}};
  alg.curvature_names = {{"M", "R"}};
  return alg;
}

inline SuperAlgebra make_iso(int r, int s) {
  using namespace catalog_detail;
  if (r < 0 || s < 0 || r + s < 2 || r + s > 12) throw CatalogError("iso(r,s): unsupported signature");
  SuperAlgebra alg;
  alg.name = "iso(" + std::to_string(r) + "," + std::to_string(s) + ")";
  alg.spacetime_dimension = r + s;
  alg.signature = {r, s};
  auto eta = lorentz_first_metric(r, s);
  int n = r + s;
  declare_rotations(alg, "M", n);
  for (int a = 0; a < n; ++a) alg.add_generator({"P", {a}, IndexSymmetry::none, Parity::even});
  so_brackets(alg, "M", eta);
  vector_brackets(alg, "M", "P", eta, n);
  alg.form_names = {{"M", "omega"}, {"P", "V"}};
  alg.curvature_names = {{"M", "R"}, {"P", "T"}};
  return alg;
}

inline SuperAlgebra make_abelian(int n) {
  SuperAlgebra alg;
  alg.name = "abelian(" + std::to_string(n) + ")";
  alg.spacetime_dimension = n;
  for (int a = 0; a < n; ++a) alg.add_generator({"T", {a}, IndexSymmetry::none, Parity::even});
  alg.form_names = {{"T", "sigma"}};
  alg.curvature_names = {{"T", "R"}};
  return alg;
}

// N = 1 super-Poincare in D dimensions (D = 4 or 11 are the catalog's
// physical cases; any 3 <= D <= 12 with a consistent gamma rep works).
inline SuperAlgebra make_super_poincare(int dimension, int n_super = 1) {
  using namespace catalog_detail;
  if (n_super != 1) throw CatalogError("super-poincare: only N=1 is cataloged");
  if (dimension < 3 || dimension > 12) throw CatalogError("super-poincare: unsupported dimension");
  GammaRep rep = build_gamma(dimension, {1, dimension - 1});
  BilinearTable table = bilinear_table(rep);
  if (!table.symmetric(1))
    throw CatalogError("super-poincare: rank-1 bilinear not symmetric in this dimension");

  SuperAlgebra alg;
  alg.name = "super-poincare(" + std::to_string(dimension) + ")";
  alg.spacetime_dimension = dimension;
  alg.signature = {1, dimension - 1};
  auto eta = lorentz_first_metric(1, dimension - 1);
  declare_rotations(alg, "M", dimension);
  for (int a = 0; a < dimension; ++a) alg.add_generator({"P", {a}, IndexSymmetry::none, Parity::even});
  for (int al = 0; al < rep.spinor_size; ++al)
    alg.add_generator({"Q", {al}, IndexSymmetry::none, Parity::odd});

  so_brackets(alg, "M", eta);
  vector_brackets(alg, "M", "P", eta, dimension);
  spinor_brackets(alg, "M", "Q", rep, dimension);

  // {Q_alpha, Q_beta} = -i (C Gamma^a)_{alpha beta} P_a
  for (int al = 0; al < rep.spinor_size; ++al)
    for (int be = al; be < rep.spinor_size; ++be) {
      std::vector<std::pair<GenId, Scalar>> rhs;
      for (int a = 0; a < dimension; ++a) {
        GaussianRational c = rep.bilinear({a}).at(al, be);
        if (c.is_zero()) continue;
        c = c * GaussianRational(Rational(1, eta[a]));  // raise the index
        rhs.emplace_back(alg.require("P[" + std::to_string(a) + "]"),
                         Scalar(-GaussianRational::i() * c));
      }
      if (!rhs.empty())
        alg.add_bracket(alg.require("Q[" + std::to_string(al) + "]"),
                        alg.require("Q[" + std::to_string(be) + "]"), rhs);
    }

  alg.form_names = {{"M", "omega"}, {"P", "V"}, {"Q", "psi"}};
  alg.curvature_names = {{"M", "R"}, {"P", "T"}, {"Q", "rho"}};
  return alg;
}

// osp(1|4) in the real sp(4) presentation; see the header comment.
inline SuperAlgebra make_osp14() {
  using namespace catalog_detail;
  GammaRep rep = build_gamma(4, {1, 3});
  SuperAlgebra alg;
  alg.name = "osp(1|4)";
  alg.spacetime_dimension = 4;
  alg.signature = {1, 3};
  auto eta = lorentz_first_metric(1, 3);
  declare_rotations(alg, "M", 4);
  for (int a = 0; a < 4; ++a) alg.add_generator({"P", {a}, IndexSymmetry::none, Parity::even});
  for (int al = 0; al < 4; ++al) alg.add_generator({"Q", {al}, IndexSymmetry::none, Parity::odd});

  so_brackets(alg, "M", eta);
  vector_brackets(alg, "M", "P", eta, 4);

  // [P_a, P_b] = M_ab   (from [Gamma_a/2, Gamma_b/2] = Gamma_ab/2)
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      alg.add_bracket(alg.require("P[" + std::to_string(a) + "]"),
                      alg.require("P[" + std::to_string(b) + "]"),
                      {{alg.require(Generator{"M", {a, b}, IndexSymmetry::antisymmetric}.key()),
                        Scalar::one()}});

  spinor_brackets(alg, "M", "Q", rep, 4);
  // [P_a, Q_beta] = (1/2)(Gamma_a)^gamma_beta Q_gamma
  for (int a = 0; a < 4; ++a)
    for (int be = 0; be < 4; ++be) {
      std::vector<std::pair<GenId, Scalar>> rhs;
      for (int ga = 0; ga < 4; ++ga) {
        GaussianRational c = rep.gammas[a].at(ga, be);
        if (c.is_zero()) continue;
        rhs.emplace_back(alg.require("Q[" + std::to_string(ga) + "]"),
                         Scalar(c * GaussianRational(Rational(1, 2))));
      }
      if (!rhs.empty())
        alg.add_bracket(alg.require("P[" + std::to_string(a) + "]"),
                        alg.require("Q[" + std::to_string(be) + "]"), rhs);
    }

  // {Q_alpha, Q_beta} = S with S^g_d = delta^g_alpha C_{d beta}
  //                            + delta^g_beta C_{d alpha},
  // expanded exactly over the basis {Gamma_a/2 -> P_a, Gamma_ab/2 -> M_ab}.
  std::vector<Mat> basis;
  std::vector<std::string> basis_names;
  for (int a = 0; a < 4; ++a) {
    basis.push_back(rep.gammas[a].scaled(GaussianRational(Rational(1, 2))));
    basis_names.push_back("P[" + std::to_string(a) + "]");
  }
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      basis.push_back(rep.gamma_antisym({a, b})->scaled(GaussianRational(Rational(1, 2))));
      basis_names.push_back(Generator{"M", {a, b}, IndexSymmetry::antisymmetric}.key());
    }
  const int nb = static_cast<int>(basis.size());
  for (int al = 0; al < 4; ++al)
    for (int be = al; be < 4; ++be) {
      Mat s(4);
      for (int ga = 0; ga < 4; ++ga)
        for (int de = 0; de < 4; ++de) {
          GaussianRational v(0);
          if (ga == al) v += rep.conjugation.at(de, be);
          if (ga == be) v += rep.conjugation.at(de, al);
          s.at(ga, de) = v;
        }
      GMat m(16, GRow(nb));
      GRow b(16);
      for (int ga = 0; ga < 4; ++ga)
        for (int de = 0; de < 4; ++de) {
          for (int k = 0; k < nb; ++k) m[ga * 4 + de][k] = basis[k].at(ga, de);
          b[ga * 4 + de] = s.at(ga, de);
        }
      auto x = solve_linear(m, b);
      if (!x) throw CatalogError("osp(1|4): {Q,Q} does not lie in sp(4)");
      std::vector<std::pair<GenId, Scalar>> rhs;
      for (int k = 0; k < nb; ++k)
        if (!(*x)[k].is_zero()) rhs.emplace_back(alg.require(basis_names[k]), Scalar((*x)[k]));
      if (!rhs.empty())
        alg.add_bracket(alg.require("Q[" + std::to_string(al) + "]"),
                        alg.require("Q[" + std::to_string(be) + "]"), rhs);
    }

  alg.form_names = {{"M", "omega"}, {"P", "V"}, {"Q", "psi"}};
  alg.curvature_names = {{"M", "R"}, {"P", "T"}, {"Q", "rho"}};
  return alg;
}

// co(r,s)-parabolic presentation of so(r+1, s+1): the |1|-graded basis
// {P_a (-1), L_ab + D (0), K_a (+1)} with brackets obtained from the
// light-cone combinations of the two extra directions.
inline SuperAlgebra make_conformal_parabolic(int r, int s) {
  using namespace catalog_detail;
  if (r < 1 || s < 1 || r + s > 10) throw CatalogError("co-parabolic: unsupported signature");
  SuperAlgebra alg;
  int m = r + s;
  alg.name = "co(" + std::to_string(r) + "," + std::to_string(s) + ")-parabolic";
  alg.spacetime_dimension = m;
  alg.signature = {r, s};
  auto eta = lorentz_first_metric(r, s);
  for (int a = 0; a < m; ++a) alg.add_generator({"P", {a}, IndexSymmetry::none, Parity::even});
  declare_rotations(alg, "L", m);
  alg.add_generator({"D", {}, IndexSymmetry::none, Parity::even});
  for (int a = 0; a < m; ++a) alg.add_generator({"K", {a}, IndexSymmetry::none, Parity::even});

  so_brackets(alg, "L", eta);
  vector_brackets(alg, "L", "P", eta, m);
  vector_brackets(alg, "L", "K", eta, m);
  GenId dil = alg.require("D");
  for (int a = 0; a < m; ++a) {
    alg.add_bracket(dil, alg.require("P[" + std::to_string(a) + "]"),
                    {{alg.require("P[" + std::to_string(a) + "]"), Scalar::one()}});
    alg.add_bracket(dil, alg.require("K[" + std::to_string(a) + "]"),
                    {{alg.require("K[" + std::to_string(a) + "]"), Scalar(-1)}});
  }
  // [P_a, K_b] = 2 (L_ab + eta_ab D)
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<std::pair<GenId, Scalar>> rhs;
      if (a != b) {
        auto [g, sign] = alg.resolve("L", {a, b});
        rhs.emplace_back(*g, Scalar(2) * sign);
      }
      if (a == b) rhs.emplace_back(dil, Scalar(2 * eta[a]));
      alg.add_bracket(alg.require("P[" + std::to_string(a) + "]"),
                      alg.require("K[" + std::to_string(b) + "]"), rhs);
    }

  alg.form_names = {{"P", "e"}, {"L", "omega"}, {"D", "b"}, {"K", "f"}};
  alg.curvature_names = {{"P", "T"}, {"L", "W"}, {"D", "fw"}, {"K", "C"}};
  return alg;
}

// Fixture helper: returns a copy with C^A_{BC} incremented by delta.
inline SuperAlgebra perturb(const SuperAlgebra& base, const std::string& a, const std::string& b,
                            const std::string& c, const Scalar& delta) {
  SuperAlgebra alg = base;
  alg.name = base.name + "+perturbation";
  GenId ga = alg.require(a), gb = alg.require(b), gc = alg.require(c);
  alg.constants.add(ga, gb, gc, delta, alg.parity(gb), alg.parity(gc));
  return alg;
}

// --------------------------------------------------------------------------
// Dispatcher
// --------------------------------------------------------------------------

inline SuperAlgebra catalog_algebra(const std::string& name, const std::vector<int>& params = {}) {
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw CatalogError("catalog '" + name + "' expects " + std::to_string(n) + " parameter(s), got " +
                         std::to_string(params.size()));
  };
  if (name == "so") {
    want(2);
    return make_so(params[0], params[1]);
  }
  if (name == "iso") {
    want(2);
    return make_iso(params[0], params[1]);
  }
  if (name == "super-poincare") {
    if (params.size() == 1) return make_super_poincare(params[0]);
    want(2);
    return make_super_poincare(params[0], params[1]);
  }
  if (name == "osp(1|4)" || name == "osp1|4") {
    want(0);
    return make_osp14();
  }
  if (name == "co-parabolic") {
    want(2);
    return make_conformal_parabolic(params[0], params[1]);
  }
  if (name == "abelian") {
    want(1);
    return make_abelian(params[0]);
  }
  throw CatalogError("unknown catalog algebra '" + name + "'");
}

}  // namespace cartankit
