#include <catch_amalgamated.hpp>

#include "cartankit/catalog.hpp"

using namespace cartankit;

namespace {

// Independent Jacobi oracle, using the other standard form of the graded
// identity: [x,[y,z]] = [[x,y],z] + (-1)^{eps_x eps_y} [y,[x,z]] for every
// ordered triple.  Shares no code with validate_algebra's cyclic residual.
bool jacobi_oracle(const SuperAlgebra& alg) {
  auto add_into = [](std::map<GenId, Scalar>& acc, GenId g, const Scalar& c) {
    acc[g] += c;
    if (acc[g].is_zero()) acc.erase(g);
  };
  const GenId n = static_cast<GenId>(alg.size());
  for (GenId x = 0; x < n; ++x)
    for (GenId y = 0; y < n; ++y)
      for (GenId z = 0; z < n; ++z) {
        std::map<GenId, Scalar> lhs, rhs;
        for (const auto& [d, c] : alg.bracket(y, z))
          for (const auto& [e, c2] : alg.bracket(x, d)) add_into(lhs, e, c * c2);
        for (const auto& [d, c] : alg.bracket(x, y))
          for (const auto& [e, c2] : alg.bracket(d, z)) add_into(rhs, e, c * c2);
        bool sign = parity_bit(alg.parity(x)) && parity_bit(alg.parity(y));
        for (const auto& [d, c] : alg.bracket(x, z))
          for (const auto& [e, c2] : alg.bracket(y, d)) add_into(rhs, e, sign ? -(c * c2) : c * c2);
        if (lhs != rhs) return false;
      }
  return true;
}

// Matrix oracle for so(r,s): (M_AB)^C_D = delta^C_A eta_BD - delta^C_B eta_AD.
Mat so_matrix(const std::vector<int>& eta, int a, int b, int n) {
  Mat m(n);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      int v = 0;
      if (c == a) v += (b == d) ? eta[b] : 0;
      if (c == b) v -= (a == d) ? eta[a] : 0;
      m.at(c, d) = GaussianRational(v);
    }
  return m;
}

std::vector<int> lorentz_first(int r, int s) {
  std::vector<int> eta{-1};
  for (int k = 0; k < s; ++k) eta.push_back(1);
  for (int k = 0; k < r - 1; ++k) eta.push_back(-1);
  return eta;
}

std::set<GenId> family(const SuperAlgebra& alg, const std::string& name) {
  std::set<GenId> out;
  for (GenId g = 0; g < alg.size(); ++g)
    if (alg.generators[g].name == name) out.insert(g);
  return out;
}

}  // namespace

TEST_CASE("catalog dimensions", "[algebra]") {
  auto so14 = make_so(1, 4);
  REQUIRE(so14.size() == 10);  // n(n-1)/2, n = 5
  for (const auto& g : so14.generators) REQUIRE(g.parity == Parity::even);

  auto sp11 = make_super_poincare(11);
  int even = 0, odd = 0;
  for (const auto& g : sp11.generators) (g.parity == Parity::even ? even : odd)++;
  REQUIRE(even == 66);  // 55 Lorentz + 11 translations
  REQUIRE(odd == 32);   // 2^5 Majorana components

  auto osp = make_osp14();
  even = odd = 0;
  for (const auto& g : osp.generators) (g.parity == Parity::even ? even : odd)++;
  REQUIRE(even == 10);
  REQUIRE(odd == 4);
}

TEST_CASE("osp(1|4) dimensions counted from the defining condition", "[algebra]") {
  // Independent count: S in sp(4) iff S^T C + C S = 0; odd parameters are a
  // free 4-component spinor.  16 -> 10 even dimensions.
  GammaRep rep = build_gamma(4, {1, 3});
  GMat rows;
  for (int g = 0; g < 4; ++g)
    for (int d = 0; d < 4; ++d) {
      // (S^T C + C S)_{gd} = sum_k S_{kg} C_{kd} + sum_k C_{gk} S_{kd}
      GRow row(16, GaussianRational(0));
      for (int k = 0; k < 4; ++k) {
        row[k * 4 + g] += rep.conjugation.at(k, d);
        row[k * 4 + d] += rep.conjugation.at(g, k);
      }
      rows.push_back(row);
    }
  auto basis = nullspace(rows);
  REQUIRE(basis.size() == 10);
}

TEST_CASE("validate_algebra on the catalog", "[algebra]") {
  SECTION("Poincare iso(1,3) passes; brute-force oracle agrees") {
    auto alg = make_iso(1, 3);
    auto rep = validate_algebra(alg);
    REQUIRE(rep.pass);
    REQUIRE(jacobi_oracle(alg));
  }
  SECTION("fully abelian algebra passes") {
    auto alg = make_abelian(5);
    REQUIRE(validate_algebra(alg).pass);
  }
  SECTION("so(1,4), so(2,3), so(2,4)") {
    for (auto [r, s] : {std::pair{1, 4}, {2, 3}, {2, 4}}) {
      auto alg = make_so(r, s);
      REQUIRE(validate_algebra(alg).pass);
      REQUIRE(jacobi_oracle(alg));
    }
  }
  SECTION("osp(1|4) passes, including odd triples") {
    auto alg = make_osp14();
    REQUIRE(validate_algebra(alg).pass);
    REQUIRE(jacobi_oracle(alg));
  }
  SECTION("super-poincare D=4 passes") {
    auto alg = make_super_poincare(4);
    REQUIRE(validate_algebra(alg).pass);
    REQUIRE(jacobi_oracle(alg));
  }
  SECTION("conformal parabolic passes") {
    auto alg = make_conformal_parabolic(1, 3);
    REQUIRE(validate_algebra(alg).pass);
    REQUIRE(jacobi_oracle(alg));
  }
  SECTION("perturbed Poincare fails with a listed triple") {
    auto alg = perturb(make_iso(1, 3), "P[0]", "M[0 1]", "P[1]", Scalar::one());
    auto rep = validate_algebra(alg);
    REQUIRE(!rep.pass);
    bool has_jacobi = false;
    for (const auto& v : rep.violations)
      if (v.kind == ValidationReport::Kind::jacobi && !v.residual.is_zero()) has_jacobi = true;
    REQUIRE(has_jacobi);
  }
  SECTION("structural error is distinct from a Jacobi failure") {
    auto alg = make_iso(1, 3);
    REQUIRE_THROWS_AS(alg.bracket(0, 99), StructuralError);
    REQUIRE_THROWS_AS(perturb(alg, "P[9]", "M[0 1]", "P[1]", Scalar::one()), StructuralError);
  }
  SECTION("parallel validation agrees with serial") {
    auto alg = make_super_poincare(4);
    auto a = validate_algebra(alg, 1);
    auto b = validate_algebra(alg, 3);
    REQUIRE(a.pass == b.pass);
    REQUIRE(a.violations.size() == b.violations.size());
  }
}

TEST_CASE("matrix representation oracle for so and iso brackets", "[algebra]") {
  // so(1,4): compare every [M_AB, M_CD] against the matrix commutator
  auto alg = make_so(1, 4);
  auto eta = lorentz_first(1, 4);
  const int n = 5;
  for (GenId g1 = 0; g1 < alg.size(); ++g1)
    for (GenId g2 = 0; g2 < alg.size(); ++g2) {
      const auto& a = alg.generators[g1];
      const auto& b = alg.generators[g2];
      Mat ma = so_matrix(eta, a.indices[0], a.indices[1], n);
      Mat mb = so_matrix(eta, b.indices[0], b.indices[1], n);
      Mat comm = ma * mb - mb * ma;
      Mat recon(n);
      for (const auto& [e, c] : alg.bracket(g1, g2)) {
        const auto& ge = alg.generators[e];
        recon = recon + so_matrix(eta, ge.indices[0], ge.indices[1], n).scaled(c.constant_value());
      }
      REQUIRE(comm == recon);
    }
}

TEST_CASE("analyze_split", "[algebra]") {
  SECTION("iso(1,3) at the Lorentz subalgebra is closed and reductive") {
    auto alg = make_iso(1, 3);
    auto rep = analyze_split(alg, family(alg, "M"));
    REQUIRE(rep.is_subalgebra_closed);
    REQUIRE(rep.is_reductive);
    REQUIRE(rep.complement.size() == 4);
  }
  SECTION("iso(r,s) at so(r,s) is reductive for r+s <= 11") {
    for (auto [r, s] : {std::pair{1, 2}, {2, 2}, {1, 4}, {2, 3}, {1, 9}, {1, 10}}) {
      auto alg = make_iso(r, s);
      auto rep = analyze_split(alg, family(alg, "M"));
      REQUIRE(rep.is_reductive);
    }
  }
  SECTION("translations alone are not a subalgebra of so(1,4)") {
    // inside so(1,4) the boosts along the extra direction close onto M
    auto alg = make_so(1, 4);
    std::set<GenId> subset;
    for (GenId g = 0; g < alg.size(); ++g)
      if (alg.generators[g].indices[1] == 4) subset.insert(g);
    auto rep = analyze_split(alg, subset);
    REQUIRE(!rep.is_subalgebra_closed);
  }
  SECTION("so(2,4) |1|-grading verified in the parabolic basis") {
    auto alg = make_conformal_parabolic(1, 3);
    std::map<GenId, int> hint;
    for (GenId g = 0; g < alg.size(); ++g) {
      const auto& name = alg.generators[g].name;
      hint[g] = name == "P" ? -1 : name == "K" ? +1 : 0;
    }
    std::set<GenId> h = family(alg, "L");
    for (GenId g : family(alg, "K")) h.insert(g);
    h.insert(alg.require("D"));
    auto rep = analyze_split(alg, h, hint);
    REQUIRE(rep.is_subalgebra_closed);
    REQUIRE(rep.grading.has_value());
  }
  SECTION("grading fails with a wrong hint") {
    auto alg = make_conformal_parabolic(1, 3);
    std::map<GenId, int> hint;
    for (GenId g = 0; g < alg.size(); ++g) hint[g] = 0;  // [P,K] ~ L+D violates this
    hint[alg.require("P[0]")] = 1;
    auto rep = analyze_split(alg, family(alg, "L"), hint);
    REQUIRE(!rep.grading.has_value());
  }
  SECTION("degenerate split: everything in the subalgebra") {
    auto alg = make_so(1, 4);
    std::set<GenId> all;
    for (GenId g = 0; g < alg.size(); ++g) all.insert(g);
    auto rep = analyze_split(alg, all);
    REQUIRE(rep.is_subalgebra_closed);
    REQUIRE(rep.is_reductive);
    REQUIRE(rep.complement.empty());
  }
  SECTION("empty subset is refused") {
    auto alg = make_so(1, 4);
    REQUIRE_THROWS_AS(analyze_split(alg, {}), StructuralError);
  }
}

TEST_CASE("graded antisymmetry normalization is idempotent", "[algebra]") {
  // adding the two halves of an antisymmetric bracket in either order gives
  // the same stored table
  auto a = make_abelian(3);
  SuperAlgebra x = a, y = a;
  x.add_bracket(0, 1, {{2, Scalar(5)}});
  y.add_bracket(1, 0, {{2, Scalar(-5)}});
  REQUIRE(x.bracket(0, 1) == y.bracket(0, 1));
  REQUIRE(x.bracket(1, 0) == y.bracket(1, 0));

  // a nonzero [X,X] for even X is an antisymmetry violation, caught rather
  // than silently normalized away
  SuperAlgebra z = a;
  z.constants.add(2, 1, 1, Scalar::one(), Parity::even, Parity::even);
  auto rep = validate_algebra(z);
  REQUIRE(!rep.pass);
  REQUIRE(rep.violations.front().kind == ValidationReport::Kind::antisymmetry);
}
