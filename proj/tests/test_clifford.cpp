#include <catch_amalgamated.hpp>

#include "cartankit/clifford.hpp"

using namespace cartankit;

namespace {

// dense anticommutator check, independent of the constructor's own assert
bool clifford_relation_holds(const GammaRep& rep) {
  Mat id = Mat::identity(rep.spinor_size);
  for (int a = 0; a < rep.dimension; ++a)
    for (int b = 0; b < rep.dimension; ++b) {
      Mat anti = rep.gammas[a] * rep.gammas[b] + rep.gammas[b] * rep.gammas[a];
      Mat want = (a == b) ? id.scaled(GaussianRational(2 * rep.metric[a])) : Mat(rep.spinor_size);
      if (!(anti == want)) return false;
    }
  return true;
}

int transpose_sign(const Mat& m) {
  Mat t = m.transposed();
  if (t == m) return +1;
  if (t == m.scaled(GaussianRational(-1))) return -1;
  return 0;
}

}  // namespace

TEST_CASE("build_gamma produces exact Clifford representations", "[clifford]") {
  SECTION("D=4 signature (1,3)") {
    auto rep = build_gamma(4, {1, 3});
    REQUIRE(rep.spinor_size == 4);
    REQUIRE(clifford_relation_holds(rep));
  }
  SECTION("D=2 signature (1,1)") {
    auto rep = build_gamma(2, {1, 1});
    REQUIRE(rep.spinor_size == 2);
    REQUIRE(clifford_relation_holds(rep));
  }
  SECTION("D=11 signature (1,10): all 121 pairs") {
    auto rep = build_gamma(11, {1, 10});
    REQUIRE(rep.spinor_size == 32);
    REQUIRE(clifford_relation_holds(rep));
  }
  SECTION("entries stay in {0, +-1, +-i}") {
    auto rep = build_gamma(11, {1, 10});
    auto unit = [](const GaussianRational& v) {
      return v.is_zero() || v == GaussianRational(1) || v == GaussianRational(-1) ||
             v == GaussianRational::i() || v == -GaussianRational::i();
    };
    for (const auto& g : rep.gammas)
      for (int i = 0; i < rep.spinor_size; ++i)
        for (int j = 0; j < rep.spinor_size; ++j) REQUIRE(unit(g.at(i, j)));
    for (int i = 0; i < rep.spinor_size; ++i)
      for (int j = 0; j < rep.spinor_size; ++j) REQUIRE(unit(rep.conjugation.at(i, j)));
  }
  SECTION("unsupported dimension refused") {
    REQUIRE_THROWS_AS(build_gamma(13, {1, 12}), RepresentationError);
    REQUIRE_THROWS_AS(build_gamma(4, {2, 3}), RepresentationError);
  }
}

TEST_CASE("charge conjugation has one uniform sign", "[clifford]") {
  for (int d : {2, 3, 4, 5, 6, 10, 11}) {
    auto rep = build_gamma(d, {1, d - 1});
    REQUIRE((rep.conjugation_sign == 1 || rep.conjugation_sign == -1));
    for (int a = 0; a < d; ++a) {
      Mat lhs = rep.conjugation * rep.gammas[a];
      Mat rhs = rep.gammas[a].transposed() * rep.conjugation;
      if (rep.conjugation_sign < 0) rhs = rhs.scaled(GaussianRational(-1));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("bilinear symmetry tables", "[clifford]") {
  SECTION("D=4 Majorana-type basis") {
    auto rep = build_gamma(4, {1, 3});
    auto table = bilinear_table(rep);
    REQUIRE(table.sign[0] == -1);  // C itself antisymmetric
    REQUIRE(table.sign[1] == +1);  // C Gamma^a symmetric
    REQUIRE(table.sign[2] == +1);

    // oracle: dense transpose comparison on every rank-1 matrix
    for (int a = 0; a < 4; ++a) REQUIRE(transpose_sign(rep.bilinear({a})) == +1);
    REQUIRE(transpose_sign(rep.conjugation) == -1);
  }
  SECTION("D=11: exactly ranks 1, 2, 5 symmetric among 0..5") {
    auto rep = build_gamma(11, {1, 10});
    auto table = bilinear_table(rep);
    for (int k = 0; k <= 5; ++k) {
      bool want = (k == 1 || k == 2 || k == 5);
      REQUIRE(table.symmetric(k) == want);
    }
    // spot oracle at rank 5: one explicit index choice
    REQUIRE(transpose_sign(rep.bilinear({0, 2, 4, 6, 8})) == +1);
    REQUIRE(transpose_sign(rep.bilinear({1, 2, 3})) == -1);
  }
}

TEST_CASE("fierz residuals", "[clifford]") {
  auto rep4 = build_gamma(4, {1, 3});

  SECTION("D=4 cyclic identity: (gamma^a)_{d(a}(C gamma_a)_{bc)} = 0") {
    FierzTerm t;
    t.coeff = Scalar::one();
    t.factors.push_back({1, {"a"}, false, -1, 0});  // bare gamma^a, free row
    t.factors.push_back({1, {"a"}, true, 1, 2});    // C gamma_a
    auto res = fierz_residual(rep4, {t});
    REQUIRE(res.empty());
  }

  SECTION("unsymmetrized D=4 control is nonzero, witness recomputed") {
    FierzTerm t;
    t.coeff = Scalar::one();
    t.factors.push_back({1, {"a"}, true, -1, -1});
    t.factors.push_back({1, {"a"}, true, -1, -1});
    auto res = fierz_residual(rep4, {t});
    REQUIRE(!res.empty());
    // independent recomputation of the first stored entry
    const auto& [key, val] = *res.begin();
    GaussianRational direct(0);
    for (int a = 0; a < 4; ++a) {
      GaussianRational w(Rational(1, rep4.metric[a]));
      direct += w * rep4.bilinear({a}).at(key.free_spinor[0], key.free_spinor[1]) *
                rep4.bilinear({a}).at(key.free_spinor[2], key.free_spinor[3]);
    }
    REQUIRE(!direct.is_zero());
    REQUIRE(val == Scalar(direct));
  }

  SECTION("residual is linear in the coefficient") {
    FierzTerm t;
    t.coeff = Scalar::one();
    t.factors.push_back({1, {"a"}, true, -1, -1});
    t.factors.push_back({1, {"a"}, true, -1, -1});
    auto res1 = fierz_residual(rep4, {t});
    t.coeff = Scalar(3);
    auto res3 = fierz_residual(rep4, {t});
    REQUIRE(res1.size() == res3.size());
    for (const auto& [k, v] : res1) REQUIRE(res3.at(k) == Scalar(3) * v);
  }

  SECTION("symmetrization is a projector") {
    // C gamma_a with a free is already symmetric in D=4, so symmetrizing
    // reproduces the plain entries
    FierzTerm t;
    t.coeff = Scalar::one();
    t.factors.push_back({1, {"a"}, true, 0, 1});
    auto res = fierz_residual(rep4, {t});
    for (const auto& [key, val] : res) {
      GaussianRational direct = rep4.bilinear({key.free_vector[0]}).at(key.sym[0], key.sym[1]);
      REQUIRE(val == Scalar(direct));
    }
  }

  SECTION("malformed contraction pattern refused") {
    FierzTerm t;
    t.coeff = Scalar::one();
    t.factors.push_back({2, {"a", "a"}, true, 0, 1});
    t.factors.push_back({1, {"a"}, true, 2, 3});
    REQUIRE_THROWS_AS(fierz_residual(rep4, {t}), SpecificationError);
  }
}

TEST_CASE("D=11 closure tensor (C Gamma_ab)_((ab)(C Gamma^a))_(cd)) vanishes", "[clifford][d11]") {
  auto rep = build_gamma(11, {1, 10});
  FierzTerm t;
  t.coeff = Scalar::one();
  t.factors.push_back({2, {"a", "b"}, true, 0, 1});
  t.factors.push_back({1, {"a"}, true, 2, 3});
  auto res = fierz_residual(rep, {t});
  REQUIRE(res.empty());
}
