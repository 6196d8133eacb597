#include <catch_amalgamated.hpp>
#include <random>

#include "cartankit/cartan.hpp"
#include "cartankit/catalog.hpp"
#include "cartankit/spinor.hpp"

using namespace cartankit;

namespace {

struct Playground {
  FormWorld w;
  FormId v0, v1, v2, psi1, psi2, chi0;  // bosonic 1-forms, gravitini, a 0-form

  Playground() {
    v0 = w.add({"V", {0}, 1, Parity::even, FormClass::field});
    v1 = w.add({"V", {1}, 1, Parity::even, FormClass::field});
    v2 = w.add({"V", {2}, 1, Parity::even, FormClass::field});
    psi1 = w.add({"psi", {1}, 1, Parity::odd, FormClass::field});
    psi2 = w.add({"psi", {2}, 1, Parity::odd, FormClass::field});
    chi0 = w.add({"c", {}, 0, Parity::even, FormClass::coefficient});
  }
};

std::vector<FormId> conn_family(const ConnectionModel& m, const std::string& gen_family) {
  std::vector<FormId> out;
  for (GenId g = 0; g < m.algebra.size(); ++g)
    if (m.algebra.generators[g].name == gen_family) out.push_back(m.conn[g]);
  return out;
}

}  // namespace

TEST_CASE("wedge basics", "[forms]") {
  Playground p;
  auto V0 = generator_poly(p.v0), V1 = generator_poly(p.v1);
  auto P1 = generator_poly(p.psi1), P2 = generator_poly(p.psi2);

  SECTION("repeated odd-total-parity factor vanishes") {
    REQUIRE(wedge(p.w, wedge(p.w, V0, V1), V0).is_zero());
  }
  SECTION("gravitino 1-forms commute") {
    REQUIRE(wedge(p.w, P1, P2) == wedge(p.w, P2, P1));
    REQUIRE(!wedge(p.w, P1, P1).is_zero());  // psi ^ psi survives
  }
  SECTION("V and psi commute, V pairs anticommute") {
    REQUIRE(wedge(p.w, V0, P1) == wedge(p.w, P1, V0));
    REQUIRE(wedge(p.w, V0, V1) == -wedge(p.w, V1, V0));
  }
  SECTION("0-forms are transparent") {
    auto C = generator_poly(p.chi0);
    REQUIRE(wedge(p.w, C, V0) == wedge(p.w, V0, C));
  }
}

TEST_CASE("wedge properties on randomized monomials", "[forms]") {
  Playground p;
  std::mt19937 rng(20240811);
  std::vector<FormId> pool{p.v0, p.v1, p.v2, p.psi1, p.psi2, p.chi0};
  auto random_monomial = [&]() {
    FormPolynomial f;
    FormMonomial m;
    int len = static_cast<int>(rng() % 3) + 1;
    for (int k = 0; k < len; ++k) m.push(pool[rng() % pool.size()]);
    f.add_factors(p.w, m, Scalar(static_cast<std::int64_t>(rng() % 5) + 1));
    return f;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_monomial(), g = random_monomial(), h = random_monomial();
    // associativity
    REQUIRE(wedge(p.w, wedge(p.w, f, g), h) == wedge(p.w, f, wedge(p.w, g, h)));
    // graded commutativity for homogeneous (monomial) inputs
    if (!f.is_zero() && !g.is_zero()) {
      int tf = monomial_total_parity(p.w, f.terms.begin()->first);
      int tg = monomial_total_parity(p.w, g.terms.begin()->first);
      auto rhs = wedge(p.w, g, f);
      if (tf * tg) rhs = -rhs;
      REQUIRE(wedge(p.w, f, g) == rhs);
    }
  }
}

TEST_CASE("differential follows the rule set", "[forms]") {
  SECTION("abelian Maurer-Cartan: d sigma = 0") {
    auto model = soften(make_abelian(4), ConnectionMode::flat);
    for (FormId c : model.conn) REQUIRE(model.rule(c).is_zero());
    auto rep = check_nilpotency(*model.world, model.rules);
    REQUIRE(rep.pass);
  }

  SECTION("Poincare Maurer-Cartan: d V^a = -omega^a_b ^ V^b") {
    auto alg = make_iso(1, 3);
    auto model = soften(alg, ConnectionMode::flat);
    std::vector<int> eta{-1, 1, 1, 1};
    for (int a = 0; a < 4; ++a) {
      FormPolynomial expected;
      for (int b = 0; b < 4; ++b) {
        if (a == b) continue;
        auto [gen, sign] = alg.resolve("M", {a, b});
        REQUIRE(gen.has_value());
        // omega^a_b = eta_{bb} omega^{ab}
        expected += (Scalar(-eta[b]) * sign) *
                    wedge(*model.world, generator_poly(model.conn[*gen]),
                          generator_poly(model.conn[alg.require("P[" + std::to_string(b) + "]")]));
      }
      REQUIRE(model.rule(model.conn[alg.require("P[" + std::to_string(a) + "]")]) == expected);
    }
  }

  SECTION("Leibniz sign for a degree-1 first factor") {
    Playground p;
    auto rules = formal_rules(p.w, all_generators(p.w));
    auto V = generator_poly(p.v0), Psi = generator_poly(p.psi1);
    auto lhs = differential(p.w, wedge(p.w, V, Psi), rules);
    auto rhs = wedge(p.w, differential(p.w, V, rules), Psi) -
               wedge(p.w, V, differential(p.w, Psi, rules));
    REQUIRE(lhs == rhs);
  }

  SECTION("missing rule is a coverage error") {
    Playground p;
    DifferentialRuleSet rules;
    rules.set(p.v0, FormPolynomial::zero());
    REQUIRE_THROWS_AS(differential(p.w, wedge(p.w, generator_poly(p.v0), generator_poly(p.v1)), rules),
                      RuleCoverageError);
  }
}

TEST_CASE("Leibniz property on randomized polynomials", "[forms]") {
  Playground p;
  auto rules = formal_rules(p.w, all_generators(p.w));
  std::mt19937 rng(777);
  std::vector<FormId> pool{p.v0, p.v1, p.v2, p.psi1, p.psi2};
  auto random_poly = [&]() {
    FormPolynomial f;
    int terms = static_cast<int>(rng() % 2) + 1;
    for (int t = 0; t < terms; ++t) {
      FormMonomial m;
      int len = static_cast<int>(rng() % 2) + 1;
      for (int k = 0; k < len; ++k) m.push(pool[rng() % pool.size()]);
      f.add_factors(p.w, m, Scalar(static_cast<std::int64_t>(rng() % 7) - 3));
    }
    return f;
  };
  for (int trial = 0; trial < 150; ++trial) {
    auto f = random_poly(), g = random_poly();
    // restrict to homogeneous-total-parity f so the global Leibniz sign is defined
    if (f.is_zero()) continue;
    int tf = monomial_total_parity(p.w, f.terms.begin()->first);
    bool homogeneous = true;
    for (const auto& [m, c] : f.terms)
      if (monomial_total_parity(p.w, m) != tf) homogeneous = false;
    if (!homogeneous) continue;
    auto lhs = differential(p.w, wedge(p.w, f, g), rules);
    auto rhs = wedge(p.w, differential(p.w, f, rules), g);
    auto tail = wedge(p.w, f, differential(p.w, g, rules));
    rhs += tf ? -tail : tail;
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("nilpotency equals the Jacobi identity", "[forms]") {
  SECTION("catalog Maurer-Cartan systems pass") {
    for (const auto& alg : {make_iso(1, 3), make_so(1, 4), make_so(2, 3)}) {
      auto model = soften(alg, ConnectionMode::flat);
      REQUIRE(check_nilpotency(*model.world, model.rules).pass);
    }
  }
  SECTION("mutated constants fail nilpotency exactly when they fail Jacobi") {
    struct Fixture {
      const char *a, *b, *c;
    };
    for (const auto& fx : {Fixture{"P[0]", "M[0 1]", "P[1]"}, Fixture{"P[2]", "M[0 1]", "P[3]"},
                           Fixture{"M[0 1]", "M[0 2]", "M[1 2]"}}) {
      auto alg = perturb(make_iso(1, 3), fx.a, fx.b, fx.c, Scalar::one());
      bool jacobi_ok = validate_algebra(alg).pass;
      auto model = soften(alg, ConnectionMode::flat, /*validate=*/false);
      bool nilpotent = check_nilpotency(*model.world, model.rules).pass;
      REQUIRE(jacobi_ok == nilpotent);
      REQUIRE(!nilpotent);
    }
  }
  SECTION("D=4 super-Poincare with Lorentz zeroed: Fierz expansion closes d^2") {
    auto alg = make_super_poincare(4);
    auto model = soften(alg, ConnectionMode::flat, /*validate=*/false);
    std::set<GenId> lorentz;
    for (GenId g = 0; g < alg.size(); ++g)
      if (alg.generators[g].name == "M") lorentz.insert(g);
    auto rules = relative_flat_rules(model, lorentz);
    // the reduced system is d V^a = (i/2) psibar gamma^a psi, d psi = 0
    auto rep4 = build_gamma(4, {1, 3});
    auto psis = conn_family(model, "Q");
    std::vector<int> eta{-1, 1, 1, 1};
    for (int a = 0; a < 4; ++a) {
      auto expected = psibar_gamma_psi(*model.world, rep4, {a}, psis,
                                       Scalar::i() * Scalar::rational(1, 2 * eta[a]));
      REQUIRE(rules.rules.at(model.conn[alg.require("P[" + std::to_string(a) + "]")]) == expected);
    }
    REQUIRE(check_nilpotency(*model.world, rules).pass);
  }
}

TEST_CASE("sector decomposition", "[forms]") {
  auto alg = make_super_poincare(4);
  auto model = soften(alg, ConnectionMode::flat, /*validate=*/false);
  auto& w = *model.world;
  auto vs = conn_family(model, "P");
  auto psis = conn_family(model, "Q");
  std::set<FormId> v_class(vs.begin(), vs.end());
  std::set<FormId> psi_class(psis.begin(), psis.end());

  SECTION("pure V monomial sits in sector (2,0)") {
    auto f = wedge(w, generator_poly(vs[0]), generator_poly(vs[1]));
    auto sectors = sector_decompose(w, f, v_class, psi_class);
    REQUIRE(sectors.size() == 1);
    REQUIRE(sectors.count({2, 0}) == 1);
  }
  SECTION("gravitino bilinear wedge V sits in sector (1,2)") {
    auto rep4 = build_gamma(4, {1, 3});
    auto f = wedge(w, psibar_gamma_psi(w, rep4, {0}, psis), generator_poly(vs[1]));
    auto sectors = sector_decompose(w, f, v_class, psi_class);
    REQUIRE(sectors.size() == 1);
    REQUIRE(sectors.count({1, 2}) == 1);
  }
  SECTION("components sum back to the input") {
    auto rep4 = build_gamma(4, {1, 3});
    auto f = wedge(w, psibar_gamma_psi(w, rep4, {0}, psis), generator_poly(vs[1])) +
             wedge(w, generator_poly(vs[0]), generator_poly(vs[2])) +
             wedge(w, generator_poly(psis[1]), generator_poly(psis[1]));
    auto sectors = sector_decompose(w, f, v_class, psi_class);
    FormPolynomial sum;
    for (const auto& [k, part] : sectors) sum += part;
    REQUIRE(sum == f);
    REQUIRE(sectors.size() == 3);
  }
  SECTION("an unpartitioned 1-form is a partition error") {
    auto omega = conn_family(model, "M");
    auto f = generator_poly(omega[0]);
    REQUIRE_THROWS_AS(sector_decompose(w, f, v_class, psi_class), PartitionError);
  }
}

TEST_CASE("canonical rendering is deterministic", "[forms]") {
  Playground p;
  auto f = wedge(p.w, generator_poly(p.v1), generator_poly(p.v0)) +
           Scalar::rational(1, 2) * generator_poly(p.psi1);
  std::string s = to_string(p.w, f);
  REQUIRE(s == to_string(p.w, f));
  REQUIRE(s.find("V[0] ^ V[1]") != std::string::npos);
  REQUIRE(to_string(p.w, FormPolynomial::zero()) == "0");
}
