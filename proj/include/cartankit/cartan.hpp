// cartan.hpp
// Flat (Maurer-Cartan) and softened (curved) differential systems built
// from a superalgebra, Bianchi checks, and reductive curvature splits
// including the de Sitter / anti-de Sitter decomposition with a formal
// contraction parameter.
//
// Rule shapes:   flat      d rho^A = -1/2 C^A_BC rho^B rho^C
//                softened  d rho^A = -1/2 C^A_BC rho^B rho^C + R^A
//                          d R^A   = -C^A_BC rho^B R^C
// Curvature symbols are independent generators with the Bianchi identity as
// their differential rule; curvature definitions are substituted only where
// an operation asks for it.

#pragma once

#include <cctype>
#include <memory>

#include "cartankit/algebra.hpp"
#include "cartankit/forms.hpp"

namespace cartankit {

enum class ConnectionMode { flat, softened };

struct ConnectionModel {
  SuperAlgebra algebra;
  ConnectionMode mode = ConnectionMode::flat;
  std::shared_ptr<FormWorld> world;
  std::vector<FormId> conn;  // one 1-form per algebra generator
  std::vector<FormId> curv;  // one 2-form per generator (softened only)
  DifferentialRuleSet rules;
  // Patchwise the connection is a factorized c-bein: a flat fiber part plus
  // an adjoint-twisted local 1-form, glued by transition functions.  The
  // model records the statement only; gauge covariance is exercised through
  // the variational checks, not through transition-function machinery.
  std::string gluing_note =
      "factorized c-bein: rho = (fiber Maurer-Cartan) + Ad(y) tau on each patch, "
      "tau glued by adjoint-twisted transition data";

  const FormPolynomial& rule(FormId f) const { return rules.rules.at(f); }

  // R^A = d rho^A + 1/2 C^A_BC rho^B rho^C, expressed with formal d-symbols.
  FormPolynomial curvature_definition(GenId a) const {
    FormPolynomial p = generator_poly(world->formal_d(conn[a]));
    p += mc_quadratic(a, Scalar::rational(1, 2));
    return p;
  }

  // (coeff) * C^A_BC rho^B rho^C summed over all ordered pairs.
  FormPolynomial mc_quadratic(GenId a, const Scalar& coeff) const {
    FormPolynomial p;
    const auto n = static_cast<GenId>(algebra.size());
    for (GenId b = 0; b < n; ++b)
      for (GenId c = 0; c < n; ++c)
        for (const auto& [e, k] : algebra.bracket(b, c)) {
          if (e != a) continue;
          p += (coeff * k) * wedge(*world, generator_poly(conn[b]), generator_poly(conn[c]));
        }
    return p;
  }
};

namespace cartan_detail {

inline std::string form_family(const SuperAlgebra& alg, const std::string& gen_family) {
  auto it = alg.form_names.find(gen_family);
  if (it != alg.form_names.end()) return it->second;
  std::string low = gen_family;
  for (auto& ch : low) ch = static_cast<char>(std::tolower(ch));
  return low;
}

inline std::string curvature_family(const SuperAlgebra& alg, const std::string& gen_family) {
  auto it = alg.curvature_names.find(gen_family);
  if (it != alg.curvature_names.end()) return it->second;
  return "R(" + form_family(alg, gen_family) + ")";
}

}  // namespace cartan_detail

// Builds the Maurer-Cartan (flat) or softened differential system of an
// algebra.  The algebra must validate; pass validate = false only when the
// caller has already checked it.
inline ConnectionModel soften(const SuperAlgebra& alg, ConnectionMode mode, bool validate = true) {
  if (validate) {
    auto rep = validate_algebra(alg);
    if (!rep.pass)
      throw StructuralError("soften refused: algebra fails validation (" +
                            rep.violations.front().describe(alg) + ")");
  }
  ConnectionModel model;
  model.algebra = alg;
  model.mode = mode;
  model.world = std::make_shared<FormWorld>();

  const auto n = static_cast<GenId>(alg.size());
  for (GenId g = 0; g < n; ++g) {
    const auto& gen = alg.generators[g];
    GeneratorFormInfo info;
    info.name = cartan_detail::form_family(alg, gen.name);
    info.indices = gen.indices;
    info.degree = 1;
    info.grassmann = gen.parity;
    info.klass = FormClass::field;
    model.conn.push_back(model.world->add(info));
  }
  if (mode == ConnectionMode::softened) {
    for (GenId g = 0; g < n; ++g) {
      const auto& gen = alg.generators[g];
      GeneratorFormInfo info;
      info.name = cartan_detail::curvature_family(alg, gen.name);
      info.indices = gen.indices;
      info.degree = 2;
      info.grassmann = gen.parity;
      info.klass = FormClass::curvature;
      model.curv.push_back(model.world->add(info));
    }
  }

  for (GenId a = 0; a < n; ++a) {
    FormPolynomial da = model.mc_quadratic(a, Scalar::rational(-1, 2));
    if (mode == ConnectionMode::softened) da += generator_poly(model.curv[a]);
    model.rules.set(model.conn[a], std::move(da));
  }
  if (mode == ConnectionMode::softened) {
    for (GenId a = 0; a < n; ++a) {
      FormPolynomial dr;
      for (GenId b = 0; b < n; ++b)
        for (GenId c = 0; c < n; ++c)
          for (const auto& [e, coef] : alg.bracket(b, c)) {
            if (e != a) continue;
            dr += (-coef) * wedge(*model.world, generator_poly(model.conn[b]),
                                  generator_poly(model.curv[c]));
          }
      model.rules.set(model.curv[a], std::move(dr));
    }
  }
  return model;
}

// Maurer-Cartan rules restricted to the complement of a subalgebra H: the
// H-connection forms are held at zero and their rules dropped.  This is the
// horizontal (gauge-invariant) sector in which Chevalley-Eilenberg cochains
// live.
inline DifferentialRuleSet relative_flat_rules(const ConnectionModel& model,
                                               const std::set<GenId>& h_subset) {
  if (model.mode != ConnectionMode::flat)
    throw StructuralError("relative_flat_rules expects a flat model");
  std::map<FormId, FormPolynomial> zeroed;
  for (GenId g : h_subset) zeroed[model.conn.at(g)] = FormPolynomial::zero();
  DifferentialRuleSet rules;
  for (GenId g = 0; g < model.algebra.size(); ++g) {
    if (h_subset.count(g)) continue;
    rules.set(model.conn[g], substitute(*model.world, model.rule(model.conn[g]), zeroed));
  }
  return rules;
}

// d^2 on connection generators and curvature symbols of a softened model.
inline NilpotencyReport bianchi_check(const ConnectionModel& model) {
  if (model.mode != ConnectionMode::softened)
    throw StructuralError("bianchi_check expects a softened model; use check_nilpotency on flat rules");
  return check_nilpotency(*model.world, model.rules);
}

// ---------------------------------------------------------------------------
// Reductive curvature split
// ---------------------------------------------------------------------------

struct SplitError : std::runtime_error {
  explicit SplitError(const std::string& m) : std::runtime_error(m) {}
};

// Result of splitting the curvature along a reductive decomposition.
// `proper` holds, per subalgebra generator, R_h^A + (lambda^2 / 2) C^A_BC
// e^B e^C; `torsion` holds, per complement generator, the lambda-stripped
// block d e^A + C^A_BC omega^B e^C (+ lambda/2 C^A within the complement,
// when nonzero).  The raw complement curvature block is lambda * torsion.
struct CurvatureSplit {
  std::map<GenId, FormPolynomial> proper;
  std::map<GenId, FormPolynomial> torsion;
  std::map<GenId, FormId> vielbein;   // complement generator -> e-form
  std::map<GenId, FormId> h_symbol;   // subalgebra generator -> R_h symbol
  std::string lambda;                 // contraction parameter name, may be empty
};

// The complement 1-forms are rescaled by the formal parameter lambda(=1/ell)
// before splitting; pass an empty name to split without rescaling.
inline CurvatureSplit split_curvature(ConnectionModel& model, const SplitReport& split,
                                      const std::string& lambda = {}) {
  if (!split.is_reductive) throw SplitError("split_curvature requires a verified reductive split");
  const SuperAlgebra& alg = model.algebra;
  FormWorld& w = *model.world;
  CurvatureSplit out;
  out.lambda = lambda;

  std::set<GenId> in_h(split.subalgebra.begin(), split.subalgebra.end());
  // vielbein forms for the complement, named e[...] after the generator indices
  for (GenId g : split.complement) {
    GeneratorFormInfo info;
    info.name = "e";
    info.indices = alg.generators[g].indices;
    info.degree = 1;
    info.grassmann = alg.generators[g].parity;
    info.klass = FormClass::field;
    out.vielbein[g] = w.find(info.key()) ? w.require(info.key()) : w.add(info);
  }
  for (GenId g : split.subalgebra) {
    GeneratorFormInfo info;
    info.name = "Rh(" + w.info(model.conn[g]).name + ")";
    info.indices = alg.generators[g].indices;
    info.degree = 2;
    info.grassmann = alg.generators[g].parity;
    info.klass = FormClass::curvature;
    out.h_symbol[g] = w.find(info.key()) ? w.require(info.key()) : w.add(info);
  }

  Scalar lam = lambda.empty() ? Scalar::one() : Scalar::parameter(lambda);
  auto factor = [&](GenId g) -> FormPolynomial {
    if (in_h.count(g)) return generator_poly(model.conn[g]);
    return generator_poly(out.vielbein.at(g), lam);
  };

  const auto n = static_cast<GenId>(alg.size());
  for (GenId a : split.subalgebra) {
    FormPolynomial f = generator_poly(out.h_symbol.at(a));
    for (GenId b = 0; b < n; ++b)
      for (GenId c = 0; c < n; ++c) {
        if (in_h.count(b) && in_h.count(c)) continue;  // absorbed into R_h
        for (const auto& [e, coef] : alg.bracket(b, c)) {
          if (e != a) continue;
          f += (Scalar::rational(1, 2) * coef) * wedge(w, factor(b), factor(c));
        }
      }
    out.proper[a] = std::move(f);
  }
  for (GenId a : split.complement) {
    // build lambda * torsion, then strip one power of lambda
    FormPolynomial f = generator_poly(w.formal_d(out.vielbein.at(a)), lam);
    for (GenId b = 0; b < n; ++b)
      for (GenId c = 0; c < n; ++c)
        for (const auto& [e, coef] : alg.bracket(b, c)) {
          if (e != a) continue;
          f += (Scalar::rational(1, 2) * coef) * wedge(w, factor(b), factor(c));
        }
    if (!lambda.empty()) {
      // every term carries at least one lambda; divide it out
      FormPolynomial stripped;
      for (const auto& [m, c] : f.terms) {
        try {
          stripped.add(m, c.divided_by_parameter(lambda));
        } catch (const ArithmeticError&) {
          throw SplitError("complement curvature block is not proportional to " + lambda);
        }
      }
      f = std::move(stripped);
    }
    out.torsion[a] = std::move(f);
  }
  return out;
}

}  // namespace cartankit
