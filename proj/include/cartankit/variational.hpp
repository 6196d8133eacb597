// variational.hpp
// First-order variational calculus on form polynomials: delta L = E + d theta
// by formal variation with a single integration-by-parts pass, gauge
// invariance checks, Noether currents with on-shell reduction.
//
// Variation symbols var(f) are extra generators with the degree and parity
// of the varied field; the variation acts as an even derivation, so E and
// theta extraction is purely syntactic and the round-trip identity
// delta L = sum var(f) ^ E_f + d theta holds exactly by construction (and is
// still asserted in the tests).

#pragma once

#include <optional>

#include "cartankit/cartan.hpp"
#include "cartankit/forms.hpp"

namespace cartankit {

struct VariationError : std::runtime_error {
  explicit VariationError(const std::string& m) : std::runtime_error(m) {}
};
struct NoetherError : std::runtime_error {
  explicit NoetherError(const std::string& m) : std::runtime_error(m) {}
};

// ---------------------------------------------------------------------------
// Invariant pairings
// ---------------------------------------------------------------------------

struct InvariantPairing {
  std::string name;
  int arity = 0;
  int range = 0;
  std::map<std::vector<int>, Scalar> tensor;

  Scalar at(const std::vector<int>& idx) const {
    auto it = tensor.find(idx);
    return it == tensor.end() ? Scalar::zero() : it->second;
  }

  bool totally_antisymmetric() const {
    for (const auto& [idx, val] : tensor) {
      for (int k = 0; k + 1 < arity; ++k) {
        std::vector<int> swapped = idx;
        std::swap(swapped[k], swapped[k + 1]);
        if (!(at(swapped) == -val)) return false;
      }
    }
    return true;
  }

  static InvariantPairing levi_civita(int n) {
    InvariantPairing p;
    p.name = "eps" + std::to_string(n);
    p.arity = n;
    p.range = n;
    std::vector<int> idx(n);
    for (int k = 0; k < n; ++k) idx[k] = k;
    // iterate permutations, tracking the sign
    std::vector<int> perm = idx;
    do {
      int sign = 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) sign = -sign;
      p.tensor[perm] = Scalar(sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
  }
};

// ---------------------------------------------------------------------------
// Variation
// ---------------------------------------------------------------------------

struct LagrangianForm {
  FormPolynomial form;           // in the d-symbol basis (curvatures expanded)
  std::vector<FormId> fields;    // dynamical generator forms
  int degree = 4;
};

struct VariationResult {
  std::map<FormId, FormPolynomial> field_equations;  // variation symbol stripped
  FormPolynomial boundary;                           // theta, linear in variation symbols
  std::map<FormId, FormId> variation_symbol;         // field -> var(field)
};

inline FormId variation_symbol(FormWorld& w, FormId field) {
  const auto& base = w.info(field);
  GeneratorFormInfo info;
  info.name = "var(" + base.name + ")";
  info.indices = base.indices;
  info.degree = base.degree;
  info.grassmann = base.grassmann;
  info.klass = FormClass::variation;
  if (auto f = w.find(info.key())) return *f;
  return w.add(info);
}

// delta L = sum_f var(f) ^ E_f + d theta.  Curvature symbols of the ambient
// model are expanded to their definitions first, so L may be written with
// either.  One deterministic integration-by-parts pass moves every
// d(var(f)) into the boundary term.
inline VariationResult vary(FormWorld& w, const LagrangianForm& lagrangian,
                            const ConnectionModel* model = nullptr) {
  FormPolynomial L = lagrangian.form;
  if (model) {
    std::map<FormId, FormPolynomial> curv_defs;
    for (GenId g = 0; g < model->curv.size(); ++g)
      curv_defs[model->curv[g]] = model->curvature_definition(g);
    if (!curv_defs.empty()) L = substitute(w, L, curv_defs);
  }

  VariationResult out;
  std::map<FormId, FormPolynomial> delta;
  std::set<FormId> d_var_set, var_set;
  for (FormId f : lagrangian.fields) {
    FormId vf = variation_symbol(w, f);
    out.variation_symbol[f] = vf;
    var_set.insert(vf);
    delta[f] = generator_poly(vf);
    FormId dvf = w.formal_d(vf);
    d_var_set.insert(dvf);
    if (auto df = w.formal_d_of(f)) delta[*df] = generator_poly(dvf);
  }

  FormPolynomial dL = derive(w, L, delta);

  // dL = sum_f d(var f) ^ W_f + rest
  auto split = extract_linear(w, dL, d_var_set);
  FormPolynomial epile = split.remainder;
  auto rules = formal_rules(w, all_generators(w));
  for (auto& [dvf, wcoef] : split.coefficients) {
    // locate the variation symbol this d-symbol belongs to
    FormId vf = 0;
    for (const auto& [f, v] : out.variation_symbol)
      if (w.formal_d(v) == dvf) vf = v;
    out.boundary += wedge(w, generator_poly(vf), wcoef);
    FormPolynomial tail = wedge(w, generator_poly(vf), differential(w, wcoef, rules));
    int tp = w.info(vf).total_parity();
    epile += tp ? tail : -tail;
  }

  auto efields = extract_linear(w, epile, var_set);
  if (!efields.remainder.is_zero())
    throw VariationError("variation left terms outside the var ^ E + d theta shape");
  for (const auto& [f, vf] : out.variation_symbol) {
    auto it = efields.coefficients.find(vf);
    out.field_equations[f] = it == efields.coefficients.end() ? FormPolynomial::zero() : it->second;
  }
  return out;
}

// Reconstructs delta L from a VariationResult; used by the round-trip tests.
inline FormPolynomial reconstruct_variation(FormWorld& w, const VariationResult& vr) {
  FormPolynomial total;
  for (const auto& [f, e] : vr.field_equations)
    total += wedge(w, generator_poly(vr.variation_symbol.at(f)), e);
  auto rules = formal_rules(w, all_generators(w));
  total += differential(w, vr.boundary, rules);
  return total;
}

// ---------------------------------------------------------------------------
// Gauge transformations
// ---------------------------------------------------------------------------

struct GaugeRule {
  std::map<FormId, FormPolynomial> delta;  // field -> transformation, linear in the parameters
  std::vector<FormId> parameters;          // the 0-form parameter symbols (chi)
};

enum class GaugeClass { invariant, exact, noninvariant };

struct GaugeCheckResult {
  GaugeClass classification = GaugeClass::invariant;
  FormPolynomial residual;         // delta_chi L, canonicalized
  FormPolynomial exact_potential;  // alpha with residual = d alpha, when exact
};

inline GaugeCheckResult gauge_check(FormWorld& w, const LagrangianForm& lagrangian,
                                    const GaugeRule& rule) {
  // coverage: every field-class generator of L must have a rule
  for (const auto& [m, c] : lagrangian.form.terms) {
    (void)c;
    for (int k = 0; k < m.len; ++k) {
      FormId f = m.f[k];
      FormId base = f;
      if (w.is_formal_d(f)) {
        // formal differential: the base must be covered
        for (const auto& [g, d] : rule.delta) {
          (void)d;
          if (w.formal_d(g) == f) base = g;
        }
      }
      if (w.info(base).klass == FormClass::field && !rule.delta.count(base))
        throw RuleCoverageError("gauge rule does not cover " + w.info(base).key());
    }
  }

  std::map<FormId, FormPolynomial> delta = rule.delta;
  auto rules = formal_rules(w, all_generators(w));
  for (const auto& [f, df] : rule.delta)
    if (auto dsym = w.formal_d_of(f)) delta[*dsym] = differential(w, df, rules);

  GaugeCheckResult out;
  out.residual = derive(w, lagrangian.form, delta);
  if (out.residual.is_zero()) {
    out.classification = GaugeClass::invariant;
    return out;
  }

  // exactness relative to one integration by parts on the parameters
  std::set<FormId> d_params;
  for (FormId chi : rule.parameters) d_params.insert(w.formal_d(chi));
  auto split = extract_linear(w, out.residual, d_params);
  FormPolynomial alpha;
  for (const auto& [dchi, wcoef] : split.coefficients) {
    FormId chi = 0;
    for (FormId p : rule.parameters)
      if (w.formal_d(p) == dchi) chi = p;
    alpha += wedge(w, generator_poly(chi), wcoef);
  }
  FormPolynomial remainder = out.residual - differential(w, alpha, formal_rules(w, all_generators(w)));
  if (remainder.is_zero()) {
    out.classification = GaugeClass::exact;
    out.exact_potential = std::move(alpha);
  } else {
    out.classification = GaugeClass::noninvariant;
  }
  return out;
}

// ---------------------------------------------------------------------------
// On-shell reduction
// ---------------------------------------------------------------------------

using OnShellRuleSet = std::map<FormId, FormPolynomial>;

inline FormPolynomial onshell_reduce(const FormWorld& w, const FormPolynomial& f,
                                     const OnShellRuleSet& rules) {
  // degree/parity preservation and cycle detection
  for (const auto& [lhs, rhs] : rules) {
    for (const auto& [m, c] : rhs.terms) {
      (void)c;
      if (monomial_degree(w, m) != w.info(lhs).degree ||
          monomial_total_parity(w, m) != w.info(lhs).total_parity())
        throw StructuralError("on-shell rule changes degree or parity of " + w.info(lhs).key());
    }
  }
  std::function<void(FormId, std::set<FormId>&)> visit = [&](FormId x, std::set<FormId>& seen) {
    if (!rules.count(x)) return;
    if (seen.count(x)) throw StructuralError("cyclic on-shell rule set at " + w.info(x).key());
    seen.insert(x);
    for (const auto& [m, c] : rules.at(x).terms) {
      (void)c;
      for (int k = 0; k < m.len; ++k) visit(m.f[k], seen);
    }
    seen.erase(x);
  };
  for (const auto& [lhs, rhs] : rules) {
    (void)rhs;
    std::set<FormId> seen;
    visit(lhs, seen);
  }

  FormPolynomial out = f;
  for (std::size_t pass = 0; pass <= rules.size(); ++pass) {
    bool any = false;
    for (const auto& [m, c] : out.terms) {
      (void)c;
      for (int k = 0; k < m.len; ++k)
        if (rules.count(m.f[k])) any = true;
    }
    if (!any) return out;
    out = substitute(w, out, rules);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Noether current
// ---------------------------------------------------------------------------

struct NoetherResult {
  FormPolynomial current;                  // J, in the formal-d basis
  std::optional<FormPolynomial> boundary;  // q with J = d q (on-shell)
};

namespace variational_detail {

// substitute d(field) and d(curvature) symbols by the model's softened rules
inline FormPolynomial to_model_basis(FormWorld& w, const FormPolynomial& f,
                                     const ConnectionModel& model) {
  std::map<FormId, FormPolynomial> repl;
  for (const auto& [g, rhs] : model.rules.rules)
    if (auto dsym = w.formal_d_of(g)) repl[*dsym] = rhs;
  return substitute(w, f, repl);
}

}  // namespace variational_detail

// J = theta evaluated on the gauge variation (plus the exact correction when
// delta_chi L = d alpha).  q is returned when the on-shell rules exhibit J
// as d q; the reduction typically needs only the torsion rule.
inline NoetherResult noether_current(FormWorld& w, const LagrangianForm& lagrangian,
                                     const GaugeRule& rule, const ConnectionModel& model,
                                     const OnShellRuleSet& onshell = {}) {
  auto gc = gauge_check(w, lagrangian, rule);
  if (gc.classification == GaugeClass::noninvariant)
    throw NoetherError("lagrangian is not gauge invariant (even up to an exact term)");

  auto vr = vary(w, lagrangian, &model);
  std::map<FormId, FormPolynomial> eval;
  for (const auto& [f, vf] : vr.variation_symbol) eval[vf] = rule.delta.at(f);
  FormPolynomial current = substitute(w, vr.boundary, eval);
  if (gc.classification == GaugeClass::exact) current -= gc.exact_potential;

  NoetherResult out;
  out.current = current;

  auto reduce = [&](const FormPolynomial& p) {
    return onshell_reduce(w, variational_detail::to_model_basis(w, p, model), onshell);
  };
  FormPolynomial j_red = reduce(current);
  std::set<FormId> d_params;
  for (FormId chi : rule.parameters) d_params.insert(w.formal_d(chi));
  auto split = extract_linear(w, j_red, d_params);
  FormPolynomial q;
  for (const auto& [dchi, wcoef] : split.coefficients) {
    FormId chi = 0;
    for (FormId p : rule.parameters)
      if (w.formal_d(p) == dchi) chi = p;
    q += wedge(w, generator_poly(chi), wcoef);
  }
  FormPolynomial dq = differential(w, q, formal_rules(w, all_generators(w)));
  FormPolynomial residual = j_red - reduce(dq);
  if (residual.is_zero()) out.boundary = std::move(q);
  return out;
}

// ---------------------------------------------------------------------------
// Proportionality helper (compare against displayed expressions up to one
// overall normalization)
// ---------------------------------------------------------------------------

inline std::optional<Scalar> proportionality(const FormPolynomial& value,
                                             const FormPolynomial& reference) {
  if (reference.is_zero()) return value.is_zero() ? std::optional<Scalar>(Scalar::one()) : std::nullopt;
  if (value.is_zero()) return std::nullopt;
  if (value.terms.size() != reference.terms.size()) return std::nullopt;
  // candidate factor from the first monomial (constant coefficients only)
  auto it = value.terms.begin();
  auto jt = reference.terms.find(it->first);
  if (jt == reference.terms.end()) return std::nullopt;
  if (!it->second.is_constant() || !jt->second.is_constant()) return std::nullopt;
  GaussianRational ratio = it->second.constant_value() / jt->second.constant_value();
  for (const auto& [m, c] : reference.terms) {
    auto vt = value.terms.find(m);
    if (vt == value.terms.end()) return std::nullopt;
    if (!(vt->second == Scalar(ratio) * c)) return std::nullopt;
  }
  return Scalar(ratio);
}

}  // namespace cartankit
