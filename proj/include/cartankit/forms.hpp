// forms.hpp
// Sparse bigraded exterior algebra over a finite set of generator forms.
//
// Each generator carries a form degree p and a Grassmann parity eps; two
// generators commute with the sign (-1)^{(p1+eps1)(p2+eps2)} (total-parity
// rule).  Under this convention gravitino 1-forms commute and may repeat in
// a monomial, while bosonic 1-forms anticommute.  The differential is rule
// driven (graded Leibniz with sign (-1)^{p+eps}) and d^2-nilpotency is a
// checkable property of a rule set, not an assumption.

#pragma once

#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cartankit/algebra.hpp"  // Parity, parity_bit, StructuralError
#include "cartankit/scalar.hpp"

namespace cartankit {

struct RuleCoverageError : std::runtime_error {
  explicit RuleCoverageError(const std::string& m) : std::runtime_error(m) {}
};
struct PartitionError : std::runtime_error {
  explicit PartitionError(const std::string& m) : std::runtime_error(m) {}
};

// Canonical ordering class; lower classes sort to the front of a monomial.
enum class FormClass : std::uint8_t {
  parameter = 0,   // gauge parameters (chi)
  variation = 1,   // variation symbols (var(g))
  curvature = 2,   // curvature symbols and formal differentials
  field = 3,       // connection forms, vielbeins, p-form potentials
  coefficient = 4  // 0-form expansion coefficients
};

using FormId = std::uint16_t;

struct GeneratorFormInfo {
  std::string name;  // family name, e.g. "omega", "d(omega)", "var(V)"
  std::vector<int> indices;
  int degree = 1;
  Parity grassmann = Parity::even;
  FormClass klass = FormClass::field;

  int total_parity() const { return (degree + parity_bit(grassmann)) % 2; }
  std::string key() const {
    std::string s = name;
    if (!indices.empty()) {
      s += "[";
      for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) s += " ";
        s += std::to_string(indices[k]);
      }
      s += "]";
    }
    return s;
  }
};

// Registry of generator forms.  Polynomials refer to generators by id; the
// canonical factor order is (class, name, indices), recomputed whenever the
// registry grows (relative order of existing generators never changes).
class FormWorld {
 public:
  FormId add(GeneratorFormInfo info) {
    std::string key = info.key();
    if (by_key_.count(key)) throw StructuralError("duplicate generator form " + key);
    infos_.push_back(std::move(info));
    FormId id = static_cast<FormId>(infos_.size() - 1);
    by_key_[key] = id;
    ranks_dirty_ = true;
    return id;
  }

  std::size_t size() const { return infos_.size(); }
  const GeneratorFormInfo& info(FormId f) const { return infos_.at(f); }
  std::optional<FormId> find(const std::string& key) const {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
  }
  FormId require(const std::string& key) const {
    auto f = find(key);
    if (!f) throw StructuralError("unknown generator form " + key);
    return *f;
  }

  int rank(FormId f) const {
    refresh_ranks();
    return rank_[f];
  }

  // Formal differential symbol of a generator: degree +1, same parity,
  // class inherited; created on demand.  d(d(g)) is identically zero.
  FormId formal_d(FormId f) {
    auto it = d_of_.find(f);
    if (it != d_of_.end()) return it->second;
    const auto& base = info(f);
    GeneratorFormInfo d;
    d.name = "d(" + base.name + ")";
    d.indices = base.indices;
    d.degree = base.degree + 1;
    d.grassmann = base.grassmann;
    d.klass = base.klass;
    FormId id = add(std::move(d));
    d_of_[f] = id;
    base_of_[id] = f;
    return id;
  }
  std::optional<FormId> formal_d_of(FormId f) const {
    auto it = d_of_.find(f);
    if (it == d_of_.end()) return std::nullopt;
    return it->second;
  }
  bool is_formal_d(FormId f) const { return base_of_.count(f) != 0; }

 private:
  void refresh_ranks() const {
    if (!ranks_dirty_) return;
    std::vector<FormId> order(infos_.size());
    for (FormId i = 0; i < infos_.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](FormId a, FormId b) {
      const auto& x = infos_[a];
      const auto& y = infos_[b];
      if (x.klass != y.klass) return x.klass < y.klass;
      if (x.name != y.name) return x.name < y.name;
      return x.indices < y.indices;
    });
    rank_.assign(infos_.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) rank_[order[i]] = static_cast<int>(i);
    ranks_dirty_ = false;
  }

  std::vector<GeneratorFormInfo> infos_;
  std::map<std::string, FormId> by_key_;
  std::map<FormId, FormId> d_of_, base_of_;
  mutable std::vector<int> rank_;
  mutable bool ranks_dirty_ = true;
};

// ---------------------------------------------------------------------------
// Monomials and polynomials
// ---------------------------------------------------------------------------

struct FormMonomial {
  static constexpr int kMaxFactors = 16;
  std::uint8_t len = 0;
  FormId f[kMaxFactors] = {};

  bool empty() const { return len == 0; }
  void push(FormId id) {
    if (len >= kMaxFactors) throw StructuralError("monomial exceeds factor capacity");
    f[len++] = id;
  }
  friend bool operator<(const FormMonomial& a, const FormMonomial& b) {
    int n = std::min(a.len, b.len);
    for (int k = 0; k < n; ++k)
      if (a.f[k] != b.f[k]) return a.f[k] < b.f[k];
    return a.len < b.len;
  }
  friend bool operator==(const FormMonomial& a, const FormMonomial& b) {
    if (a.len != b.len) return false;
    return std::memcmp(a.f, b.f, sizeof(FormId) * a.len) == 0;
  }
};

namespace forms_detail {

// Sorts factors into canonical order; returns the commutation sign, or
// nullopt when the monomial vanishes (repeated odd-total-parity factor).
inline std::optional<int> canonicalize(const FormWorld& w, FormMonomial& m) {
  int sign = 1;
  // insertion sort; adjacent swap of (x, y) contributes (-1)^{tp(x) tp(y)}
  for (int i = 1; i < m.len; ++i)
    for (int j = i; j > 0 && w.rank(m.f[j - 1]) > w.rank(m.f[j]); --j) {
      int tp = w.info(m.f[j - 1]).total_parity() * w.info(m.f[j]).total_parity();
      if (tp) sign = -sign;
      std::swap(m.f[j - 1], m.f[j]);
    }
  for (int i = 0; i + 1 < m.len; ++i)
    if (m.f[i] == m.f[i + 1] && w.info(m.f[i]).total_parity() == 1) return std::nullopt;
  return sign;
}

}  // namespace forms_detail

class FormPolynomial {
 public:
  std::map<FormMonomial, Scalar> terms;

  static FormPolynomial zero() { return {}; }

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const FormPolynomial& a, const FormPolynomial& b) { return a.terms == b.terms; }
  friend bool operator!=(const FormPolynomial& a, const FormPolynomial& b) { return !(a == b); }

  void add(const FormMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    Scalar& slot = terms[m];
    slot += c;
    if (slot.is_zero()) terms.erase(m);
  }

  // canonicalizing entry point for arbitrary factor lists
  void add_factors(const FormWorld& w, FormMonomial m, Scalar c) {
    auto sign = forms_detail::canonicalize(w, m);
    if (!sign) return;
    if (*sign < 0) c = -c;
    add(m, c);
  }

  FormPolynomial operator-() const {
    FormPolynomial r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
  }
  FormPolynomial& operator+=(const FormPolynomial& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
  }
  FormPolynomial& operator-=(const FormPolynomial& o) {
    for (const auto& [m, c] : o.terms) add(m, -c);
    return *this;
  }
  friend FormPolynomial operator+(FormPolynomial a, const FormPolynomial& b) { return a += b; }
  friend FormPolynomial operator-(FormPolynomial a, const FormPolynomial& b) { return a -= b; }
  friend FormPolynomial operator*(const Scalar& c, const FormPolynomial& p) {
    FormPolynomial r;
    for (const auto& [m, pc] : p.terms) r.add(m, c * pc);
    return r;
  }

  FormPolynomial substituted_param(const std::string& name, const Scalar& value) const {
    FormPolynomial r;
    for (const auto& [m, c] : terms) r.add(m, c.substituted(name, value));
    return r;
  }
};

// generator as a polynomial
inline FormPolynomial generator_poly(FormId f, Scalar c = Scalar::one()) {
  FormPolynomial p;
  FormMonomial m;
  m.push(f);
  p.add(m, c);
  return p;
}

inline int monomial_degree(const FormWorld& w, const FormMonomial& m) {
  int d = 0;
  for (int k = 0; k < m.len; ++k) d += w.info(m.f[k]).degree;
  return d;
}
inline int monomial_total_parity(const FormWorld& w, const FormMonomial& m) {
  int t = 0;
  for (int k = 0; k < m.len; ++k) t += w.info(m.f[k]).total_parity();
  return t % 2;
}

// Homogeneity is tracked, not enforced: mixed-degree sums return nullopt.
inline std::optional<int> homogeneous_degree(const FormWorld& w, const FormPolynomial& p) {
  std::optional<int> deg;
  for (const auto& [m, c] : p.terms) {
    (void)c;
    int d = monomial_degree(w, m);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return p.is_zero() ? std::optional<int>(0) : deg;
}

// ---------------------------------------------------------------------------
// Wedge product
// ---------------------------------------------------------------------------

inline FormPolynomial wedge(const FormWorld& w, const FormPolynomial& a, const FormPolynomial& b) {
  FormPolynomial r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      FormMonomial m = ma;
      for (int k = 0; k < mb.len; ++k) m.push(mb.f[k]);
      r.add_factors(w, m, ca * cb);
    }
  return r;
}

inline FormPolynomial wedge(const FormWorld& w, const FormPolynomial& a, const FormPolynomial& b,
                            const FormPolynomial& c) {
  return wedge(w, wedge(w, a, b), c);
}

// ---------------------------------------------------------------------------
// Differential
// ---------------------------------------------------------------------------

struct DifferentialRuleSet {
  std::map<FormId, FormPolynomial> rules;

  bool covers(FormId f) const { return rules.count(f) != 0; }
  void set(FormId f, FormPolynomial p) { rules[f] = std::move(p); }
};

// d of every generator appearing in p must be a rule; graded Leibniz with
// d(x ^ y) = dx ^ y + (-1)^{p_x + eps_x} x ^ dy.
inline FormPolynomial differential(const FormWorld& w, const FormPolynomial& p,
                                   const DifferentialRuleSet& rules) {
  FormPolynomial r;
  for (const auto& [m, c] : p.terms) {
    int prefix_parity = 0;
    for (int i = 0; i < m.len; ++i) {
      auto it = rules.rules.find(m.f[i]);
      if (it == rules.rules.end())
        throw RuleCoverageError("no differential rule for " + w.info(m.f[i]).key());
      const FormPolynomial& df = it->second;
      if (!df.is_zero()) {
        Scalar coeff = (prefix_parity % 2) ? -c : c;
        for (const auto& [dm, dc] : df.terms) {
          FormMonomial out;
          for (int k = 0; k < i; ++k) out.push(m.f[k]);
          for (int k = 0; k < dm.len; ++k) out.push(dm.f[k]);
          for (int k = i + 1; k < m.len; ++k) out.push(m.f[k]);
          r.add_factors(w, out, coeff * dc);
        }
      }
      prefix_parity += w.info(m.f[i]).total_parity();
    }
  }
  return r;
}

// Rules augmented so every generator present in `p` but lacking a rule maps
// to its formal differential symbol (and formal symbols map to zero).  This
// is the "universal" differential used by the variational machinery.
inline DifferentialRuleSet formal_rules(FormWorld& w, const std::vector<FormId>& gens) {
  DifferentialRuleSet rules;
  for (FormId g : gens) {
    if (w.is_formal_d(g)) {
      rules.set(g, FormPolynomial::zero());
    } else {
      FormId dg = w.formal_d(g);
      rules.set(g, generator_poly(dg));
      rules.set(dg, FormPolynomial::zero());
    }
  }
  return rules;
}

inline std::vector<FormId> all_generators(const FormWorld& w) {
  std::vector<FormId> v(w.size());
  for (FormId i = 0; i < w.size(); ++i) v[i] = i;
  return v;
}

// ---------------------------------------------------------------------------
// Nilpotency
// ---------------------------------------------------------------------------

struct NilpotencyReport {
  bool pass = true;
  std::map<FormId, FormPolynomial> residuals;  // nonzero d(d(g)) only
};

inline NilpotencyReport check_nilpotency(const FormWorld& w, const DifferentialRuleSet& rules) {
  // rules must cover their own right-hand sides
  for (const auto& [g, rhs] : rules.rules) {
    (void)g;
    for (const auto& [m, c] : rhs.terms) {
      (void)c;
      for (int k = 0; k < m.len; ++k)
        if (!rules.covers(m.f[k]))
          throw RuleCoverageError("rule set does not cover " + w.info(m.f[k]).key());
    }
  }
  NilpotencyReport rep;
  for (const auto& [g, rhs] : rules.rules) {
    FormPolynomial r = differential(w, rhs, rules);
    if (!r.is_zero()) {
      rep.pass = false;
      rep.residuals.emplace(g, std::move(r));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Substitution and extraction
// ---------------------------------------------------------------------------

// Replace every occurrence of the mapped generators by the given
// polynomials (which must have matching degree and parity to preserve the
// grading), keeping the original factor order.
inline FormPolynomial substitute(const FormWorld& w, const FormPolynomial& p,
                                 const std::map<FormId, FormPolynomial>& repl) {
  FormPolynomial r;
  for (const auto& [m, c] : p.terms) {
    FormPolynomial acc;
    FormMonomial unit;
    acc.add(unit, c);
    for (int i = 0; i < m.len; ++i) {
      auto it = repl.find(m.f[i]);
      if (it == repl.end()) {
        acc = wedge(w, acc, generator_poly(m.f[i]));
      } else {
        acc = wedge(w, acc, it->second);
      }
      if (acc.is_zero()) break;
    }
    r += acc;
  }
  return r;
}

// Derivation: sum over factor positions of the monomial with the factor
// replaced by its image (variation symbols carry the parity of the varied
// field, so no extra sign appears).
inline FormPolynomial derive(const FormWorld& w, const FormPolynomial& p,
                             const std::map<FormId, FormPolynomial>& delta) {
  FormPolynomial r;
  for (const auto& [m, c] : p.terms) {
    for (int i = 0; i < m.len; ++i) {
      auto it = delta.find(m.f[i]);
      if (it == delta.end()) continue;
      for (const auto& [dm, dc] : it->second.terms) {
        FormMonomial out;
        for (int k = 0; k < i; ++k) out.push(m.f[k]);
        for (int k = 0; k < dm.len; ++k) out.push(dm.f[k]);
        for (int k = i + 1; k < m.len; ++k) out.push(m.f[k]);
        r.add_factors(w, out, c * dc);
      }
    }
  }
  return r;
}

// Writes p = sum_g g ^ result[g] + remainder, moving each designated factor
// to the front with the commutation sign.  Throws if some monomial is not
// linear in the designated set.
struct LinearExtraction {
  std::map<FormId, FormPolynomial> coefficients;
  FormPolynomial remainder;
};

inline LinearExtraction extract_linear(const FormWorld& w, const FormPolynomial& p,
                                       const std::set<FormId>& designated) {
  LinearExtraction out;
  for (const auto& [m, c] : p.terms) {
    int pos = -1;
    for (int i = 0; i < m.len; ++i)
      if (designated.count(m.f[i])) {
        if (pos >= 0) throw StructuralError("polynomial is not linear in the designated symbols");
        pos = i;
      }
    if (pos < 0) {
      out.remainder.add(m, c);
      continue;
    }
    int tp = w.info(m.f[pos]).total_parity();
    int prefix = 0;
    for (int i = 0; i < pos; ++i) prefix += w.info(m.f[i]).total_parity();
    Scalar coeff = (tp && (prefix % 2)) ? -c : c;
    FormMonomial rest;
    for (int i = 0; i < m.len; ++i)
      if (i != pos) rest.push(m.f[i]);
    out.coefficients[m.f[pos]].add(rest, coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sector decomposition
// ---------------------------------------------------------------------------

// Splits p by the number of factors drawn from the V-class and psi-class
// subsets.  Degree-0 factors outside both subsets ride along (expansion
// coefficients); any other unpartitioned generator is an error.
inline std::map<std::pair<int, int>, FormPolynomial> sector_decompose(
    const FormWorld& w, const FormPolynomial& p, const std::set<FormId>& v_class,
    const std::set<FormId>& psi_class) {
  std::map<std::pair<int, int>, FormPolynomial> out;
  for (const auto& [m, c] : p.terms) {
    int kv = 0, km = 0;
    for (int i = 0; i < m.len; ++i) {
      if (v_class.count(m.f[i]))
        ++kv;
      else if (psi_class.count(m.f[i]))
        ++km;
      else if (w.info(m.f[i]).degree != 0)
        throw PartitionError("generator " + w.info(m.f[i]).key() + " belongs to no partition class");
    }
    out[{kv, km}].add(m, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline std::string to_string(const FormWorld& w, const FormMonomial& m) {
  if (m.len == 0) return "1";
  std::string s;
  for (int k = 0; k < m.len; ++k) {
    if (k) s += " ^ ";
    s += w.info(m.f[k]).key();
  }
  return s;
}

inline std::string to_string(const FormWorld& w, const FormPolynomial& p) {
  if (p.is_zero()) return "0";
  // deterministic: order terms by canonical factor ranks, then render
  std::vector<std::pair<std::vector<int>, const FormMonomial*>> order;
  for (const auto& [m, c] : p.terms) {
    (void)c;
    std::vector<int> key{m.len};
    for (int k = 0; k < m.len; ++k) key.push_back(w.rank(m.f[k]));
    order.emplace_back(std::move(key), &m);
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string s;
  for (const auto& [key, m] : order) {
    (void)key;
    if (!s.empty()) s += " + ";
    s += "(" + p.terms.at(*m).str() + ") " + to_string(w, *m);
  }
  return s;
}

}  // namespace cartankit
