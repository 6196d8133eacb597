// algebra.hpp
// Graded Lie superalgebras given by sparse structure constants C^A_{BC},
// their validation (graded antisymmetry, parity consistency, graded Jacobi)
// and the analysis of reductive splits and |k|-gradings.
//
// Storage convention: C^A_{BC} is kept for B <= C in declaration order; the
// other half is reconstructed through the graded-antisymmetry sign
//   C^A_{BC} = -(-1)^{eps_B eps_C} C^A_{CB}.
// Odd-odd brackets (anticommutators) live in the same container.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cartankit/scalar.hpp"

namespace cartankit {

struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& m) : std::runtime_error(m) {}
};
struct CatalogError : std::runtime_error {
  explicit CatalogError(const std::string& m) : std::runtime_error(m) {}
};

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline int parity_bit(Parity p) { return p == Parity::odd ? 1 : 0; }

enum class IndexSymmetry : std::uint8_t { none, antisymmetric, symmetric };

using GenId = std::uint32_t;

struct Generator {
  std::string name;          // family name, e.g. "M"
  std::vector<int> indices;  // ordered representative, e.g. {0,1}
  IndexSymmetry symmetry = IndexSymmetry::none;
  Parity parity = Parity::even;

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

// Sparse C^A_{BC}, stored for B <= C.
class StructureConstants {
 public:
  using Entry = std::pair<GenId, Scalar>;  // (A, coefficient)

  // Accumulate C^A_{BC} += c, normalizing the (B,C) order via the sign rule.
  void add(GenId a, GenId b, GenId c, Scalar coeff, Parity pb, Parity pc) {
    if (coeff.is_zero()) return;
    if (b > c) {
      std::swap(b, c);
      if (!(pb == Parity::odd && pc == Parity::odd)) coeff = -coeff;
    }
    Scalar& slot = table_[{b, c}][a];
    slot += coeff;
    if (slot.is_zero()) {
      table_[{b, c}].erase(a);
      if (table_[{b, c}].empty()) table_.erase({b, c});
    }
  }

  // Raw stored half (B <= C).
  const std::map<std::pair<GenId, GenId>, std::map<GenId, Scalar>>& stored() const { return table_; }

  bool empty() const { return table_.empty(); }

 private:
  std::map<std::pair<GenId, GenId>, std::map<GenId, Scalar>> table_;
};

struct SuperAlgebra {
  std::string name;
  int spacetime_dimension = 0;
  std::pair<int, int> signature{0, 0};  // (timelike, spacelike)
  std::vector<Generator> generators;
  StructureConstants constants;
  // Display names used when a connection model is built on top of the
  // algebra: family -> 1-form name and family -> curvature name.
  std::map<std::string, std::string> form_names;
  std::map<std::string, std::string> curvature_names;

  GenId add_generator(Generator g) {
    for (const auto& other : generators)
      if (other.key() == g.key()) throw StructuralError("duplicate generator " + g.key());
    generators.push_back(std::move(g));
    return static_cast<GenId>(generators.size() - 1);
  }

  std::size_t size() const { return generators.size(); }
  Parity parity(GenId g) const { return generators.at(g).parity; }

  std::optional<GenId> find(const std::string& key) const {
    for (GenId g = 0; g < generators.size(); ++g)
      if (generators[g].key() == key) return g;
    return std::nullopt;
  }

  GenId require(const std::string& key) const {
    auto g = find(key);
    if (!g) throw StructuralError("undeclared generator " + key);
    return *g;
  }

  // Resolve a family member with arbitrary index order; returns the stored
  // representative together with the reordering sign (0 for a repeated
  // antisymmetric index).
  std::pair<std::optional<GenId>, Scalar> resolve(const std::string& family,
                                                  std::vector<int> idx) const {
    Scalar sign = Scalar::one();
    // locate the family to learn its symmetry
    IndexSymmetry sym = IndexSymmetry::none;
    bool family_seen = false;
    for (const auto& g : generators)
      if (g.name == family && g.indices.size() == idx.size()) {
        sym = g.symmetry;
        family_seen = true;
        break;
      }
    if (!family_seen) return {std::nullopt, Scalar::zero()};
    if (sym != IndexSymmetry::none) {
      // bubble-sort, tracking the sign for the antisymmetric case
      for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
          if (idx[j] > idx[j + 1]) {
            std::swap(idx[j], idx[j + 1]);
            if (sym == IndexSymmetry::antisymmetric) sign = -sign;
          }
      if (sym == IndexSymmetry::antisymmetric)
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
          if (idx[i] == idx[i + 1]) return {std::nullopt, Scalar::zero()};
    }
    Generator probe;
    probe.name = family;
    probe.indices = idx;
    auto g = find(probe.key());
    if (!g) return {std::nullopt, Scalar::zero()};
    return {g, sign};
  }

  void add_bracket(GenId b, GenId c, const std::vector<std::pair<GenId, Scalar>>& rhs) {
    for (const auto& [a, coeff] : rhs) {
      if (a >= size() || b >= size() || c >= size())
        throw StructuralError("bracket references undeclared generator");
      constants.add(a, b, c, coeff, parity(b), parity(c));
    }
  }

  // Full bracket [b, c] reconstructed from the stored half.
  std::vector<std::pair<GenId, Scalar>> bracket(GenId b, GenId c) const {
    if (b >= size() || c >= size()) throw StructuralError("bracket of undeclared generator");
    bool swapped = b > c;
    if (swapped) std::swap(b, c);
    auto it = constants.stored().find({b, c});
    if (it == constants.stored().end()) return {};
    std::vector<std::pair<GenId, Scalar>> out;
    out.reserve(it->second.size());
    bool both_odd = parity(b) == Parity::odd && parity(c) == Parity::odd;
    for (const auto& [a, coeff] : it->second)
      out.emplace_back(a, (swapped && !both_odd) ? -coeff : coeff);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationReport {
  enum class Kind { antisymmetry, parity, jacobi };
  struct Violation {
    Kind kind;
    GenId a, b, c;      // for jacobi: the triple; for the others: a = target, (b,c) = lower pair
    GenId component;    // E index of the nonzero residual (jacobi), else = a
    Scalar residual;
    std::string describe(const SuperAlgebra& alg) const {
      auto nm = [&](GenId g) { return alg.generators.at(g).key(); };
      switch (kind) {
        case Kind::antisymmetry:
          return "antisymmetry violated in [" + nm(b) + "," + nm(c) + "] -> " + nm(a);
        case Kind::parity:
          return "parity mismatch in [" + nm(b) + "," + nm(c) + "] -> " + nm(a);
        case Kind::jacobi:
          return "jacobi residual on (" + nm(a) + "," + nm(b) + "," + nm(c) + ") along " +
                 nm(component) + " = " + residual.str();
      }
      return {};
    }
  };
  bool pass = true;
  std::vector<Violation> violations;
};

namespace detail {

// Graded Jacobi residual of one unordered triple, as a map E -> scalar:
//   sum_cyc (-1)^{eps_A eps_C} C^E_{AD} C^D_{BC}.
inline std::map<GenId, Scalar> jacobi_residual(const SuperAlgebra& alg, GenId a, GenId b, GenId c) {
  std::map<GenId, Scalar> res;
  const GenId tri[3] = {a, b, c};
  for (int k = 0; k < 3; ++k) {
    GenId x = tri[k], y = tri[(k + 1) % 3], z = tri[(k + 2) % 3];
    bool minus = parity_bit(alg.parity(x)) && parity_bit(alg.parity(z));
    for (const auto& [d, cyz] : alg.bracket(y, z))
      for (const auto& [e, cxd] : alg.bracket(x, d)) {
        Scalar t = cxd * cyz;
        if (minus) t = -t;
        Scalar& slot = res[e];
        slot += t;
        if (slot.is_zero()) res.erase(e);
      }
  }
  return res;
}

}  // namespace detail

// Checks graded antisymmetry (which, under half-storage, reduces to the
// [X,X] diagonal conditions), parity consistency and the graded Jacobi
// identity over every generator triple.  Exhaustive and exact.
inline ValidationReport validate_algebra(const SuperAlgebra& alg, unsigned jobs = 1) {
  ValidationReport rep;
  const GenId n = static_cast<GenId>(alg.size());

  for (const auto& [pair, entries] : alg.constants.stored()) {
    auto [b, c] = pair;
    if (b >= n || c >= n) throw StructuralError("structure constants reference undeclared generator");
    bool both_odd = alg.parity(b) == Parity::odd && alg.parity(c) == Parity::odd;
    for (const auto& [a, coeff] : entries) {
      if (a >= n) throw StructuralError("structure constants reference undeclared generator");
      // [X,X] = 0 unless X is odd
      if (b == c && !both_odd) {
        rep.pass = false;
        rep.violations.push_back({ValidationReport::Kind::antisymmetry, a, b, c, a, coeff});
      }
      int want = (parity_bit(alg.parity(b)) + parity_bit(alg.parity(c))) % 2;
      if (parity_bit(alg.parity(a)) != want) {
        rep.pass = false;
        rep.violations.push_back({ValidationReport::Kind::parity, a, b, c, a, coeff});
      }
    }
  }

  auto scan = [&](GenId lo, GenId hi, ValidationReport& out) {
    for (GenId a = lo; a < hi; ++a)
      for (GenId b = a; b < n; ++b)
        for (GenId c = b; c < n; ++c) {
          auto res = detail::jacobi_residual(alg, a, b, c);
          for (const auto& [e, r] : res) {
            out.pass = false;
            out.violations.push_back({ValidationReport::Kind::jacobi, a, b, c, e, r});
          }
        }
  };

  if (jobs <= 1) {
    scan(0, n, rep);
  } else {
    std::vector<ValidationReport> parts(jobs);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) {
      GenId lo = static_cast<GenId>(n * static_cast<std::uint64_t>(t) / jobs);
      GenId hi = static_cast<GenId>(n * static_cast<std::uint64_t>(t + 1) / jobs);
      threads.emplace_back(scan, lo, hi, std::ref(parts[t]));
    }
    for (auto& th : threads) th.join();
    for (const auto& p : parts) {
      if (!p.pass) rep.pass = false;
      rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Splits and gradings
// ---------------------------------------------------------------------------

struct SplitReport {
  std::vector<GenId> subalgebra;
  std::vector<GenId> complement;
  bool is_subalgebra_closed = false;
  bool is_reductive = false;
  std::optional<std::map<GenId, int>> grading;  // present iff verified
};

inline SplitReport analyze_split(const SuperAlgebra& alg, const std::set<GenId>& subset,
                                 const std::optional<std::map<GenId, int>>& grading_hint = std::nullopt) {
  if (subset.empty()) throw StructuralError("analyze_split: empty subset");
  SplitReport rep;
  for (GenId g = 0; g < alg.size(); ++g) {
    if (subset.count(g))
      rep.subalgebra.push_back(g);
    else
      rep.complement.push_back(g);
  }
  for (GenId g : subset)
    if (g >= alg.size()) throw StructuralError("analyze_split: subset references undeclared generator");

  auto lands_in = [&](GenId b, GenId c, bool in_subset) {
    for (const auto& [a, coeff] : alg.bracket(b, c)) {
      (void)coeff;
      if (subset.count(a) != (in_subset ? 1u : 0u)) return false;
    }
    return true;
  };

  rep.is_subalgebra_closed = true;
  for (GenId b : rep.subalgebra)
    for (GenId c : rep.subalgebra)
      if (!lands_in(b, c, true)) rep.is_subalgebra_closed = false;

  rep.is_reductive = rep.is_subalgebra_closed;
  if (rep.is_reductive)
    for (GenId b : rep.subalgebra)
      for (GenId c : rep.complement)
        if (!lands_in(b, c, false)) rep.is_reductive = false;

  if (grading_hint) {
    bool ok = true;
    if (grading_hint->size() != alg.size()) ok = false;
    for (GenId b = 0; b < alg.size() && ok; ++b)
      for (GenId c = 0; c < alg.size() && ok; ++c) {
        int want = grading_hint->at(b) + grading_hint->at(c);
        for (const auto& [a, coeff] : alg.bracket(b, c)) {
          (void)coeff;
          if (grading_hint->at(a) != want) ok = false;
        }
      }
    if (ok) rep.grading = *grading_hint;
  }
  return rep;
}

}  // namespace cartankit
