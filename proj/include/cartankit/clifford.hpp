// clifford.hpp
// Gamma-matrix representations of Clifford algebras with exact entries in
// {0, +-1, +-i}, charge conjugation, bilinear symmetry tables and the
// symmetrized multi-spinor (Fierz) residuals.
//
// Conventions: mostly-plus metric eta = diag(-1 x r, +1 x s) with the r
// timelike directions first.  The representation is built by iterative
// doubling from D = 2 (Euclidean base, timelike factors of i applied at the
// end), so every gamma matrix and the charge conjugation matrix are signed
// permutation matrices times a possible factor of i.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartankit/scalar.hpp"

namespace cartankit {

struct RepresentationError : std::runtime_error {
  explicit RepresentationError(const std::string& m) : std::runtime_error(m) {}
};
struct SpecificationError : std::runtime_error {
  explicit SpecificationError(const std::string& m) : std::runtime_error(m) {}
};

// ---------------------------------------------------------------------------
// Small dense matrices over Q(i)
// ---------------------------------------------------------------------------

class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
  }
  int n() const { return n_; }
  GaussianRational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const GaussianRational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  Mat operator*(const Mat& o) const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += at(i, k) * o.at(k, j);
        }
      }
    return r;
  }
  Mat operator+(const Mat& o) const {
    Mat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Mat scaled(const GaussianRational& c) const {
    Mat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
  }
  Mat transposed() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }
  GaussianRational trace() const {
    GaussianRational t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }
  // tensor product, row-major blocks
  static Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.n_ * b.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j) {
        if (a.at(i, j).is_zero()) continue;
        for (int k = 0; k < b.n_; ++k)
          for (int l = 0; l < b.n_; ++l) {
            if (b.at(k, l).is_zero()) continue;
            r.at(i * b.n_ + k, j * b.n_ + l) = a.at(i, j) * b.at(k, l);
          }
      }
    return r;
  }

 private:
  int n_ = 0;
  std::vector<GaussianRational> a_;
};

// Signed permutation matrix times units of Q(i): one nonzero per row.
struct MonoMatrix {
  std::vector<int> col;
  std::vector<GaussianRational> val;

  int n() const { return static_cast<int>(col.size()); }
  GaussianRational entry(int r, int c) const {
    return col[r] == c ? val[r] : GaussianRational(0);
  }
  static MonoMatrix from(const Mat& m) {
    MonoMatrix r;
    r.col.assign(m.n(), -1);
    r.val.assign(m.n(), GaussianRational(0));
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < m.n(); ++j)
        if (!m.at(i, j).is_zero()) {
          if (r.col[i] != -1) throw RepresentationError("matrix is not monomial");
          r.col[i] = j;
          r.val[i] = m.at(i, j);
        }
    for (int i = 0; i < m.n(); ++i)
      if (r.col[i] == -1) throw RepresentationError("monomial matrix has an empty row");
    return r;
  }
};

// ---------------------------------------------------------------------------
// Gamma representations
// ---------------------------------------------------------------------------

struct GammaRep {
  int dimension = 0;
  int timelike = 0, spacelike = 0;  // signature (r, s)
  int spinor_size = 0;
  std::vector<Mat> gammas;          // lower index: gamma_a, a = 0..D-1
  std::vector<int> metric;          // eta_aa = -1 (timelike) or +1
  Mat conjugation;                  // C
  int conjugation_sign = 0;         // C gamma_a C^-1 = sign * gamma_a^T

  // gamma_{a1...ak} for strictly increasing indices is the plain product;
  // arbitrary index tuples pick up the permutation sign, repeated indices
  // give zero.
  std::optional<Mat> gamma_antisym(std::vector<int> idx) const {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return std::nullopt;
    Mat m = Mat::identity(spinor_size);
    for (int a : idx) m = m * gammas.at(a);
    if (sign < 0) m = m.scaled(GaussianRational(-1));
    return m;
  }

  Mat bilinear(const std::vector<int>& idx) const {  // C gamma_{a1..ak}, zero matrix on repeats
    auto g = gamma_antisym(idx);
    if (!g) return Mat(spinor_size);
    return conjugation * *g;
  }
};

namespace cliff_detail {

inline Mat sigma1() {
  Mat m(2);
  m.at(0, 1) = GaussianRational(1);
  m.at(1, 0) = GaussianRational(1);
  return m;
}
inline Mat sigma2() {
  Mat m(2);
  m.at(0, 1) = -GaussianRational::i();
  m.at(1, 0) = GaussianRational::i();
  return m;
}
inline Mat sigma3() {
  Mat m(2);
  m.at(0, 0) = GaussianRational(1);
  m.at(1, 1) = -GaussianRational(1);
  return m;
}

// Euclidean gammas in dimension d (all squares +1).
inline std::vector<Mat> euclidean_gammas(int d) {
  std::vector<Mat> g;
  if (d < 2) throw RepresentationError("dimension too small for the doubling construction");
  g = {sigma1(), sigma3()};
  while (static_cast<int>(g.size()) + 2 <= d) {
    int n = g[0].n();
    std::vector<Mat> next;
    for (const auto& m : g) next.push_back(Mat::kron(m, sigma3()));
    next.push_back(Mat::kron(Mat::identity(n), sigma1()));
    next.push_back(Mat::kron(Mat::identity(n), sigma2()));
    g = std::move(next);
  }
  if (static_cast<int>(g.size()) < d) {
    // odd dimension: append the product of all previous gammas, normalized
    // to square to +1
    int k = static_cast<int>(g.size()) / 2;
    Mat prod = Mat::identity(g[0].n());
    for (const auto& m : g) prod = prod * m;
    if (k % 2 == 1) prod = prod.scaled(GaussianRational::i());
    g.push_back(prod);
  }
  return g;
}

// Solves C gamma_a = sign gamma_a^T C by propagation over the sparse
// constraint graph (each gamma is monomial, so every equation couples
// exactly two entries of C).  Returns the canonical solution -- first
// nonzero entry in row-major order scaled to 1 -- or nullopt.
inline std::optional<Mat> solve_conjugation(const std::vector<MonoMatrix>& gam, int n, int sign) {
  // q_a = inverse permutation of p_a
  std::vector<std::vector<int>> q(gam.size(), std::vector<int>(n));
  for (std::size_t a = 0; a < gam.size(); ++a)
    for (int i = 0; i < n; ++i) q[a][gam[a].col[i]] = i;

  std::vector<GaussianRational> value(static_cast<std::size_t>(n) * n);
  std::vector<signed char> state(static_cast<std::size_t>(n) * n, 0);  // 0 unknown, 1 set, 2 dead
  auto idx = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
  const GaussianRational sg = GaussianRational(sign);

  std::vector<GaussianRational> found;
  Mat result(n);
  int orbits_used = 0;

  for (int seed = 0; seed < n * n; ++seed) {
    if (state[seed] != 0) continue;
    // explore the orbit of this seed
    std::vector<int> orbit;
    std::vector<std::pair<int, GaussianRational>> stack{{seed, GaussianRational(1)}};
    std::map<int, GaussianRational> local;
    bool consistent = true;
    while (!stack.empty()) {
      auto [cell, v] = stack.back();
      stack.pop_back();
      auto it = local.find(cell);
      if (it != local.end()) {
        if (!(it->second == v)) consistent = false;
        continue;
      }
      local[cell] = v;
      orbit.push_back(cell);
      int r = cell / n, c = cell % n;
      for (std::size_t a = 0; a < gam.size(); ++a) {
        // forward: C_{q(r), p(c)} = C_{r,c} * v_a(c) / (sign * v_a(q(r)))
        {
          int r2 = q[a][r], c2 = gam[a].col[c];
          GaussianRational m = gam[a].val[c] / (sg * gam[a].val[q[a][r]]);
          stack.push_back({r2 * n + c2, v * m});
        }
        // backward step (inverse of the map above)
        {
          int r2 = gam[a].col[r], c2 = q[a][c];
          GaussianRational m = (sg * gam[a].val[r]) / gam[a].val[c2];
          stack.push_back({r2 * n + c2, v * m});
        }
      }
    }
    if (consistent) {
      ++orbits_used;
      if (orbits_used > 1) {
        // more than one consistent orbit: the intertwiner would not be
        // unique -- reject (does not happen for the irreducible reps built
        // here, but guard anyway)
        return std::nullopt;
      }
      for (const auto& [cell, v] : local) {
        value[cell] = v;
        state[cell] = 1;
      }
    } else {
      for (int cell : orbit) state[cell] = 2;
    }
  }
  if (orbits_used == 0) return std::nullopt;

  // canonical scale: first nonzero entry row-major becomes 1
  GaussianRational scale(0);
  for (int cell = 0; cell < n * n; ++cell)
    if (state[cell] == 1 && !value[cell].is_zero()) {
      scale = value[cell];
      break;
    }
  if (scale.is_zero()) return std::nullopt;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (state[idx(r, c)] == 1) result.at(r, c) = value[idx(r, c)] / scale;
  return result;
}

}  // namespace cliff_detail

// Builds the gamma representation for dimension D and signature (r, s),
// 2 <= D <= 12.  Verifies the Clifford relation and the conjugation
// property exhaustively before returning.
inline GammaRep build_gamma(int dimension, std::pair<int, int> signature) {
  auto [r, s] = signature;
  if (dimension < 2 || dimension > 12)
    throw RepresentationError("unsupported Clifford dimension " + std::to_string(dimension));
  if (r + s != dimension || r < 0 || s < 0)
    throw RepresentationError("signature does not match dimension");

  GammaRep rep;
  rep.dimension = dimension;
  rep.timelike = r;
  rep.spacelike = s;
  rep.gammas = cliff_detail::euclidean_gammas(dimension);
  rep.spinor_size = rep.gammas[0].n();
  rep.metric.assign(dimension, 1);
  for (int a = 0; a < r; ++a) {
    rep.gammas[a] = rep.gammas[a].scaled(GaussianRational::i());
    rep.metric[a] = -1;
  }

  // Clifford relation {gamma_a, gamma_b} = 2 eta_ab * 1, all pairs
  Mat id = Mat::identity(rep.spinor_size);
  for (int a = 0; a < dimension; ++a)
    for (int b = 0; b < dimension; ++b) {
      Mat anti = rep.gammas[a] * rep.gammas[b] + rep.gammas[b] * rep.gammas[a];
      Mat want = (a == b) ? id.scaled(GaussianRational(2 * rep.metric[a])) : Mat(rep.spinor_size);
      if (!(anti == want)) throw RepresentationError("Clifford relation violated by construction");
    }

  std::vector<MonoMatrix> mono;
  for (const auto& g : rep.gammas) mono.push_back(MonoMatrix::from(g));
  for (int sign : {-1, +1}) {
    if (auto c = cliff_detail::solve_conjugation(mono, rep.spinor_size, sign)) {
      rep.conjugation = *c;
      rep.conjugation_sign = sign;
      break;
    }
  }
  if (rep.conjugation_sign == 0)
    throw RepresentationError("no charge conjugation matrix found");

  // verify C gamma_a C^-1 = sign gamma_a^T, i.e. C gamma_a = sign gamma_a^T C
  for (int a = 0; a < dimension; ++a) {
    Mat lhs = rep.conjugation * rep.gammas[a];
    Mat rhs = rep.gammas[a].transposed() * rep.conjugation;
    if (rep.conjugation_sign < 0) rhs = rhs.scaled(GaussianRational(-1));
    if (!(lhs == rhs)) throw RepresentationError("conjugation property violated");
  }
  // invertibility: C is monomial with one entry per row; check columns too
  {
    MonoMatrix cm = MonoMatrix::from(rep.conjugation);
    std::vector<bool> seen(rep.spinor_size, false);
    for (int c : cm.col) {
      if (seen[c]) throw RepresentationError("conjugation matrix not invertible");
      seen[c] = true;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bilinear symmetry table
// ---------------------------------------------------------------------------

struct BilinearTable {
  int dimension = 0;
  std::vector<int> sign;  // sign[k]: (C G^{(k)})^T = sign[k] * C G^{(k)}, k = 0..D

  bool symmetric(int rank) const { return sign.at(rank) > 0; }
};

// Transposition symmetry of C gamma_{a1..ak} per rank, checked over every
// index choice; inconsistency within a rank is a representation error.
inline BilinearTable bilinear_table(const GammaRep& rep) {
  BilinearTable table;
  table.dimension = rep.dimension;
  table.sign.assign(rep.dimension + 1, 0);
  for (int k = 0; k <= rep.dimension; ++k) {
    std::vector<int> idx(k);
    // iterate over strictly increasing k-subsets of 0..D-1
    for (int i = 0; i < k; ++i) idx[i] = i;
    bool more = true;
    if (k > rep.dimension) more = false;
    while (more) {
      Mat b = rep.bilinear(idx);
      Mat bt = b.transposed();
      int s;
      if (bt == b)
        s = +1;
      else if (bt == b.scaled(GaussianRational(-1)))
        s = -1;
      else
        throw RepresentationError("bilinear is neither symmetric nor antisymmetric");
      if (table.sign[k] == 0)
        table.sign[k] = s;
      else if (table.sign[k] != s)
        throw RepresentationError("inconsistent bilinear symmetry within rank " + std::to_string(k));
      // next subset
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == rep.dimension - k + pos) --pos;
      if (pos < 0) {
        more = false;
      } else {
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
      }
      if (k == 0) more = false;
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Fierz residuals
// ---------------------------------------------------------------------------

// One matrix factor of a Fierz expression.  Vector index labels are lower
// indices; a label shared between two slots of a term is contracted with
// the inverse metric, a label appearing once is free.  Spinor slots point
// into the jointly symmetrized multi-index (slot >= 0) or are free (-1).
struct FierzFactor {
  int rank = 1;
  std::vector<std::string> labels;
  bool with_c = true;  // factor is C gamma^{(k)}; false gives the bare gamma^{(k)}
  int row_slot = -1;
  int col_slot = -1;
};

struct FierzTerm {
  Scalar coeff;
  std::vector<FierzFactor> factors;
};

struct FierzKey {
  std::vector<int> sym;          // non-decreasing spinor tuple
  std::vector<int> free_spinor;  // values of free spinor slots, in declaration order
  std::vector<int> free_vector;  // values of free vector labels, in label order

  bool operator<(const FierzKey& o) const {
    if (sym != o.sym) return sym < o.sym;
    if (free_spinor != o.free_spinor) return free_spinor < o.free_spinor;
    return free_vector < o.free_vector;
  }
};

using FierzResidual = std::map<FierzKey, Scalar>;

namespace cliff_detail {

// One fully index-assigned product of monomial matrices; everything that
// does not depend on the spinor tuple is folded into `weight` up front.
struct ContractionCase {
  GaussianRational weight;
  Scalar extra;  // parameter-carrying part of the term coefficient, if any
  struct F {
    const MonoMatrix* m;
    int row_slot, col_slot;      // >= 0: symmetrized slot, -1: free spinor
    int row_free, col_free;      // positions in the free-spinor vector
  };
  std::vector<F> factors;
};

// odometer over an index vector; returns false once wrapped (or empty)
inline bool advance(std::vector<int>& v, int base) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (++v[k] < base) return true;
    v[k] = 0;
  }
  return false;
}

}  // namespace cliff_detail

// Full symmetrization (projector-normalized: (1/m!) sum over all
// permutations) of a product of gamma bilinears over the designated spinor
// slots, with metric contraction of repeated vector labels.  An empty map
// means the identity holds.
inline FierzResidual fierz_residual(const GammaRep& rep, const std::vector<FierzTerm>& spec) {
  if (spec.empty()) return {};
  const int dim = rep.dimension;
  const int nsp = rep.spinor_size;

  // collect label roles / symmetrized arity / free spinor slot count, and
  // validate consistency across terms
  std::vector<std::string> free_labels;
  int sym_arity = -1;
  int free_spinor_count = -1;
  for (const auto& term : spec) {
    std::map<std::string, int> uses;
    int max_slot = -1, frees = 0;
    for (const auto& f : term.factors) {
      if (static_cast<int>(f.labels.size()) != f.rank)
        throw SpecificationError("factor rank does not match its label count");
      for (const auto& l : f.labels) uses[l]++;
      for (int slot : {f.row_slot, f.col_slot}) {
        if (slot >= 0)
          max_slot = std::max(max_slot, slot);
        else
          ++frees;
      }
    }
    std::vector<std::string> fl;
    for (const auto& [l, cnt] : uses) {
      if (cnt == 1)
        fl.push_back(l);
      else if (cnt != 2)
        throw SpecificationError("vector label '" + l + "' appears " + std::to_string(cnt) +
                                 " times; must be free (1) or contracted (2)");
    }
    if (sym_arity == -1) {
      sym_arity = max_slot + 1;
      free_spinor_count = frees;
      free_labels = fl;
    } else if (sym_arity != max_slot + 1 || free_spinor_count != frees || free_labels != fl) {
      throw SpecificationError("terms disagree on free indices or symmetrization arity");
    }
  }

  FierzResidual residual;

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(sym_arity);
    for (int i = 0; i < sym_arity; ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const Scalar norm = Scalar::rational(1, static_cast<std::int64_t>(perms.size()));

  std::map<std::pair<bool, std::vector<int>>, MonoMatrix> cache;
  auto lookup = [&](bool with_c, const std::vector<int>& idx) -> const MonoMatrix* {
    auto key = std::make_pair(with_c, idx);
    auto it = cache.find(key);
    if (it == cache.end()) {
      Mat m;
      if (with_c) {
        m = rep.bilinear(idx);
      } else {
        auto g = rep.gamma_antisym(idx);
        m = g ? *g : Mat(nsp);
      }
      if (m.is_zero()) return nullptr;  // repeated antisymmetric index
      it = cache.emplace(key, MonoMatrix::from(m)).first;
    }
    return &it->second;
  };

  std::vector<int> freev(free_labels.size(), 0);
  do {
    // Expand every term into its contraction cases for this free-vector
    // assignment; the spinor loops below only touch monomial lookups.
    std::vector<cliff_detail::ContractionCase> cases;
    for (const auto& term : spec) {
      std::vector<std::string> cl;
      for (const auto& f : term.factors)
        for (const auto& l : f.labels) {
          bool is_free = std::find(free_labels.begin(), free_labels.end(), l) != free_labels.end();
          if (!is_free && std::find(cl.begin(), cl.end(), l) == cl.end()) cl.push_back(l);
        }
      std::vector<int> cv(cl.size(), 0);
      bool more_c = true;
      while (more_c) {
        cliff_detail::ContractionCase cs;
        cs.weight = GaussianRational(1);
        cs.extra = term.coeff;
        for (std::size_t k = 0; k < cl.size(); ++k)
          if (rep.metric[cv[k]] < 0) cs.weight = -cs.weight;
        bool dead = false;
        int fs_pos = 0;
        for (const auto& f : term.factors) {
          std::vector<int> idx(f.rank);
          for (int k = 0; k < f.rank; ++k) {
            const std::string& l = f.labels[k];
            auto fit = std::find(free_labels.begin(), free_labels.end(), l);
            if (fit != free_labels.end()) {
              idx[k] = freev[fit - free_labels.begin()];
            } else {
              auto cit = std::find(cl.begin(), cl.end(), l);
              idx[k] = cv[cit - cl.begin()];
            }
          }
          const MonoMatrix* m = lookup(f.with_c, idx);
          if (!m) {
            dead = true;
            break;
          }
          cliff_detail::ContractionCase::F cf{m, f.row_slot, f.col_slot, -1, -1};
          if (f.row_slot < 0) cf.row_free = fs_pos++;
          if (f.col_slot < 0) cf.col_free = fs_pos++;
          cs.factors.push_back(cf);
        }
        if (!dead) cases.push_back(std::move(cs));
        more_c = !cl.empty() && cliff_detail::advance(cv, dim);
      }
    }

    std::vector<int> frees(free_spinor_count, 0);
    do {
      std::vector<int> tuple(sym_arity, 0);
      bool more_t = true;
      while (more_t) {
        Scalar total = Scalar::zero();
        std::vector<int> slotval(sym_arity);
        for (const auto& perm : perms) {
          for (int k = 0; k < sym_arity; ++k) slotval[k] = tuple[perm[k]];
          for (const auto& cs : cases) {
            GaussianRational prod = cs.weight;
            bool zero = false;
            for (const auto& f : cs.factors) {
              int row = f.row_slot >= 0 ? slotval[f.row_slot] : frees[f.row_free];
              int colv = f.col_slot >= 0 ? slotval[f.col_slot] : frees[f.col_free];
              if (f.m->col[row] != colv) {
                zero = true;
                break;
              }
              prod *= f.m->val[row];
            }
            if (!zero) total += cs.extra * Scalar(prod);
          }
        }
        total = norm * total;
        if (!total.is_zero()) residual[{tuple, frees, freev}] = total;

        int pos = sym_arity - 1;
        while (pos >= 0 && tuple[pos] == nsp - 1) --pos;
        if (pos < 0 || sym_arity == 0) {
          more_t = false;
        } else {
          int v = ++tuple[pos];
          for (int k = pos + 1; k < sym_arity; ++k) tuple[k] = v;
        }
      }
    } while (free_spinor_count > 0 && cliff_detail::advance(frees, nsp));
  } while (!free_labels.empty() && cliff_detail::advance(freev, dim));
  return residual;
}

}  // namespace cartankit
