// scalar.hpp
// The coefficient ring of the whole engine: exact polynomials in named
// commuting formal parameters (1/ell, Lambda, coupling signs, ...) with
// Gaussian-rational coefficients.  A bare number is the 0-parameter case.
// Canonical form: terms sorted by parameter monomial, no zero coefficients,
// exponents > 0 only.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartankit/rational.hpp"

namespace cartankit {

// Sorted (parameter name, exponent) pairs; exponents strictly positive.
using ParamMonomial = std::vector<std::pair<std::string, unsigned>>;

inline ParamMonomial merge_monomials(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

class Scalar {
 public:
  struct Term {
    ParamMonomial mono;  // empty = constant term
    GaussianRational coeff;
  };

  Scalar() = default;
  Scalar(std::int64_t n) { *this = Scalar(GaussianRational(n)); }  // NOLINT
  Scalar(const Rational& r) { *this = Scalar(GaussianRational(r)); }  // NOLINT
  Scalar(const GaussianRational& c) {  // NOLINT
    if (!c.is_zero()) terms_.push_back({{}, c});
  }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar rational(std::int64_t n, std::int64_t d) { return Scalar(GaussianRational(Rational(n, d))); }
  static Scalar parameter(const std::string& name, unsigned exp = 1) {
    Scalar s;
    if (exp == 0) return one();
    s.terms_.push_back({ParamMonomial{{name, exp}}, GaussianRational(1)});
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()); }

  // Value of a constant scalar; throws on parameter dependence.
  GaussianRational constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw ArithmeticError("scalar is not constant: " + str());
    return terms_[0].coeff;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const auto& ta = a.terms_[i];
      const auto& tb = b.terms_[j];
      if (ta.mono == tb.mono) {
        GaussianRational c = ta.coeff + tb.coeff;
        if (!c.is_zero()) r.terms_.push_back({ta.mono, c});
        ++i;
        ++j;
      } else if (ta.mono < tb.mono) {
        r.terms_.push_back(ta);
        ++i;
      } else {
        r.terms_.push_back(tb);
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Term t{merge_monomials(ta.mono, tb.mono), ta.coeff * tb.coeff};
        r.add_term(std::move(t));
      }
    return r;
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Division by a nonzero constant (field operation used by the linear solvers).
  friend Scalar operator/(const Scalar& a, const GaussianRational& c) {
    Scalar r = a;
    for (auto& t : r.terms_) t.coeff = t.coeff / c;
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (a.terms_[k].mono != b.terms_[k].mono || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    return true;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.str() < b.str(); }

  // Exact division by one power of a parameter; throws if any term lacks it.
  Scalar divided_by_parameter(const std::string& name) const {
    Scalar out;
    for (const auto& t : terms_) {
      ParamMonomial mono;
      bool found = false;
      for (const auto& p : t.mono) {
        if (p.first == name && !found) {
          found = true;
          if (p.second > 1) mono.emplace_back(p.first, p.second - 1);
        } else {
          mono.push_back(p);
        }
      }
      if (!found) throw ArithmeticError("term " + str() + " is not divisible by " + name);
      out.terms_.push_back({std::move(mono), t.coeff});
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    return out;
  }

  // Substitute a parameter by an arbitrary scalar value.
  Scalar substituted(const std::string& name, const Scalar& value) const {
    Scalar out;
    for (const auto& t : terms_) {
      ParamMonomial rest;
      unsigned exp = 0;
      for (const auto& p : t.mono) {
        if (p.first == name)
          exp = p.second;
        else
          rest.push_back(p);
      }
      Scalar piece;
      piece.terms_.push_back({rest, t.coeff});
      for (unsigned k = 0; k < exp; ++k) piece = piece * value;
      out += piece;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      if (!first) s += " + ";
      first = false;
      std::string c = t.coeff.str();
      if (t.mono.empty()) {
        s += c;
        continue;
      }
      if (!t.coeff.is_one()) s += "(" + c + ")*";
      bool fm = true;
      for (const auto& p : t.mono) {
        if (!fm) s += "*";
        fm = false;
        s += p.first;
        if (p.second > 1) s += "^" + std::to_string(p.second);
      }
    }
    return s;
  }

 private:
  void add_term(Term&& t) {
    if (t.coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t.mono,
                               [](const Term& a, const ParamMonomial& m) { return a.mono < m; });
    if (it != terms_.end() && it->mono == t.mono) {
      it->coeff += t.coeff;
      if (it->coeff.is_zero()) terms_.erase(it);
    } else {
      terms_.insert(it, std::move(t));
    }
  }

  std::vector<Term> terms_;  // sorted by mono
};

inline Scalar operator*(const GaussianRational& c, const Scalar& s) { return Scalar(c) * s; }

}  // namespace cartankit
