// spinor.hpp
// Spinor bilinears as component-expanded form polynomials: psibar M chi
// parses into sum_{ab} (C M)_{ab} psi^a ^ chi^b.  All identity checks in
// the engine run on these components; Fierz-type cancellations then happen
// mechanically in the monomial algebra.

#pragma once

#include "cartankit/clifford.hpp"
#include "cartankit/forms.hpp"

namespace cartankit {

// sum_{ab} B_{ab} left[a] ^ right[b], with B the full coefficient matrix
// (C already folded in by the caller when needed).
inline FormPolynomial matrix_bilinear(const FormWorld& w, const Mat& b,
                                      const std::vector<FormPolynomial>& left,
                                      const std::vector<FormPolynomial>& right,
                                      const Scalar& coeff = Scalar::one()) {
  FormPolynomial out;
  for (int al = 0; al < b.n(); ++al)
    for (int be = 0; be < b.n(); ++be) {
      if (b.at(al, be).is_zero()) continue;
      out += (coeff * Scalar(b.at(al, be))) * wedge(w, left[al], right[be]);
    }
  return out;
}

// psibar Gamma_{a1..ak} psi with lower indices, expanded in components of a
// single spinor-valued 1-form family.
inline FormPolynomial psibar_gamma_psi(const FormWorld& w, const GammaRep& rep,
                                       const std::vector<int>& lower_idx,
                                       const std::vector<FormId>& psi,
                                       const Scalar& coeff = Scalar::one()) {
  Mat b = rep.bilinear(lower_idx);
  FormPolynomial out;
  for (int al = 0; al < rep.spinor_size; ++al)
    for (int be = 0; be < rep.spinor_size; ++be) {
      if (b.at(al, be).is_zero()) continue;
      FormMonomial m;
      m.push(psi[al]);
      m.push(psi[be]);
      FormPolynomial p;
      p.add_factors(w, m, coeff * Scalar(b.at(al, be)));
      out += p;
    }
  return out;
}

}  // namespace cartankit
