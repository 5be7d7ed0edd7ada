#pragma once

// The basic terms Psi^n_sym(c_1, ..., c_n) and kappa_{P,Q}.
//
// A PsiSymTerm (c_1, ..., c_n) stands for the monic polynomial
// x^n + c_1 x^{n-1} + ... + c_n; its value under a character Psi is the sum
// of Psi over the roots of that polynomial lying in F_q, with multiplicity.
// Roots outside F_q contribute nothing. The closure operations return new
// terms whose values are the conjugate, sum and product of the inputs'.

#include <complex>
#include <span>
#include <vector>

#include "pfkit/character.hpp"
#include "pfkit/field.hpp"
#include "pfkit/mpoly.hpp"

namespace pfkit {

struct PsiSymTerm {
  std::vector<FqElem> coeffs;

  std::size_t degree() const { return coeffs.size(); }
};

/// x^n + c_1 x^{n-1} + ... + c_n, little-endian.
std::vector<FqElem> psisym_polynomial(const PsiSymTerm& t, const ExtField& field);

/// Term whose polynomial is the given monic polynomial (little-endian).
PsiSymTerm psisym_from_polynomial(const std::vector<FqElem>& monic, const ExtField& field);

/// F_q-rational roots with multiplicity, in canonical order.
std::vector<FqElem> psisym_roots(const PsiSymTerm& t, const ExtField& field);

std::complex<double> psisym_eval(const PsiSymTerm& t, const CharacterDesc& ch);

/// (-c_1, c_2, -c_3, ...): roots negated, value conjugated.
PsiSymTerm psisym_conj(const PsiSymTerm& t, const ExtField& field);

/// Product polynomial: the root multisets are concatenated, values add.
PsiSymTerm psisym_add(const PsiSymTerm& a, const PsiSymTerm& b, const ExtField& field);

/// prod over rational roots alpha of a, beta of b of (x - (alpha + beta));
/// values multiply. Irrational roots are dropped before pairing, so the
/// result can have degree below deg(a) deg(b).
PsiSymTerm psisym_mul(const PsiSymTerm& a, const PsiSymTerm& b, const CharacterDesc& ch);

/// kappa_{P,Q}(b): P and Q are polynomials in (u_1, ..., u_k, x), x last.
/// Returns the common value of Q(b, d) over the roots d of P(b, x) in F_q,
/// or 0 when there is no root or the values disagree. If P(b, x) vanishes
/// identically every element of F_q counts as a root.
FqElem kappa_eval(const MPoly& P, const MPoly& Q, std::span<const FqElem> params, const ExtField& field);

}  // namespace pfkit
