#include "pfkit/term_algebra.hpp"

#include "pfkit/angle.hpp"
#include "pfkit/error.hpp"
#include "pfkit/upoly.hpp"

namespace pfkit {

std::vector<FqElem> psisym_polynomial(const PsiSymTerm& t, const ExtField& field) {
  const std::size_t n = t.degree();
  std::vector<FqElem> poly(n + 1, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    field.validate(t.coeffs[i]);
    poly[n - 1 - i] = t.coeffs[i];
  }
  poly[n] = field.one();
  return poly;
}

PsiSymTerm psisym_from_polynomial(const std::vector<FqElem>& monic, const ExtField& field) {
  if (monic.empty() || monic.back() != field.one()) throw Error("expected a monic polynomial");
  const std::size_t n = monic.size() - 1;
  PsiSymTerm t;
  t.coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.coeffs.push_back(monic[n - 1 - i]);
  return t;
}

std::vector<FqElem> psisym_roots(const PsiSymTerm& t, const ExtField& field) {
  if (t.degree() == 0) return {};
  return upoly::roots(field, psisym_polynomial(t, field));
}

std::complex<double> psisym_eval(const PsiSymTerm& t, const CharacterDesc& ch) {
  ComplexSum sum;
  for (const auto& r : psisym_roots(t, ch.field())) sum.add(angle_to_complex(psi_q(r, ch)));
  return sum.value();
}

PsiSymTerm psisym_conj(const PsiSymTerm& t, const ExtField& field) {
  PsiSymTerm out = t;
  for (std::size_t i = 0; i < out.coeffs.size(); i += 2) {
    field.validate(out.coeffs[i]);
    out.coeffs[i] = field.neg(out.coeffs[i]);
  }
  return out;
}

PsiSymTerm psisym_add(const PsiSymTerm& a, const PsiSymTerm& b, const ExtField& field) {
  auto prod = upoly::mul(field, psisym_polynomial(a, field), psisym_polynomial(b, field));
  return psisym_from_polynomial(prod, field);
}

PsiSymTerm psisym_mul(const PsiSymTerm& a, const PsiSymTerm& b, const CharacterDesc& ch) {
  const ExtField& field = ch.field();
  const auto ra = psisym_roots(a, field);
  const auto rb = psisym_roots(b, field);
  std::vector<FqElem> sums;
  sums.reserve(ra.size() * rb.size());
  for (const auto& x : ra) {
    for (const auto& y : rb) sums.push_back(field.add(x, y));
  }
  return psisym_from_polynomial(upoly::from_roots(field, std::span<const FqElem>(sums)), field);
}

FqElem kappa_eval(const MPoly& P, const MPoly& Q, std::span<const FqElem> params, const ExtField& field) {
  if (P.nvars() != Q.nvars()) throw Error("P and Q must share variables");
  if (P.nvars() != params.size() + 1) throw Error("kappa expects one parameter per variable before x");
  const u64 p = field.characteristic();
  const ReducedPoly rp(P, p);
  const ReducedPoly rq(Q, p);
  const std::size_t x_index = params.size();
  std::vector<FqElem> point(params.begin(), params.end());
  point.push_back(field.zero());

  upoly::Poly<ExtField> fibre;
  for (const auto& c : rp.coefficients_in(x_index)) fibre.push_back(c.eval(field, std::span<const FqElem>(point)));
  upoly::trim(field, fibre);

  std::vector<FqElem> rts;
  if (fibre.empty()) {
    for (u64 i = 0; i < field.order(); ++i) rts.push_back(field.element(i));
  } else {
    rts = upoly::roots(field, fibre);
  }
  if (rts.empty()) return field.zero();
  std::optional<FqElem> common;
  for (const auto& d : rts) {
    point[x_index] = d;
    auto v = rq.eval(field, std::span<const FqElem>(point));
    if (!common) {
      common = v;
    } else if (*common != v) {
      return field.zero();
    }
  }
  return *common;
}

}  // namespace pfkit
