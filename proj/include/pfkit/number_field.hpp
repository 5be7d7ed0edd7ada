#pragma once

// Minimal number fields Q(a) = Q[X]/(f), reduction of their elements modulo
// primes, and the lattice computations behind the possible-value sets of a
// character on finitely many field elements.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pfkit/angle.hpp"
#include "pfkit/mpoly.hpp"

namespace pfkit {

/// How irreducibility over Q was established.
struct IrreducibilityCertificate {
  enum class Kind { Linear, NoRationalRoot, IrreducibleModPrime };
  Kind kind = Kind::Linear;
  u64 prime = 0;  ///< for IrreducibleModPrime

  std::string describe() const;
};

/// Throws with a factor when f has a rational root, and with "certificate not
/// found" when neither the low-degree test nor any of the first 25 good
/// primes proves irreducibility.
IrreducibilityCertificate certify_irreducible(const IntPoly& f);

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), exact.
BigInt discriminant(const IntPoly& f);

struct NumberFieldDesc {
  IntPoly f;  ///< monic, degree d >= 1
  BigInt disc;
  IrreducibilityCertificate certificate;

  std::size_t degree() const { return f.size() - 1; }
};

NumberFieldDesc nf_build(const IntPoly& f);

/// Q itself, presented as Q[X]/(X).
NumberFieldDesc rational_field();

/// Coordinates in the power basis 1, a, ..., a^{d-1}.
struct NFElem {
  std::vector<Rational> coords;

  friend bool operator==(const NFElem&, const NFElem&) = default;
  bool is_zero() const;
  bool is_rational() const;
};

NFElem nf_from_poly(const RatPoly& g, const NumberFieldDesc& K);
NFElem nf_add(const NFElem& a, const NFElem& b);
NFElem nf_mul(const NFElem& a, const NFElem& b, const NumberFieldDesc& K);
NFElem nf_scale(const NFElem& a, const Rational& c);
std::string to_string(const NFElem& x, const std::string& symbol = "a");

/// Image of x under a -> b in F_p, for a root b of f mod p.
u64 nf_reduce(const NFElem& x, const NumberFieldDesc& K, u64 p, u64 root);

using IntMatrix = std::vector<std::vector<BigInt>>;

struct LatticeBasis {
  std::vector<NFElem> basis;
  /// inputs[i] = sum_j expression[i][j] basis[j]
  IntMatrix expression;
  /// basis[j] = sum_i generators[j][i] inputs[i]
  IntMatrix generators;
};

/// Basis of the additive group generated by elems. Independent inputs are
/// their own basis; otherwise the row Hermite normal form of the cleared
/// coordinate matrix is taken, with the rational coordinate as the last
/// pivot column so that the group's intersection with Q, when nonzero, is
/// spanned by the last basis element.
LatticeBasis lattice_basis(std::span<const NFElem> elems);

/// Same construction, always through the Hermite normal form.
LatticeBasis lattice_basis_hnf(std::span<const NFElem> elems);

/// Basis of { lambda in Q^k : sum lambda_i elems_i = 0 }, each vector scaled
/// to a primitive integer vector. Empty iff the elements are independent.
std::vector<std::vector<BigInt>> qlin_relations(std::span<const NFElem> elems);

/// One admissible value of the character on a rational basis element r = a/n
/// (reduced): the Galois datum k prime to n pins Psi(1/n) = e(k/n), hence
/// Psi(r) = e(a k / n).
struct SpBranch {
  u64 k;
  Angle value;
};

struct RationalAnnotation {
  std::size_t basis_index;
  Rational value;
  u64 denominator;
  std::vector<SpBranch> branches;
};

/// The set of tuples (Psi(e_1), ..., Psi(e_k)) is {z^E : z in T^l}, where
/// (z^E)_i = prod_j z_j^{E_ij}. In SP mode each rational basis coordinate is
/// confined to the listed roots of unity, one coset of the subtorus per branch.
struct ValueSet {
  LatticeBasis lattice;
  IntMatrix exponents;  ///< E = lattice.expression
  bool sp_mode = false;
  std::vector<RationalAnnotation> annotations;
  /// free torus coordinates (basis directions not pinned by SP)
  std::size_t free_dimension = 0;
};

ValueSet value_set(std::span<const NFElem> elems, bool sp_mode);

}  // namespace pfkit
