#pragma once

// Additive characters of F_q: the standard character of F_p, its lift to
// F_q through the trace, and twists x -> Psi_q(c x).

#include <complex>

#include "pfkit/angle.hpp"
#include "pfkit/field.hpp"

namespace pfkit {

class CharacterDesc {
 public:
  /// x -> Psi_q(x).
  static CharacterDesc standard(const ExtFieldDesc& field);
  /// x -> Psi_q(c x); c must be nonzero.
  static CharacterDesc twisted(const ExtFieldDesc& field, const FqElem& c);
  /// The constant character 1. Only reachable through this constructor.
  static CharacterDesc trivial(const ExtFieldDesc& field);

  const ExtField& field() const { return field_; }
  const FqElem& twist() const { return twist_; }
  bool is_trivial() const { return field_.is_zero(twist_); }

 private:
  CharacterDesc(ExtField field, FqElem twist) : field_(std::move(field)), twist_(std::move(twist)) {}

  ExtField field_;
  FqElem twist_;
};

/// n + pZ -> n/p, the standard character of F_p as an exact angle.
Angle psi_p(u64 a, u64 p);

/// Psi_p(Tr(c x)) for the character's twist c.
Angle psi_q(const FqElem& x, const CharacterDesc& ch);

}  // namespace pfkit
