#include "pfkit/character.hpp"

#include "pfkit/error.hpp"

namespace pfkit {

CharacterDesc CharacterDesc::standard(const ExtFieldDesc& field) {
  ExtField f(field);
  auto one = f.one();
  return CharacterDesc(std::move(f), std::move(one));
}

CharacterDesc CharacterDesc::twisted(const ExtFieldDesc& field, const FqElem& c) {
  ExtField f(field);
  f.validate(c);
  if (f.is_zero(c)) throw Error("twist 0 gives the trivial character; use CharacterDesc::trivial");
  return CharacterDesc(std::move(f), c);
}

CharacterDesc CharacterDesc::trivial(const ExtFieldDesc& field) {
  ExtField f(field);
  auto zero = f.zero();
  return CharacterDesc(std::move(f), std::move(zero));
}

Angle psi_p(u64 a, u64 p) {
  if (a >= p) throw Error("residue " + std::to_string(a) + " out of range for p = " + std::to_string(p));
  return Angle(a, p);
}

Angle psi_q(const FqElem& x, const CharacterDesc& ch) {
  const ExtField& f = ch.field();
  f.validate(x);
  return psi_p(fq_trace(f.mul(ch.twist(), x), f), f.characteristic());
}

}  // namespace pfkit
