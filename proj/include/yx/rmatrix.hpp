#ifndef YX_RMATRIX_HPP
#define YX_RMATRIX_HPP

// The rational R-matrix R(u) = 1 - P/u + Q/(u - kappa) on C^N (x) C^N,
// evaluated exactly at rational points, its Yang-Baxter check, and the
// consistency check of the block-assembled form against the flat form.

#include <random>
#include <vector>

#include "yx/composition.hpp"
#include "yx/tensor.hpp"

namespace yx {

// Flat P, Q, identity on C^N (x) C^N (single-block composition view).
inline BTensor<Rat> flat_P(const Composition& comp) {
  return build_P(flatComposition(comp), 1, 1, Rat(1));
}
inline BTensor<Rat> flat_Q(const Composition& comp) {
  return build_Q(flatComposition(comp), 1, 1, Rat(1));
}
inline BTensor<Rat> flat_I2(const Composition& comp) {
  return build_I(flatComposition(comp), 1, 1, Rat(1));
}

// R(u0) exactly; u0 must avoid the poles 0 and kappa.
inline BTensor<Rat> build_R(const Composition& comp, const Rat& u0) {
  const Rat k = comp.kappa();
  if (isZero(u0) || isZero(u0 - k)) throw std::invalid_argument("build_R: pole");
  BTensor<Rat> r = flat_I2(comp);
  r -= flat_P(comp).scaled(Rat(1) / u0);
  r += flat_Q(comp).scaled(Rat(1) / (u0 - k));
  return r;
}

// R^{12}(u-v) R^{13}(u) R^{23}(v) == R^{23}(v) R^{13}(u) R^{12}(u-v).
inline bool check_YBE(const Composition& comp, const Rat& u0, const Rat& v0) {
  auto r12 = leg_place(build_R(comp, u0 - v0), {0, 1}, 3);
  auto r13 = leg_place(build_R(comp, u0), {0, 2}, 3);
  auto r23 = leg_place(build_R(comp, v0), {1, 2}, 3);
  BTensor<Rat> lhs = r12 * r13 * r23;
  BTensor<Rat> rhs = r23 * r13 * r12;
  return isZero(lhs - rhs);
}

// Assembles the block form
//   sum_ab I_ab (x) e_aa e_bb - 1/u sum_ab P_ab (x) e_ab e_ba
//   + 1/(u-kappa) sum_ab Q_ab (x) e_ab e_{a'b'}
// into a flat tensor and compares with build_R.
inline bool check_block_R(const Composition& comp, const Rat& u0) {
  const Rat k = comp.kappa();
  if (isZero(u0) || isZero(u0 - k)) throw std::invalid_argument("check_block_R: pole");
  BTensor<Rat> flat({Leg{comp.N, comp.N}, Leg{comp.N, comp.N}});
  for (int a = 1; a <= comp.M; ++a)
    for (int b = 1; b <= comp.M; ++b) {
      embed_block2(comp, build_I(comp, a, b, Rat(1)), a, a, b, b, flat);
      embed_block2(comp, build_P(comp, a, b, Rat(1)).scaled(Rat(-1) / u0), a, b, b, a, flat);
      embed_block2(comp, build_Q(comp, a, b, Rat(1)).scaled(Rat(1) / (u0 - k)),
                   a, b, comp.blockMirror(a), comp.blockMirror(b), flat);
    }
  flat.prune();
  return isZero(flat - build_R(comp, u0));
}

// Seeded rational sample in [-bound, bound] with denominator <= bound.
inline Rat sampleRat(std::mt19937_64& rng, long bound = 1000) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return ratFrom(num(rng), den(rng));
}

// Draws (u, v) avoiding the poles of R(u-v), R(u), R(v).
inline std::pair<Rat, Rat> sampleYbePoint(const Composition& comp, std::mt19937_64& rng) {
  const Rat k = comp.kappa();
  for (;;) {
    Rat u = sampleRat(rng), v = sampleRat(rng);
    bool bad = isZero(u) || isZero(v) || isZero(u - v) || isZero(u - k) || isZero(v - k) ||
               isZero(u - v - k);
    if (!bad) return {u, v};
  }
}

}  // namespace yx

#endif  // YX_RMATRIX_HPP
