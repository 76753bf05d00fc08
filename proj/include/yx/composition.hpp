#ifndef YX_COMPOSITION_HPP
#define YX_COMPOSITION_HPP

// Symmetric compositions of N and the sign / shift data attached to them:
// global signs eps_i, per-block signs eps_i^a, block offsets, the algebra
// constant kappa and the block-shifted constants kappa_a.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "yx/rational.hpp"

namespace yx {

enum class AlgType { B, C };

inline std::string toString(AlgType t) { return t == AlgType::B ? "B" : "C"; }

struct Composition {
  AlgType type = AlgType::B;
  std::vector<int> nu;   // symmetric: nu[a] == nu[M-1-a], 1-based accessors below
  int N = 0;             // sum of parts
  int M = 0;             // number of parts

  // Fault-injection hooks (tests only): flip the sign of every Q tensor the
  // tensor kit builds, and/or shift the kappa_a values used by relation
  // specs.  The commutator table never sees these, so perturbed checks run
  // against the unperturbed algebra.
  int qSign = +1;
  Rat kappaShift = Rat(0);

  int part(int a) const { return nu.at(static_cast<std::size_t>(a - 1)); }

  // Offset of block a: nubar(a) = nu_1 + ... + nu_{a-1}.
  int offset(int a) const {
    int s = 0;
    for (int j = 1; j < a; ++j) s += part(j);
    return s;
  }

  // Global index mirror i' = N + 1 - i, and block mirror a' = M + 1 - a.
  int mirror(int i) const { return N + 1 - i; }
  int blockMirror(int a) const { return M + 1 - a; }

  // kappa = N/2 - 1 (type B) or N/2 + 1 (type C).
  Rat kappa() const {
    // ratFrom keeps the value canonical; mpq_class(N, 2) would not reduce
    // and mpq comparisons assume canonical operands.
    return ratFrom(N, 2) + (type == AlgType::B ? Rat(-1) : Rat(1));
  }

  // kappa_a = kappa - nu_1 - ... - nu_{a-1}; includes the test-only shift.
  Rat kappaA(int a) const { return kappa() - Rat(offset(a)) + kappaShift; }

  // Global sign eps_i: all +1 in type B; +1 on the first half, -1 on the
  // second half in type C.
  int eps(int i) const {
    if (type == AlgType::B) return 1;
    return 2 * i <= N ? 1 : -1;
  }

  // Block sign eps_i^a for 1 <= i <= nu_a.  All +1 in type B.  In type C:
  // M = 2m+1: +1 iff a < m+1, or a = m+1 and i <= nu_{m+1}/2;
  // M = 2m:   +1 iff a <= m.
  int epsBlock(int a, int i) const {
    if (type == AlgType::B) return 1;
    if (M % 2 == 1) {
      const int mid = (M + 1) / 2;
      if (a < mid) return 1;
      if (a > mid) return -1;
      return 2 * i <= part(mid) ? 1 : -1;
    }
    return a <= M / 2 ? 1 : -1;
  }

  // Sub-composition for the image of the parabolic embedding at level p:
  // parts p+1 .. M-p, same type.
  Composition sub(int p) const;

  std::string describe() const {
    std::string s = toString(type) + ":(";
    for (int a = 1; a <= M; ++a) s += std::to_string(part(a)) + (a < M ? "," : "");
    return s + ")";
  }
};

inline Composition make_composition(AlgType type, std::vector<int> parts) {
  Composition c;
  c.type = type;
  c.nu = std::move(parts);
  c.M = static_cast<int>(c.nu.size());
  if (c.M == 0) throw std::invalid_argument("make_composition: empty composition");
  for (int a = 1; a <= c.M; ++a) {
    if (c.part(a) <= 0) throw std::invalid_argument("make_composition: nonpositive part");
    if (c.part(a) != c.nu[static_cast<std::size_t>(c.M - a)])
      throw std::invalid_argument("make_composition: composition not symmetric");
  }
  c.N = std::accumulate(c.nu.begin(), c.nu.end(), 0);
  if (type == AlgType::B && c.N % 2 == 0)
    throw std::invalid_argument("type B requires odd N");
  if (type == AlgType::C) {
    if (c.N % 2 != 0) throw std::invalid_argument("type C requires even N");
    if (c.M % 2 == 1 && c.part((c.M + 1) / 2) % 2 != 0)
      throw std::invalid_argument("make_composition: odd middle part in type C");
  }
  return c;
}

// The one-part composition seen by the flat (non-parabolic) calculus.
inline Composition flatComposition(const Composition& comp) {
  Composition f = make_composition(comp.type, {comp.N});
  f.qSign = comp.qSign;
  f.kappaShift = comp.kappaShift;
  return f;
}

inline Composition Composition::sub(int p) const {
  if (p < 0 || 2 * p >= M)
    throw std::invalid_argument("Composition::sub: level out of range");
  std::vector<int> parts(nu.begin() + p, nu.end() - p);
  Composition s = make_composition(type, std::move(parts));
  s.qSign = qSign;
  s.kappaShift = kappaShift;
  return s;
}

inline int eps_block(const Composition& c, int a, int i) { return c.epsBlock(a, i); }

}  // namespace yx

#endif  // YX_COMPOSITION_HPP
