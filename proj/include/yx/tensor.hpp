#ifndef YX_TENSOR_HPP
#define YX_TENSOR_HPP

// Sparse tensors with up to four ordered legs.  Each leg is either a
// rectangular block slot (rdim x cdim) or neutral (identity wildcard).
// Products contract leg-wise; a neutral leg adopts the other operand's leg.
// Admissibility of a product is checked on block dimensions: the paper's
// calculus identifies mirror-image block labels with equal sizes, so labels
// enter only when a tensor is built (dimensions and signs), never when two
// tensors are combined.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "yx/composition.hpp"
#include "yx/matrix.hpp"
#include "yx/rational.hpp"

namespace yx {

struct Leg {
  int rdim = 0;
  int cdim = 0;
  bool neutral() const { return rdim == 0; }
  friend bool operator==(const Leg& a, const Leg& b) {
    return a.rdim == b.rdim && a.cdim == b.cdim;
  }
};

// Packed multi-index: one byte per row/col index (1-based), two bytes per
// leg, leg k in bytes 2k and 2k+1.  Neutral legs use 0.
using TIdx = std::uint64_t;

inline int idxRow(TIdx x, int leg) { return static_cast<int>((x >> (16 * leg)) & 0xff); }
inline int idxCol(TIdx x, int leg) { return static_cast<int>((x >> (16 * leg + 8)) & 0xff); }
inline TIdx idxSet(TIdx x, int leg, int row, int col) {
  x &= ~(TIdx(0xffff) << (16 * leg));
  x |= (TIdx(static_cast<unsigned>(row)) << (16 * leg));
  x |= (TIdx(static_cast<unsigned>(col)) << (16 * leg + 8));
  return x;
}

template <class C>
class BTensor {
 public:
  BTensor() = default;
  explicit BTensor(std::vector<Leg> legs) : legs_(std::move(legs)) {}

  const std::vector<Leg>& legs() const { return legs_; }
  int legCount() const { return static_cast<int>(legs_.size()); }
  const std::map<TIdx, C>& entries() const { return e_; }
  bool structurallyZero() const { return e_.empty(); }

  void add(TIdx idx, const C& v) {
    auto it = e_.find(idx);
    if (it == e_.end())
      e_.emplace(idx, v);
    else
      it->second += v;
  }
  void set(TIdx idx, C v) { e_[idx] = std::move(v); }

  // Entry accessors for 1- and 2-leg tensors (1-based block indices).
  void add2(int r0, int c0, int r1, int c1, const C& v) {
    add(idxSet(idxSet(0, 0, r0, c0), 1, r1, c1), v);
  }

  BTensor operator-() const {
    BTensor r(legs_);
    for (const auto& [k, v] : e_) r.e_.emplace(k, -v);
    return r;
  }

  friend BTensor operator+(const BTensor& a, const BTensor& b) {
    if (a.e_.empty() && a.legs_.empty()) return b;
    if (b.e_.empty() && b.legs_.empty()) return a;
    if (a.legs_ != b.legs_) throw std::invalid_argument("BTensor: leg mismatch in sum");
    BTensor r = a;
    for (const auto& [k, v] : b.e_) r.add(k, v);
    return r;
  }
  friend BTensor operator-(const BTensor& a, const BTensor& b) { return a + (-b); }
  BTensor& operator+=(const BTensor& o) { return *this = *this + o; }
  BTensor& operator-=(const BTensor& o) { return *this = *this - o; }

  template <class S>
  BTensor scaled(const S& s) const {
    BTensor r(legs_);
    for (const auto& [k, v] : e_) r.e_.emplace(k, v * s);
    return r;
  }

  // Leg-wise contraction.  Per leg: neutral * X = X, X * neutral = X,
  // block * block requires lhs cdim == rhs rdim and matching inner index.
  friend BTensor operator*(const BTensor& a, const BTensor& b) {
    if (a.legCount() != b.legCount())
      throw std::invalid_argument("BTensor: leg count mismatch in product");
    const int L = a.legCount();
    std::vector<Leg> legs(static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l) {
      const Leg &la = a.legs_[static_cast<std::size_t>(l)], &lb = b.legs_[static_cast<std::size_t>(l)];
      if (la.neutral())
        legs[static_cast<std::size_t>(l)] = lb;
      else if (lb.neutral())
        legs[static_cast<std::size_t>(l)] = la;
      else if (la.cdim != lb.rdim)
        throw std::invalid_argument("BTensor: inadmissible product on leg " + std::to_string(l));
      else
        legs[static_cast<std::size_t>(l)] = Leg{la.rdim, lb.cdim};
    }
    BTensor r(legs);
    for (const auto& [ka, va] : a.e_) {
      for (const auto& [kb, vb] : b.e_) {
        TIdx out = 0;
        bool ok = true;
        for (int l = 0; l < L && ok; ++l) {
          const bool na = a.legs_[static_cast<std::size_t>(l)].neutral();
          const bool nb = b.legs_[static_cast<std::size_t>(l)].neutral();
          if (na && nb) continue;
          if (na)
            out = idxSet(out, l, idxRow(kb, l), idxCol(kb, l));
          else if (nb)
            out = idxSet(out, l, idxRow(ka, l), idxCol(ka, l));
          else {
            if (idxCol(ka, l) != idxRow(kb, l)) ok = false;
            else out = idxSet(out, l, idxRow(ka, l), idxCol(kb, l));
          }
        }
        if (ok) r.add(out, va * vb);
      }
    }
    r.prune();
    return r;
  }

  void prune() {
    for (auto it = e_.begin(); it != e_.end();) {
      if (yx::isZero(it->second)) it = e_.erase(it);
      else ++it;
    }
  }

  template <class Pred>
  bool allOf(Pred&& pred) const {
    for (const auto& [k, v] : e_)
      if (!pred(k, v)) return false;
    return true;
  }

 private:
  std::vector<Leg> legs_;
  std::map<TIdx, C> e_;
};

template <class C>
bool isZero(const BTensor<C>& t) {
  return t.allOf([](TIdx, const C& v) { return yx::isZero(v); });
}

// ---------------------------------------------------------------------------
// Builders for the constant tensors of the block calculus.  All are 2-leg.
// Labels (a, b) fix dimensions and signs.  The identity scalar type C must
// be constructible from long via `scalarFrom`.
// ---------------------------------------------------------------------------

inline Rat scalarFromLong(long v, const Rat&) { return Rat(v); }
inline Fp scalarFromLong(long v, const Fp&) { return Fp::neutral(v); }

// I_ab = sum_{i,j} e_ii (x) e_jj.
template <class C>
BTensor<C> build_I(const Composition& comp, int a, int b, const C& proto) {
  const int na = comp.part(a), nb = comp.part(b);
  BTensor<C> t({Leg{na, na}, Leg{nb, nb}});
  for (int i = 1; i <= na; ++i)
    for (int j = 1; j <= nb; ++j) t.add2(i, i, j, j, scalarFromLong(1, proto));
  return t;
}

// P_ab = sum_{i,j} e_ij (x) e_ji.
template <class C>
BTensor<C> build_P(const Composition& comp, int a, int b, const C& proto) {
  const int na = comp.part(a), nb = comp.part(b);
  BTensor<C> t({Leg{na, nb}, Leg{nb, na}});
  for (int i = 1; i <= na; ++i)
    for (int j = 1; j <= nb; ++j) t.add2(i, j, j, i, scalarFromLong(1, proto));
  return t;
}

// Q_ab = sum_{i,j} eps_i^a eps_j^b e_ij (x) e_{nu_a+1-i, nu_b+1-j}.
// Affected by the fault-injection sign flip in comp.qSign.
template <class C>
BTensor<C> build_Q(const Composition& comp, int a, int b, const C& proto) {
  const int na = comp.part(a), nb = comp.part(b);
  BTensor<C> t({Leg{na, nb}, Leg{na, nb}});
  for (int i = 1; i <= na; ++i)
    for (int j = 1; j <= nb; ++j)
      t.add2(i, j, na + 1 - i, nb + 1 - j,
             scalarFromLong(comp.qSign * comp.epsBlock(a, i) * comp.epsBlock(b, j), proto));
  return t;
}

// ---------------------------------------------------------------------------
// Transpose.  On a nu_a x nu_b block, (e_ij)^t = eps_i^a eps_j^b
// e_{nu_b+1-j, nu_a+1-i}.  Provided for plain block matrices and per-leg for
// tensors.
// ---------------------------------------------------------------------------

template <class C>
Mat<C> transpose_t(const Composition& comp, const Mat<C>& m, int a, int b) {
  const int na = comp.part(a), nb = comp.part(b);
  if (m.rows() != na || m.cols() != nb)
    throw std::invalid_argument("transpose_t: shape does not match block labels");
  Mat<C> r(nb, na);
  for (int i = 1; i <= na; ++i)
    for (int j = 1; j <= nb; ++j) {
      C v = m.at(i - 1, j - 1);
      if (comp.epsBlock(a, i) * comp.epsBlock(b, j) < 0) v = -v;
      r.at(nb - j, na - i) = v;
    }
  return r;
}

template <class C>
BTensor<C> transpose_t(const Composition& comp, const BTensor<C>& t, int leg, int a, int b) {
  const int na = comp.part(a), nb = comp.part(b);
  const auto& lg = t.legs()[static_cast<std::size_t>(leg)];
  if (lg.rdim != na || lg.cdim != nb)
    throw std::invalid_argument("transpose_t: leg does not match block labels");
  std::vector<Leg> legs = t.legs();
  legs[static_cast<std::size_t>(leg)] = Leg{nb, na};
  BTensor<C> r(legs);
  for (const auto& [k, v] : t.entries()) {
    const int i = idxRow(k, leg), j = idxCol(k, leg);
    C w = v;
    if (comp.epsBlock(a, i) * comp.epsBlock(b, j) < 0) w = -w;
    r.add(idxSet(k, leg, nb + 1 - j, na + 1 - i), w);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Embedding and leg placement.
// ---------------------------------------------------------------------------

// Adds A (x) e_ab into the flat N x N matrix `into` (block row a, column b).
template <class C>
void embed_block(const Composition& comp, const Mat<C>& a_mat, int a, int b, Mat<C>& into) {
  const int ra = comp.offset(a), cb = comp.offset(b);
  for (int i = 0; i < a_mat.rows(); ++i)
    for (int j = 0; j < a_mat.cols(); ++j) into.at(ra + i, cb + j) += a_mat.at(i, j);
}

// Embeds a 2-leg block tensor into a 2-leg flat tensor, given the block
// labels of each leg: leg 0 at block position (a0, b0), leg 1 at (a1, b1).
template <class C>
void embed_block2(const Composition& comp, const BTensor<C>& t, int a0, int b0, int a1, int b1,
                  BTensor<C>& into) {
  const int o0r = comp.offset(a0), o0c = comp.offset(b0);
  const int o1r = comp.offset(a1), o1c = comp.offset(b1);
  for (const auto& [k, v] : t.entries()) {
    TIdx out = idxSet(0, 0, o0r + idxRow(k, 0), o0c + idxCol(k, 0));
    out = idxSet(out, 1, o1r + idxRow(k, 1), o1c + idxCol(k, 1));
    into.add(out, v);
  }
}

// Places a tensor on the given legs of an L-leg space, neutral elsewhere.
// `where[i]` is the destination of source leg i; destinations are distinct.
template <class C>
BTensor<C> leg_place(const BTensor<C>& t, const std::vector<int>& where, int total) {
  if (static_cast<int>(where.size()) != t.legCount())
    throw std::invalid_argument("leg_place: arity mismatch");
  std::vector<Leg> legs(static_cast<std::size_t>(total));
  for (int i = 0; i < t.legCount(); ++i)
    legs[static_cast<std::size_t>(where[static_cast<std::size_t>(i)])] =
        t.legs()[static_cast<std::size_t>(i)];
  BTensor<C> r(legs);
  for (const auto& [k, v] : t.entries()) {
    TIdx out = 0;
    for (int i = 0; i < t.legCount(); ++i)
      out = idxSet(out, where[static_cast<std::size_t>(i)], idxRow(k, i), idxCol(k, i));
    r.add(out, v);
  }
  return r;
}

}  // namespace yx

#endif  // YX_TENSOR_HPP
