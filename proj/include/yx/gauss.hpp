#ifndef YX_GAUSS_HPP
#define YX_GAUSS_HPP

// Block Gauss decomposition T = F D E by sequential block elimination,
// templated over the value ring V (truncated series over the free algebra,
// or field matrices at a sample point).  Also: quasideterminant spot-check,
// the refined in-block LDU D_a = D_a^- H_a D_a^+, the parabolic embedding
// blocks psi_p(T_ab) = (F^[p] D^[p] E^[p])_ab, and extraction of the
// Drinfeld one-row series h_i, e_j, f_j from the entry-level decomposition.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "yx/matrix.hpp"

namespace yx {

template <class V>
using BlockFn = std::function<Mat<V>(int, int)>;  // (a, b) -> nu_a x nu_b block

template <class V>
class GaussDecomp {
 public:
  GaussDecomp(const BlockFn<V>& block, std::vector<int> part, const V& oneV)
      : part_(std::move(part)), one_(oneV) {
    const int M = blocks();
    std::map<std::pair<int, int>, Mat<V>> S;
    for (int a = 1; a <= M; ++a)
      for (int b = 1; b <= M; ++b) S[{a, b}] = block(a, b);
    for (int a = 1; a <= M; ++a) {
      Mat<V> Da = S[{a, a}];
      Mat<V> Dinv = matInvert(Da, one_);
      d_.push_back(Da);
      dinv_.push_back(Dinv);
      for (int b = a + 1; b <= M; ++b) {
        e_[{a, b}] = Dinv * S[{a, b}];
        f_[{b, a}] = S[{b, a}] * Dinv;
      }
      for (int b = a + 1; b <= M; ++b)
        for (int c = a + 1; c <= M; ++c) S[{b, c}] -= f_[{b, a}] * Da * e_[{a, c}];
    }
  }

  int blocks() const { return static_cast<int>(part_.size()); }
  int part(int a) const { return part_[static_cast<std::size_t>(a - 1)]; }

  const Mat<V>& D(int a) const { return d_[static_cast<std::size_t>(a - 1)]; }
  const Mat<V>& Dtil(int a) const { return dinv_[static_cast<std::size_t>(a - 1)]; }

  // E_{ab} (a <= b) and F_{ba} (b >= a); the diagonal is the identity.
  Mat<V> E(int a, int b) const {
    if (a == b) return Mat<V>::identity(part(a), one_);
    if (a > b) throw std::invalid_argument("GaussDecomp::E: need a <= b");
    return e_.at({a, b});
  }
  Mat<V> F(int b, int a) const {
    if (a == b) return Mat<V>::identity(part(a), one_);
    if (b < a) throw std::invalid_argument("GaussDecomp::F: need b >= a");
    return f_.at({b, a});
  }

  // psi_p(T_ab): block (a, b) of F^[p] D^[p] E^[p], with a, b counted
  // 1-based inside the sub-range p+1 .. M-p.  p = 0 reproduces T itself.
  Mat<V> psiBlock(int p, int a, int b) const {
    const int lim = std::min(a, b);
    Mat<V> acc;
    for (int c = 1; c <= lim; ++c)
      acc += F(p + a, p + c) * D(p + c) * E(p + c, p + b);
    return acc;
  }

  const V& oneV() const { return one_; }

  // Rewrites every stored entry through `f` (e.g. a normal-form map that is
  // the identity modulo the relations); keeps downstream products compact.
  template <class Fn>
  void mapValues(Fn&& f) {
    auto apply = [&](Mat<V>& m) {
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = f(m.at(i, j));
    };
    for (auto& m : d_) apply(m);
    for (auto& m : dinv_) apply(m);
    for (auto& [k, m] : e_) apply(m);
    for (auto& [k, m] : f_) apply(m);
  }

 private:
  std::vector<int> part_;
  V one_;
  std::vector<Mat<V>> d_, dinv_;
  std::map<std::pair<int, int>, Mat<V>> e_, f_;
};

inline std::vector<int> onesPartition(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

// Quasideterminant |T|_a = T_aa - T_{a,<a} (T_{<a,<a})^{-1} T_{<a,a},
// computed independently of the sequential elimination (spot check for D_a).
template <class V>
Mat<V> quasidet(const BlockFn<V>& block, const std::vector<int>& part, int a, const V& oneV) {
  auto psize = [&](int x) { return part[static_cast<std::size_t>(x - 1)]; };
  if (a == 1) return block(1, 1);
  int lead = 0;
  for (int x = 1; x < a; ++x) lead += psize(x);
  Mat<V> A(lead, lead), B(lead, psize(a)), C(psize(a), lead);
  int ro = 0;
  for (int x = 1; x < a; ++x) {
    int co = 0;
    for (int y = 1; y < a; ++y) {
      Mat<V> blk = block(x, y);
      for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j) A.at(ro + i, co + j) = blk.at(i, j);
      co += psize(y);
    }
    Mat<V> bx = block(x, a);
    for (int i = 0; i < bx.rows(); ++i)
      for (int j = 0; j < bx.cols(); ++j) B.at(ro + i, j) = bx.at(i, j);
    Mat<V> cx = block(a, x);
    for (int i = 0; i < cx.rows(); ++i)
      for (int j = 0; j < cx.cols(); ++j) C.at(i, ro + j) = cx.at(i, j);
    ro += psize(x);
  }
  return block(a, a) - C * matInvert(A, oneV) * B;
}

// Refined in-block decomposition D_a = D_a^- H_a D_a^+ (entry-level LDU).
template <class V>
struct RefinedDiag {
  std::vector<V> h;  // diagonal of H_a
  Mat<V> minus;      // D_a^-: lower unitriangular
  Mat<V> plus;       // D_a^+: upper unitriangular
};

template <class V>
RefinedDiag<V> refine_diag(const Mat<V>& Da, const V& oneV) {
  const int n = Da.rows();
  BlockFn<V> entry = [&](int i, int j) {
    Mat<V> m(1, 1);
    m.at(0, 0) = Da.at(i - 1, j - 1);
    return m;
  };
  GaussDecomp<V> g(entry, onesPartition(n), oneV);
  RefinedDiag<V> r;
  r.minus = Mat<V>::identity(n, oneV);
  r.plus = Mat<V>::identity(n, oneV);
  for (int i = 1; i <= n; ++i) {
    r.h.push_back(g.D(i).at(0, 0));
    for (int j = i + 1; j <= n; ++j) {
      r.plus.at(i - 1, j - 1) = g.E(i, j).at(0, 0);
      r.minus.at(j - 1, i - 1) = g.F(j, i).at(0, 0);
    }
  }
  return r;
}

// Drinfeld one-row series from the entry-level (all-ones) decomposition of
// the full generator matrix: h_i = H_ii for i = 1..n+1, e_j = e_{j,j+1},
// f_j = f_{j+1,j} for j = 1..n, n = floor(N/2).
template <class V>
struct DrinfeldSeries {
  std::vector<V> h;  // size n+1
  std::vector<V> e;  // size n
  std::vector<V> f;  // size n
};

template <class V>
DrinfeldSeries<V> drinfeld_extract(const GaussDecomp<V>& entryLevel, int N) {
  if (entryLevel.blocks() != N)
    throw std::invalid_argument("drinfeld_extract: needs the entry-level decomposition");
  const int n = N / 2;
  DrinfeldSeries<V> d;
  for (int i = 1; i <= n + 1; ++i) d.h.push_back(entryLevel.D(i).at(0, 0));
  for (int j = 1; j <= n; ++j) {
    d.e.push_back(entryLevel.E(j, j + 1).at(0, 0));
    d.f.push_back(entryLevel.F(j + 1, j).at(0, 0));
  }
  return d;
}

}  // namespace yx

#endif  // YX_GAUSS_HPP
