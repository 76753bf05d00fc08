#ifndef YX_ORACLE_HPP
#define YX_ORACLE_HPP

// Independent oracle engine: the evaluation representation
//   t_ij^(r) |-> -c^{r-1} e_ji + eps_i eps_j (c+kappa)^{r-1} e_{i'j'},
// equivalently T(u) = R(u-c), makes every generator an N x N matrix over an
// exact field (Q or F_p).  Relations are then checked at exact sample
// points: no series, no rewriting, so the code path shares nothing with the
// symbolic engine beyond the relation statements themselves.
//
// The engine mirrors SymEngine's duck-typed API (leg DSL + matrix view) so
// each relation template is written once and run under both engines.

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "yx/composition.hpp"
#include "yx/gauss.hpp"
#include "yx/series.hpp"
#include "yx/sym_engine.hpp"
#include "yx/tensor.hpp"

namespace yx {

struct BadPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rep_generator: the image of t_ij^(r) as an exact rational matrix.
inline Mat<Rat> rep_generator(const Composition& comp, const Rat& c, int r, int i, int j) {
  Mat<Rat> m(comp.N, comp.N);
  m.at(j - 1, i - 1) -= ratPow(c, r - 1);
  m.at(comp.mirror(i) - 1, comp.mirror(j) - 1) +=
      Rat(comp.eps(i) * comp.eps(j)) * ratPow(c + comp.kappa(), r - 1);
  return m;
}

template <class Fld>
class OracleEngine {
 public:
  using CM = Mat<Fld>;  // algebra value: N x N field matrix
  using MV = CM;      // matrix-view scalar
  using Val = BTensor<CM>;

  OracleEngine(const Composition& comp, const Rat& cparam, std::array<Rat, 4> pts,
               std::uint64_t prime = 0)
      : comp_(comp), c_(cparam), pts_(pts), prime_(prime) {
    if constexpr (std::is_same_v<Fld, Fp>) {
      if (prime_ == 0) throw std::invalid_argument("OracleEngine<Fp>: prime required");
    }
  }

  const Composition& comp() const { return comp_; }
  Rat kappaRel() const { return comp_.kappa() + comp_.kappaShift; }
  const Rat& point(int var) const { return pts_[static_cast<std::size_t>(var)]; }

  Fld embed(const Rat& r) const {
    if constexpr (std::is_same_v<Fld, Fp>) return Fp::fromRat(r, prime_);
    else return r;
  }
  Fld oneF() const { return embed(Rat(1)); }
  CM oneCM() const { return CM::identity(comp_.N, oneF()); }

  // t_ij evaluated at the exact point u0 (image of t_ij(u0)).
  CM tAt(int i, int j, const Rat& u0) const {
    const Rat k = comp_.kappa();
    Rat d1 = u0 - c_, d2 = u0 - c_ - k;
    if (isZero(d1) || isZero(d2)) throw BadPoint("oracle: sample point hits a pole");
    if constexpr (std::is_same_v<Fld, Fp>) {
      if (embed(d1).zero() || embed(d2).zero())
        throw BadPoint("oracle: sample point hits a pole mod p");
    }
    CM m(comp_.N, comp_.N);
    if (i == j)
      for (int x = 0; x < comp_.N; ++x) m.at(x, x) = oneF();
    m.at(j - 1, i - 1) -= embed(Rat(1) / d1);
    m.at(comp_.mirror(i) - 1, comp_.mirror(j) - 1) +=
        embed(Rat(comp_.eps(i) * comp_.eps(j)) / d2);
    return m;
  }

  Mat<CM> T_blockAt(int a, int b, const Rat& u0) const {
    Mat<CM> m(comp_.part(a), comp_.part(b));
    const int ra = comp_.offset(a), cb = comp_.offset(b);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = tAt(ra + i + 1, cb + j + 1, u0);
    return m;
  }

  // Image of t_ij^(1) (needed by the ring accent).
  CM t1(int i, int j) const {
    CM m(comp_.N, comp_.N);
    m.at(j - 1, i - 1) -= oneF();
    m.at(comp_.mirror(i) - 1, comp_.mirror(j) - 1) += embed(Rat(comp_.eps(i) * comp_.eps(j)));
    return m;
  }

  const GaussDecomp<CM>& gaussAt(const Rat& u0) const {
    std::lock_guard lk(mu_);
    auto it = gaussCache_.find(u0);
    if (it == gaussCache_.end()) {
      BlockFn<CM> blocks = [this, u0](int a, int b) { return T_blockAt(a, b, u0); };
      it = gaussCache_
               .emplace(u0, std::make_shared<GaussDecomp<CM>>(blocks, comp_.nu, oneCM()))
               .first;
    }
    return *it->second;
  }

  const GaussDecomp<CM>& entryGaussAt(const Rat& u0) const {
    std::lock_guard lk(mu_);
    auto it = entryCache_.find(u0);
    if (it == entryCache_.end()) {
      BlockFn<CM> entries = [this, u0](int i, int j) {
        Mat<CM> m(1, 1);
        m.at(0, 0) = tAt(i, j, u0);
        return m;
      };
      it = entryCache_
               .emplace(u0, std::make_shared<GaussDecomp<CM>>(entries, onesPartition(comp_.N),
                                                              oneCM()))
               .first;
    }
    return *it->second;
  }

  // -- matrix view (variable 0) -------------------------------------------

  Mat<CM> matT(int a, int b, const Rat& sh = Rat(0)) const {
    return T_blockAt(a, b, pts_[0] + sh);
  }
  Mat<CM> matD(int a, const Rat& sh = Rat(0)) const { return gaussAt(pts_[0] + sh).D(a); }
  Mat<CM> matDtil(int a, const Rat& sh = Rat(0)) const { return gaussAt(pts_[0] + sh).Dtil(a); }
  Mat<CM> matE(int a, int b, const Rat& sh = Rat(0)) const { return gaussAt(pts_[0] + sh).E(a, b); }
  Mat<CM> matF(int b, int a, const Rat& sh = Rat(0)) const { return gaussAt(pts_[0] + sh).F(b, a); }

  Mat<CM> matTranspose(const Mat<CM>& m, int a, int b) const {
    return transpose_t(comp_, m, a, b);
  }

  MV matDrinH(int i, const Rat& sh = Rat(0)) const {
    return drinAt(pts_[0] + sh).h[static_cast<std::size_t>(i - 1)];
  }
  MV matDrinE(int j, const Rat& sh = Rat(0)) const {
    return drinAt(pts_[0] + sh).e[static_cast<std::size_t>(j - 1)];
  }
  MV matDrinF(int j, const Rat& sh = Rat(0)) const {
    return drinAt(pts_[0] + sh).f[static_cast<std::size_t>(j - 1)];
  }

  MV vInvert(const MV& v) const { return ringInvert(v); }
  MV vScale(const MV& v, const Rat& s) const { return v.scaled(embed(s)); }
  MV vOne() const { return oneCM(); }
  bool vIsZero(const MV& v) const { return isZero(v); }

  std::vector<std::string> checkMatZero(const Mat<MV>& m) const {
    std::vector<std::string> fails;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!isZero(m.at(i, j)))
          fails.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") nonzero at sample point");
    return fails;
  }

  // -- leg DSL -------------------------------------------------------------

  Val place(const Mat<CM>& m, int L, int leg) const {
    std::vector<Leg> legs(static_cast<std::size_t>(L));
    legs[static_cast<std::size_t>(leg)] = Leg{m.rows(), m.cols()};
    Val v(legs);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!isZero(m.at(i, j))) v.add(idxSet(0, leg, i + 1, j + 1), m.at(i, j));
    return v;
  }

  Val T(int L, int leg, int var, int a, int b, const Rat& sh = Rat(0)) const {
    return place(T_blockAt(a, b, pts_[static_cast<std::size_t>(var)] + sh), L, leg);
  }
  Val Tflat(int L, int leg, int var, const Rat& sh = Rat(0)) const {
    const Rat u0 = pts_[static_cast<std::size_t>(var)] + sh;
    Mat<CM> m(comp_.N, comp_.N);
    for (int i = 1; i <= comp_.N; ++i)
      for (int j = 1; j <= comp_.N; ++j) m.at(i - 1, j - 1) = tAt(i, j, u0);
    return place(m, L, leg);
  }
  Val Ttil(int L, int leg, int var, int a, int b, const Rat& sh = Rat(0)) const {
    const Rat u0 = pts_[static_cast<std::size_t>(var)] + sh;
    Mat<CM> full(comp_.N, comp_.N);
    for (int i = 1; i <= comp_.N; ++i)
      for (int j = 1; j <= comp_.N; ++j) full.at(i - 1, j - 1) = tAt(i, j, u0);
    Mat<CM> inv = matInvert(full, oneCM());
    Mat<CM> blk(comp_.part(a), comp_.part(b));
    const int ra = comp_.offset(a), cb = comp_.offset(b);
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) blk.at(i, j) = inv.at(ra + i, cb + j);
    return place(blk, L, leg);
  }
  Val D(int L, int leg, int var, int a, const Rat& sh = Rat(0)) const {
    return place(gaussAt(pts_[static_cast<std::size_t>(var)] + sh).D(a), L, leg);
  }
  Val Dtil(int L, int leg, int var, int a, const Rat& sh = Rat(0)) const {
    return place(gaussAt(pts_[static_cast<std::size_t>(var)] + sh).Dtil(a), L, leg);
  }
  Val E(int L, int leg, int var, int a, int b, const Rat& sh = Rat(0), bool ring = false) const {
    const Rat u0 = pts_[static_cast<std::size_t>(var)] + sh;
    Mat<CM> m = gaussAt(u0).E(a, b);
    if (ring) m -= firstOrderBlock(a, b, u0);
    return place(m, L, leg);
  }
  Val F(int L, int leg, int var, int b, int a, const Rat& sh = Rat(0), bool ring = false) const {
    const Rat u0 = pts_[static_cast<std::size_t>(var)] + sh;
    Mat<CM> m = gaussAt(u0).F(b, a);
    if (ring) m -= firstOrderBlock(b, a, u0);
    return place(m, L, leg);
  }
  Val psiT(int L, int leg, int var, int p, int a, int b) const {
    return place(gaussAt(pts_[static_cast<std::size_t>(var)]).psiBlock(p, a, b), L, leg);
  }
  Val drinH(int L, int leg, int var, int i, const Rat& sh = Rat(0)) const {
    return place(oneByOne(drinAt(pts_[static_cast<std::size_t>(var)] + sh).h
                              [static_cast<std::size_t>(i - 1)]), L, leg);
  }
  Val drinE(int L, int leg, int var, int j, const Rat& sh = Rat(0)) const {
    return place(oneByOne(drinAt(pts_[static_cast<std::size_t>(var)] + sh).e
                              [static_cast<std::size_t>(j - 1)]), L, leg);
  }
  Val drinF(int L, int leg, int var, int j, const Rat& sh = Rat(0)) const {
    return place(oneByOne(drinAt(pts_[static_cast<std::size_t>(var)] + sh).f
                              [static_cast<std::size_t>(j - 1)]), L, leg);
  }
  Val Tentry(int L, int leg, int var, int i, int j) const {
    Mat<CM> m(1, 1);
    m.at(0, 0) = tAt(i, j, pts_[static_cast<std::size_t>(var)]);
    return place(m, L, leg);
  }

  Val constTensor(const BTensor<CM>& t, int L, int l1, int l2) const {
    return leg_place(t, {l1, l2}, L);
  }
  Val P(int L, int l1, int l2, int a, int b, const Composition* c = nullptr) const {
    return constTensor(build_P(c ? *c : comp_, a, b, oneCM()), L, l1, l2);
  }
  Val Q(int L, int l1, int l2, int a, int b, const Composition* c = nullptr) const {
    return constTensor(build_Q(c ? *c : comp_, a, b, oneCM()), L, l1, l2);
  }
  Val I2(int L, int l1, int l2, int a, int b, const Composition* c = nullptr) const {
    return constTensor(build_I(c ? *c : comp_, a, b, oneCM()), L, l1, l2);
  }

  Val mulLin(const Val& v, int vi, int vj, const Rat& c) const {
    Rat s(0);
    if (vi >= 0) s += pts_[static_cast<std::size_t>(vi)];
    if (vj >= 0) s -= pts_[static_cast<std::size_t>(vj)];
    s -= c;
    return v.scaled(embed(s));
  }
  Val scale(const Val& v, const Rat& s) const { return v.scaled(embed(s)); }

  CompareResult check(const Val& lhs, const Val& rhs) const {
    Val res = lhs - rhs;
    CompareResult out;
    out.window = {-1, -1, -1, -1};  // exact point evaluation, no window
    res.allOf([&](TIdx idx, const CM& v) {
      if (!isZero(v)) {
        CompareFailure f;
        f.what = "nonzero at tensor index, sample points (" + pointStr() + ")";
        out.failures.push_back(std::move(f));
        out.ok = false;
      }
      return true;
    });
    return out;
  }

 private:
  static Mat<CM> oneByOne(const CM& s) {
    Mat<CM> m(1, 1);
    m.at(0, 0) = s;
    return m;
  }

  Mat<CM> firstOrderBlock(int a, int b, const Rat& u0) const {
    if (isZero(u0)) throw BadPoint("oracle: ring accent at u = 0");
    Mat<CM> m(comp_.part(a), comp_.part(b));
    const int ra = comp_.offset(a), cb = comp_.offset(b);
    const Fld inv = embed(Rat(1) / u0);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = t1(ra + i + 1, cb + j + 1).scaled(inv);
    return m;
  }

  DrinfeldSeries<CM> drinAt(const Rat& u0) const {
    return drinfeld_extract(entryGaussAt(u0), comp_.N);
  }

  std::string pointStr() const {
    std::string s;
    for (int k = 0; k < 4; ++k) {
      if (k) s += ", ";
      s += toString(pts_[static_cast<std::size_t>(k)]);
    }
    return s;
  }

  Composition comp_;
  Rat c_;
  std::array<Rat, 4> pts_;
  std::uint64_t prime_;
  mutable std::mutex mu_;
  mutable std::map<Rat, std::shared_ptr<GaussDecomp<CM>>> gaussCache_;
  mutable std::map<Rat, std::shared_ptr<GaussDecomp<CM>>> entryCache_;
};

}  // namespace yx

#endif  // YX_ORACLE_HPP
