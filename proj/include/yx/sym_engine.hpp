#ifndef YX_SYM_ENGINE_HPP
#define YX_SYM_ENGINE_HPP

// Symbolic relation engine: block series with coefficients in the free
// algebra modulo the commutator table.  Exposes two views shared with the
// oracle engine:
//   * the leg DSL (Val = multi-variable series of leg-placed block tensors),
//     used by the R-matrix style relations, and
//   * the matrix view (MatV = block matrices of one-variable series),
//     used by transpose/center identities.
// All precomputation (block Gauss, entry-level Gauss, full T inverse) is
// done eagerly in the constructor, so a const engine is thread-safe.

#include <memory>
#include <optional>
#include <string>

#include "yx/algebra.hpp"
#include "yx/composition.hpp"
#include "yx/gauss.hpp"
#include "yx/series.hpp"
#include "yx/tensor.hpp"

namespace yx {

inline Elem scalarFromLong(long v, const Elem&) { return Elem::fromRat(Rat(v)); }

template <class F>
Mat<F> scalarFromLong(long v, const Mat<F>& protoOne) {
  return protoOne.scaled(scalarFromLong(v, protoOne.at(0, 0)));
}

class SymEngine {
 public:
  using TS = TruncSeries<Elem>;
  using MV = TS;                       // matrix-view scalar
  using Val = MultiSeries<BTensor<Elem>>;

  SymEngine(const Composition& comp, int K)
      : comp_(comp), K_(K), alg_(std::make_shared<AlgebraCtx>(comp)) {
    const TS oneTS = TS::one(K_, Elem::fromRat(Rat(1)));
    BlockFn<TS> blocks = [this](int a, int b) { return T_block(a, b); };
    gauss_ = std::make_unique<GaussDecomp<TS>>(blocks, comp_.nu, oneTS);
    BlockFn<TS> entries = [this](int i, int j) {
      Mat<TS> m(1, 1);
      m.at(0, 0) = tSeries(i, j);
      return m;
    };
    entryGauss_ = std::make_unique<GaussDecomp<TS>>(entries, onesPartition(comp_.N), oneTS);
    // Full inverse matrix T~(u) = T(u)^{-1}.
    Mat<TS> tFull(comp_.N, comp_.N);
    for (int i = 1; i <= comp_.N; ++i)
      for (int j = 1; j <= comp_.N; ++j) tFull.at(i - 1, j - 1) = tSeries(i, j);
    tTilde_ = matInvert(tFull, oneTS);
    // Normal-form all precomputed series once: the raw inversion products
    // carry heavily redundant terms, and every later product (notably the
    // psi blocks) would otherwise square that redundancy.
    auto nfTS = [this](const TS& s) {
      TS r = s;
      for (int k = 0; k <= r.ord(); ++k) r.at(k) = alg_->nf(r.at(k));
      return r;
    };
    gauss_->mapValues(nfTS);
    entryGauss_->mapValues(nfTS);
    for (int i = 0; i < tTilde_.rows(); ++i)
      for (int j = 0; j < tTilde_.cols(); ++j) tTilde_.at(i, j) = nfTS(tTilde_.at(i, j));
    drin_ = drinfeld_extract(*entryGauss_, comp_.N);
  }

  const Composition& comp() const { return comp_; }
  int order() const { return K_; }
  AlgebraCtx& alg() const { return *alg_; }
  const GaussDecomp<TS>& gauss() const { return *gauss_; }
  const GaussDecomp<TS>& entryGauss() const { return *entryGauss_; }

  // kappa as used by relation prefactors/shifts (includes the test-only
  // perturbation; the algebra itself never sees it).
  Rat kappaRel() const { return comp_.kappa() + comp_.kappaShift; }

  // -- generator series ----------------------------------------------------

  // t_ij(u) as a truncated series (global indices).
  TS tSeries(int i, int j) const {
    TS s(K_);
    s.at(0) = Elem::fromRat(Rat(i == j ? 1 : 0));
    for (int r = 1; r <= K_; ++r) s.at(r) = Elem::gen(r, i, j);
    return s;
  }

  // Block T_ab(u) as a nu_a x nu_b matrix of series.
  Mat<TS> T_block(int a, int b) const {
    Mat<TS> m(comp_.part(a), comp_.part(b));
    const int ra = comp_.offset(a), cb = comp_.offset(b);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = tSeries(ra + i + 1, cb + j + 1);
    return m;
  }

  Mat<TS> Ttil_block(int a, int b) const {
    Mat<TS> m(comp_.part(a), comp_.part(b));
    const int ra = comp_.offset(a), cb = comp_.offset(b);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = tTilde_.at(ra + i, cb + j);
    return m;
  }

  // -- matrix view ---------------------------------------------------------

  static Mat<TS> shiftMat(const Mat<TS>& m, const Rat& c) {
    if (isZero(c)) return m;
    Mat<TS> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r.at(i, j) = shift(m.at(i, j), c);
    return r;
  }

  Mat<TS> matT(int a, int b, const Rat& c = Rat(0)) const { return shiftMat(T_block(a, b), c); }
  Mat<TS> matD(int a, const Rat& c = Rat(0)) const { return shiftMat(gauss_->D(a), c); }
  Mat<TS> matDtil(int a, const Rat& c = Rat(0)) const { return shiftMat(gauss_->Dtil(a), c); }
  Mat<TS> matE(int a, int b, const Rat& c = Rat(0)) const { return shiftMat(gauss_->E(a, b), c); }
  Mat<TS> matF(int b, int a, const Rat& c = Rat(0)) const { return shiftMat(gauss_->F(b, a), c); }

  Mat<TS> matTranspose(const Mat<TS>& m, int a, int b) const {
    return transpose_t(comp_, m, a, b);
  }

  MV matDrinH(int i, const Rat& c = Rat(0)) const {
    return shift(drin().h[static_cast<std::size_t>(i - 1)], c);
  }
  MV matDrinE(int j, const Rat& c = Rat(0)) const {
    return shift(drin().e[static_cast<std::size_t>(j - 1)], c);
  }
  MV matDrinF(int j, const Rat& c = Rat(0)) const {
    return shift(drin().f[static_cast<std::size_t>(j - 1)], c);
  }

  MV vInvert(const MV& v) const { return invert(v); }
  MV vScale(const MV& v, const Rat& s) const { return v.scaled(Elem::fromRat(s)); }
  MV vOne() const { return TS::one(K_, Elem::fromRat(Rat(1))); }

  bool vIsZero(const MV& v) const {
    for (int r = 0; r <= v.ord(); ++r)
      if (!alg_->isZeroNf(v.at(r))) return false;
    return true;
  }

  std::vector<std::string> checkMatZero(const Mat<MV>& m) const {
    std::vector<std::string> fails;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        for (int r = 0; r <= m.at(i, j).ord(); ++r) {
          Elem nf = alg_->nf(m.at(i, j).at(r));
          if (!nf.structurallyZero())
            fails.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") at order " + std::to_string(r) + ": " + nf.str());
        }
    return fails;
  }

  // -- leg DSL -------------------------------------------------------------

  // Places a block matrix of series as a leg tensor in variable `var`,
  // optionally argument-shifted and with coefficients below `dropBelow`
  // removed (ring accent = dropBelow 2).
  Val place(const Mat<TS>& m, int L, int leg, int var, const Rat& shiftC = Rat(0),
            int dropBelow = 0) const {
    std::vector<Leg> legs(static_cast<std::size_t>(L));
    legs[static_cast<std::size_t>(leg)] = Leg{m.rows(), m.cols()};
    std::map<int, BTensor<Elem>> byOrder;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        TS ts = m.at(i, j);
        if (dropBelow > 0) ts = ts.droppedBelow(dropBelow);
        if (!isZero(shiftC)) ts = shift(ts, shiftC);
        for (int r = 0; r <= ts.ord(); ++r) {
          const Elem& c = ts.at(r);
          if (c.structurallyZero()) continue;
          auto it = byOrder.find(r);
          if (it == byOrder.end()) it = byOrder.emplace(r, BTensor<Elem>(legs)).first;
          it->second.add(idxSet(0, leg, i + 1, j + 1), c);
        }
      }
    Val v;
    v.ord()[static_cast<std::size_t>(var)] = K_;
    for (auto& [r, t] : byOrder) {
      MExp e{};
      e[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(r);
      v.add(e, t);
    }
    return v;
  }

  Val T(int L, int leg, int var, int a, int b, const Rat& sh = Rat(0)) const {
    return place(T_block(a, b), L, leg, var, sh);
  }
  // The full N x N generator matrix as a single flat block.
  Val Tflat(int L, int leg, int var, const Rat& sh = Rat(0)) const {
    Mat<TS> m(comp_.N, comp_.N);
    for (int i = 1; i <= comp_.N; ++i)
      for (int j = 1; j <= comp_.N; ++j) m.at(i - 1, j - 1) = tSeries(i, j);
    return place(m, L, leg, var, sh);
  }
  Val Ttil(int L, int leg, int var, int a, int b, const Rat& sh = Rat(0)) const {
    return place(Ttil_block(a, b), L, leg, var, sh);
  }
  Val D(int L, int leg, int var, int a, const Rat& sh = Rat(0)) const {
    return place(gauss_->D(a), L, leg, var, sh);
  }
  Val Dtil(int L, int leg, int var, int a, const Rat& sh = Rat(0)) const {
    return place(gauss_->Dtil(a), L, leg, var, sh);
  }
  Val E(int L, int leg, int var, int a, int b, const Rat& sh = Rat(0), bool ring = false) const {
    return place(gauss_->E(a, b), L, leg, var, sh, ring ? 2 : 0);
  }
  Val F(int L, int leg, int var, int b, int a, const Rat& sh = Rat(0), bool ring = false) const {
    return place(gauss_->F(b, a), L, leg, var, sh, ring ? 2 : 0);
  }
  Val psiT(int L, int leg, int var, int p, int a, int b) const {
    return place(gauss_->psiBlock(p, a, b), L, leg, var);
  }
  Val drinH(int L, int leg, int var, int i, const Rat& sh = Rat(0)) const {
    return place(oneByOne(drin().h[static_cast<std::size_t>(i - 1)]), L, leg, var, sh);
  }
  Val drinE(int L, int leg, int var, int j, const Rat& sh = Rat(0)) const {
    return place(oneByOne(drin().e[static_cast<std::size_t>(j - 1)]), L, leg, var, sh);
  }
  Val drinF(int L, int leg, int var, int j, const Rat& sh = Rat(0)) const {
    return place(oneByOne(drin().f[static_cast<std::size_t>(j - 1)]), L, leg, var, sh);
  }

  // Constant tensors over the given composition (defaults to the engine's).
  Val constTensor(const BTensor<Elem>& t, int L, int l1, int l2) const {
    Val v;
    v.add(MExp{}, leg_place(t, {l1, l2}, L));
    return v;
  }
  Val P(int L, int l1, int l2, int a, int b, const Composition* c = nullptr) const {
    return constTensor(build_P(c ? *c : comp_, a, b, Elem::fromRat(Rat(1))), L, l1, l2);
  }
  Val Q(int L, int l1, int l2, int a, int b, const Composition* c = nullptr) const {
    return constTensor(build_Q(c ? *c : comp_, a, b, Elem::fromRat(Rat(1))), L, l1, l2);
  }
  Val I2(int L, int l1, int l2, int a, int b, const Composition* c = nullptr) const {
    return constTensor(build_I(c ? *c : comp_, a, b, Elem::fromRat(Rat(1))), L, l1, l2);
  }

  Val mulLin(const Val& v, int vi, int vj, const Rat& c) const {
    if (v.entries().empty()) return v;
    // Neutral-legged unit tensor with the same arity as v's coefficients.
    BTensor<Elem> proto(
        std::vector<Leg>(v.entries().begin()->second.legs().size()));
    proto.add(0, Elem::fromRat(Rat(1)));
    return mulLinearForm(v, vi, vj, c, proto);
  }
  Val scale(const Val& v, const Rat& s) const { return v.scaled(s); }

  CompareResult check(const Val& lhs, const Val& rhs) const {
    return clear_and_compare(lhs, rhs, [this](const BTensor<Elem>& t) -> std::string {
      std::string why;
      t.allOf([&](TIdx idx, const Elem& e) {
        Elem n = alg_->nf(e);
        if (!n.structurallyZero()) {
          why = "index " + describeIdx(idx, t.legCount()) + ": " + n.str();
          return false;
        }
        return true;
      });
      return why;
    });
  }

  // The flat entry t_ij(u) as a 1x1 block on `leg` (scalar defining
  // relation checks).
  Val Tentry(int L, int leg, int var, int i, int j) const {
    Mat<TS> m(1, 1);
    m.at(0, 0) = tSeries(i, j);
    return place(m, L, leg, var);
  }

  const DrinfeldSeries<TS>& drin() const {
    if (!drin_) drin_ = drinfeld_extract(*entryGauss_, comp_.N);
    return *drin_;
  }

 private:
  static Mat<TS> oneByOne(const TS& s) {
    Mat<TS> m(1, 1);
    m.at(0, 0) = s;
    return m;
  }

  BTensor<Elem> protoOneTensor() const {
    BTensor<Elem> t(std::vector<Leg>{});
    t.add(0, Elem::fromRat(Rat(1)));
    return t;
  }

  static std::string describeIdx(TIdx idx, int legs) {
    std::string s = "[";
    for (int l = 0; l < legs; ++l) {
      if (l) s += ";";
      s += std::to_string(idxRow(idx, l)) + "," + std::to_string(idxCol(idx, l));
    }
    return s + "]";
  }

  Composition comp_;
  int K_;
  std::shared_ptr<AlgebraCtx> alg_;
  std::unique_ptr<GaussDecomp<TS>> gauss_;
  std::unique_ptr<GaussDecomp<TS>> entryGauss_;
  Mat<TS> tTilde_;
  mutable std::optional<DrinfeldSeries<TS>> drin_;
};

}  // namespace yx

#endif  // YX_SYM_ENGINE_HPP
