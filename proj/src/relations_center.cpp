// Catalog entries for the central series z(u): the scalar identity
// T^t(u+kappa) T(u) = z(u) I, its product formula in parabolic generators,
// the transpose lemma feeding that formula, centrality of the coefficients,
// and the boundary identification of the one-row generators.

#include <map>

#include "relations_impl.hpp"

namespace yx {
namespace relimpl {

void addCenter(std::vector<RelationSpec>& out) {
  out.push_back(spec(
      "center.scalar", "T^t(u+kappa) T(u) = z(u) I = T(u) T^t(u+kappa)", "center", anyComp,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        using MV = typename std::decay_t<decltype(g)>::MV;
        Mat<MV> A = fullTt(g, g.kappaRel()) * fullT(g);
        Mat<MV> B = fullT(g) * fullTt(g, g.kappaRel());
        const MV z = A.at(0, 0);
        for (int i = 0; i < A.rows(); ++i) {
          A.at(i, i) -= z;
          B.at(i, i) -= z;
        }
        const Mat<MV> zero(A.rows(), A.cols());
        checks.push_back(matEq(g, "TtT scalar", A, zero));
        checks.push_back(matEq(g, "TTt scalar", B, zero));
        return checks;
      }));

  out.push_back(spec(
      "center.parabolic", "z(u) = prod_a tr(Dtil_a D_a)/nu_a times middle trace factor",
      "center", anyComp, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        using MV = typename std::decay_t<decltype(g)>::MV;
        const MV z = (fullTt(g, g.kappaRel()) * fullT(g)).at(0, 0);
        MV acc = g.vOne();
        if (c.M % 2 == 1) {
          const int m = (c.M - 1) / 2;
          for (int a = 1; a <= m; ++a)
            acc = acc * g.vScale((g.matDtil(a, c.kappaA(a + 1)) * g.matD(a, c.kappaA(a)))
                                     .trace(),
                                 Rat(1, c.part(a)));
          acc = acc * g.vScale((g.matTranspose(g.matD(m + 1, c.kappaA(m + 1)), m + 1, m + 1) *
                                g.matD(m + 1))
                                   .trace(),
                               Rat(1, c.part(m + 1)));
        } else {
          const int m = c.M / 2;
          for (int a = 1; a <= m - 1; ++a)
            acc = acc * g.vScale((g.matDtil(a, c.kappaA(a + 1)) * g.matD(a, c.kappaA(a)))
                                     .trace(),
                                 Rat(1, c.part(a)));
          acc = acc * g.vScale(
                          (g.matTranspose(g.matD(m, c.kappaA(m)), m, m) * g.matD(m + 1)).trace(),
                          Rat(1, c.part(m)));
        }
        checks.push_back(mvEq(g, "z parabolic product", z, acc));
        return checks;
      }));

  out.push_back(spec(
      "center.lemma51",
      "E_a^t D_a^t F_a^t - (F_a D_a E_a)^t = D_{a+1}^t - (tr(Dtil_a D_a)/nu_a) D_{a+1}^t",
      "center", atLeastM3, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        using MV = typename std::decay_t<decltype(g)>::MV;
        for (int a = 1; 2 * a < c.M; ++a) {
          const Rat k0 = c.kappaA(a), k1 = c.kappaA(a + 1);
          Mat<MV> lhs = g.matTranspose(g.matE(a, a + 1, k1), a, a + 1) *
                            g.matTranspose(g.matD(a, k0), a, a) *
                            g.matTranspose(g.matF(a + 1, a, k1), a + 1, a) -
                        g.matTranspose(g.matF(a + 1, a, k0) * g.matD(a, k0) *
                                           g.matE(a, a + 1, k0),
                                       a + 1, a + 1);
          const MV s = g.vScale((g.matDtil(a, k1) * g.matD(a, k0)).trace(), Rat(1, c.part(a)));
          Mat<MV> rhs = g.matTranspose(g.matD(a + 1, k0), a + 1, a + 1) -
                        matLeftScale(s, g.matTranspose(g.matD(a + 1, k1), a + 1, a + 1));
          checks.push_back(matEq(g, "FDEt(a=" + std::to_string(a) + ")", lhs, rhs));
        }
        return checks;
      }));

  out.push_back(specSym(
      "center.central", "[z^(r), t_kl^(s)] = 0", "center", anyComp,
      [](const SymEngine& g, const RunCtx&) {
        std::vector<Check> checks;
        const auto z = (fullTt(g, g.kappaRel()) * fullT(g)).at(0, 0);
        CompareResult res;
        res.window = {g.order(), -1, -1, -1};
        const int rmax = std::min(4, g.order());
        for (int r = 1; r <= rmax; ++r)
          for (int s = 1; r + s <= 5; ++s)
            for (int k = 1; k <= g.comp().N; ++k)
              for (int l = 1; l <= g.comp().N; ++l) {
                Elem x = z.at(r) * Elem::gen(s, k, l) - Elem::gen(s, k, l) * z.at(r);
                if (!g.alg().isZeroNf(x)) {
                  res.ok = false;
                  if (res.failures.size() < 8) {
                    CompareFailure f;
                    f.exponents = {r, s, k, l};
                    f.what = "coefficient of z fails to commute with t_kl^(s)";
                    res.failures.push_back(std::move(f));
                  }
                }
              }
        checks.push_back(Check{"z central", std::move(res)});
        return checks;
      }));

  out.push_back(spec(
      "center.drinfeldB", "z(u) as an alternating product of shifted h_i, odd N", "center",
      typeB, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int n = g.comp().N / 2;
        const Rat kR = g.kappaRel();
        auto kf = [&](int i) -> Rat { return kR - Rat(i - 1); };
        using MV = typename std::decay_t<decltype(g)>::MV;
        const MV z = (fullTt(g, kR) * fullT(g)).at(0, 0);
        MV acc = g.vOne();
        for (int i = 1; i <= n; ++i) acc = acc * g.vInvert(g.matDrinH(i, kf(i + 1)));
        for (int i = 1; i <= n + 1; ++i) acc = acc * g.matDrinH(i, kf(i));
        acc = acc * g.matDrinH(n + 1);
        checks.push_back(mvEq(g, "z drinfeld odd", z, acc));
        return checks;
      }));

  out.push_back(spec(
      "center.drinfeldC", "z(u) as an alternating product of shifted h_i, even N", "center",
      typeC, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int n = g.comp().N / 2;
        const Rat kR = g.kappaRel();
        auto kf = [&](int i) -> Rat { return kR - Rat(i - 1); };
        using MV = typename std::decay_t<decltype(g)>::MV;
        const MV z = (fullTt(g, kR) * fullT(g)).at(0, 0);
        MV acc = g.vOne();
        for (int i = 1; i <= n - 1; ++i) acc = acc * g.vInvert(g.matDrinH(i, kf(i + 1)));
        for (int i = 1; i <= n; ++i) acc = acc * g.matDrinH(i, kf(i));
        acc = acc * g.matDrinH(n + 1);
        checks.push_back(mvEq(g, "z drinfeld even", z, acc));
        return checks;
      }));
}

void addDrinfeld(std::vector<RelationSpec>& out) {
  out.push_back(spec(
      "drinfeld.boundary",
      "entry-level h_i, e_j, f_j refine the block decomposition D_a, E_a, F_a", "drinfeld",
      anyComp, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        const int n = c.N / 2;
        using MV = typename std::decay_t<decltype(g)>::MV;
        auto blockOf = [&](int i) {
          int a = 1;
          while (c.offset(a) + c.part(a) < i) ++a;
          return a;
        };
        std::map<int, RefinedDiag<MV>> refs;
        auto refOf = [&](int a) -> const RefinedDiag<MV>& {
          auto it = refs.find(a);
          if (it == refs.end())
            it = refs.emplace(a, refine_diag(g.matD(a), g.vOne())).first;
          return it->second;
        };
        for (int i = 1; i <= n + 1; ++i) {
          const int a = blockOf(i);
          const int r = i - c.offset(a);
          checks.push_back(mvEq(g, "h" + std::to_string(i), g.matDrinH(i),
                                refOf(a).h[static_cast<std::size_t>(r - 1)]));
        }
        for (int j = 1; j <= n; ++j) {
          const int a = blockOf(j);
          if (j == c.offset(a) + c.part(a)) {
            checks.push_back(mvEq(g, "e" + std::to_string(j), g.matDrinE(j),
                                  g.matE(a, a + 1).at(c.part(a) - 1, 0)));
            checks.push_back(mvEq(g, "f" + std::to_string(j), g.matDrinF(j),
                                  g.matF(a + 1, a).at(0, c.part(a) - 1)));
          } else {
            const int r = j - c.offset(a);
            checks.push_back(mvEq(g, "e" + std::to_string(j), g.matDrinE(j),
                                  refOf(a).plus.at(r - 1, r)));
            checks.push_back(mvEq(g, "f" + std::to_string(j), g.matDrinF(j),
                                  refOf(a).minus.at(r, r - 1)));
          }
        }
        return checks;
      }));
}

}  // namespace relimpl
}  // namespace yx
