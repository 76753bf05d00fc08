// Catalog entries for the parabolic embedding (psi_p block RTT, levelwise
// commutation, E/F vs psi cross relations) and the block transpose
// identities.

#include "relations_impl.hpp"

namespace yx {
namespace relimpl {

void addEmbedding(std::vector<RelationSpec>& out) {
  out.push_back(spec("psi.identity", "psi_0(T_ab(u)) = T_ab(u)", "embedding", anyComp,
                     [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       const Composition& c = g.comp();
                       for (int a = 1; a <= c.M; ++a)
                         for (int b = 1; b <= c.M; ++b)
                           checks.push_back(eqc(g,
                                                "psi0(" + std::to_string(a) + "," +
                                                    std::to_string(b) + ")",
                                                g.psiT(1, 0, 0, 0, a, b), g.T(1, 0, 0, a, b)));
                       return checks;
                     }));

  out.push_back(spec("psi.rtt",
                     "psi_p(T) satisfies the block RTT of the sub-composition with kappa_{p+1}",
                     "embedding", atLeastM3, [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       const Composition& c = g.comp();
                       for (int p = 1; 2 * p < c.M; ++p)
                         blockRttChecks(g, c.sub(p), p, c.kappaA(p + 1), true, checks);
                       return checks;
                     }));

  out.push_back(spec(
      "psi.comm", "[psi_q(T_ab(u)), psi_p(T_cd(v))] = 0 for q < p, outer blocks", "embedding",
      atLeastM3, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        for (int p = 1; 2 * p < c.M; ++p)
          for (int q = 0; q < p; ++q)
            for (int a = 1; a <= p - q; ++a)
              for (int b = 1; b <= p - q; ++b)
                for (int x = 1; x <= c.M - 2 * p; ++x)
                  for (int y = 1; y <= c.M - 2 * p; ++y)
                    checks.push_back(
                        zc(g,
                           "psiComm(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                               "," + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(x) + "," + std::to_string(y) + ")",
                           comm(g.psiT(2, 0, 0, q, a, b), g.psiT(2, 1, 1, p, x, y))));
        return checks;
      }));

  out.push_back(spec(
      "eftp.E", "(u-v)[E_pa(u), psi_p(T_bc(v))] = psi_p(T_ba(v)) (E_pc(v)-E_pc(u)) P_ca",
      "embedding", atLeastM3, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        using V = std::decay_t<decltype(g.T(2, 0, 0, 1, 1))>;
        for (int p = 1; 2 * p < c.M; ++p)
          for (int a = p + 1; a <= c.M - p; ++a)
            for (int b = p + 1; b <= c.M - p; ++b)
              for (int x = p + 1; x <= c.M - p; ++x) {
                if (a == c.M + 1 - x) continue;
                V lhs = g.mulLin(
                    comm(g.E(2, 0, 0, p, a), g.psiT(2, 1, 1, p, b - p, x - p)), 0, 1, Rat(0));
                V rhs = g.psiT(2, 1, 1, p, b - p, a - p) *
                        (g.E(2, 0, 1, p, x) - g.E(2, 0, 0, p, x)) * g.P(2, 0, 1, x, a);
                checks.push_back(eqc(g,
                                     "EPsi(p=" + std::to_string(p) + "," + std::to_string(a) +
                                         "," + std::to_string(b) + "," + std::to_string(x) +
                                         ")",
                                     lhs, rhs));
              }
        return checks;
      }));

  out.push_back(spec(
      "eftp.F", "(u-v)[F_ap(u), psi_p(T_cb(v))] = P_ac (F_cp(u)-F_cp(v)) psi_p(T_ab(v))",
      "embedding", atLeastM3, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        using V = std::decay_t<decltype(g.T(2, 0, 0, 1, 1))>;
        for (int p = 1; 2 * p < c.M; ++p)
          for (int a = p + 1; a <= c.M - p; ++a)
            for (int b = p + 1; b <= c.M - p; ++b)
              for (int x = p + 1; x <= c.M - p; ++x) {
                if (a == c.M + 1 - x) continue;
                V lhs = g.mulLin(
                    comm(g.F(2, 0, 0, a, p), g.psiT(2, 1, 1, p, x - p, b - p)), 0, 1, Rat(0));
                V rhs = g.P(2, 0, 1, a, x) * (g.F(2, 0, 0, x, p) - g.F(2, 0, 1, x, p)) *
                        g.psiT(2, 1, 1, p, a - p, b - p);
                checks.push_back(eqc(g,
                                     "FPsi(p=" + std::to_string(p) + "," + std::to_string(a) +
                                         "," + std::to_string(b) + "," + std::to_string(x) +
                                         ")",
                                     lhs, rhs));
              }
        return checks;
      }));
}

void addTranspose(std::vector<RelationSpec>& out) {
  out.push_back(spec(
      "trans.E", "E_{M-a,M+1-a}(u)^t = -E_{a,a+1}(u + kappa_{a+1})", "transpose", atLeastM3,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        for (int a = 1; 2 * a < c.M; ++a) {
          const Rat kA = c.kappaA(a + 1);
          checks.push_back(matEq(
              g, "transE(a=" + std::to_string(a) + ")",
              g.matTranspose(g.matE(c.M - a, c.M + 1 - a), c.M - a, c.M + 1 - a),
              -g.matE(a, a + 1, kA)));
        }
        return checks;
      }));

  out.push_back(spec(
      "trans.F", "F_{M+1-a,M-a}(u)^t = -F_{a+1,a}(u + kappa_{a+1})", "transpose", atLeastM3,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        for (int a = 1; 2 * a < c.M; ++a) {
          const Rat kA = c.kappaA(a + 1);
          checks.push_back(matEq(
              g, "transF(a=" + std::to_string(a) + ")",
              g.matTranspose(g.matF(c.M + 1 - a, c.M - a), c.M + 1 - a, c.M - a),
              -g.matF(a + 1, a, kA)));
        }
        return checks;
      }));
}

}  // namespace relimpl
}  // namespace yx
