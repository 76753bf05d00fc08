// Catalog entries for the parabolic presentation over even symmetric
// compositions (M = 2m, type C): the middle relations carry Q_mm alongside
// P and the shifted parameter kappa_m.

#include "relations_impl.hpp"

namespace yx {
namespace relimpl {

namespace {

std::string ia(int a) { return "(a=" + std::to_string(a) + ")"; }
std::string iab(int a, int b) {
  return "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
}

}  // namespace

void addEven(std::vector<RelationSpec>& out) {
  out.push_back(spec(
      "even.DD", "(u-v)[D_a(u), D_a(v)] = P_aa (D(u)D(v) - D(v)D(u)), off-diagonal zero",
      "even", evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        auto dada = [&](int a) {
          V lhs = g.mulLin(comm(g.D(2, 0, 0, a), g.D(2, 1, 1, a)), 0, 1, Rat(0));
          V rhs = g.P(2, 0, 1, a, a) *
                  (g.D(2, 0, 0, a) * g.D(2, 1, 1, a) - g.D(2, 0, 1, a) * g.D(2, 1, 0, a));
          checks.push_back(eqc(g, "DaDa" + ia(a), lhs, rhs));
        };
        for (int a = 1; a <= m + 1; ++a)
          for (int b = 1; b <= m; ++b) {
            if (a == b) {
              dada(a);
              continue;
            }
            if (a == m + 1 && b == m) continue;  // own catalog entry
            checks.push_back(
                zc(g, "DDzero" + iab(a, b), comm(g.D(2, 0, 0, a), g.D(2, 1, 1, b))));
          }
        dada(m + 1);
        return checks;
      }));

  out.push_back(spec(
      "even.DmDm1", "(u-v-kappa_m)[D_m(u), D_{m+1}(v)] = -(Q_mm X - Y Q_mm)", "even", evenM,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        const Rat km = g.comp().kappaA(m);
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        V lhs = g.mulLin(comm(g.D(2, 0, 0, m), g.D(2, 1, 1, m + 1)), 0, 1, km);
        V Q = g.Q(2, 0, 1, m, m);
        V rhs = g.scale(Q * g.D(2, 0, 0, m) * g.D(2, 1, 1, m + 1) -
                            g.D(2, 1, 1, m + 1) * g.D(2, 0, 0, m) * Q,
                        Rat(-1));
        checks.push_back(eqc(g, "DmDm1", lhs, rhs));
        return checks;
      }));

  out.push_back(spec(
      "even.DzeroEF", "[D_r(u), E_a(v)] = [D_r(u), F_a(v)] = 0 away from the band", "even",
      evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        for (int r = 1; r <= m + 1; ++r)
          for (int a = 1; a <= m; ++a) {
            if (r == a || r == a + 1) continue;
            if (r == m + 1 && a == m - 1) continue;  // own catalog entry
            checks.push_back(zc(g, "DEzero" + iab(r, a),
                                comm(g.D(2, 0, 0, r), g.E(2, 1, 1, a, a + 1))));
            checks.push_back(zc(g, "DFzero" + iab(r, a),
                                comm(g.D(2, 0, 0, r), g.F(2, 1, 1, a + 1, a))));
          }
        return checks;
      }));

  out.push_back(spec(
      "even.DaEa", "(u-v)[D_a(u), E_a(v)] = D_a (E(v)-E(u)) (P_{a+1,a} + delta_am Q_mm)",
      "even", evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m; ++a) {
          V K = g.P(2, 0, 1, a + 1, a);
          if (a == m) K += g.Q(2, 0, 1, m, m);
          V lhs = g.mulLin(comm(g.D(2, 0, 0, a), g.E(2, 1, 1, a, a + 1)), 0, 1, Rat(0));
          V rhs = g.D(2, 0, 0, a) * (g.E(2, 0, 1, a, a + 1) - g.E(2, 0, 0, a, a + 1)) * K;
          checks.push_back(eqc(g, "DaEa" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec(
      "even.Da1Ea", "(u-v)[D_{a+1}(u), E_a(v)] = D_{a+1} (P_{a+1,a} + delta Q) (E(u)-E(v))",
      "even", evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m; ++a) {
          V K = g.P(2, 0, 1, a + 1, a);
          if (a == m) K += g.Q(2, 0, 1, m, m);
          V lhs = g.mulLin(comm(g.D(2, 0, 0, a + 1), g.E(2, 1, 1, a, a + 1)), 0, 1, Rat(0));
          V rhs = g.D(2, 0, 0, a + 1) * K * (g.E(2, 0, 0, a, a + 1) - g.E(2, 0, 1, a, a + 1));
          checks.push_back(eqc(g, "Da1Ea" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec(
      "even.Dm1Em1",
      "(u-v+kappa_m)[D_{m+1}(u), E_{m-1}(v)] = D_{m+1} (E(v)-E(u+kappa_m)) Q_mm", "even",
      [](const Composition& c) { return c.M % 2 == 0 && c.M >= 4; },
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        const Rat km = g.comp().kappaA(m);
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        V lhs = g.mulLin(comm(g.D(2, 0, 0, m + 1), g.E(2, 1, 1, m - 1, m)), 0, 1, -km);
        V rhs = g.D(2, 0, 0, m + 1) *
                (g.E(2, 1, 1, m - 1, m) - g.E(2, 1, 0, m - 1, m, km)) * g.Q(2, 0, 1, m, m);
        checks.push_back(eqc(g, "Dm1Em1", lhs, rhs));
        V lhsF = g.mulLin(comm(g.D(2, 0, 0, m + 1), g.F(2, 1, 1, m, m - 1)), 0, 1, -km);
        V rhsF = g.Q(2, 0, 1, m, m) *
                 (g.F(2, 1, 0, m, m - 1, km) - g.F(2, 1, 1, m, m - 1)) * g.D(2, 0, 0, m + 1);
        checks.push_back(eqc(g, "Dm1Fm1", lhsF, rhsF));
        return checks;
      }));

  out.push_back(spec(
      "even.DaFa", "(u-v)[D_a(u), F_a(v)] = (P_{a,a+1} + delta Q) (F(u)-F(v)) D_a", "even",
      evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m; ++a) {
          V K = g.P(2, 0, 1, a, a + 1);
          if (a == m) K += g.Q(2, 0, 1, m, m);
          V lhs = g.mulLin(comm(g.D(2, 0, 0, a), g.F(2, 1, 1, a + 1, a)), 0, 1, Rat(0));
          V rhs = K * (g.F(2, 0, 0, a + 1, a) - g.F(2, 0, 1, a + 1, a)) * g.D(2, 0, 0, a);
          checks.push_back(eqc(g, "DaFa" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec(
      "even.Da1Fa", "(u-v)[D_{a+1}(u), F_a(v)] = (F(v)-F(u)) (P_{a,a+1} + delta Q) D_{a+1}",
      "even", evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m; ++a) {
          V K = g.P(2, 0, 1, a, a + 1);
          if (a == m) K += g.Q(2, 0, 1, m, m);
          V lhs = g.mulLin(comm(g.D(2, 0, 0, a + 1), g.F(2, 1, 1, a + 1, a)), 0, 1, Rat(0));
          V rhs = (g.F(2, 0, 1, a + 1, a) - g.F(2, 0, 0, a + 1, a)) * K * g.D(2, 0, 0, a + 1);
          checks.push_back(eqc(g, "Da1Fa" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec(
      "even.EF",
      "(u-v)[E_a(u), F_b(v)] = delta_ab (Dtil_a K D_{a+1} - D_{a+1} K Dtil_a), K = P + delta Q",
      "even", evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m; ++a)
          for (int b = 1; b <= m; ++b) {
            V lhs =
                g.mulLin(comm(g.E(2, 0, 0, a, a + 1), g.F(2, 1, 1, b + 1, b)), 0, 1, Rat(0));
            V rhs;
            if (a == b) {
              V K = g.P(2, 0, 1, a, a + 1);
              if (a == m) K += g.Q(2, 0, 1, m, m);
              rhs = g.Dtil(2, 0, 0, a) * K * g.D(2, 0, 0, a + 1) -
                    g.D(2, 1, 1, a + 1) * K * g.Dtil(2, 1, 1, a);
            }
            checks.push_back(eqc(g, "EF" + iab(a, b), lhs, rhs));
          }
        return checks;
      }));

  out.push_back(spec("even.EEFF.far", "[E_a(u), E_b(v)] = 0 = [F_a(u), F_b(v)], |a-b|>2",
                     "even", evenM, [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       const int m = g.comp().M / 2;
                       for (int a = 1; a <= m; ++a)
                         for (int b = 1; b <= m; ++b) {
                           if (a - b <= 2 && b - a <= 2) continue;
                           checks.push_back(zc(
                               g, "EEfar" + iab(a, b),
                               comm(g.E(2, 0, 0, a, a + 1), g.E(2, 1, 1, b, b + 1))));
                           checks.push_back(zc(
                               g, "FFfar" + iab(a, b),
                               comm(g.F(2, 0, 0, a + 1, a), g.F(2, 1, 1, b + 1, b))));
                         }
                       return checks;
                     }));

  out.push_back(spec(
      "even.EaEa",
      "(u-v)[E_a(u), E_a(v)] = (E(u)-E(v)) (P_{a+1,a} + delta Q) (E(u)-E(v)), leg-1 diffs",
      "even", evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m; ++a) {
          V K = g.P(2, 0, 1, a + 1, a);
          if (a == m) K += g.Q(2, 0, 1, m, m);
          V diff = g.E(2, 0, 0, a, a + 1) - g.E(2, 0, 1, a, a + 1);
          V lhs = g.mulLin(comm(g.E(2, 0, 0, a, a + 1), g.E(2, 1, 1, a, a + 1)), 0, 1, Rat(0));
          checks.push_back(eqc(g, "EaEa" + ia(a), lhs, diff * K * diff));
        }
        return checks;
      }));

  out.push_back(spec(
      "even.EEadj",
      "u[Ering_{a-1}(u), E_a(v)] - v[E_{a-1}(u), Ering_a(v)] = E_{a-1}(u) E_a(v) (P + delta Q)",
      "even", evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 2; a <= m; ++a) {
          V K = g.P(2, 0, 1, a + 1, a);
          if (a == m) K += g.Q(2, 0, 1, m, m);
          V lhs = g.mulLin(comm(g.E(2, 0, 0, a - 1, a, Rat(0), true), g.E(2, 1, 1, a, a + 1)),
                           0, -1, Rat(0)) -
                  g.mulLin(comm(g.E(2, 0, 0, a - 1, a), g.E(2, 1, 1, a, a + 1, Rat(0), true)),
                           1, -1, Rat(0));
          V rhs = g.E(2, 0, 0, a - 1, a) * g.E(2, 0, 1, a, a + 1) * K;
          checks.push_back(eqc(g, "EEadj" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec(
      "even.FaFa",
      "(u-v)[F_a(u), F_a(v)] = -(F(u)-F(v)) (P_{a,a+1} + delta Q) (F(u)-F(v))", "even", evenM,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m; ++a) {
          V K = g.P(2, 0, 1, a, a + 1);
          if (a == m) K += g.Q(2, 0, 1, m, m);
          V diff = g.F(2, 0, 0, a + 1, a) - g.F(2, 0, 1, a + 1, a);
          V lhs = g.mulLin(comm(g.F(2, 0, 0, a + 1, a), g.F(2, 1, 1, a + 1, a)), 0, 1, Rat(0));
          checks.push_back(eqc(g, "FaFa" + ia(a), lhs, g.scale(diff * K * diff, Rat(-1))));
        }
        return checks;
      }));

  out.push_back(spec(
      "even.FFadj",
      "u[Fring_{a-1}(u), F_a(v)] - v[F_{a-1}(u), Fring_a(v)] = -(P + delta Q) F_a(v) F_{a-1}(u)",
      "even", evenM, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 2; a <= m; ++a) {
          V K = g.P(2, 0, 1, a, a + 1);
          if (a == m) K += g.Q(2, 0, 1, m, m);
          V lhs = g.mulLin(comm(g.F(2, 0, 0, a, a - 1, Rat(0), true), g.F(2, 1, 1, a + 1, a)),
                           0, -1, Rat(0)) -
                  g.mulLin(comm(g.F(2, 0, 0, a, a - 1), g.F(2, 1, 1, a + 1, a, Rat(0), true)),
                           1, -1, Rat(0));
          V rhs = g.scale(K * g.F(2, 0, 1, a + 1, a) * g.F(2, 0, 0, a, a - 1), Rat(-1));
          checks.push_back(eqc(g, "FFadj" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec("even.serreE", "sum over S_p of nested [E_a, ..., E_b] = 0, |a-b| = 1",
                     "even", evenM, [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       const int m = g.comp().M / 2;
                       for (int a = 1; a <= m; ++a)
                         for (int b = 1; b <= m; ++b)
                           if (a - b == 1 || b - a == 1)
                             serreChecks(g, a, b, (a == m - 1 && b == m) ? 3 : 2, true,
                                         checks);
                       return checks;
                     }));

  out.push_back(spec("even.serreF", "sum over S_p of nested [F_a, ..., F_b] = 0, |a-b| = 1",
                     "even", evenM, [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       const int m = g.comp().M / 2;
                       for (int a = 1; a <= m; ++a)
                         for (int b = 1; b <= m; ++b)
                           if (a - b == 1 || b - a == 1)
                             serreChecks(g, a, b, (a == m - 1 && b == m) ? 3 : 2, false,
                                         checks);
                       return checks;
                     }));
}

}  // namespace relimpl
}  // namespace yx
