// Catalog entries for the type-A part of the block Gauss presentation:
// relations among D_a, E_a, F_a that avoid the middle of the composition,
// valid for every symmetric composition (empty ranges skip).

#include "relations_impl.hpp"

namespace yx {
namespace relimpl {

namespace {

std::string ia(int a) { return "(a=" + std::to_string(a) + ")"; }
std::string ira(int r, int a) {
  return "(r=" + std::to_string(r) + ",a=" + std::to_string(a) + ")";
}
std::string iab(int a, int b) {
  return "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
}

}  // namespace

void addTypeA(std::vector<RelationSpec>& out) {
  out.push_back(spec(
      "typeA.DD", "(u-v)[D_r(u), D_s(v)] = delta_rs P_ss (D(u)D(v) - D(v)D(u))", "typeA",
      anyComp, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int r = 1; r <= m; ++r)
          for (int s = 1; s <= m; ++s) {
            V lhs = g.mulLin(comm(g.D(2, 0, 0, r), g.D(2, 1, 1, s)), 0, 1, Rat(0));
            V rhs;
            if (r == s)
              rhs = g.P(2, 0, 1, s, s) *
                    (g.D(2, 0, 0, s) * g.D(2, 1, 1, s) - g.D(2, 0, 1, s) * g.D(2, 1, 0, s));
            checks.push_back(eqc(g, "DD" + ira(r, s), lhs, rhs));
          }
        return checks;
      }));

  out.push_back(spec(
      "typeA.DE", "(u-v)[D_r(u), E_a(v)] = delta D_a P_aa (E(v)-E(u))", "typeA", anyComp,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int r = 1; r <= m; ++r)
          for (int a = 1; a <= m - 1; ++a) {
            V lhs = g.mulLin(comm(g.D(2, 0, 0, r), g.E(2, 1, 1, a, a + 1)), 0, 1, Rat(0));
            V rhs;
            if (r == a)
              rhs += g.D(2, 0, 0, a) * g.P(2, 0, 1, a, a) *
                     (g.E(2, 1, 1, a, a + 1) - g.E(2, 1, 0, a, a + 1));
            if (r == a + 1)
              rhs -= g.D(2, 0, 0, a + 1) * (g.E(2, 1, 1, a, a + 1) - g.E(2, 1, 0, a, a + 1)) *
                     g.P(2, 0, 1, a + 1, a + 1);
            checks.push_back(eqc(g, "DE" + ira(r, a), lhs, rhs));
          }
        return checks;
      }));

  out.push_back(spec(
      "typeA.DF", "(u-v)[D_r(u), F_a(v)] = delta (F(u)-F(v)) P_aa D_a", "typeA", anyComp,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int r = 1; r <= m; ++r)
          for (int a = 1; a <= m - 1; ++a) {
            V lhs = g.mulLin(comm(g.D(2, 0, 0, r), g.F(2, 1, 1, a + 1, a)), 0, 1, Rat(0));
            V rhs;
            if (r == a)
              rhs += (g.F(2, 1, 0, a + 1, a) - g.F(2, 1, 1, a + 1, a)) * g.P(2, 0, 1, a, a) *
                     g.D(2, 0, 0, a);
            if (r == a + 1)
              rhs -= g.P(2, 0, 1, a + 1, a + 1) *
                     (g.F(2, 1, 0, a + 1, a) - g.F(2, 1, 1, a + 1, a)) * g.D(2, 0, 0, a + 1);
            checks.push_back(eqc(g, "DF" + ira(r, a), lhs, rhs));
          }
        return checks;
      }));

  out.push_back(spec(
      "typeA.EF", "(u-v)[E_a(u), F_b(v)] = delta_ab (Dtil_a P D_{a+1} - D_{a+1} P Dtil_a)",
      "typeA", anyComp, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m - 1; ++a)
          for (int b = 1; b <= m - 1; ++b) {
            V lhs =
                g.mulLin(comm(g.E(2, 0, 0, a, a + 1), g.F(2, 1, 1, b + 1, b)), 0, 1, Rat(0));
            V rhs;
            if (a == b)
              rhs = g.Dtil(2, 0, 0, a) * g.P(2, 0, 1, a, a + 1) * g.D(2, 0, 0, a + 1) -
                    g.D(2, 1, 1, a + 1) * g.P(2, 0, 1, a, a + 1) * g.Dtil(2, 1, 1, a);
            checks.push_back(eqc(g, "EF" + iab(a, b), lhs, rhs));
          }
        return checks;
      }));

  out.push_back(spec("typeA.EEFF.far", "[E_a(u), E_b(v)] = 0 = [F_a(u), F_b(v)], |a-b|>1",
                     "typeA", anyComp, [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       const int m = g.comp().M / 2;
                       for (int a = 1; a <= m - 1; ++a)
                         for (int b = 1; b <= m - 1; ++b) {
                           if (a - b <= 1 && b - a <= 1) continue;
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
      "typeA.EaEa", "(u-v)[E_a(u), E_a(v)] = P_aa (E(u)-E(v))(E(u)-E(v))", "typeA", anyComp,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m - 1; ++a) {
          V lhs = g.mulLin(comm(g.E(2, 0, 0, a, a + 1), g.E(2, 1, 1, a, a + 1)), 0, 1, Rat(0));
          V rhs = g.P(2, 0, 1, a, a) * (g.E(2, 0, 0, a, a + 1) - g.E(2, 0, 1, a, a + 1)) *
                  (g.E(2, 1, 0, a, a + 1) - g.E(2, 1, 1, a, a + 1));
          checks.push_back(eqc(g, "EaEa" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec(
      "typeA.EEadj", "u[Ering_{a-1}(u), E_a(v)] - v[E_{a-1}(u), Ering_a(v)] = E_{a-1} P_aa E_a",
      "typeA", anyComp, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 2; a <= m - 1; ++a) {
          V lhs = g.mulLin(comm(g.E(2, 0, 0, a - 1, a, Rat(0), true), g.E(2, 1, 1, a, a + 1)),
                           0, -1, Rat(0)) -
                  g.mulLin(comm(g.E(2, 0, 0, a - 1, a), g.E(2, 1, 1, a, a + 1, Rat(0), true)),
                           1, -1, Rat(0));
          V rhs = g.E(2, 0, 0, a - 1, a) * g.P(2, 0, 1, a, a) * g.E(2, 1, 1, a, a + 1);
          checks.push_back(eqc(g, "EEadj" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec(
      "typeA.FaFa", "(u-v)[F_a(u), F_a(v)] = -(F(u)-F(v))(F(u)-F(v)) P_aa", "typeA", anyComp,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 1; a <= m - 1; ++a) {
          V lhs = g.mulLin(comm(g.F(2, 0, 0, a + 1, a), g.F(2, 1, 1, a + 1, a)), 0, 1, Rat(0));
          V rhs = g.scale((g.F(2, 1, 0, a + 1, a) - g.F(2, 1, 1, a + 1, a)) *
                              (g.F(2, 0, 0, a + 1, a) - g.F(2, 0, 1, a + 1, a)) *
                              g.P(2, 0, 1, a, a),
                          Rat(-1));
          checks.push_back(eqc(g, "FaFa" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec(
      "typeA.FFadj",
      "u[Fring_{a-1}(u), F_a(v)] - v[F_{a-1}(u), Fring_a(v)] = -F_a P_aa F_{a-1}", "typeA",
      anyComp, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const int m = g.comp().M / 2;
        using V = std::decay_t<decltype(g.D(2, 0, 0, 1))>;
        for (int a = 2; a <= m - 1; ++a) {
          V lhs = g.mulLin(comm(g.F(2, 0, 0, a, a - 1, Rat(0), true), g.F(2, 1, 1, a + 1, a)),
                           0, -1, Rat(0)) -
                  g.mulLin(comm(g.F(2, 0, 0, a, a - 1), g.F(2, 1, 1, a + 1, a, Rat(0), true)),
                           1, -1, Rat(0));
          V rhs = g.scale(
              g.F(2, 1, 1, a + 1, a) * g.P(2, 0, 1, a, a) * g.F(2, 0, 0, a, a - 1), Rat(-1));
          checks.push_back(eqc(g, "FFadj" + ia(a), lhs, rhs));
        }
        return checks;
      }));

  out.push_back(spec("typeA.serreE", "sum over S_2 of [E_a, [E_a, E_b]] = 0, |a-b| = 1",
                     "typeA", anyComp, [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       const int m = g.comp().M / 2;
                       for (int a = 1; a <= m - 1; ++a)
                         for (int b = 1; b <= m - 1; ++b)
                           if (a - b == 1 || b - a == 1) serreChecks(g, a, b, 2, true, checks);
                       return checks;
                     }));

  out.push_back(spec("typeA.serreF", "sum over S_2 of [F_a, [F_a, F_b]] = 0, |a-b| = 1",
                     "typeA", anyComp, [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       const int m = g.comp().M / 2;
                       for (int a = 1; a <= m - 1; ++a)
                         for (int b = 1; b <= m - 1; ++b)
                           if (a - b == 1 || b - a == 1) serreChecks(g, a, b, 2, false, checks);
                       return checks;
                     }));
}

}  // namespace relimpl
}  // namespace yx
