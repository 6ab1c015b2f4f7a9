#include <gtest/gtest.h>

#include <algorithm>

#include "saitoforge/covering.hpp"
#include "saitoforge/errors.hpp"

using namespace sf;

namespace {

ELine line(const CycNum& a, const CycNum& b) { return ELine{{a, b}}; }

// Scales a nonzero vector so its last nonzero entry is 1.
ELine normalized(std::vector<CycNum> v) {
  CycNum s;
  for (const auto& c : v) {
    if (!c.is_zero()) s = c;
  }
  for (auto& c : v) c = c / s;
  return ELine{v};
}

void expect_same_lines(std::vector<ELine> got, std::vector<ELine> want) {
  ASSERT_EQ(got.size(), want.size());
  for (const auto& w : want) {
    EXPECT_NE(std::find(got.begin(), got.end(), w), got.end()) << "missing " << w.to_string();
  }
}

}  // namespace

TEST(Covering, IdentityCoveringKeepsTheStructure) {
  for (const char* name : {"G(3,3,2)", "G4"}) {
    SCOPED_TRACE(name);
    auto g = make_group(name);
    CoveringMap pi = identity_covering(g);
    SaitoData s = natural_saito(g);
    Pushforward p = pushforward(s, pi);
    EXPECT_TRUE(p.multiplication_polynomial);
    EXPECT_TRUE(p.poles.logarithmic().empty());
    EXPECT_TRUE(p.poles.divisor.is_constant());
    for (int k = 0; k < g->rank; ++k) {
      EXPECT_EQ(p.induced.C[k], s.C[k]);
      EXPECT_EQ(p.induced.Gamma[k], s.Gamma[k]);
      EXPECT_EQ(p.induced.E[k], s.E[k]);
      EXPECT_EQ(p.induced.e[k], s.e[k]);
    }
  }
}

TEST(Covering, DescentAlongSquareMap) {
  CoveringMap pi = monomial_covering(4, 2, 2);
  const Ring& yr = pi.source->x_ring;
  const Ring& xr = pi.target->x_ring;
  MPoly y1 = MPoly::var(yr, 0), y2 = MPoly::var(yr, 1);
  MPoly x1 = MPoly::var(xr, 0), x2 = MPoly::var(xr, 1);
  EXPECT_EQ(descend(y2.pow(4) + y1 * y2.pow(2), pi), x2.pow(2) + x1 * x2);
  EXPECT_THROW(descend(y2, pi), NotEquivariant);
  EXPECT_THROW(descend(y1 * y2, pi), NotEquivariant);
  CoveringGeometry geo = covering_geometry(pi);
  EXPECT_EQ(geo.branch, x2);
  EXPECT_EQ(geo.branch_var, 1);
  EXPECT_EQ(geo.branch_power, 2);
}

// For I2(4) the invariants u^4+v^4, uv are flat with Gamma = 0. Under
// x^2 = (y^2)^2 one has d/dx^2 = (1/2y^2) d/dy^2, so the only pole is
// Gamma^2_22 = -1/(2 x^2) and d/dx^2 o d/dx^2 = c/4 d/dx^1 when
// d/dy^2 o d/dy^2 = c (y^2)^2 d/dy^1.
TEST(Covering, SquareMapHasOneLogarithmicPole) {
  CoveringMap pi = monomial_covering(4, 2, 2);
  SaitoData sk = natural_saito(pi.source);
  for (const auto& m : sk.Gamma) EXPECT_EQ(m, Matrix<RatFn>::zero(2, RatFn(MPoly(sk.ring))));
  MPoly y2 = MPoly::var(sk.ring, 1);
  ASSERT_TRUE(sk.C[1](0, 1).is_polynomial());
  MPoly c22 = sk.C[1](0, 1).to_poly();
  ASSERT_EQ(c22.size(), 1u);
  ASSERT_EQ(c22, y2.pow(2).scaled(c22.lead_coeff()));
  CycNum c = c22.lead_coeff();

  Pushforward p = pushforward(sk, pi);
  const Ring& xr = pi.target->x_ring;
  MPoly x2 = MPoly::var(xr, 1);
  EXPECT_TRUE(p.multiplication_polynomial);
  EXPECT_TRUE(p.poles.only_logarithmic());
  auto logs = p.poles.logarithmic();
  ASSERT_EQ(logs.size(), 1u);
  EXPECT_EQ(logs[0]->alpha, 1);
  EXPECT_EQ(logs[0]->beta, 1);
  EXPECT_EQ(logs[0]->gamma, 1);
  EXPECT_EQ(p.induced.Gamma[1](1, 1), RatFn(MPoly(xr, CycNum(-1, 2)), x2));
  EXPECT_EQ(p.induced.C[1](0, 1), RatFn(MPoly(xr, c / CycNum(4))));
  EXPECT_EQ(p.induced.C[1](1, 1), RatFn(MPoly(xr)));
  EXPECT_TRUE(check_ss(p.induced).ok());
}

TEST(Covering, PrintedRowsVerify) {
  for (const char* name : {"G(4,2,2)", "G(6,2,2)", "G(6,3,2)", "G(8,4,2)", "G7", "G11", "G15", "G19"}) {
    SCOPED_TRACE(name);
    std::vector<CoveringRowReport> rows;
    ASSERT_NO_THROW(rows = verify_covering_table(name));
    for (const auto& r : rows) {
      SCOPED_TRACE(r.label);
      EXPECT_TRUE(r.ok());
      EXPECT_FALSE(r.push.poles.logarithmic().empty());
    }
  }
}

// For these rows the only pole of the pushed connection is Gamma^n_nn.
TEST(Covering, MonomialSourceHasOnlyTheCornerPole) {
  for (const char* name : {"G(6,3,2)", "G(8,4,2)", "G(4,2,2)", "G(6,2,2)", "G15"}) {
    SCOPED_TRACE(name);
    CoveringRowReport r = verify_covering_row(covering_rows(name)[0]);
    auto logs = r.push.poles.logarithmic();
    ASSERT_EQ(logs.size(), 1u);
    EXPECT_EQ(logs[0]->alpha, 1);
    EXPECT_EQ(logs[0]->beta, 1);
    EXPECT_EQ(logs[0]->gamma, 1);
    EXPECT_EQ(r.push.poles.divisor, MPoly::var(r.push.induced.ring, 1));
  }
}

TEST(Covering, RowCounts) {
  EXPECT_EQ(covering_rows("G(6,3,2)").size(), 1u);
  EXPECT_EQ(covering_rows("G(8,2,2)").size(), 3u);
  EXPECT_EQ(covering_rows("G7").size(), 3u);
  EXPECT_EQ(covering_rows("G11").size(), 3u);
  EXPECT_EQ(covering_rows("G15").size(), 1u);
  EXPECT_EQ(covering_rows("G19").size(), 3u);
  EXPECT_THROW(covering_rows("G4"), UnsupportedGroup);
  EXPECT_THROW(covering_rows("G(3,1,2)"), UnsupportedGroup);
}

TEST(Covering, WrongUnitLineIsReported) {
  CoveringMap pi = covering_rows("G7")[1];
  pi.e = {CycNum(1), CycNum()};
  CoveringRowReport r = verify_covering_row(pi);
  EXPECT_FALSE(r.ok());
  auto unit = std::find_if(r.checks.begin(), r.checks.end(),
                           [](const CoveringCheck& c) { return c.name == "unit line"; });
  ASSERT_NE(unit, r.checks.end());
  EXPECT_FALSE(unit->passed);

  CoveringMap bad = covering_rows("G7")[1];
  bad.images[0] = bad.images[0] + MPoly::var(bad.source->x_ring, 0);
  CoveringRowReport rb = verify_covering_row(bad);
  ASSERT_NE(rb.first_failure(), nullptr);
  EXPECT_EQ(rb.first_failure()->name, "invariants");
}

TEST(Covering, MonomialCoveringInRankThree) {
  CoveringRowReport r = verify_covering_row(monomial_covering(4, 2, 3));
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(Lines, TwoDimensionalBlocks) {
  CycNum i3 = CycNum::i_sqrt3(), s5 = CycNum::sqrt5();
  struct Case {
    const char* group;
    std::vector<ELine> lines;
  };
  std::vector<Case> cases = {
      {"G7", {line(1, 0), line(0, 1), line(CycNum(12) * i3, 1)}},
      {"G11", {line(1, 0), line(0, 1), line(1, 1)}},
      {"G19", {line(1, 0), line(0, 1), line(CycNum(-60) * s5, 1)}},
      {"G(4,2,2)", {line(1, 0), line(-2, 1), line(2, 1)}},
      {"G(6,2,2)", {line(1, 0), line(-2, 1), line(2, 1)}},
  };
  for (const auto& c : cases) {
    SCOPED_TRACE(c.group);
    LineSearch ls = find_natural_e_lines(make_group(c.group));
    expect_same_lines(ls.lines, c.lines);
  }
}

TEST(Lines, AgreeWithCoveringRows) {
  for (const char* name : {"G(4,2,2)", "G7", "G11", "G19"}) {
    SCOPED_TRACE(name);
    std::vector<ELine> from_rows;
    for (const auto& pi : covering_rows(name)) from_rows.push_back(normalized(pi.e));
    expect_same_lines(find_natural_e_lines(make_group(name)).lines, from_rows);
  }
}

TEST(Lines, DualityGroupsHaveOneLine) {
  for (const auto& name : catalog_duality_rank2()) {
    SCOPED_TRACE(name);
    auto g = make_group(name);
    if (g->degrees[0] == g->degrees[1]) continue;
    LineSearch ls = find_natural_e_lines(g);
    ASSERT_EQ(ls.lines.size(), 1u);
    EXPECT_EQ(ls.lines[0], ELine{{CycNum(1)}});
  }
}

TEST(Lines, NoNaturalLine) {
  for (const char* name : {"G12", "G13", "G22"}) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(find_natural_e_lines(make_group(name)).lines.empty());
  }
}

TEST(Adjusted, TopInvariantIsInvariantUnderG) {
  for (auto [gn, kn] : {std::pair{"G(4,2,2)", "G(4,4,2)"}, std::pair{"G7", "G5"},
                        std::pair{"G7", "G6"}, std::pair{"G11", "G14"}}) {
    SCOPED_TRACE(std::string(gn) + "/" + kn);
    auto g = make_group(gn);
    auto k = make_group(kn);
    std::vector<MPoly> y = adjusted_invariants(*g, *k);
    ASSERT_EQ(static_cast<int>(y.size()), k->rank);
    for (const auto& h : g->generators) EXPECT_EQ(act(h, y[0]), y[0]);
  }
}

TEST(Adjusted, AssumptionsAreChecked) {
  EXPECT_THROW(adjusted_invariants(*make_group("G(4,1,2)"), *make_group("G(4,4,2)")),
               AssumptionViolated);
}
