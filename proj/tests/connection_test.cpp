#include <gtest/gtest.h>

#include "oracle.hpp"
#include "saitoforge/connection.hpp"
#include "saitoforge/errors.hpp"

using namespace sf;

namespace {

using oracle::cplx;

// Omega^gamma_{alpha beta} at a point of V from floating Jacobian inversion.
std::vector<std::vector<std::vector<cplx>>> numeric_omega(const GroupData& g,
                                                          const std::vector<cplx>& u) {
  int n = g.rank;
  std::vector<std::vector<cplx>> j(n, std::vector<cplx>(n));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) j[c][i] = oracle::value(g.invariants[c].diff(i), u);
  }
  // Gauss-Jordan inverse.
  std::vector<std::vector<cplx>> a = j, inv(n, std::vector<cplx>(n));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    cplx p = a[col][col];
    for (int k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      cplx f = a[r][col];
      for (int k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  std::vector<std::vector<std::vector<cplx>>> om(n, std::vector<std::vector<cplx>>(n, std::vector<cplx>(n)));
  for (int c = 0; c < n; ++c) {
    for (int al = 0; al < n; ++al) {
      for (int be = 0; be < n; ++be) {
        cplx s = 0;
        for (int i = 0; i < n; ++i) {
          for (int k = 0; k < n; ++k) {
            s += inv[i][al] * inv[k][be] * oracle::value(g.invariants[c].diff(i).diff(k), u);
          }
        }
        om[c][al][be] = -s;
      }
    }
  }
  return om;
}

void expect_matches_numeric(const OmegaFamily& om) {
  const GroupData& g = *om.group;
  std::vector<cplx> u = {{0.41, -0.23}, {-0.37, 0.52}, {0.19, 0.33}};
  u.resize(static_cast<std::size_t>(g.rank));
  auto num = numeric_omega(g, u);
  std::vector<cplx> x;
  for (const auto& inv : g.invariants) x.push_back(oracle::value(inv, u));
  cplx d = oracle::value(om.delta, x);
  for (int a = 0; a < g.rank; ++a) {
    for (int c = 0; c < g.rank; ++c) {
      for (int b = 0; b < g.rank; ++b) {
        cplx exact = oracle::value(om.P[a](c, b), x) / d;
        double scale = std::max(1.0, std::abs(num[c][a][b]));
        EXPECT_LT(std::abs(exact - num[c][a][b]), 1e-7 * scale) << g.name << " " << a << c << b;
      }
    }
  }
}

}  // namespace

TEST(Connection, G332Matrices) {
  auto g = make_group("G(3,3,2)");
  OmegaFamily om = natural_connection(g);
  MPoly x = MPoly::var(g->x_ring, 0), y = MPoly::var(g->x_ring, 1);
  EXPECT_EQ(om.delta, x.pow(2) - CycNum(4) * y.pow(3));
  Matrix<MPoly> px(2, 2, MPoly(g->x_ring));
  px(0, 0) = CycNum(-2, 3) * x;
  px(0, 1) = CycNum(4) * y.pow(2);
  px(1, 0) = CycNum(2, 9) * y;
  px(1, 1) = CycNum(-1, 3) * x;
  Matrix<MPoly> py(2, 2, MPoly(g->x_ring));
  py(0, 0) = CycNum(4) * y.pow(2);
  py(0, 1) = CycNum(-6) * x * y;
  py(1, 0) = CycNum(-1, 3) * x;
  py(1, 1) = CycNum(2) * y.pow(2);
  EXPECT_EQ(om.P[0], px);
  EXPECT_EQ(om.P[1], py);
  expect_matches_numeric(om);
}

TEST(Connection, G332APReport) {
  auto g = make_group("G(3,3,2)");
  OmegaFamily om = natural_connection(g);
  APReport rep = check_AP(om);
  EXPECT_TRUE(rep.ok());
  // Delta det Omega_1 = det(P_1) / Delta.
  MPoly q = exact_div(det(om.P[0]), om.delta);
  EXPECT_EQ(q, MPoly(g->x_ring, CycNum(2, 9)));
}

TEST(Connection, G4DeltaDetOmega1) {
  auto g = make_group("G4");
  OmegaFamily om = natural_connection(g);
  EXPECT_EQ(exact_div(det(om.P[0]), om.delta), MPoly(g->x_ring, CycNum(5, 12)));
  EXPECT_TRUE(check_AP(om).ok());
  expect_matches_numeric(om);
}

// Flatness, the Euler identity, symmetry and the degree bookkeeping are
// checked inside natural_connection; here they are re-asserted per group
// together with a floating-point comparison against direct inversion.
TEST(Connection, CatalogIdentities) {
  std::vector<std::string> names = catalog_duality_rank2();
  for (const char* s : {"G7", "G11", "G12", "G13", "G15", "G19", "G22", "G(4,2,2)", "G(6,3,2)"}) {
    names.push_back(s);
  }
  for (const auto& r3 : catalog_rank3()) names.push_back(r3);
  for (const auto& name : names) {
    SCOPED_TRACE(name);
    auto g = make_group(name);
    OmegaFamily om = natural_connection(g);
    int n = om.rank();
    EXPECT_TRUE(euler_residual(om).is_zero());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        EXPECT_TRUE(curvature_numerator(om, a, b).is_zero());
        for (int c = 0; c < n; ++c) EXPECT_EQ(om.P[a](c, b), om.P[b](c, a));
      }
    }
    expect_matches_numeric(om);
  }
}

TEST(Connection, APForDualityGroups) {
  for (const auto& name : catalog_duality_rank2()) {
    SCOPED_TRACE(name);
    auto g = make_group(name);
    OmegaFamily om = natural_connection(g);
    APReport rep = check_AP(om);
    EXPECT_TRUE(rep.ok());
    // Delta det Omega_1 = prod (1 - d_gamma) / d_1.
    CycNum want(1);
    for (int d : g->degrees) want *= CycNum(1 - d, g->degrees[0]);
    EXPECT_EQ(exact_div(det(om.P[0]), om.delta), MPoly(g->x_ring, want));
  }
}

TEST(Connection, CurvatureDetectsTamperedEntry) {
  auto g = make_group("G(3,3,2)");
  OmegaFamily om = natural_connection(g);
  om.P[1](0, 0) += MPoly::var(g->x_ring, 1).pow(2);
  EXPECT_FALSE(curvature_numerator(om, 0, 1).is_zero() && euler_residual(om).is_zero());
}
