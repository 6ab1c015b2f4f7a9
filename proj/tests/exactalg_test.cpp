#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "random_exact.hpp"
#include "saitoforge/errors.hpp"
#include "saitoforge/linsolve.hpp"
#include "saitoforge/matrix.hpp"
#include "saitoforge/mpoly.hpp"
#include "saitoforge/ratfn.hpp"

using namespace sf;
using oracle::random_cyc;
using oracle::random_poly;

namespace {

Ring uv() { return make_ring({"u", "v"}, {1, 1}); }

}  // namespace

TEST(CycNum, ImaginaryUnitSquaresToMinusOne) {
  EXPECT_EQ(CycNum::zeta(4) * CycNum::zeta(4), CycNum(-1));
}

TEST(CycNum, SquareRootOfMinusThree) {
  CycNum s = CycNum::zeta(3) - CycNum::zeta(3, 2);
  EXPECT_EQ(s * s, CycNum(-3));
  EXPECT_EQ(s, CycNum::i_sqrt3());
}

TEST(CycNum, GaussSumSquaresToFive) {
  CycNum s = CycNum::zeta(5) - CycNum::zeta(5, 2) - CycNum::zeta(5, 3) +
             CycNum::zeta(5, 4);
  EXPECT_EQ(s * s, CycNum(5));
  EXPECT_NEAR(oracle::value(s).real(), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(oracle::value(s).imag(), 0.0, 1e-12);
}

TEST(CycNum, NamedConstantsMatchNumericValues) {
  EXPECT_NEAR(std::abs(oracle::value(CycNum::sqrt2()) - std::sqrt(2.0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(oracle::value(CycNum::sqrt3()) - std::sqrt(3.0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(oracle::value(CycNum::golden()) - (1 + std::sqrt(5.0)) / 2), 0, 1e-12);
  EXPECT_EQ(CycNum::golden() * CycNum::golden(), CycNum::golden() + CycNum(1));
  EXPECT_EQ(CycNum::sqrt2() * CycNum::sqrt2(), CycNum(2));
}

TEST(CycNum, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_poly(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(5), (std::vector<long>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(8), (std::vector<long>{1, 0, 0, 0, 1}));
  EXPECT_EQ(euler_phi(40), 16);
}

TEST(CycNum, RationalsStayAtOrderOne) {
  CycNum a = CycNum::zeta(12, 3) * CycNum::zeta(12, 3);
  EXPECT_EQ(a.order(), 1);
  EXPECT_EQ(a, CycNum(-1));
}

TEST(CycNum, InverseOfZeroThrows) {
  EXPECT_THROW(CycNum().inv(), DivisionByZero);
}

TEST(CycNum, PrintsExactRationals) {
  EXPECT_EQ(CycNum(1, 6).to_string(), "1/6");
  EXPECT_EQ(CycNum(-4).to_string(), "-4");
}

TEST(CycNumProperty, RingLawsOnRandomTriples) {
  std::mt19937 rng(20240611);
  for (int k = 0; k < 1000; ++k) {
    CycNum a = random_cyc(rng);
    CycNum b = random_cyc(rng);
    CycNum c = random_cyc(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) - b, a);
    if (!a.is_zero()) ASSERT_EQ(a * a.inv(), CycNum(1));
    auto diff = oracle::value(a * b + c) - (oracle::value(a) * oracle::value(b) + oracle::value(c));
    ASSERT_LT(std::abs(diff), 1e-8);
  }
}

TEST(CycNumProperty, PromotionCommutesWithArithmetic) {
  std::mt19937 rng(7);
  for (int k = 0; k < 1000; ++k) {
    CycNum a = random_cyc(rng);
    CycNum b = random_cyc(rng);
    int big = 120;
    if (big % a.order() != 0 || big % b.order() != 0) big = 240;
    if (big % a.order() != 0 || big % b.order() != 0) continue;
    ASSERT_EQ((a * b).promoted(big), a.promoted(big) * b.promoted(big));
    ASSERT_EQ((a + b).promoted(big), a.promoted(big) + b.promoted(big));
  }
}

TEST(MPoly, DifferenceOfSquaresDivides) {
  Ring r = make_ring({"x", "y"}, {1, 1});
  MPoly x = MPoly::var(r, 0);
  MPoly y = MPoly::var(r, 1);
  EXPECT_EQ(exact_div(x * x - y * y, x - y), x + y);
}

TEST(MPoly, IndivisibleMonomialThrows) {
  Ring r = make_ring({"x", "y"}, {1, 1});
  EXPECT_THROW(exact_div(MPoly::var(r, 0), MPoly::var(r, 1)), NotDivisible);
}

TEST(MPoly, WeightedDegreeAndPrinting) {
  Ring r = make_ring({"x", "y"}, {3, 2});
  MPoly x = MPoly::var(r, 0);
  MPoly y = MPoly::var(r, 1);
  MPoly d = x * x - CycNum(4) * y.pow(3);
  EXPECT_EQ(d.weighted_degree(), 6);
  EXPECT_TRUE(d.is_homogeneous());
  EXPECT_EQ(d.to_string(), "x^2 - 4*y^3");
  EXPECT_EQ(d.diff(1).to_string(), "-12*y^2");
}

TEST(MPoly, RingMismatchIsRejected) {
  MPoly a = MPoly::var(make_ring({"x"}, {1}), 0);
  MPoly b = MPoly::var(make_ring({"y"}, {1}), 0);
  EXPECT_THROW(a + b, RingMismatch);
}

TEST(MPoly, SubstituteComposes) {
  Ring x = make_ring({"x", "y"}, {3, 2});
  Ring u = uv();
  MPoly U = MPoly::var(u, 0);
  MPoly V = MPoly::var(u, 1);
  MPoly delta = MPoly::var(x, 0).pow(2) - CycNum(4) * MPoly::var(x, 1).pow(3);
  MPoly pulled = delta.substitute({U.pow(3) + V.pow(3), U * V});
  EXPECT_EQ(pulled, (U.pow(3) - V.pow(3)).pow(2));
}

TEST(MPolyProperty, RingLawsOnRandomTriples) {
  std::mt19937 rng(99);
  Ring r = make_ring({"x", "y", "z"}, {2, 3, 1});
  for (int k = 0; k < 1000; ++k) {
    MPoly a = random_poly(rng, r, 3, 3);
    MPoly b = random_poly(rng, r, 3, 3);
    MPoly c = random_poly(rng, r, 2, 2);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a - b) + b, a);
  }
}

TEST(MPolyProperty, ExactDivisionRecoversFactor) {
  std::mt19937 rng(31337);
  Ring r = make_ring({"x", "y"}, {1, 2});
  for (int k = 0; k < 1000; ++k) {
    MPoly a = random_poly(rng, r, 4, 4);
    MPoly b = random_poly(rng, r, 3, 3);
    if (b.is_zero()) continue;
    ASSERT_EQ(exact_div(a * b, b), a);
  }
}

TEST(MPolyProperty, AgreesWithNumericEvaluation) {
  std::mt19937 rng(5);
  Ring r = make_ring({"x", "y"}, {1, 1});
  std::vector<oracle::cplx> pt = {{0.3, -0.2}, {-0.7, 0.4}};
  for (int k = 0; k < 200; ++k) {
    MPoly a = random_poly(rng, r, 4, 3);
    MPoly b = random_poly(rng, r, 4, 3);
    auto lhs = oracle::value(a * b + a, pt);
    auto rhs = oracle::value(a, pt) * oracle::value(b, pt) + oracle::value(a, pt);
    ASSERT_LT(std::abs(lhs - rhs), 1e-8);
  }
}

TEST(RatFn, CrossMultiplicationEquality) {
  Ring r = make_ring({"x", "y"}, {1, 1});
  MPoly x = MPoly::var(r, 0);
  MPoly y = MPoly::var(r, 1);
  RatFn a(x * y, x * x);
  RatFn b(y, x);
  EXPECT_EQ(a, b);
  EXPECT_TRUE((a - b).is_zero());
  RatFn c = RatFn(MPoly(r, CycNum(1)), x - y) + RatFn(MPoly(r, CycNum(1)), x + y);
  EXPECT_EQ(c, RatFn(CycNum(2) * x, x * x - y * y));
  EXPECT_EQ((c * RatFn(x * x - y * y)).to_poly(), CycNum(2) * x);
}

TEST(RatFn, QuotientRule) {
  Ring r = make_ring({"x"}, {1});
  MPoly x = MPoly::var(r, 0);
  RatFn f(MPoly(r, CycNum(1)), x);
  EXPECT_EQ(f.diff(0), RatFn(MPoly(r, CycNum(-1)), x * x));
}

TEST(LinSolve, IdentitySystem) {
  Matrix<CycNum> a = Matrix<CycNum>::identity(3, CycNum());
  std::vector<CycNum> b = {CycNum(1), CycNum(2, 3), CycNum::zeta(5)};
  auto sol = linsolve(a, b);
  EXPECT_TRUE(sol.unique());
  EXPECT_EQ(sol.particular, b);
}

TEST(LinSolve, OneByOne) {
  Matrix<CycNum> a(1, 1, CycNum(2));
  auto sol = linsolve(a, {CycNum(1)});
  EXPECT_EQ(sol.particular[0], CycNum(1, 2));
}

TEST(LinSolve, InconsistentSystemThrows) {
  Matrix<CycNum> a(2, 1, CycNum(1));
  EXPECT_THROW(linsolve(a, {CycNum(1), CycNum(2)}), Inconsistent);
}

TEST(LinSolve, UnderdeterminedReportsKernel) {
  Matrix<CycNum> a(1, 2, CycNum(1));
  auto sol = linsolve(a, {CycNum(3)});
  ASSERT_EQ(sol.nullspace.size(), 1u);
  EXPECT_EQ(sol.particular[0] + sol.particular[1], CycNum(3));
  EXPECT_EQ(sol.nullspace[0][0] + sol.nullspace[0][1], CycNum());
}

TEST(LinSolve, DiscriminantInBasicInvariants) {
  // Oracle: expand x^2 = (u^3+v^3)^2, y^3 = (uv)^3 and (u^3-v^3)^2 with the
  // dictionary polynomials, then match the u^6 and u^3v^3 coefficients.
  using oracle::Bi;
  Bi x = {{{3, 0}, 1}, {{0, 3}, 1}};
  Bi y = {{{1, 1}, 1}};
  Bi target = oracle::bi_pow(Bi{{{3, 0}, 1}, {{0, 3}, -1}}, 2);
  Bi x2 = oracle::bi_pow(x, 2);
  Bi y3 = oracle::bi_pow(y, 3);
  std::vector<std::pair<int, int>> monos;
  for (const auto* p : {&x2, &y3, &target}) {
    for (const auto& kv : *p) monos.push_back(kv.first);
  }
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  Matrix<CycNum> a(static_cast<int>(monos.size()), 2, CycNum());
  std::vector<CycNum> b;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    auto get = [&](const Bi& p) {
      auto it = p.find(monos[i]);
      return it == p.end() ? CycNum() : CycNum(it->second);
    };
    a(static_cast<int>(i), 0) = get(x2);
    a(static_cast<int>(i), 1) = get(y3);
    b.push_back(get(target));
  }
  auto sol = linsolve(a, b);
  EXPECT_TRUE(sol.unique());
  EXPECT_EQ(sol.particular[0], CycNum(1));
  EXPECT_EQ(sol.particular[1], CycNum(-4));
}

TEST(Matrix, AdjugateOfIdentity) {
  auto i2 = Matrix<CycNum>::identity(2, CycNum());
  EXPECT_EQ(adjugate(i2), i2);
  EXPECT_EQ(det(i2), CycNum(1));
}

TEST(Matrix, DiagonalAdjugate) {
  Ring r = make_ring({"a", "b"}, {1, 1});
  MPoly a = MPoly::var(r, 0);
  MPoly b = MPoly::var(r, 1);
  auto d = Matrix<MPoly>::diagonal({a, b});
  EXPECT_EQ(adjugate(d), Matrix<MPoly>::diagonal({b, a}));
  EXPECT_EQ(det(d), a * b);
}

TEST(Matrix, JacobianDeterminantOfTypeA) {
  Ring r = uv();
  MPoly u = MPoly::var(r, 0);
  MPoly v = MPoly::var(r, 1);
  Matrix<MPoly> j(2, 2, MPoly(r));
  j(0, 0) = CycNum(3) * u * u;
  j(0, 1) = CycNum(3) * v * v;
  j(1, 0) = v;
  j(1, 1) = u;
  // By hand: 3u^2*u - 3v^2*v.
  EXPECT_EQ(det(j), CycNum(3) * (u.pow(3) - v.pow(3)));
  EXPECT_EQ(adjugate(j) * j, det(j) * Matrix<MPoly>::identity(2, u));
}

TEST(MatrixProperty, AdjugateTimesMatrixIsDeterminant) {
  std::mt19937 rng(11);
  Ring r = make_ring({"x", "y"}, {1, 1});
  for (int k = 0; k < 60; ++k) {
    int n = 2 + static_cast<int>(rng() % 2);
    Matrix<MPoly> a(n, n, MPoly(r));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = random_poly(rng, r, 2, 2);
    }
    ASSERT_EQ(adjugate(a) * a, det(a) * Matrix<MPoly>::identity(n, MPoly(r)));
  }
}
