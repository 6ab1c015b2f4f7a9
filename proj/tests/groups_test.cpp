#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "saitoforge/errors.hpp"
#include "saitoforge/groups.hpp"

using namespace sf;

namespace {

MPoly jacobian_det(const GroupData& g) {
  Matrix<MPoly> j(g.rank, g.rank, MPoly(g.u_ring));
  for (int a = 0; a < g.rank; ++a) {
    for (int i = 0; i < g.rank; ++i) j(a, i) = g.invariants[static_cast<std::size_t>(a)].diff(i);
  }
  return det(j);
}

std::vector<std::string> all_rank2_names() {
  std::vector<std::string> out;
  for (int st = 4; st <= 22; ++st) out.push_back("G" + std::to_string(st));
  for (const char* s : {"G(2,1,2)", "G(3,1,2)", "G(4,1,2)", "G(3,3,2)", "G(4,4,2)",
                        "G(4,2,2)", "G(6,2,2)", "G(6,3,2)", "G(8,4,2)", "G(9,3,2)"}) {
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Groups, ParseNames) {
  auto a = parse_group_spec("G(3, 1, 2)");
  EXPECT_EQ(a.m, 3);
  EXPECT_EQ(a.p, 1);
  EXPECT_EQ(a.n, 2);
  EXPECT_EQ(a.name(), "G(3,1,2)");
  auto b = parse_group_spec("G16");
  EXPECT_EQ(b.st, 16);
  EXPECT_FALSE(b.monomial());
  EXPECT_THROW(parse_group_spec("H(1,2)"), UnsupportedGroup);
  EXPECT_THROW(parse_group_spec("G(3,1)"), UnsupportedGroup);
  EXPECT_THROW(parse_group_spec("G"), UnsupportedGroup);
}

TEST(Groups, RejectsReducibleAndUntabulated) {
  EXPECT_THROW(build_group("G(2,2,2)"), ReducibleGroup);
  EXPECT_THROW(build_group("G(1,1,3)"), ReducibleGroup);
  EXPECT_THROW(build_group("G23"), UnsupportedGroup);
  EXPECT_THROW(build_group("G37"), UnsupportedGroup);
  EXPECT_THROW(build_group("G3"), UnsupportedGroup);
  EXPECT_THROW(build_group("G(3,2,2)"), UnsupportedGroup);
  EXPECT_THROW(build_group("G(2,1,4)"), UnsupportedGroup);
}

TEST(Groups, MonomialG312) {
  GroupData g = build_group("G(3,1,2)");
  EXPECT_EQ(g.degrees, (std::vector<int>{6, 3}));
  MPoly u = MPoly::var(g.u_ring, 0), v = MPoly::var(g.u_ring, 1);
  EXPECT_EQ(g.invariants[0], u.pow(3) * v.pow(3));
  EXPECT_EQ(g.invariants[1], u.pow(3) + v.pow(3));
  EXPECT_EQ(g.sigma_n_index, 0);
  // Delta = (u^3 - v^3)^2 u^3 v^3 = x (y^2 - 4 x), monic after rescaling.
  MPoly x = MPoly::var(g.x_ring, 0), y = MPoly::var(g.x_ring, 1);
  EXPECT_EQ(g.table_discriminant_x, x * y.pow(2) - CycNum(4) * x.pow(2));
  EXPECT_EQ(g.table_scale, CycNum(-4));
  EXPECT_TRUE(g.is_duality_group());
}

TEST(Groups, G332Discriminant) {
  GroupData g = build_group("G(3,3,2)");
  EXPECT_EQ(g.degrees, (std::vector<int>{3, 2}));
  MPoly u = MPoly::var(g.u_ring, 0), v = MPoly::var(g.u_ring, 1);
  MPoly x = MPoly::var(g.x_ring, 0), y = MPoly::var(g.x_ring, 1);
  EXPECT_EQ(invariant_reduce((u.pow(3) - v.pow(3)).pow(2), g), x.pow(2) - CycNum(4) * y.pow(3));
  EXPECT_EQ(g.sigma_n_index, 1);
  EXPECT_TRUE(verify_invariance(u.pow(3) + v.pow(3), g).invariant);
  auto w = verify_invariance(u.pow(3) - v.pow(3), g);
  ASSERT_FALSE(w.invariant);
  EXPECT_EQ(w.difference, CycNum(-2) * (u.pow(3) - v.pow(3)));
  EXPECT_THROW(invariant_reduce(u.pow(3) - v.pow(3), g), NotInvariant);
}

TEST(Groups, G4Discriminant) {
  GroupData g = build_group("G4");
  EXPECT_EQ(g.degrees, (std::vector<int>{6, 4}));
  MPoly x = MPoly::var(g.x_ring, 0), y = MPoly::var(g.x_ring, 1);
  EXPECT_EQ(g.table_discriminant_x, y.pow(3) - CycNum(12) * CycNum::i_sqrt3() * x.pow(2));
  EXPECT_TRUE(g.is_duality_group());
  EXPECT_TRUE(g.discriminant_monic_in_x1());
}

TEST(Groups, G13RelationAmongOctahedralForms) {
  GroupData g = build_group("G13");
  MPoly u = MPoly::var(g.u_ring, 0), v = MPoly::var(g.u_ring, 1);
  MPoly hO = u.pow(8) + CycNum(14) * u.pow(4) * v.pow(4) + v.pow(8);
  MPoly tO = u.pow(12) - CycNum(33) * u.pow(8) * v.pow(4) - CycNum(33) * u.pow(4) * v.pow(8) + v.pow(12);
  MPoly x = MPoly::var(g.x_ring, 0);
  EXPECT_EQ(invariant_reduce(hO.pow(3) - tO.pow(2), g), CycNum(108) * x.pow(2));
}

TEST(Groups, IcosahedralIdentity) {
  GroupData g16 = build_group("G16");
  GroupData g20 = build_group("G20");
  const MPoly& tI = g16.invariants[0];
  const MPoly& hI = g16.invariants[1];
  const MPoly& fI = g20.invariants[1];
  EXPECT_EQ(fI.pow(5), hI.pow(3) + CycNum(60) * CycNum::sqrt5() * tI.pow(2));
  EXPECT_EQ(hI.lead().m.e[0], 20);
  EXPECT_TRUE(hI.lead().c.is_one());
  EXPECT_EQ(tI.lead().m.e[0], 29);
  EXPECT_EQ(tI.lead().m.e[1], 1);
  EXPECT_TRUE(tI.lead().c.is_one());
  // Numerical cross-check of the identity at a generic point.
  std::vector<oracle::cplx> pt = {{0.31, -0.2}, {-0.55, 0.4}};
  auto lhs = std::pow(oracle::value(fI, pt), 5);
  auto rhs = std::pow(oracle::value(hI, pt), 3) + 60.0 * std::sqrt(5.0) * std::pow(oracle::value(tI, pt), 2);
  EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9 * std::abs(lhs));
}

TEST(Groups, GeneratorsAreFiniteOrderReflections) {
  for (const auto& name : all_rank2_names()) {
    GroupData g = build_group(name);
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      const auto& m = g.generators[k];
      // A reflection fixes a line: det(m - I) = 0 and m != I.
      Matrix<CycNum> shifted = m - Matrix<CycNum>::identity(g.rank, CycNum());
      EXPECT_TRUE(det(shifted).is_zero()) << name << " " << g.generator_names[k];
      EXPECT_FALSE(shifted.is_zero()) << name;
    }
  }
}

// Every tabulated group: the invariants are invariant (checked on build),
// the Jacobian determinant is nonzero, Delta pulls back exactly and the
// duality flag agrees with the classification of rank two duality groups.
TEST(Groups, CatalogProperties) {
  std::set<std::string> duality;
  for (const auto& n : catalog_duality_rank2()) duality.insert(n);
  for (const auto& name : all_rank2_names()) {
    GroupData g = build_group(name);
    SCOPED_TRACE(name);
    EXPECT_FALSE(jacobian_det(g).is_zero());
    EXPECT_EQ(g.discriminant_x.substitute(g.invariants), g.discriminant_u);
    EXPECT_EQ(g.table_discriminant_u, g.table_scale * g.discriminant_u);
    EXPECT_TRUE(g.discriminant_x.is_homogeneous());
    EXPECT_EQ(g.discriminant_x.weighted_degree(), g.discriminant_u.weighted_degree());
    bool expect_duality = duality.count(name) > 0;
    EXPECT_EQ(g.is_duality_group(), expect_duality);
    EXPECT_GE(g.degrees[0], g.degrees[1]);
  }
}

TEST(Groups, RankThree) {
  for (const auto& name : catalog_rank3()) {
    GroupData g = build_group(name);
    SCOPED_TRACE(name);
    EXPECT_EQ(g.rank, 3);
    EXPECT_FALSE(jacobian_det(g).is_zero());
    EXPECT_TRUE(g.is_duality_group());
    EXPECT_EQ(g.discriminant_x.substitute(g.invariants), g.discriminant_u);
  }
  GroupData g = build_group("G(3,3,3)");
  EXPECT_EQ(g.degrees, (std::vector<int>{6, 3, 3}));
  EXPECT_EQ(g.max_deg_multiplicity, 1);
  EXPECT_EQ(g.sigma_n_index, 2);
}

TEST(Groups, DegreeProductIsGroupOrderForMonomial) {
  // |G(m,p,n)| = m^n n! / p equals the product of the degrees.
  for (const auto& name : {"G(3,1,2)", "G(4,2,2)", "G(6,3,2)", "G(2,1,3)", "G(3,3,3)"}) {
    GroupData g = build_group(name);
    long prod = 1;
    for (int d : g.degrees) prod *= d;
    long m = g.spec.m, n = g.spec.n, p = g.spec.p;
    long fact = n == 2 ? 2 : 6;
    long order = fact;
    for (int k = 0; k < n; ++k) order *= m;
    order /= p;
    EXPECT_EQ(prod, order) << name;
  }
}

TEST(Groups, SemiInvariantBasis) {
  GroupData g = build_group("G(4,1,2)");
  GroupData k = build_group("G(4,2,2)");
  auto q = quotient_elements(g, k);
  EXPECT_EQ(q.size(), 2u);
  SemiInvariantBasis b = semi_invariant_basis(g, k);
  ASSERT_EQ(b.invariants.size(), 2u);
  for (std::size_t a = 0; a < b.invariants.size(); ++a) {
    for (std::size_t e = 0; e < b.quotient.elements.size(); ++e) {
      EXPECT_EQ(act(b.quotient.elements[e], b.invariants[a]),
                b.quotient.characters[a][e] * b.invariants[a]);
    }
  }
}

TEST(Groups, SemiInvariantProjectionVanishes) {
  GroupData g = build_group("G(3,3,2)");
  CharacterTable q;
  q.elements = {Matrix<CycNum>::identity(2, CycNum()), g.generators.back()};
  q.characters = {{CycNum(1), CycNum(-1)}};
  MPoly u = MPoly::var(g.u_ring, 0), v = MPoly::var(g.u_ring, 1);
  EXPECT_THROW(semi_invariant_project(u.pow(3) + v.pow(3), q, 0), ZeroProjection);
  EXPECT_EQ(semi_invariant_project(u.pow(3), q, 0), CycNum(1, 2) * (u.pow(3) - v.pow(3)));
}
