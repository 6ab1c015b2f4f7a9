#pragma once

#include <string>
#include <vector>

#include "saitoforge/connection.hpp"
#include "saitoforge/groups.hpp"
#include "saitoforge/matrix.hpp"

namespace sf {

// Saito structure (nabla, *, E) with unit e in a coordinate frame.
// Gamma[a](g, b) = Gamma^g_{ab}, C[a](g, b) = C^g_{ab}.
struct SaitoData {
  std::string group;
  Ring ring;                 // frame coordinates
  std::vector<int> degrees;  // weights of the frame coordinates
  std::vector<Matrix<RatFn>> Gamma;
  std::vector<Matrix<RatFn>> C;
  std::vector<RatFn> E;  // Euler field
  std::vector<RatFn> e;  // unit
  // Frame coordinates as polynomials on V; empty when unknown.
  std::vector<MPoly> frame_u;

  int rank() const { return static_cast<int>(C.size()); }
  // Index alpha with e = d/dx^alpha, or -1.
  int unit_index() const;
};

// Almost Saito structure (Omega, star, e) with unit E and parameter r.
struct AlmostSaitoData {
  std::string group;
  Ring ring;
  std::vector<int> degrees;
  std::vector<Matrix<RatFn>> Omega;
  std::vector<Matrix<RatFn>> B;
  std::vector<RatFn> e;
  std::vector<RatFn> E;
  CycNum r;
  std::vector<MPoly> frame_u;

  int rank() const { return static_cast<int>(B.size()); }
};

struct Residual {
  std::string name;
  RatFn value;  // first nonzero entry, zero when the family vanishes
  bool zero() const { return value.is_zero(); }
};

struct ResidualReport {
  std::vector<Residual> items;
  bool ok() const;
  // First nonzero family, or nullptr.
  const Residual* first_failure() const;
  const Residual* find(const std::string& name) const;
};

// Every matrix identity of a Saito structure: commutativity, associativity,
// unit, torsion, flatness, SS1, SS2 (simplified and full), SS3, SS4
// (simplified and full).
ResidualReport check_ss(const SaitoData& s);
// The almost Saito analogues, plus ASS3 and the unit identity for E.
ResidualReport check_ass(const AlmostSaitoData& a);

// Leading x^1 coefficients of Delta Omega:
// Delta Omega_a = (x^1)^n Gamma_a + (x^1)^(n-1) D_a + ...
struct ExpansionData {
  GroupPtr group;
  MPoly delta;
  std::vector<Matrix<MPoly>> Gamma;
  std::vector<Matrix<MPoly>> D;
  MPoly a;  // coefficient of (x^1)^(n-1) in Delta
};

// Throws AssumptionViolated unless every degree exceeds one, deg Delta =
// n d_1 and Delta is monic of degree n in x^1. Verifies the triangularity of
// Gamma, Gamma_1 = 0, the closed form of D_1 and det D_1.
ExpansionData extract_expansion(const OmegaFamily& om);

// C_a = D_1^-1 (D_a - a Gamma_a), e = d/dx^1, E = E_deg / d_1, checked
// against every axiom. Throws PropertyViolation on a nonzero residual.
SaitoData build_natural_saito(const ExpansionData& ex);
SaitoData natural_saito(const GroupPtr& g);

// U = E . C, the matrix of E *.
Matrix<RatFn> euler_multiplication(const SaitoData& s);

// Jacobian K(a, m) = d t^a / d x^m of new coordinates t(x).
Matrix<MPoly> coordinate_jacobian(const std::vector<MPoly>& t);

// Components of s in the frame d/dt^a of new coordinates t (polynomials in
// s.ring), still written as functions of the old coordinates.
SaitoData frame_components(const SaitoData& s, const std::vector<MPoly>& t);
AlmostSaitoData frame_components(const AlmostSaitoData& a, const std::vector<MPoly>& t);

// Rewrites s in coordinates t (polynomials in s.ring) with inverse x(t)
// given as polynomials in `target`, whose weights become the degrees.
SaitoData change_frame(const SaitoData& s, const std::vector<MPoly>& t,
                       const std::vector<MPoly>& x_of_t, const Ring& target);
AlmostSaitoData change_frame(const AlmostSaitoData& a, const std::vector<MPoly>& t,
                             const std::vector<MPoly>& x_of_t, const Ring& target);

struct FlatCoordinates {
  Matrix<MPoly> X;             // unit upper triangular, d X + Gamma X = 0
  std::vector<MPoly> t;        // t^a(x)
  std::vector<MPoly> x_of_t;   // inverse substitution, in `t_ring`
  Ring t_ring;
};

// Throws NonIntegrable when no polynomial solution exists.
FlatCoordinates flat_coordinates(const SaitoData& s);
// Natural structure in its flat frame, with Christoffel symbols checked to
// vanish.
SaitoData to_flat_frame(const SaitoData& s, const FlatCoordinates& f);

// Omega^X_a = U^-1 C_a ((1/d_1 + 1) I - diag(d) / d_1), for a structure
// in a flat frame with E = E_deg / d_1. Checks the gauge relation with the
// dual connection and throws PropertyViolation if it fails.
std::vector<Matrix<RatFn>> okubo_system(const SaitoData& s);

// Column b holds the u-components of the lift of X_b = E * d_b to V.
// Requires frame_u. Throws NotDivisible if a lift is not polynomial.
Matrix<MPoly> basic_derivations(const SaitoData& s);

// Residual of the u-frame structure constant identity
// sum J^a_i J^b_j B^g_ab = d_1 / (d_g - 1) Hess(t^g)_ij, for a natural
// structure in a flat frame with frame_u set.
ResidualReport check_standard_biflat(const SaitoData& s);

}  // namespace sf
