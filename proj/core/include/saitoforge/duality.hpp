#pragma once

#include <string>
#include <vector>

#include "saitoforge/connection.hpp"
#include "saitoforge/saito.hpp"

namespace sf {

// Almost Saito structure on the twisted domain: B_a = C_a (E.C - lambda I)^-1,
// Omega_a = Gamma_a + (r I - W - E.Gamma) B_a, unit E - lambda e.
// Throws SingularTwist when det(E.C - lambda I) vanishes identically.
AlmostSaitoData dual_almost(const SaitoData& s, const CycNum& lambda, const CycNum& r);

// Saito structure with C_a = B_a P^-1, P = e.B, Gamma_a = Omega_a - R C_a,
// R = Q + e.Omega, Euler field the unit of A and unit e.
// Throws SingularP when det P vanishes identically.
SaitoData dual_saito(const AlmostSaitoData& a);

// R = Q + e.Omega, the matrix of X -> nabla_X e.
Matrix<RatFn> regularity_matrix(const std::vector<Matrix<RatFn>>& omega,
                                const std::vector<RatFn>& e, const Ring& ring);

// The unique multiplication of a regular pair (Omega, e):
// B_a = -R^-1 (d_a R + [Omega_a, R]). Throws NotRegular when det R = 0.
std::vector<Matrix<RatFn>> regular_mult(const std::vector<Matrix<RatFn>>& omega,
                                        const std::vector<RatFn>& e, const Ring& ring);

// Two-parameter family: star_lambda = (I - lambda e.B)^-1 B_a,
// Omega' = Omega + nu B^lambda + lambda R B^lambda, unit E - lambda e and
// parameter r + nu. Throws SingularTwist.
AlmostSaitoData family_shift(const AlmostSaitoData& a, const CycNum& lambda, const CycNum& nu);

enum class Verdict { Natural, FailsASS1, FailsASS2, NotRegular };
std::string verdict_name(Verdict v);

// Polynomial form of the natural almost Saito test. With Omega_a = P_a / Delta
// and P_e = sum e^m P_m, the multiplication is B_a = X_a / D where
// D = Delta det P_e and X_a = -adj(P_e) (Delta d_a P_e - d_a Delta P_e + [P_a, P_e]).
// ASS1 and ASS2 are reported through their numerators after clearing
// Delta D^2 and D^2.
struct NaturalResiduals {
  Ring ring;  // x coordinates, then any formal parameters of e
  MPoly delta;
  MPoly det_pe;
  MPoly D;
  std::vector<Matrix<MPoly>> X;
  std::vector<Matrix<MPoly>> ass1;  // one per pair a < b
  std::vector<Matrix<MPoly>> ass2;  // one per a
};

// e holds constant components of degree -d_1 (nonzero only where
// d_a = d_1), as polynomials in `ring` free of the x variables. `ring` must
// start with the x coordinates of the group.
NaturalResiduals natural_residuals(const OmegaFamily& om, const std::vector<MPoly>& e,
                                   const Ring& ring);

struct NaturalTest {
  Verdict verdict = Verdict::NotRegular;
  // First nonzero residual numerator of the failing axiom, zero otherwise.
  MPoly witness;
  std::string witness_name;
  std::vector<Residual> residuals;  // one entry per ASS1 pair and ASS2 index
  // The natural almost Saito structure (E = E_deg / d_1, r = 1/d_1) when
  // the pair is regular.
  AlmostSaitoData structure;
};

// Throws std::invalid_argument unless e is nonzero with support on the
// coordinates of degree d_1.
NaturalTest natural_ass_test(const OmegaFamily& om, const std::vector<CycNum>& e);

}  // namespace sf
