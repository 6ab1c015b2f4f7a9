#pragma once

#include <string>
#include <vector>

#include "saitoforge/groups.hpp"
#include "saitoforge/matrix.hpp"

namespace sf {

// Natural connection on the orbit space in the frame of the basic
// invariants: Omega_alpha = P_alpha / Delta with P_alpha(gamma, beta) the
// numerator of Omega^gamma_{alpha beta}.
struct OmegaFamily {
  GroupPtr group;
  MPoly delta;  // Delta(x)
  std::vector<Matrix<MPoly>> P;

  int rank() const { return static_cast<int>(P.size()); }
  Matrix<RatFn> omega(int alpha) const;
  std::vector<Matrix<RatFn>> omegas() const;
};

// Builds P_alpha by exact division in u and rewriting in x, then checks
// symmetry, flatness and the Euler identity. Throws FlatnessViolation or
// PropertyViolation when a check fails.
OmegaFamily natural_connection(const GroupPtr& g);

// Delta^2 times the curvature d_a Omega_b - d_b Omega_a + [Omega_a, Omega_b].
Matrix<MPoly> curvature_numerator(const OmegaFamily& om, int a, int b);
// sum_a d_a x^a P_a - Delta diag(1 - d_gamma).
Matrix<MPoly> euler_residual(const OmegaFamily& om);

struct APItem {
  std::string name;
  bool checked = false;  // false when the hypothesis does not apply
  bool passed = true;
  std::string detail;
};

struct APReport {
  std::vector<APItem> items;
  bool ok() const;
};

// Pole-order consequences checked as exact divisions. Throws
// PropertyViolation naming the first failure.
APReport check_AP(const OmegaFamily& om);

// Jacobian J(gamma, i) = d x^gamma / d u^i of the basic invariants.
Matrix<MPoly> invariant_jacobian(const GroupData& g);

}  // namespace sf
