#pragma once

#include <vector>

#include "saitoforge/matrix.hpp"

namespace sf {

struct LinSolution {
  // Solution with every free variable set to zero.
  std::vector<CycNum> particular;
  // Basis of the kernel of A; empty when the solution is unique.
  std::vector<std::vector<CycNum>> nullspace;
  bool unique() const { return nullspace.empty(); }
};

// Exact Gaussian elimination for A v = b, A of any shape. Throws
// Inconsistent when no solution exists.
LinSolution linsolve(const Matrix<CycNum>& a, const std::vector<CycNum>& b);

}  // namespace sf
