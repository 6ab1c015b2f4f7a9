#pragma once

#include <string>
#include <vector>

#include "saitoforge/duality.hpp"
#include "saitoforge/groups.hpp"
#include "saitoforge/saito.hpp"

namespace sf {

// Branched covering M_K -> M_G of orbit spaces, x^a = images[a](y), where
// y are the basic invariants of the embedded copy s^-1 K s of K, that is
// the catalog invariants of K composed with s.
struct CoveringMap {
  GroupPtr source;  // K
  GroupPtr target;  // G
  std::vector<MPoly> images;  // in source->x_ring
  Matrix<CycNum> conjugator;  // s; empty for the identity
  std::vector<CycNum> e;      // unit line printed for this row
  std::string label;          // e.g. "(x',y') -> (x',(y')^2)"

  // Invariants of the embedded copy of K, as polynomials on V.
  std::vector<MPoly> source_invariants() const;
};

// Identity covering of G onto itself.
CoveringMap identity_covering(const GroupPtr& g);

// Covering G(m,m,n) -> G(m,p,n) with x^n = (y^n)^(m/p) and the other
// invariants shared. Throws UnsupportedGroup unless p divides m, 1 < p < m.
CoveringMap monomial_covering(int m, int p, int n);

// The printed covering rows for G(kp,p,2), G(2k,2,2), G7, G11, G15, G19.
// Throws UnsupportedGroup for other groups.
std::vector<CoveringMap> covering_rows(const std::string& group);

// Row-independent pieces of a covering: the Jacobian data and the branch
// divisor b(x) with b(x(y)) = c (y^j)^k, or b = 1 when unramified.
struct CoveringGeometry {
  Matrix<MPoly> jacobian;  // d x^a / d y^i
  MPoly branch;            // in target->x_ring
  int branch_var = -1;     // j, or -1
  int branch_power = 1;    // k
};
CoveringGeometry covering_geometry(const CoveringMap& pi);

// Writes a polynomial in y as a polynomial in x along pi.
// Throws NotEquivariant when it is not a pullback.
MPoly descend(const MPoly& f, const CoveringMap& pi);

enum class PoleKind { Polynomial, Logarithmic, Worse };
std::string pole_kind_name(PoleKind k);

struct PoleEntry {
  int alpha = 0, beta = 0, gamma = 0;  // (Gamma^pi)^gamma_{alpha beta}
  PoleKind kind = PoleKind::Polynomial;
  MPoly numerator;  // b Gamma^pi entry as a polynomial in x, when it exists
};

struct PoleReport {
  MPoly divisor;  // b(x)
  std::vector<PoleEntry> entries;  // every entry with a nonzero value
  bool only_logarithmic() const;
  std::vector<const PoleEntry*> logarithmic() const;
};

struct Pushforward {
  SaitoData induced;  // on the target orbit space, Gamma with denominator b
  PoleReport poles;
  bool multiplication_polynomial = true;
};

// Pushes a Saito structure on M_K forward along pi. C_pi must descend to
// polynomials and b Gamma_pi to polynomials; otherwise the entry is
// reported as Worse. Throws NotEquivariant when an entry is not G/K
// invariant.
Pushforward pushforward(const SaitoData& s, const CoveringMap& pi);

struct CoveringCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CoveringRowReport {
  std::string group;
  std::string source;
  std::string label;
  std::vector<CycNum> e;
  std::vector<CoveringCheck> checks;
  Pushforward push;
  bool ok() const;
  const CoveringCheck* first_failure() const;
};

// Runs every check on one covering row: invariants pull back, the natural
// connection of K pushes forward to that of G, the multiplication is
// polynomial, the only poles are logarithmic along the branch divisor, the
// pushed unit lies on the printed line, the induced structure satisfies the
// Saito axioms and its dual is the natural almost Saito structure of G.
CoveringRowReport verify_covering_row(const CoveringMap& pi);

// All printed rows for G. Throws TableMismatch on the first failing check.
std::vector<CoveringRowReport> verify_covering_table(const std::string& group);

// Projective line [a : b] of unit fields, last nonzero coordinate 1.
struct ELine {
  std::vector<CycNum> coords;
  friend bool operator==(const ELine& x, const ELine& y) { return x.coords == y.coords; }
  std::string to_string() const;
};

struct LineSearch {
  std::vector<ELine> lines;
  // Binary forms in (a, b) whose common zeros are the lines, and the
  // largest degree met.
  std::size_t forms = 0;
  int max_degree = 0;
  int gcd_degree = 0;
};

// Lines of unit fields of degree -d_1 that make a natural almost Saito
// structure with the natural connection. Multiplicity one is settled by
// the direct test. Multiplicity two solves the residual system in formal
// parameters a, b. Throws RegularityFailure if a returned line is not
// regular and UnsupportedGroup for higher multiplicity.
LineSearch find_natural_e_lines(const GroupPtr& g);

// Basic invariants of K whose top degree members are G-invariant.
// Throws AssumptionViolated unless d_1 is simple for K or G/K is abelian,
// and unless the top degrees of K and G agree.
std::vector<MPoly> adjusted_invariants(const GroupData& g, const GroupData& k);

}  // namespace sf
