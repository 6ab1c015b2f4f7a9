#pragma once

#include <memory>
#include <string>
#include <vector>

#include "saitoforge/matrix.hpp"
#include "saitoforge/mpoly.hpp"

namespace sf {

struct GroupSpec {
  // Monomial groups G(m,p,n) have st == 0; exceptional groups carry their
  // Shephard-Todd number.
  int m = 0;
  int p = 0;
  int n = 0;
  int st = 0;

  std::string name() const;
  bool monomial() const { return st == 0; }
};

// Accepts "G(m,p,n)" and "G4" ... "G37" (spaces ignored).
GroupSpec parse_group_spec(const std::string& text);

struct GroupData {
  std::string name;
  GroupSpec spec;
  int rank = 0;
  std::vector<int> degrees;  // descending
  std::vector<Matrix<CycNum>> generators;
  std::vector<std::string> generator_names;
  Ring u_ring;  // coordinates of V
  Ring x_ring;  // basic invariants, weighted by the degrees
  std::vector<MPoly> invariants;  // x^alpha(u)
  // Discriminant rescaled to be monic in x^1 whenever its leading
  // coefficient in x^1 is a constant; otherwise the tabulated form.
  MPoly discriminant_u;
  MPoly discriminant_x;
  // Tabulated closed form, equal to table_scale times the stored one.
  MPoly table_discriminant_u;
  MPoly table_discriminant_x;
  CycNum table_scale;
  int max_deg_multiplicity = 1;
  // Position of e_n(u)^(m/p) among the invariants (monomial groups), else -1.
  int sigma_n_index = -1;

  int x1_degree_of_discriminant() const { return discriminant_x.degree_in(0); }
  bool discriminant_monic_in_x1() const;
  // All degrees exceed one and the discriminant is monic of degree n in x^1.
  bool is_duality_group() const;
};

GroupData build_group(const GroupSpec& spec);
GroupData build_group(const std::string& name);

using GroupPtr = std::shared_ptr<const GroupData>;
GroupPtr make_group(const std::string& name);

// Names of every group in the built-in catalog that the constructions
// below are exercised on.
std::vector<std::string> catalog_duality_rank2();
std::vector<std::string> catalog_rank3();

// (g p)(u) = p(g u), with u a column vector.
MPoly act(const Matrix<CycNum>& g, const MPoly& p);

struct InvarianceWitness {
  bool invariant = true;
  int generator = -1;
  MPoly difference;
};
InvarianceWitness verify_invariance(const MPoly& p, const GroupData& g);

// Writes p, a polynomial in some ring, as a polynomial in `basis` (given in
// the same ring) over the ring `target` whose weights are the basis degrees.
// Throws NotInvariant when p is not in the span of the basis monomials.
class BasisReducer {
 public:
  BasisReducer(std::vector<MPoly> basis, Ring target);
  MPoly reduce(const MPoly& p);

 private:
  MPoly reduce_homogeneous(const MPoly& p);
  const MPoly& power(std::size_t i, int k);

  std::vector<MPoly> basis_;
  Ring target_;
  std::vector<std::vector<MPoly>> powers_;
};

MPoly invariant_reduce(const MPoly& p, const GroupData& g);

// Abelian quotient G/K acting on V through coset representatives.
struct CharacterTable {
  std::vector<Matrix<CycNum>> elements;
  // characters[s][k]: value of the s-th character on elements[k].
  std::vector<std::vector<CycNum>> characters;
};

// y = (1/|Q|) sum_g chi(g)^(-1) g(z). Throws ZeroProjection for y = 0.
MPoly semi_invariant_project(const MPoly& z, const CharacterTable& q,
                             std::size_t chi);

// Coset representatives of G/K, identified through their action on the
// invariants of K.
std::vector<Matrix<CycNum>> quotient_elements(const GroupData& g,
                                              const GroupData& k);

struct SemiInvariantBasis {
  std::vector<MPoly> invariants;  // adjusted invariants of K
  CharacterTable quotient;        // one character per invariant
};
SemiInvariantBasis semi_invariant_basis(const GroupData& g, const GroupData& k);

}  // namespace sf
