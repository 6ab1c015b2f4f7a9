#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "saitoforge/cycnum.hpp"

namespace sf {

constexpr int kMaxVars = 8;

struct RingInfo {
  std::vector<std::string> names;
  std::vector<int> weights;
};
using Ring = std::shared_ptr<const RingInfo>;

// Weights may be zero for formal parameters; degrees of coordinates are
// positive.
Ring make_ring(std::vector<std::string> names, std::vector<int> weights);
bool same_ring(const Ring& a, const Ring& b);
// Every exponent vector of the given weighted degree; weights must be
// positive.
std::vector<std::vector<int>> weighted_exponents(const std::vector<int>& weights, int deg);

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0;
    for (auto v : m.e) h = h * 131u + v;
    return h;
  }
};

struct Term {
  Monomial m;
  int wdeg = 0;
  CycNum c;
};

// Sparse polynomial, terms kept in descending weighted graded-lex order.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(Ring r) : ring_(std::move(r)) {}
  MPoly(Ring r, const CycNum& c);

  static MPoly var(const Ring& r, int i);
  static MPoly monomial(const Ring& r, const std::vector<int>& exps,
                        const CycNum& c);
  static MPoly from_terms(const Ring& r, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  int nvars() const { return ring_ ? static_cast<int>(ring_->names.size()) : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; throws NotPolynomial otherwise.
  CycNum constant() const;
  CycNum constant_term() const;
  const Term& lead() const { return terms_.front(); }
  CycNum lead_coeff() const;

  int weighted_degree() const;
  int weighted_low_degree() const;
  bool is_homogeneous() const;
  int degree_in(int var) const;
  // Coefficient of var^k, as a polynomial in the remaining variables.
  MPoly coeff_in(int var, int k) const;
  // Collect by the variables flagged in `outer`: each distinct exponent
  // pattern on those variables maps to its coefficient polynomial.
  std::vector<std::pair<Monomial, MPoly>> collect(
      const std::vector<bool>& outer) const;

  MPoly diff(int var) const;
  MPoly pow(unsigned k) const;
  MPoly scaled(const CycNum& c) const;
  MPoly map_coeffs(const std::function<CycNum(const CycNum&)>& f) const;
  // Replace every variable by a polynomial in a common target ring.
  MPoly substitute(const std::vector<MPoly>& images) const;
  // Rename into another ring: variable i goes to target variable map[i].
  MPoly embed(const Ring& target, const std::vector<int>& map) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly operator-() const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const CycNum& c) { return a.scaled(c); }
  friend MPoly operator*(const CycNum& c, const MPoly& a) { return a.scaled(c); }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  static Ring pick_ring(const Ring& a, const Ring& b);

  Ring ring_;
  std::vector<Term> terms_;
};

bool term_greater(const Term& a, const Term& b);

// Quotient of an exact division; throws NotDivisible otherwise.
MPoly exact_div(const MPoly& num, const MPoly& den);
// Same test without throwing.
bool try_exact_div(const MPoly& num, const MPoly& den, MPoly* quotient);

}  // namespace sf
