#pragma once

#include <string>
#include <vector>

#include "saitoforge/mpoly.hpp"

namespace sf {

// Quotient num/den of two polynomials in one ring. There is no gcd: common
// factors are cancelled only when one side divides the other exactly, which
// covers the discriminant-power denominators met in practice. The
// denominator is kept with leading coefficient 1.
class RatFn {
 public:
  RatFn() = default;
  RatFn(MPoly p);  // NOLINT(google-explicit-constructor)
  RatFn(MPoly num, MPoly den);
  static RatFn constant(const Ring& r, const CycNum& c);

  const Ring& ring() const { return num_.ring() ? num_.ring() : den_.ring(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // Polynomial value; throws NotPolynomial when the denominator survives.
  MPoly to_poly() const;

  RatFn diff(int var) const;
  RatFn inv() const;
  // Cancel every power of f dividing both numerator and denominator.
  RatFn reduced_by(const MPoly& f) const;
  RatFn substitute(const std::vector<MPoly>& images) const;
  RatFn scaled(const CycNum& c) const;

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);
  RatFn operator-() const;

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend bool operator==(const RatFn& a, const RatFn& b);
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();

  MPoly num_;
  MPoly den_;
};

}  // namespace sf
