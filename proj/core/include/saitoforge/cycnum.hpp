#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sf {

// Exact element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, zeta, ..., zeta^(phi(N)-1) as integer numerators over one positive
// common denominator. Values whose only nonzero coordinate is the constant
// one are kept at order 1.
class CycNum {
 public:
  CycNum();
  CycNum(long v);  // NOLINT(google-explicit-constructor)
  CycNum(const mpq_class& q);  // NOLINT(google-explicit-constructor)
  CycNum(long p, long q);

  static CycNum zeta(int n, long k = 1);
  static CycNum from_coeffs(int order, const std::vector<mpq_class>& coeffs);

  // Named constants.
  static CycNum i();
  static CycNum i_sqrt3();
  static CycNum sqrt2();
  static CycNum sqrt3();
  static CycNum sqrt5();
  static CycNum golden();

  int order() const { return order_; }
  std::vector<mpq_class> coeffs() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return order_ == 1; }
  mpq_class rational() const;

  CycNum promoted(int n) const;
  CycNum inv() const;
  CycNum pow(long k) const;
  // Image under zeta -> zeta^k, k coprime to the order.
  CycNum galois(long k) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  // "3/4" for rationals, otherwise "(c0 + c1*z12 + ...)" with zN = zeta_N.
  std::string to_string() const;

 private:
  CycNum(int order, std::vector<mpz_class> num, mpz_class den);
  void normalize();

  int order_ = 1;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_poly(int n);

}  // namespace sf
