#pragma once

// Small independent reference arithmetic used to cross-check the library:
// dense complex floating evaluation and a dictionary based polynomial type
// over rationals. Nothing here touches the library internals.

#include <gmpxx.h>

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "saitoforge/cycnum.hpp"
#include "saitoforge/mpoly.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline cplx zeta(int n, int k = 1) {
  return std::polar(1.0, 2.0 * M_PI * k / n);
}

// Numerical value of a CycNum, summing its power-basis coordinates.
inline cplx value(const sf::CycNum& c) {
  cplx s = 0;
  auto cs = c.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    s += cs[j].get_d() * zeta(c.order(), static_cast<int>(j));
  }
  return s;
}

inline cplx value(const sf::MPoly& p, const std::vector<cplx>& point) {
  cplx s = 0;
  for (const auto& t : p.terms()) {
    cplx m = value(t.c);
    for (std::size_t i = 0; i < point.size(); ++i) {
      m *= std::pow(point[i], static_cast<int>(t.m.e[i]));
    }
    s += m;
  }
  return s;
}

// Bivariate polynomial over Q as exponent pair -> coefficient.
using Bi = std::map<std::pair<int, int>, mpq_class>;

inline Bi bi_mul(const Bi& a, const Bi& b) {
  Bi out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

inline Bi bi_add(const Bi& a, const Bi& b, const mpq_class& s = 1) {
  Bi out = a;
  for (const auto& [e, c] : b) out[e] += s * c;
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

inline Bi bi_pow(const Bi& a, int k) {
  Bi out{{{0, 0}, 1}};
  for (int i = 0; i < k; ++i) out = bi_mul(out, a);
  return out;
}

// Conversion of a rational bivariate MPoly for comparison.
inline Bi from_mpoly(const sf::MPoly& p) {
  Bi out;
  for (const auto& t : p.terms()) out[{t.m.e[0], t.m.e[1]}] = t.c.rational();
  return out;
}

}  // namespace oracle
