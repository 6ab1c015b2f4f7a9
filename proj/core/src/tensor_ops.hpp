#pragma once

#include <vector>

#include "saitoforge/matrix.hpp"

namespace sf::detail {

using MatR = Matrix<RatFn>;

inline RatFn zero_r(const Ring& r) { return RatFn(MPoly(r)); }
inline RatFn const_r(const Ring& r, const CycNum& c) { return RatFn(MPoly(r, c)); }

inline MatR zeros(const Ring& r, int n) { return MatR::zero(n, zero_r(r)); }
inline MatR ident(const Ring& r, int n) { return MatR::identity(n, zero_r(r)); }

// sum_mu v^mu M_mu
inline MatR contract(const std::vector<RatFn>& v, const std::vector<MatR>& ms, const Ring& r) {
  MatR out = zeros(r, static_cast<int>(ms.size()));
  for (std::size_t mu = 0; mu < ms.size(); ++mu) {
    if (!v[mu].is_zero()) out += v[mu] * ms[mu];
  }
  return out;
}

// J(mu, a) = d_a v^mu
inline MatR field_jacobian(const std::vector<RatFn>& v, const Ring& r) {
  int n = static_cast<int>(v.size());
  MatR out = zeros(r, n);
  for (int mu = 0; mu < n; ++mu) {
    for (int a = 0; a < n; ++a) out(mu, a) = v[static_cast<std::size_t>(mu)].diff(a);
  }
  return out;
}

// v(M) = sum_mu v^mu d_mu M
inline MatR directional(const std::vector<RatFn>& v, const MatR& m, const Ring& r) {
  MatR out = zeros(r, m.rows());
  for (std::size_t mu = 0; mu < v.size(); ++mu) {
    if (!v[mu].is_zero()) out += v[mu] * diff(m, static_cast<int>(mu));
  }
  return out;
}

// sum_mu W(mu, a) M_mu
inline MatR column_contract(const MatR& w, int a, const std::vector<MatR>& ms, const Ring& r) {
  MatR out = zeros(r, w.rows());
  for (int mu = 0; mu < w.rows(); ++mu) {
    if (!w(mu, a).is_zero()) out += w(mu, a) * ms[static_cast<std::size_t>(mu)];
  }
  return out;
}

}  // namespace sf::detail
