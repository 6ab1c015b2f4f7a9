#include "saitoforge/connection.hpp"

#include "saitoforge/errors.hpp"

namespace sf {

Matrix<RatFn> OmegaFamily::omega(int alpha) const {
  const Matrix<MPoly>& p = P.at(static_cast<std::size_t>(alpha));
  return p.map([&](const MPoly& v) { return RatFn(v, delta); });
}

std::vector<Matrix<RatFn>> OmegaFamily::omegas() const {
  std::vector<Matrix<RatFn>> out;
  for (int a = 0; a < rank(); ++a) out.push_back(omega(a));
  return out;
}

Matrix<MPoly> invariant_jacobian(const GroupData& g) {
  int n = g.rank;
  Matrix<MPoly> j(n, n, MPoly(g.u_ring));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) j(c, i) = g.invariants[static_cast<std::size_t>(c)].diff(i);
  }
  return j;
}

Matrix<MPoly> curvature_numerator(const OmegaFamily& om, int a, int b) {
  const MPoly& d = om.delta;
  const auto& pa = om.P[static_cast<std::size_t>(a)];
  const auto& pb = om.P[static_cast<std::size_t>(b)];
  MPoly da = d.diff(a);
  MPoly db = d.diff(b);
  Matrix<MPoly> out = commutator(pa, pb);
  for (int i = 0; i < pa.rows(); ++i) {
    for (int j = 0; j < pa.cols(); ++j) {
      out(i, j) += d * (pb(i, j).diff(a) - pa(i, j).diff(b)) - da * pb(i, j) + db * pa(i, j);
    }
  }
  return out;
}

Matrix<MPoly> euler_residual(const OmegaFamily& om) {
  const GroupData& g = *om.group;
  int n = om.rank();
  Matrix<MPoly> out = Matrix<MPoly>::zero(n, MPoly(g.x_ring));
  for (int a = 0; a < n; ++a) {
    MPoly w = MPoly::var(g.x_ring, a).scaled(CycNum(g.degrees[static_cast<std::size_t>(a)]));
    out += w * om.P[static_cast<std::size_t>(a)];
  }
  for (int c = 0; c < n; ++c) {
    out(c, c) -= om.delta.scaled(CycNum(1 - g.degrees[static_cast<std::size_t>(c)]));
  }
  return out;
}

OmegaFamily natural_connection(const GroupPtr& gp) {
  const GroupData& g = *gp;
  int n = g.rank;
  OmegaFamily om;
  om.group = gp;
  om.delta = g.discriminant_x;

  Matrix<MPoly> j = invariant_jacobian(g);
  Matrix<MPoly> adj = adjugate(j);
  MPoly detj = det(j);
  MPoly detj2 = detj * detj;
  Matrix<MPoly> adj_t = adj.transpose();
  BasisReducer reducer(g.invariants, g.x_ring);

  om.P.assign(static_cast<std::size_t>(n), Matrix<MPoly>::zero(n, MPoly(g.x_ring)));
  for (int c = 0; c < n; ++c) {
    const MPoly& xc = g.invariants[static_cast<std::size_t>(c)];
    Matrix<MPoly> hess(n, n, MPoly(g.u_ring));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) hess(i, k) = xc.diff(i).diff(k);
    }
    Matrix<MPoly> s = adj_t * hess * adj;
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        if (s(a, b).is_zero()) continue;
        MPoly num = -(g.discriminant_u * s(a, b));
        MPoly q;
        if (!try_exact_div(num, detj2, &q)) {
          throw NotDivisible(g.name + ": Delta Omega is not polynomial in u");
        }
        MPoly px = reducer.reduce(q);
        om.P[static_cast<std::size_t>(a)](c, b) = px;
        om.P[static_cast<std::size_t>(b)](c, a) = px;
      }
    }
  }

  int degd = om.delta.weighted_degree();
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      for (int b = 0; b < n; ++b) {
        const MPoly& v = om.P[static_cast<std::size_t>(a)](c, b);
        int want = g.degrees[static_cast<std::size_t>(c)] - g.degrees[static_cast<std::size_t>(a)] -
                   g.degrees[static_cast<std::size_t>(b)] + degd;
        if (!v.is_zero() && (!v.is_homogeneous() || v.weighted_degree() != want)) {
          throw PropertyViolation(g.name + ": connection entry has the wrong weighted degree");
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!curvature_numerator(om, a, b).is_zero()) {
        throw FlatnessViolation(g.name + ": natural connection is not flat");
      }
    }
  }
  if (!euler_residual(om).is_zero()) {
    throw PropertyViolation(g.name + ": Euler identity for the natural connection fails");
  }
  return om;
}

bool APReport::ok() const {
  for (const auto& it : items) {
    if (!it.passed) return false;
  }
  return true;
}

namespace {

bool divides_all(const Matrix<MPoly>& num, const MPoly& den) {
  MPoly q;
  for (int i = 0; i < num.rows(); ++i) {
    for (int j = 0; j < num.cols(); ++j) {
      if (!try_exact_div(num(i, j), den, &q)) return false;
    }
  }
  return true;
}

}  // namespace

APReport check_AP(const OmegaFamily& om) {
  const GroupData& g = *om.group;
  int n = om.rank();
  APReport rep;
  auto fail = [&](const APItem& it) {
    throw PropertyViolation(g.name + ": " + it.name + " fails (" + it.detail + ")");
  };
  rep.items.push_back({"AP1", true, true, "Delta Omega has polynomial entries"});

  int degd = om.delta.weighted_degree();
  MPoly delta_pow(g.x_ring, CycNum(1));
  for (int k = 1; k < n; ++k) delta_pow = delta_pow * om.delta;

  Matrix<MPoly> j = invariant_jacobian(g);
  Matrix<MPoly> adjj = adjugate(j);
  MPoly detj = det(j);

  for (int a = 0; a < n; ++a) {
    const auto& pa = om.P[static_cast<std::size_t>(a)];
    MPoly dp = det(pa);
    bool top = degd == n * g.degrees[static_cast<std::size_t>(a)];
    APItem ap2{"AP2[" + std::to_string(a + 1) + "]", true, true, ""};
    MPoly q;
    if (!try_exact_div(dp, delta_pow, &q)) {
      ap2.passed = false;
      ap2.detail = "Delta det Omega is not polynomial";
    } else if (top && !q.is_constant()) {
      ap2.passed = false;
      ap2.detail = "Delta det Omega is not constant";
    } else {
      ap2.detail = "Delta det Omega = " + q.to_string();
    }
    rep.items.push_back(ap2);
    if (!ap2.passed) fail(ap2);

    if (dp.is_zero()) continue;
    Matrix<MPoly> adjp = adjugate(pa);
    APItem ap3{"AP3[" + std::to_string(a + 1) + "]", top, true, top ? "" : "deg delta != n d_mu"};
    APItem ap4{"AP4[" + std::to_string(a + 1) + "]", top, true, ap3.detail};
    if (top) {
      if (!divides_all(om.delta * adjp, dp)) {
        ap3.passed = false;
        ap3.detail = "Omega_mu^-1 is not polynomial";
      }
      for (int b = 0; b < n && ap4.passed; ++b) {
        if (!divides_all(adjp * om.P[static_cast<std::size_t>(b)], dp)) {
          ap4.passed = false;
          ap4.detail = "Omega_mu^-1 Omega_" + std::to_string(b + 1) + " is not polynomial";
        }
      }
    }
    rep.items.push_back(ap3);
    if (!ap3.passed) fail(ap3);
    rep.items.push_back(ap4);
    if (!ap4.passed) fail(ap4);

    // J^-1 Omega_mu^-1 = adj(J) Delta adj(P_mu) / (det J det P_mu) in u.
    // Only meaningful when det Omega_mu = const / Delta: otherwise the zeros
    // of det Omega_mu off the arrangement give genuine poles.
    APItem ip{"IP[" + std::to_string(a + 1) + "]", top, true, ap3.detail};
    if (top) {
      Matrix<MPoly> adjp_u = adjp.map([&](const MPoly& v) { return v.substitute(g.invariants); });
      MPoly den = detj * dp.substitute(g.invariants);
      if (!divides_all(g.discriminant_u * (adjj * adjp_u), den)) {
        ip.passed = false;
        ip.detail = "J^-1 Omega_mu^-1 is not polynomial in u";
      }
    }
    rep.items.push_back(ip);
    if (!ip.passed) fail(ip);
  }
  return rep;
}

}  // namespace sf
