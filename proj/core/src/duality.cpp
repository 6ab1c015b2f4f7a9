#include "saitoforge/duality.hpp"

#include <stdexcept>

#include "saitoforge/errors.hpp"
#include "tensor_ops.hpp"

namespace sf {

using namespace detail;

namespace {

using MatP = Matrix<MPoly>;

bool det_vanishes(const MatR& m) { return det(m).is_zero(); }

}  // namespace

AlmostSaitoData dual_almost(const SaitoData& s, const CycNum& lambda, const CycNum& r) {
  const Ring& ring = s.ring;
  int n = s.rank();
  MatR u = contract(s.E, s.C, ring) - const_r(ring, lambda) * ident(ring, n);
  if (det_vanishes(u)) throw SingularTwist(s.group + ": det(E.C - lambda I) vanishes");
  MatR uinv = inverse(u);
  MatR w = field_jacobian(s.E, ring);
  MatR shift = const_r(ring, r) * ident(ring, n) - w - contract(s.E, s.Gamma, ring);

  AlmostSaitoData a;
  a.group = s.group;
  a.ring = ring;
  a.degrees = s.degrees;
  a.frame_u = s.frame_u;
  a.r = r;
  a.e = s.e;
  for (int k = 0; k < n; ++k) {
    a.E.push_back(s.E[k] - const_r(ring, lambda) * s.e[k]);
    MatR b = s.C[k] * uinv;
    a.Omega.push_back(s.Gamma[k] + shift * b);
    a.B.push_back(std::move(b));
  }
  return a;
}

SaitoData dual_saito(const AlmostSaitoData& a) {
  const Ring& ring = a.ring;
  int n = a.rank();
  MatR p = contract(a.e, a.B, ring);
  if (det_vanishes(p)) throw SingularP(a.group + ": det(e.B) vanishes");
  MatR pinv = inverse(p);
  MatR rmat = regularity_matrix(a.Omega, a.e, ring);

  SaitoData s;
  s.group = a.group;
  s.ring = ring;
  s.degrees = a.degrees;
  s.frame_u = a.frame_u;
  s.E = a.E;
  s.e = a.e;
  for (int k = 0; k < n; ++k) {
    MatR c = a.B[k] * pinv;
    s.Gamma.push_back(a.Omega[k] - rmat * c);
    s.C.push_back(std::move(c));
  }
  return s;
}

Matrix<RatFn> regularity_matrix(const std::vector<Matrix<RatFn>>& omega,
                                const std::vector<RatFn>& e, const Ring& ring) {
  return field_jacobian(e, ring) + contract(e, omega, ring);
}

std::vector<Matrix<RatFn>> regular_mult(const std::vector<Matrix<RatFn>>& omega,
                                        const std::vector<RatFn>& e, const Ring& ring) {
  MatR rmat = regularity_matrix(omega, e, ring);
  if (det_vanishes(rmat)) throw NotRegular("det(Q + e.Omega) vanishes");
  MatR rinv = inverse(rmat);
  std::vector<MatR> out;
  for (std::size_t k = 0; k < omega.size(); ++k) {
    out.push_back(-(rinv * (diff(rmat, static_cast<int>(k)) + commutator(omega[k], rmat))));
  }
  return out;
}

AlmostSaitoData family_shift(const AlmostSaitoData& a, const CycNum& lambda, const CycNum& nu) {
  const Ring& ring = a.ring;
  int n = a.rank();
  MatR twist = ident(ring, n) - const_r(ring, lambda) * contract(a.e, a.B, ring);
  if (det_vanishes(twist)) throw SingularTwist(a.group + ": det(I - lambda e.B) vanishes");
  MatR tinv = inverse(twist);
  MatR rmat = regularity_matrix(a.Omega, a.e, ring);

  AlmostSaitoData out = a;
  out.r = a.r + nu;
  for (int k = 0; k < n; ++k) {
    out.E[k] = a.E[k] - const_r(ring, lambda) * a.e[k];
    MatR b = tinv * a.B[k];
    out.Omega[k] = a.Omega[k] + const_r(ring, nu) * b + const_r(ring, lambda) * (rmat * b);
    out.B[k] = std::move(b);
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Natural: return "Natural";
    case Verdict::FailsASS1: return "FailsASS1";
    case Verdict::FailsASS2: return "FailsASS2";
    case Verdict::NotRegular: return "NotRegular";
  }
  return "";
}

NaturalResiduals natural_residuals(const OmegaFamily& om, const std::vector<MPoly>& e,
                                   const Ring& ring) {
  int n = om.rank();
  std::vector<int> to(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) to[static_cast<std::size_t>(k)] = k;
  auto lift = [&](const MPoly& p) { return p.embed(ring, to); };

  NaturalResiduals res;
  res.ring = ring;
  res.delta = lift(om.delta);
  std::vector<MatP> p;
  for (const auto& m : om.P) p.push_back(m.map(lift));
  MatP pe = MatP::zero(n, MPoly(ring));
  for (int k = 0; k < n; ++k) {
    if (!e[k].is_zero()) pe += e[k] * p[k];
  }
  res.det_pe = det(pe);
  res.D = res.delta * res.det_pe;
  if (res.det_pe.is_zero()) return res;

  const MPoly& dl = res.delta;
  MatP adj = adjugate(pe);
  for (int k = 0; k < n; ++k) {
    MatP inner = dl * diff(pe, k) - dl.diff(k) * pe + commutator(p[k], pe);
    res.X.push_back(-(adj * inner));
  }
  const MPoly& D = res.D;
  const auto& X = res.X;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      MatP t = dl * (D * diff(X[b], a) - D.diff(a) * X[b]) -
               dl * (D * diff(X[a], b) - D.diff(b) * X[a]) +
               D * (commutator(p[a], X[b]) - commutator(p[b], X[a]));
      res.ass1.push_back(std::move(t));
    }
  }
  // e is constant in x, so Q = 0 and e(f) = sum e^m d_m f.
  auto along_e = [&](const MatP& m) {
    MatP out = MatP::zero(n, MPoly(ring));
    for (int k = 0; k < n; ++k) {
      if (!e[k].is_zero()) out += e[k] * diff(m, k);
    }
    return out;
  };
  MPoly eD(ring);
  for (int k = 0; k < n; ++k) eD += e[k] * D.diff(k);
  MatP ex = MatP::zero(n, MPoly(ring));
  for (int k = 0; k < n; ++k) {
    if (!e[k].is_zero()) ex += e[k] * X[k];
  }
  for (int a = 0; a < n; ++a) {
    res.ass2.push_back(D * along_e(X[a]) - eD * X[a] + X[a] * ex);
  }
  return res;
}

namespace {

MPoly first_nonzero(const MatP& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return m(i, j);
    }
  }
  return MPoly(m(0, 0).ring());
}

}  // namespace

NaturalTest natural_ass_test(const OmegaFamily& om, const std::vector<CycNum>& e) {
  const GroupData& g = *om.group;
  int n = om.rank();
  const Ring& xr = g.x_ring;
  if (static_cast<int>(e.size()) != n) throw std::invalid_argument("e has the wrong length");
  bool any = false;
  for (int k = 0; k < n; ++k) {
    if (e[k].is_zero()) continue;
    any = true;
    if (g.degrees[k] != g.degrees[0]) {
      throw std::invalid_argument("e must have degree -d_1");
    }
  }
  if (!any) throw std::invalid_argument("e must be nonzero");

  std::vector<MPoly> ep;
  for (const auto& c : e) ep.emplace_back(xr, c);
  NaturalResiduals res = natural_residuals(om, ep, xr);
  NaturalTest out;
  if (res.det_pe.is_zero()) {
    out.verdict = Verdict::NotRegular;
    return out;
  }
  std::size_t pair = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      out.residuals.push_back({"ASS1[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]",
                               RatFn(first_nonzero(res.ass1[pair++]))});
    }
  }
  for (int a = 0; a < n; ++a) {
    out.residuals.push_back(
        {"ASS2[" + std::to_string(a + 1) + "]", RatFn(first_nonzero(res.ass2[a]))});
  }
  out.verdict = Verdict::Natural;
  for (const auto& r : out.residuals) {
    if (r.zero()) continue;
    out.verdict = r.name.rfind("ASS1", 0) == 0 ? Verdict::FailsASS1 : Verdict::FailsASS2;
    out.witness = r.value.num();
    out.witness_name = r.name;
    break;
  }

  AlmostSaitoData& a = out.structure;
  a.group = g.name;
  a.ring = xr;
  a.degrees = g.degrees;
  a.frame_u = g.invariants;
  a.r = CycNum(1, g.degrees[0]);
  a.Omega = om.omegas();
  for (int k = 0; k < n; ++k) {
    a.B.push_back(res.X[k].map([&](const MPoly& v) { return RatFn(v, res.D); }));
    a.e.push_back(RatFn(ep[k]));
    a.E.push_back(RatFn(MPoly::var(xr, k).scaled(CycNum(g.degrees[k], g.degrees[0]))));
  }
  return out;
}

}  // namespace sf
