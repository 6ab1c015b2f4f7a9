#include "saitoforge/saito.hpp"

#include <map>
#include <utility>

#include "saitoforge/errors.hpp"
#include "saitoforge/linsolve.hpp"
#include "tensor_ops.hpp"

namespace sf {

using namespace detail;

namespace {

using MatP = Matrix<MPoly>;

class Family {
 public:
  explicit Family(std::string name) : name_(std::move(name)) {}
  void add(const MatR& m) {
    if (found_) return;
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_zero()) {
          value_ = m(i, j);
          found_ = true;
          return;
        }
      }
    }
  }
  void add(const RatFn& f) {
    if (!found_ && !f.is_zero()) {
      value_ = f;
      found_ = true;
    }
  }
  Residual done(const Ring& r) const { return {name_, found_ ? value_ : zero_r(r)}; }

 private:
  std::string name_;
  RatFn value_;
  bool found_ = false;
};

std::vector<CycNum> one_over(const std::vector<int>& d) {
  std::vector<CycNum> out;
  for (int v : d) out.emplace_back(v, d.at(0));
  return out;
}

}  // namespace

int SaitoData::unit_index() const {
  int found = -1;
  for (std::size_t a = 0; a < e.size(); ++a) {
    if (e[a].is_zero()) continue;
    if (found >= 0 || e[a] != const_r(ring, CycNum(1))) return -1;
    found = static_cast<int>(a);
  }
  return found;
}

bool ResidualReport::ok() const { return first_failure() == nullptr; }

const Residual* ResidualReport::first_failure() const {
  for (const auto& it : items) {
    if (!it.zero()) return &it;
  }
  return nullptr;
}

const Residual* ResidualReport::find(const std::string& name) const {
  for (const auto& it : items) {
    if (it.name == name) return &it;
  }
  return nullptr;
}

ResidualReport check_ss(const SaitoData& s) {
  const Ring& r = s.ring;
  int n = s.rank();
  const auto& C = s.C;
  const auto& G = s.Gamma;
  MatR W = field_jacobian(s.E, r);
  MatR Q = field_jacobian(s.e, r);
  MatR EC = contract(s.E, C, r);
  MatR EG = contract(s.E, G, r);
  MatR WEG = W + EG;

  Family comm("commutativity"), assoc("associativity"), unit("unit"), tors("torsion"),
      flat("flatness"), ss1("SS1"), ss2("SS2"), ss2f("SS2 full"), ss3("SS3"), ss4("SS4"),
      ss4f("SS4 full");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < n; ++g) {
        comm.add(C[a](g, b) - C[b](g, a));
        tors.add(G[a](g, b) - G[b](g, a));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      assoc.add(commutator(C[a], C[b]));
      flat.add(diff(G[b], a) - diff(G[a], b) + commutator(G[a], G[b]));
      ss1.add(diff(C[b], a) + commutator(G[a], C[b]) - diff(C[a], b) - commutator(G[b], C[a]));
    }
  }
  unit.add(contract(s.e, C, r) - ident(r, n));
  ss3.add(Q + contract(s.e, G, r));
  for (int a = 0; a < n; ++a) {
    ss2.add(directional(s.E, C[a], r) + column_contract(W, a, C, r) - commutator(W, C[a]) - C[a]);
    ss2f.add(diff(EC, a) + commutator(G[a], EC) - commutator(WEG, C[a]) - C[a]);
    ss4.add(directional(s.E, G[a], r) + column_contract(W, a, G, r) - commutator(W, G[a]) +
            diff(W, a));
    ss4f.add(diff(WEG, a) + commutator(G[a], WEG));
  }
  ResidualReport rep;
  for (const Family* f : {&comm, &assoc, &unit, &tors, &flat, &ss1, &ss2, &ss2f, &ss3, &ss4, &ss4f}) {
    rep.items.push_back(f->done(r));
  }
  return rep;
}

ResidualReport check_ass(const AlmostSaitoData& A) {
  const Ring& r = A.ring;
  int n = A.rank();
  const auto& B = A.B;
  const auto& Om = A.Omega;
  MatR W = field_jacobian(A.E, r);
  MatR Q = field_jacobian(A.e, r);
  MatR eB = contract(A.e, B, r);
  MatR R = Q + contract(A.e, Om, r);

  Family comm("commutativity"), assoc("associativity"), unit("unit"), tors("torsion"),
      flat("flatness"), ass1("ASS1"), ass2("ASS2"), ass2f("ASS2 full"), ass3("ASS3"),
      ass4("ASS4"), ass4f("ASS4 full");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < n; ++g) {
        comm.add(B[a](g, b) - B[b](g, a));
        tors.add(Om[a](g, b) - Om[b](g, a));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      assoc.add(commutator(B[a], B[b]));
      flat.add(diff(Om[b], a) - diff(Om[a], b) + commutator(Om[a], Om[b]));
      ass1.add(diff(B[b], a) + commutator(Om[a], B[b]) - diff(B[a], b) - commutator(Om[b], B[a]));
    }
  }
  unit.add(contract(A.E, B, r) - ident(r, n));
  ass3.add(W + contract(A.E, Om, r) - const_r(r, A.r) * ident(r, n));
  for (int a = 0; a < n; ++a) {
    ass2.add(directional(A.e, B[a], r) + column_contract(Q, a, B, r) - commutator(Q, B[a]) +
             B[a] * eB);
    ass2f.add(diff(eB, a) + commutator(Om[a], eB) - commutator(R, B[a]) + B[a] * eB);
    ass4.add(directional(A.e, Om[a], r) + column_contract(Q, a, Om, r) - commutator(Q, Om[a]) +
             diff(Q, a) + R * B[a]);
    ass4f.add(diff(R, a) + commutator(Om[a], R) + R * B[a]);
  }
  ResidualReport rep;
  for (const Family* f :
       {&comm, &assoc, &unit, &tors, &flat, &ass1, &ass2, &ass2f, &ass3, &ass4, &ass4f}) {
    rep.items.push_back(f->done(r));
  }
  return rep;
}

ExpansionData extract_expansion(const OmegaFamily& om) {
  const GroupData& g = *om.group;
  int n = om.rank();
  const auto& d = g.degrees;
  for (int v : d) {
    if (v <= 1) throw AssumptionViolated(g.name + ": a degree equals one");
  }
  const MPoly& delta = om.delta;
  if (delta.weighted_degree() != n * d[0]) {
    throw AssumptionViolated(g.name + ": deg Delta differs from n d_1");
  }
  if (delta.degree_in(0) != n || !delta.coeff_in(0, n).is_constant() ||
      !delta.coeff_in(0, n).constant().is_one()) {
    throw AssumptionViolated(g.name + ": Delta is not monic of degree " + std::to_string(n) +
                             " in x^1");
  }
  ExpansionData ex;
  ex.group = om.group;
  ex.delta = delta;
  ex.a = delta.coeff_in(0, n - 1);
  const Ring& xr = g.x_ring;
  for (int a = 0; a < n; ++a) {
    const MatP& p = om.P[static_cast<std::size_t>(a)];
    MatP gam = MatP::zero(n, MPoly(xr));
    MatP dd = MatP::zero(n, MPoly(xr));
    for (int c = 0; c < n; ++c) {
      for (int b = 0; b < n; ++b) {
        if (p(c, b).degree_in(0) > n) {
          throw PropertyViolation(g.name + ": Delta Omega has x^1-degree above n");
        }
        gam(c, b) = p(c, b).coeff_in(0, n);
        dd(c, b) = p(c, b).coeff_in(0, n - 1);
        if (!gam(c, b).is_zero() && (d[c] <= d[b] || a == 0)) {
          throw PropertyViolation(g.name + ": Gamma is not strictly triangular");
        }
      }
    }
    ex.Gamma.push_back(std::move(gam));
    ex.D.push_back(std::move(dd));
  }

  std::vector<CycNum> w = one_over(d);
  MatP d1 = MatP::zero(n, MPoly(xr));
  CycNum want(1);
  for (int c = 0; c < n; ++c) {
    CycNum v = CycNum(1 - d[c], d[0]);
    d1(c, c) = MPoly(xr, v);
    want *= v;
  }
  for (int a = 1; a < n; ++a) {
    d1 -= (MPoly::var(xr, a).scaled(w[a])) * ex.Gamma[static_cast<std::size_t>(a)];
  }
  if (d1 != ex.D[0]) throw PropertyViolation(g.name + ": D_1 differs from its closed form");
  MPoly dt = det(ex.D[0]);
  if (dt != MPoly(xr, want)) throw PropertyViolation(g.name + ": det D_1 is wrong");
  MPoly dp = det(om.P[0]);
  MPoly pow = MPoly(xr, CycNum(1));
  for (int k = 1; k < n; ++k) pow = pow * delta;
  MPoly q;
  if (!try_exact_div(dp, pow, &q) || q != dt) {
    throw PropertyViolation(g.name + ": Delta det Omega_1 differs from det D_1");
  }
  return ex;
}

SaitoData build_natural_saito(const ExpansionData& ex) {
  const GroupData& g = *ex.group;
  int n = g.rank;
  const Ring& xr = g.x_ring;
  const auto& d = g.degrees;
  MPoly dt = det(ex.D[0]);
  MatP d1inv = adjugate(ex.D[0]).map([&](const MPoly& v) { return v.scaled(dt.constant().inv()); });

  SaitoData s;
  s.group = g.name;
  s.ring = xr;
  s.degrees = d;
  s.frame_u = g.invariants;
  std::vector<CycNum> w = one_over(d);
  MatP u = MatP::zero(n, MPoly(xr));
  for (int a = 0; a < n; ++a) {
    MatP c = d1inv * (ex.D[a] - ex.a * ex.Gamma[a]);
    u += MPoly::var(xr, a).scaled(w[a]) * c;
    s.C.push_back(to_ratfn(c));
    s.Gamma.push_back(to_ratfn(ex.Gamma[a]));
    s.E.push_back(RatFn(MPoly::var(xr, a).scaled(w[a])));
    s.e.push_back(const_r(xr, CycNum(a == 0 ? 1 : 0)));
  }
  if (to_poly(s.C[0]) != MatP::identity(n, MPoly(xr))) {
    throw PropertyViolation(g.name + ": C_1 is not the identity");
  }
  if (det(u) != ex.delta) throw PropertyViolation(g.name + ": det U differs from Delta");
  ResidualReport rep = check_ss(s);
  if (const Residual* f = rep.first_failure()) {
    throw PropertyViolation(g.name + ": " + f->name + " residual " + f->value.to_string());
  }
  return s;
}

SaitoData natural_saito(const GroupPtr& g) {
  return build_natural_saito(extract_expansion(natural_connection(g)));
}

Matrix<RatFn> euler_multiplication(const SaitoData& s) { return contract(s.E, s.C, s.ring); }

Matrix<MPoly> coordinate_jacobian(const std::vector<MPoly>& t) {
  int n = static_cast<int>(t.size());
  MatP k(n, n, MPoly(t.at(0).ring()));
  for (int a = 0; a < n; ++a) {
    for (int m = 0; m < n; ++m) k(a, m) = t[static_cast<std::size_t>(a)].diff(m);
  }
  return k;
}

namespace {

struct FrameChange {
  MatR K;
  MatR L;
  std::vector<MatR> dL;
};

FrameChange frame_change(const std::vector<MPoly>& t) {
  FrameChange f;
  f.K = to_ratfn(coordinate_jacobian(t));
  f.L = inverse(f.K);
  for (std::size_t m = 0; m < t.size(); ++m) f.dL.push_back(diff(f.L, static_cast<int>(m)));
  return f;
}

// K (sum_mu L(mu, a) M_mu) L
std::vector<MatR> tensor_change(const FrameChange& f, const std::vector<MatR>& ms, const Ring& r) {
  std::vector<MatR> out;
  for (int a = 0; a < f.L.rows(); ++a) out.push_back(f.K * column_contract(f.L, a, ms, r) * f.L);
  return out;
}

// K sum_mu L(mu, a) (M_mu L + d_mu L)
std::vector<MatR> connection_change(const FrameChange& f, const std::vector<MatR>& ms,
                                    const Ring& r) {
  std::vector<MatR> shifted;
  for (std::size_t mu = 0; mu < ms.size(); ++mu) shifted.push_back(ms[mu] * f.L + f.dL[mu]);
  std::vector<MatR> out;
  for (int a = 0; a < f.L.rows(); ++a) out.push_back(f.K * column_contract(f.L, a, shifted, r));
  return out;
}

std::vector<RatFn> vector_change(const FrameChange& f, const std::vector<RatFn>& v) {
  std::vector<RatFn> out;
  for (int a = 0; a < f.K.rows(); ++a) {
    RatFn s = zero_r(v.at(0).ring());
    for (int m = 0; m < f.K.cols(); ++m) s += f.K(a, m) * v[static_cast<std::size_t>(m)];
    out.push_back(s);
  }
  return out;
}

RatFn subst(const RatFn& f, const std::vector<MPoly>& img, const Ring& target) {
  if (f.is_zero()) return zero_r(target);
  return f.substitute(img);
}

MatR subst(const MatR& m, const std::vector<MPoly>& img, const Ring& target) {
  return m.map([&](const RatFn& f) { return subst(f, img, target); });
}

std::vector<MatR> subst(const std::vector<MatR>& ms, const std::vector<MPoly>& img,
                        const Ring& target) {
  std::vector<MatR> out;
  for (const auto& m : ms) out.push_back(subst(m, img, target));
  return out;
}

std::vector<RatFn> subst(const std::vector<RatFn>& v, const std::vector<MPoly>& img,
                         const Ring& target) {
  std::vector<RatFn> out;
  for (const auto& f : v) out.push_back(subst(f, img, target));
  return out;
}

std::vector<MPoly> compose(const std::vector<MPoly>& t, const std::vector<MPoly>& frame_u) {
  std::vector<MPoly> out;
  if (frame_u.empty()) return out;
  for (const auto& p : t) out.push_back(p.substitute(frame_u));
  return out;
}

}  // namespace

SaitoData frame_components(const SaitoData& s, const std::vector<MPoly>& t) {
  FrameChange f = frame_change(t);
  SaitoData o = s;
  o.C = tensor_change(f, s.C, s.ring);
  o.Gamma = connection_change(f, s.Gamma, s.ring);
  o.E = vector_change(f, s.E);
  o.e = vector_change(f, s.e);
  return o;
}

AlmostSaitoData frame_components(const AlmostSaitoData& a, const std::vector<MPoly>& t) {
  FrameChange f = frame_change(t);
  AlmostSaitoData o = a;
  o.B = tensor_change(f, a.B, a.ring);
  o.Omega = connection_change(f, a.Omega, a.ring);
  o.E = vector_change(f, a.E);
  o.e = vector_change(f, a.e);
  return o;
}

SaitoData change_frame(const SaitoData& s, const std::vector<MPoly>& t,
                       const std::vector<MPoly>& x_of_t, const Ring& target) {
  SaitoData c = frame_components(s, t);
  SaitoData o;
  o.group = s.group;
  o.ring = target;
  o.degrees = target->weights;
  o.C = subst(c.C, x_of_t, target);
  o.Gamma = subst(c.Gamma, x_of_t, target);
  o.E = subst(c.E, x_of_t, target);
  o.e = subst(c.e, x_of_t, target);
  o.frame_u = compose(t, s.frame_u);
  return o;
}

AlmostSaitoData change_frame(const AlmostSaitoData& a, const std::vector<MPoly>& t,
                             const std::vector<MPoly>& x_of_t, const Ring& target) {
  AlmostSaitoData c = frame_components(a, t);
  AlmostSaitoData o;
  o.group = a.group;
  o.ring = target;
  o.degrees = target->weights;
  o.r = a.r;
  o.B = subst(c.B, x_of_t, target);
  o.Omega = subst(c.Omega, x_of_t, target);
  o.E = subst(c.E, x_of_t, target);
  o.e = subst(c.e, x_of_t, target);
  o.frame_u = compose(t, a.frame_u);
  return o;
}

FlatCoordinates flat_coordinates(const SaitoData& s) {
  int n = s.rank();
  const Ring& xr = s.ring;
  const auto& d = s.degrees;
  for (int k = 1; k < n; ++k) {
    if (d[k] > d[k - 1]) throw std::invalid_argument("flat_coordinates: degrees not descending");
  }
  std::vector<MatP> gam;
  for (const auto& m : s.Gamma) {
    if (!is_polynomial(m)) throw NonIntegrable(s.group + ": Christoffel symbols are not polynomial");
    gam.push_back(to_poly(m));
  }

  // Unknowns: coefficients of the entries X(k, b), k < b, of positive degree.
  struct Unknown {
    int k, b;
    std::vector<int> exps;
  };
  std::vector<Unknown> unknowns;
  for (int k = 0; k < n; ++k) {
    for (int b = k + 1; b < n; ++b) {
      for (auto& e : weighted_exponents(d, d[k] - d[b])) {
        if (d[k] == d[b]) continue;
        unknowns.push_back({k, b, e});
      }
    }
  }
  // Rows are keyed by (equation (mu, g, b), monomial).
  std::map<std::pair<int, std::array<std::uint16_t, kMaxVars>>, int> rows;
  auto row = [&](int eq, const Monomial& m) {
    auto [it, ins] = rows.emplace(std::make_pair(eq, m.e), static_cast<int>(rows.size()));
    return it->second;
  };
  auto eq_of = [n](int mu, int g, int b) { return (mu * n + g) * n + b; };
  // Contribution of X(k, b) = p to every equation d_mu X + Gamma_mu X = 0.
  auto contributions = [&](int k, int b, const MPoly& p) {
    std::vector<std::pair<int, MPoly>> out;
    for (int mu = 0; mu < n; ++mu) {
      out.emplace_back(eq_of(mu, k, b), p.diff(mu));
      for (int g = 0; g < n; ++g) {
        if (!gam[mu](g, k).is_zero()) out.emplace_back(eq_of(mu, g, b), gam[mu](g, k) * p);
      }
    }
    return out;
  };
  std::vector<std::vector<std::pair<int, MPoly>>> cols;
  for (const auto& u : unknowns) {
    cols.push_back(contributions(u.k, u.b, MPoly::monomial(xr, u.exps, CycNum(1))));
  }
  std::vector<std::vector<std::pair<int, MPoly>>> rhs;
  for (int k = 0; k < n; ++k) rhs.push_back(contributions(k, k, MPoly(xr, CycNum(1))));
  for (const auto& c : cols) {
    for (const auto& [eq, p] : c) {
      for (const auto& t : p.terms()) row(eq, t.m);
    }
  }
  for (const auto& c : rhs) {
    for (const auto& [eq, p] : c) {
      for (const auto& t : p.terms()) row(eq, t.m);
    }
  }
  Matrix<CycNum> A(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()), CycNum());
  std::vector<CycNum> b(rows.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [eq, p] : cols[j]) {
      for (const auto& t : p.terms()) A(row(eq, t.m), static_cast<int>(j)) += t.c;
    }
  }
  for (const auto& c : rhs) {
    for (const auto& [eq, p] : c) {
      for (const auto& t : p.terms()) b[static_cast<std::size_t>(row(eq, t.m))] -= t.c;
    }
  }
  FlatCoordinates f;
  f.X = MatP::identity(n, MPoly(xr));
  if (!unknowns.empty()) {
    LinSolution sol;
    try {
      sol = linsolve(A, b);
    } catch (const Inconsistent&) {
      throw NonIntegrable(s.group + ": no polynomial flat frame");
    }
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      const auto& u = unknowns[j];
      if (!sol.particular[j].is_zero()) {
        f.X(u.k, u.b) += MPoly::monomial(xr, u.exps, sol.particular[j]);
      }
    }
  } else {
    for (const auto& v : b) {
      if (!v.is_zero()) throw NonIntegrable(s.group + ": no polynomial flat frame");
    }
  }
  for (int mu = 0; mu < n; ++mu) {
    if (!(diff(f.X, mu) + gam[mu] * f.X).is_zero()) {
      throw NonIntegrable(s.group + ": flat frame equation fails");
    }
  }

  MatP xinv = adjugate(f.X);  // det X = 1
  for (int a = 0; a < n; ++a) {
    MPoly t(xr);
    for (int b2 = 0; b2 < n; ++b2) t += MPoly::var(xr, b2).scaled(CycNum(d[b2])) * xinv(a, b2);
    t = t.scaled(CycNum(1, d[a]));
    for (int b2 = 0; b2 < n; ++b2) {
      if (t.diff(b2) != xinv(a, b2)) throw NonIntegrable(s.group + ": dt is not X^-1 dx");
    }
    f.t.push_back(t);
  }

  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back("t" + std::to_string(a + 1));
  f.t_ring = make_ring(names, d);
  f.x_of_t.assign(static_cast<std::size_t>(n), MPoly(f.t_ring));
  for (int a = n - 1; a >= 0; --a) {
    MPoly rest = f.t[a] - MPoly::var(xr, a);
    for (int b2 = 0; b2 <= a; ++b2) {
      if (rest.degree_in(b2) > 0) {
        throw PropertyViolation(s.group + ": flat coordinate is not triangular");
      }
    }
    f.x_of_t[a] = MPoly::var(f.t_ring, a) - rest.substitute(f.x_of_t);
  }
  return f;
}

SaitoData to_flat_frame(const SaitoData& s, const FlatCoordinates& f) {
  SaitoData o = change_frame(s, f.t, f.x_of_t, f.t_ring);
  for (const auto& g : o.Gamma) {
    if (!g.is_zero()) throw NonIntegrable(s.group + ": Christoffel symbols survive in t");
  }
  return o;
}

std::vector<Matrix<RatFn>> okubo_system(const SaitoData& s) {
  int n = s.rank();
  const Ring& r = s.ring;
  for (const auto& g : s.Gamma) {
    if (!g.is_zero()) throw std::invalid_argument("okubo_system needs a flat frame");
  }
  const auto& d = s.degrees;
  MatR u = euler_multiplication(s);
  MatR uinv = inverse(u);
  std::vector<RatFn> fd;
  for (int b = 0; b < n; ++b) fd.push_back(const_r(r, CycNum(1) + CycNum(1 - d[b], d[0])));
  MatR f = MatR::diagonal(fd);
  MatR w = field_jacobian(s.E, r);
  MatR shift = const_r(r, CycNum(1, d[0])) * ident(r, n) - w;
  std::vector<MatR> out;
  for (int a = 0; a < n; ++a) {
    MatR ox = uinv * s.C[a] * f;
    MatR om = shift * (s.C[a] * uinv);
    MatR gauge = uinv * om * u + uinv * diff(u, a);
    if (gauge != ox) throw PropertyViolation(s.group + ": Okubo gauge relation fails");
    out.push_back(std::move(ox));
  }
  return out;
}

Matrix<MPoly> basic_derivations(const SaitoData& s) {
  if (s.frame_u.empty()) throw std::invalid_argument("basic_derivations needs frame_u");
  MatP u = to_poly(euler_multiplication(s));
  std::vector<MPoly> img = s.frame_u;
  MatP uu = u.map([&](const MPoly& p) { return p.substitute(img); });
  MatP j(s.rank(), s.rank(), MPoly(img[0].ring()));
  for (int a = 0; a < s.rank(); ++a) {
    for (int i = 0; i < s.rank(); ++i) j(a, i) = img[a].diff(i);
  }
  MPoly dj = det(j);
  MatP num = adjugate(j) * uu;
  return num.map([&](const MPoly& p) { return exact_div(p, dj); });
}

ResidualReport check_standard_biflat(const SaitoData& s) {
  if (s.frame_u.empty()) throw std::invalid_argument("check_standard_biflat needs frame_u");
  int n = s.rank();
  const auto& d = s.degrees;
  MatR uinv = inverse(euler_multiplication(s));
  std::vector<MatR> b;
  for (int a = 0; a < n; ++a) b.push_back(s.C[a] * uinv);
  const Ring& ur = s.frame_u[0].ring();
  MatR j = MatR::zero(n, zero_r(ur));
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < n; ++i) j(a, i) = RatFn(s.frame_u[a].diff(i));
  }
  ResidualReport rep;
  for (int g = 0; g < n; ++g) {
    MatR m = MatR::zero(n, zero_r(ur));
    for (int a = 0; a < n; ++a) {
      for (int b2 = 0; b2 < n; ++b2) m(a, b2) = subst(b[a](g, b2), s.frame_u, ur);
    }
    MatR lhs = j.transpose() * m * j;
    CycNum c(d[0], d[g] - 1);
    Family fam("structure constants " + std::to_string(g + 1));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        fam.add(lhs(i, k) - RatFn(s.frame_u[g].diff(i).diff(k).scaled(c)));
      }
    }
    rep.items.push_back(fam.done(ur));
  }
  return rep;
}

}  // namespace sf
