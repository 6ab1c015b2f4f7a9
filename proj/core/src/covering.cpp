#include "saitoforge/covering.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "saitoforge/errors.hpp"
#include "saitoforge/linsolve.hpp"
#include "tensor_ops.hpp"

namespace sf {

using namespace detail;

namespace {

using MatP = Matrix<MPoly>;

Matrix<CycNum> diag2(const CycNum& a, const CycNum& b) {
  Matrix<CycNum> m(2, 2, CycNum());
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

MPoly var(const GroupPtr& g, int i) { return MPoly::var(g->x_ring, i); }

}  // namespace

std::vector<MPoly> CoveringMap::source_invariants() const {
  if (conjugator.rows() == 0) return source->invariants;
  std::vector<MPoly> out;
  for (const auto& p : source->invariants) out.push_back(act(conjugator, p));
  return out;
}

CoveringMap identity_covering(const GroupPtr& g) {
  CoveringMap pi;
  pi.source = g;
  pi.target = g;
  for (int a = 0; a < g->rank; ++a) pi.images.push_back(var(g, a));
  pi.e.assign(static_cast<std::size_t>(g->rank), CycNum());
  pi.e[0] = CycNum(1);
  pi.label = "identity";
  return pi;
}

CoveringMap monomial_covering(int m, int p, int n) {
  if (p <= 1 || p >= m || m % p != 0) {
    throw UnsupportedGroup("monomial covering needs 1 < p < m with p | m");
  }
  GroupSpec gs{m, p, n, 0};
  GroupSpec ks{m, m, n, 0};
  CoveringMap pi;
  pi.target = make_group(gs.name());
  pi.source = make_group(ks.name());
  const GroupData& g = *pi.target;
  const GroupData& k = *pi.source;
  int sg = g.sigma_n_index, sk = k.sigma_n_index;
  if (sg < 0 || sk < 0) throw UnsupportedGroup("missing sigma_n invariant");
  // The remaining invariants coincide; match them by equality on V.
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  used[static_cast<std::size_t>(sk)] = true;
  for (int a = 0; a < n; ++a) {
    if (a == sg) {
      pi.images.push_back(var(pi.source, sk).pow(static_cast<unsigned>(m / p)));
      continue;
    }
    int found = -1;
    for (int b = 0; b < n && found < 0; ++b) {
      if (!used[static_cast<std::size_t>(b)] && k.invariants[b] == g.invariants[a]) found = b;
    }
    if (found < 0) throw UnsupportedGroup("invariants of " + g.name + " and " + k.name + " differ");
    used[static_cast<std::size_t>(found)] = true;
    pi.images.push_back(var(pi.source, found));
  }
  pi.e.assign(static_cast<std::size_t>(n), CycNum());
  pi.e[0] = CycNum(1);
  pi.label = "x^n = (y^n)^" + std::to_string(m / p);
  return pi;
}

std::vector<CoveringMap> covering_rows(const std::string& group) {
  GroupPtr g = make_group(group);
  std::vector<CoveringMap> rows;
  auto row = [&](const std::string& k, std::vector<MPoly> (*images)(const GroupPtr&),
                 std::vector<CycNum> e, std::string label, Matrix<CycNum> conj = {}) {
    CoveringMap pi;
    pi.target = g;
    pi.source = make_group(k);
    pi.images = images(pi.source);
    pi.e = std::move(e);
    pi.label = std::move(label);
    pi.conjugator = std::move(conj);
    rows.push_back(std::move(pi));
  };
  // (x', y') -> (x', y'^k)
  static const auto square = [](const GroupPtr& k) {
    return std::vector<MPoly>{var(k, 0), var(k, 1).pow(2)};
  };
  static const auto cube_swap = [](const GroupPtr& k) {
    return std::vector<MPoly>{var(k, 1).pow(3), var(k, 0)};
  };
  const GroupSpec& sp = g->spec;
  if (sp.st == 0 && sp.n == 2 && sp.p > 1 && sp.p < sp.m) {
    int k = sp.m / sp.p;
    rows.push_back(monomial_covering(sp.m, sp.p, 2));
    rows.back().label = "(x',y') -> (x',(y')^" + std::to_string(k) + ")";
    if (sp.p == 2) {
      GroupPtr kk = make_group(GroupSpec{k, 1, 2, 0}.name());
      CoveringMap r2;
      r2.target = g;
      r2.source = kk;
      r2.images = {var(kk, 1).pow(2) - var(kk, 0).scaled(CycNum(2)), var(kk, 0)};
      r2.e = {CycNum(-2), CycNum(1)};
      r2.label = "(x',y') -> ((y')^2-2x',x')";
      rows.push_back(r2);
      CoveringMap r3 = r2;
      r3.images = {var(kk, 1).pow(2) - var(kk, 0).scaled(CycNum(2)), -var(kk, 0)};
      r3.e = {CycNum(-2), CycNum(-1)};
      r3.conjugator = diag2(CycNum::zeta(sp.m), CycNum(1));
      r3.label = "(x',y') -> ((y')^2-2x',-x')";
      rows.push_back(r3);
    }
    return rows;
  }
  CycNum i3 = CycNum::i_sqrt3();
  CycNum s5 = CycNum::sqrt5();
  if (group == "G7") {
    row("G5", +square, {CycNum(1), CycNum()}, "(x',y') -> (x',(y')^2)");
    row("G6", +cube_swap, {CycNum(), CycNum(1)}, "(x',y') -> ((y')^3,x')");
    row("G6",
        +[](const GroupPtr& k) {
          return std::vector<MPoly>{-var(k, 1).pow(3) + var(k, 0).scaled(CycNum(12) * CycNum::i_sqrt3()),
                                    var(k, 0)};
        },
        {CycNum(12) * i3, CycNum(1)}, "(x',y') -> (-(y')^3+12i sqrt3 x',x')",
        diag2(CycNum::zeta(8, 7), CycNum::zeta(8)));
  } else if (group == "G11") {
    row("G10", +square, {CycNum(1), CycNum()}, "(x',y') -> (x',(y')^2)");
    row("G9", +cube_swap, {CycNum(), CycNum(1)}, "(x',y') -> ((y')^3,x')");
    row("G14",
        +[](const GroupPtr& k) {
          return std::vector<MPoly>{var(k, 0) + var(k, 1).pow(4).scaled(CycNum(108)), var(k, 0)};
        },
        {CycNum(1), CycNum(1)}, "(x',y') -> (x'+108(y')^4,x')");
  } else if (group == "G15") {
    row("G14", +square, {CycNum(1), CycNum()}, "(x',y') -> (x',(y')^2)");
  } else if (group == "G19") {
    row("G18", +square, {CycNum(1), CycNum()}, "(x',y') -> (x',(y')^2)");
    row("G17", +cube_swap, {CycNum(), CycNum(1)}, "(x',y') -> ((y')^3,x')");
    row("G21",
        +[](const GroupPtr& k) {
          return std::vector<MPoly>{var(k, 0).scaled(CycNum(-60) * CycNum::sqrt5()) + var(k, 1).pow(5),
                                    var(k, 0)};
        },
        {CycNum(-60) * s5, CycNum(1)}, "(x',y') -> (-60 sqrt5 x'+(y')^5,x')");
  } else {
    throw UnsupportedGroup(group + " has no printed covering rows");
  }
  return rows;
}

MPoly descend(const MPoly& f, const CoveringMap& pi) {
  const GroupData& g = *pi.target;
  const Ring& xr = g.x_ring;
  MPoly out(xr);
  if (f.is_zero()) return out;
  // Split into homogeneous parts.
  std::map<int, MPoly> parts;
  for (const auto& t : f.terms()) {
    auto it = parts.try_emplace(t.wdeg, MPoly(f.ring())).first;
    it->second += MPoly::from_terms(f.ring(), {t});
  }
  // powers[a][k] = images[a]^k
  std::vector<std::vector<MPoly>> powers(static_cast<std::size_t>(g.rank));
  auto power = [&](int a, int k) -> const MPoly& {
    auto& row = powers[static_cast<std::size_t>(a)];
    if (row.empty()) row.emplace_back(f.ring(), CycNum(1));
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * pi.images[a]);
    return row[static_cast<std::size_t>(k)];
  };
  for (const auto& [w, part] : parts) {
    std::vector<std::vector<int>> monos = weighted_exponents(g.degrees, w);
    if (monos.empty()) throw NotEquivariant("no invariant monomial of degree " + std::to_string(w));
    std::vector<MPoly> pulled;
    std::map<std::vector<int>, int> rows;
    auto row_of = [&](const Monomial& m) {
      std::vector<int> key(m.e.begin(), m.e.end());
      return rows.try_emplace(key, static_cast<int>(rows.size())).first->second;
    };
    for (const auto& e : monos) {
      MPoly p(f.ring(), CycNum(1));
      for (int a = 0; a < g.rank; ++a) {
        if (e[a] > 0) p = p * power(a, e[a]);
      }
      for (const auto& t : p.terms()) row_of(t.m);
      pulled.push_back(std::move(p));
    }
    for (const auto& t : part.terms()) row_of(t.m);
    Matrix<CycNum> a(static_cast<int>(rows.size()), static_cast<int>(monos.size()), CycNum());
    std::vector<CycNum> rhs(rows.size(), CycNum());
    for (std::size_t j = 0; j < pulled.size(); ++j) {
      for (const auto& t : pulled[j].terms()) a(row_of(t.m), static_cast<int>(j)) = t.c;
    }
    for (const auto& t : part.terms()) rhs[static_cast<std::size_t>(row_of(t.m))] = t.c;
    std::vector<CycNum> sol;
    try {
      sol = linsolve(a, rhs).particular;
    } catch (const Inconsistent&) {
      throw NotEquivariant("polynomial of degree " + std::to_string(w) +
                           " is not a pullback along " + pi.label);
    }
    for (std::size_t j = 0; j < monos.size(); ++j) {
      if (!sol[j].is_zero()) out += MPoly::monomial(xr, monos[j], sol[j]);
    }
  }
  return out;
}

CoveringGeometry covering_geometry(const CoveringMap& pi) {
  CoveringGeometry geo;
  geo.jacobian = coordinate_jacobian(pi.images);
  const Ring& xr = pi.target->x_ring;
  MPoly dj = det(geo.jacobian);
  if (dj.is_zero()) throw std::invalid_argument("covering map is degenerate");
  if (dj.is_constant()) {
    geo.branch = MPoly(xr, CycNum(1));
    return geo;
  }
  if (dj.size() != 1) throw std::invalid_argument("covering Jacobian is not a monomial");
  const Term& t = dj.lead();
  int j = -1;
  for (int i = 0; i < dj.nvars(); ++i) {
    if (t.m.e[i] == 0) continue;
    if (j >= 0) throw std::invalid_argument("covering Jacobian involves several variables");
    j = i;
  }
  const Ring& yr = pi.source->x_ring;
  for (int k = 1; k <= t.m.e[j] + 1; ++k) {
    try {
      MPoly b = descend(MPoly::var(yr, j).pow(static_cast<unsigned>(k)), pi);
      geo.branch = b.scaled(b.lead_coeff().inv());
      geo.branch_var = j;
      geo.branch_power = k;
      return geo;
    } catch (const NotEquivariant&) {
    }
  }
  throw std::invalid_argument("branch divisor of " + pi.label + " is not a pullback");
}

std::string pole_kind_name(PoleKind k) {
  switch (k) {
    case PoleKind::Polynomial: return "polynomial";
    case PoleKind::Logarithmic: return "logarithmic";
    case PoleKind::Worse: return "worse";
  }
  return "";
}

bool PoleReport::only_logarithmic() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const PoleEntry& e) { return e.kind == PoleKind::Worse; });
}

std::vector<const PoleEntry*> PoleReport::logarithmic() const {
  std::vector<const PoleEntry*> out;
  for (const auto& e : entries) {
    if (e.kind == PoleKind::Logarithmic) out.push_back(&e);
  }
  return out;
}

Pushforward pushforward(const SaitoData& s, const CoveringMap& pi) {
  const GroupData& g = *pi.target;
  const Ring& xr = g.x_ring;
  int n = g.rank;
  CoveringGeometry geo = covering_geometry(pi);
  SaitoData c = frame_components(s, pi.images);
  MPoly bpull = geo.branch.substitute(pi.images);

  Pushforward out;
  out.poles.divisor = geo.branch;
  SaitoData& t = out.induced;
  t.group = g.name;
  t.ring = xr;
  t.degrees = g.degrees;
  t.frame_u = g.invariants;
  for (int a = 0; a < n; ++a) {
    MatR cm = zeros(xr, n);
    MatR gm = zeros(xr, n);
    for (int gg = 0; gg < n; ++gg) {
      for (int b = 0; b < n; ++b) {
        const RatFn& cv = c.C[a](gg, b);
        if (!cv.is_zero()) {
          MPoly q;
          if (try_exact_div(cv.num(), cv.den(), &q)) {
            cm(gg, b) = RatFn(descend(q, pi));
          } else {
            out.multiplication_polynomial = false;
          }
        }
        const RatFn& gv = c.Gamma[a](gg, b);
        if (gv.is_zero()) continue;
        PoleEntry pe;
        pe.alpha = a;
        pe.beta = b;
        pe.gamma = gg;
        RatFn cleared = gv * RatFn(bpull);
        MPoly q;
        if (!try_exact_div(cleared.num(), cleared.den(), &q)) {
          pe.kind = PoleKind::Worse;
          out.poles.entries.push_back(std::move(pe));
          continue;
        }
        pe.numerator = descend(q, pi);
        pe.kind = try_exact_div(pe.numerator, geo.branch, nullptr) ? PoleKind::Polynomial
                                                                   : PoleKind::Logarithmic;
        gm(gg, b) = RatFn(pe.numerator, geo.branch);
        out.poles.entries.push_back(std::move(pe));
      }
    }
    t.C.push_back(std::move(cm));
    t.Gamma.push_back(std::move(gm));
  }
  for (int a = 0; a < n; ++a) {
    t.E.push_back(RatFn(descend(c.E[a].to_poly(), pi)));
    t.e.push_back(RatFn(descend(c.e[a].to_poly(), pi)));
  }
  return out;
}

bool CoveringRowReport::ok() const { return first_failure() == nullptr; }

const CoveringCheck* CoveringRowReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

std::vector<MatR> pull(const std::vector<MatR>& ms, const std::vector<MPoly>& images,
                       const Ring& target) {
  std::vector<MatR> out;
  for (const auto& m : ms) {
    out.push_back(m.map([&](const RatFn& f) {
      return f.is_zero() ? zero_r(target) : f.substitute(images);
    }));
  }
  return out;
}

}  // namespace

CoveringRowReport verify_covering_row(const CoveringMap& pi) {
  const GroupData& g = *pi.target;
  const GroupData& k = *pi.source;
  int n = g.rank;
  const Ring& yr = k.x_ring;
  CoveringRowReport rep;
  rep.group = g.name;
  rep.source = k.name;
  rep.label = pi.label;
  rep.e = pi.e;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  bool deg_ok = static_cast<int>(pi.images.size()) == n;
  for (int a = 0; a < n && deg_ok; ++a) {
    deg_ok = pi.images[a].is_homogeneous() && pi.images[a].weighted_degree() == g.degrees[a];
  }
  if (!add("degrees", deg_ok, "images are homogeneous of the target degrees")) return rep;
  if (!add("top degree", k.degrees[0] == g.degrees[0], "d_1 of K equals d_1 of G")) return rep;

  std::vector<MPoly> yinv = pi.source_invariants();
  bool inv_ok = true;
  for (int a = 0; a < n && inv_ok; ++a) inv_ok = pi.images[a].substitute(yinv) == g.invariants[a];
  add("invariants", inv_ok, "x(y(u)) equals the basic invariants of G");

  OmegaFamily om_g = natural_connection(pi.target);
  NaturalTest nat = natural_ass_test(om_g, pi.e);
  add("natural test", nat.verdict == Verdict::Natural, verdict_name(nat.verdict));

  SaitoData sk = natural_saito(pi.source);
  CycNum r(1, g.degrees[0]);
  AlmostSaitoData ak = dual_almost(sk, CycNum(), r);
  AlmostSaitoData pushed = frame_components(ak, pi.images);
  add("natural connection", pushed.Omega == pull(om_g.omegas(), pi.images, yr),
      "pushforward of the natural connection of K");
  if (nat.verdict == Verdict::Natural) {
    add("almost multiplication", pushed.B == pull(nat.structure.B, pi.images, yr),
        "pushforward of the natural almost multiplication of K");
  }

  try {
    rep.push = pushforward(sk, pi);
  } catch (const NotEquivariant& ex) {
    add("equivariance", false, ex.what());
    return rep;
  }
  const SaitoData& t = rep.push.induced;
  add("multiplication polynomial", rep.push.multiplication_polynomial);
  std::string logs;
  for (const PoleEntry* p : rep.push.poles.logarithmic()) {
    logs += " (" + std::to_string(p->gamma + 1) + "," + std::to_string(p->alpha + 1) + "," +
            std::to_string(p->beta + 1) + ")";
  }
  add("logarithmic poles", rep.push.poles.only_logarithmic(),
      "divisor " + rep.push.poles.divisor.to_string() + ", entries" + logs);
  bool unit_ok = true;
  for (int a = 0; a < n; ++a) unit_ok = unit_ok && t.e[a] == const_r(g.x_ring, pi.e[a]);
  add("unit line", unit_ok, "pushforward of d/dy^1 is the printed e");
  bool euler_ok = true;
  for (int a = 0; a < n; ++a) {
    euler_ok = euler_ok &&
               t.E[a] == RatFn(MPoly::var(g.x_ring, a).scaled(CycNum(g.degrees[a], g.degrees[0])));
  }
  add("Euler field", euler_ok, "E_deg / d_1");
  if (!rep.push.multiplication_polynomial || !rep.push.poles.only_logarithmic()) return rep;
  ResidualReport ss = check_ss(t);
  add("Saito axioms", ss.ok(), ss.ok() ? "" : ss.first_failure()->name);
  if (!ss.ok()) return rep;
  AlmostSaitoData dual = dual_almost(t, CycNum(), r);
  add("dual connection", dual.Omega == om_g.omegas(), "dual of the induced structure");
  return rep;
}

std::vector<CoveringRowReport> verify_covering_table(const std::string& group) {
  std::vector<CoveringRowReport> out;
  for (const auto& pi : covering_rows(group)) {
    CoveringRowReport r = verify_covering_row(pi);
    if (const CoveringCheck* f = r.first_failure()) {
      throw TableMismatch(group + " row " + pi.label + ": " + f->name + " " + f->detail);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---- line search ----

namespace {

// Dense univariate polynomial, coefficients by ascending degree.
using UPoly = std::vector<CycNum>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of a by b; the quotient goes to *q when given.
UPoly urem(UPoly a, const UPoly& b, UPoly* q = nullptr) {
  trim(a);
  if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, CycNum());
  CycNum inv = b.back().inv();
  while (udeg(a) >= udeg(b)) {
    CycNum c = a.back() * inv;
    std::size_t shift = a.size() - b.size();
    if (q) (*q)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return a;
}

UPoly umonic(UPoly p) {
  trim(p);
  CycNum inv = p.back().inv();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : umonic(a);
}

UPoly uderiv(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * CycNum(static_cast<long>(i)));
  trim(d);
  return d;
}

long legendre(long a, long p) {
  long r = 1, base = ((a % p) + p) % p;
  for (long e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return r == 1 ? 1 : -1;
}

// sqrt of a prime p as an element of a cyclotomic field, from the quadratic
// Gauss sum.
CycNum sqrt_prime(long p) {
  if (p == 2) return CycNum::sqrt2();
  CycNum g;
  for (long a = 1; a < p; ++a) g += CycNum(legendre(a, p)) * CycNum::zeta(static_cast<int>(p), a);
  // g^2 = (-1)^((p-1)/2) p
  return p % 4 == 1 ? g : -(CycNum::i() * g);
}

CycNum sqrt_integer(const mpz_class& m) {
  mpz_class v = abs(m);
  CycNum out(1);
  mpz_class square = 1;
  for (long p = 2; mpz_class(p) * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2 == 1) out *= sqrt_prime(p);
  }
  if (v > 1) {
    if (!v.fits_slong_p()) throw UnsupportedGroup("square root of a large prime");
    out *= sqrt_prime(v.get_si());
  }
  out *= CycNum(mpq_class(square));
  if (m < 0) out *= CycNum::i();
  return out;
}

CycNum exact_sqrt(const CycNum& d) {
  if (!d.is_rational()) throw UnsupportedGroup("line search: irrational discriminant");
  mpq_class q = d.rational();
  CycNum s = sqrt_integer(q.get_num() * q.get_den()) * CycNum(mpq_class(1, 1) / q.get_den());
  if (s * s != d) throw PropertyViolation("square root failed");
  return s;
}

std::vector<CycNum> uroots(UPoly g) {
  std::vector<CycNum> out;
  trim(g);
  if (udeg(g) < 1) return out;
  UPoly q;
  urem(g, ugcd(g, uderiv(g)), &q);
  g = umonic(q);
  while (udeg(g) >= 1) {
    if (g[0].is_zero()) {
      out.emplace_back();
      g.erase(g.begin());
      continue;
    }
    if (udeg(g) == 1) {
      out.push_back(-g[0] / g[1]);
      break;
    }
    if (udeg(g) == 2) {
      CycNum disc = g[1] * g[1] - CycNum(4) * g[0] * g[2];
      CycNum s = exact_sqrt(disc);
      CycNum two_a = CycNum(2) * g[2];
      out.push_back((-g[1] + s) / two_a);
      out.push_back((-g[1] - s) / two_a);
      break;
    }
    throw UnsupportedGroup("line search: gcd of degree " + std::to_string(udeg(g)));
  }
  return out;
}

}  // namespace

std::string ELine::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += " : ";
    s += coords[i].to_string();
  }
  return s + "]";
}

LineSearch find_natural_e_lines(const GroupPtr& gp) {
  const GroupData& g = *gp;
  int n = g.rank;
  std::vector<int> block;
  for (int a = 0; a < n; ++a) {
    if (g.degrees[a] == g.degrees[0]) block.push_back(a);
  }
  OmegaFamily om = natural_connection(gp);
  LineSearch out;
  auto to_line = [&](const std::vector<CycNum>& e) {
    ELine l;
    for (int b : block) l.coords.push_back(e[b]);
    return l;
  };
  auto confirm = [&](const std::vector<CycNum>& e) {
    NaturalTest t = natural_ass_test(om, e);
    if (t.verdict == Verdict::NotRegular) {
      throw RegularityFailure(g.name + ": line " + to_line(e).to_string() + " is not regular");
    }
    return t.verdict == Verdict::Natural;
  };
  if (block.size() == 1) {
    std::vector<CycNum> e(static_cast<std::size_t>(n), CycNum());
    e[0] = CycNum(1);
    if (confirm(e)) out.lines.push_back(to_line(e));
    return out;
  }
  if (block.size() != 2) throw UnsupportedGroup(g.name + ": top degree multiplicity above two");

  std::vector<std::string> names = g.x_ring->names;
  std::vector<int> weights = g.x_ring->weights;
  names.push_back("a");
  names.push_back("b");
  weights.push_back(0);
  weights.push_back(0);
  Ring ring = make_ring(names, weights);
  int ia = n, ib = n + 1;
  std::vector<MPoly> e(static_cast<std::size_t>(n), MPoly(ring));
  e[block[0]] = MPoly::var(ring, ia);
  e[block[1]] = MPoly::var(ring, ib);
  NaturalResiduals res = natural_residuals(om, e, ring);
  if (res.det_pe.is_zero()) throw RegularityFailure(g.name + ": no regular unit field");

  std::vector<bool> outer(static_cast<std::size_t>(n + 2), true);
  outer[ia] = outer[ib] = false;
  // Binary form in (a, b) as coefficients of a^i b^(d-i).
  auto forms_of = [&](const MPoly& p, std::vector<UPoly>& sink) {
    for (const auto& [mono, coeff] : p.collect(outer)) {
      int d = -1;
      UPoly f;
      for (const auto& t : coeff.terms()) {
        int da = t.m.e[ia], db = t.m.e[ib];
        if (d < 0) d = da + db;
        if (da + db != d) throw PropertyViolation("residual is not homogeneous in (a, b)");
        if (f.size() <= static_cast<std::size_t>(da)) f.resize(static_cast<std::size_t>(da) + 1);
        f[static_cast<std::size_t>(da)] = t.c;
      }
      f.resize(static_cast<std::size_t>(d) + 1);
      sink.push_back(std::move(f));
    }
  };
  std::vector<UPoly> forms;
  for (const auto* group : {&res.ass1, &res.ass2}) {
    for (const auto& m : *group) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) forms_of(m(i, j), forms);
      }
    }
  }
  out.forms = forms.size();
  for (const auto& f : forms) out.max_degree = std::max(out.max_degree, udeg(f));

  std::vector<std::vector<CycNum>> candidates;
  // [1 : 0]: every form has a vanishing a^d coefficient.
  bool at_infinity = std::all_of(forms.begin(), forms.end(),
                                 [](const UPoly& f) { return f.back().is_zero(); });
  if (at_infinity) candidates.push_back({CycNum(1), CycNum()});
  // b = 1: roots of the gcd of the dehomogenized forms.
  UPoly gcd;
  for (const auto& f : forms) {
    gcd = ugcd(gcd, f);
    if (udeg(gcd) == 0) break;
  }
  out.gcd_degree = std::max(0, udeg(gcd));
  if (!forms.empty() && out.gcd_degree > 0) {
    for (const CycNum& s : uroots(gcd)) candidates.push_back({s, CycNum(1)});
  } else if (forms.empty()) {
    throw UnsupportedGroup(g.name + ": every unit field is natural");
  }

  for (const auto& c : candidates) {
    std::vector<CycNum> full(static_cast<std::size_t>(n), CycNum());
    full[block[0]] = c[0];
    full[block[1]] = c[1];
    if (!confirm(full)) {
      throw PropertyViolation(g.name + ": line " + to_line(full).to_string() +
                              " solves the residual system but fails the direct test");
    }
    out.lines.push_back(to_line(full));
  }
  return out;
}

std::vector<MPoly> adjusted_invariants(const GroupData& g, const GroupData& k) {
  if (k.degrees[0] != g.degrees[0]) {
    throw AssumptionViolated("top degrees of " + k.name + " and " + g.name + " differ");
  }
  int top = 0;
  for (int d : k.degrees) top += d == k.degrees[0] ? 1 : 0;
  if (top > 1) {
    auto q = quotient_elements(g, k);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        Matrix<CycNum> ab = q[i] * q[j], ba = q[j] * q[i];
        for (const auto& y : k.invariants) {
          if (act(ab, y) != act(ba, y)) {
            throw AssumptionViolated(g.name + "/" + k.name + " is not abelian");
          }
        }
      }
    }
  }
  return semi_invariant_basis(g, k).invariants;
}

}  // namespace sf
