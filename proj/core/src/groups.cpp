#include "saitoforge/groups.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "saitoforge/errors.hpp"
#include "saitoforge/linsolve.hpp"

namespace sf {

std::string GroupSpec::name() const {
  if (st != 0) return "G" + std::to_string(st);
  return "G(" + std::to_string(m) + "," + std::to_string(p) + "," +
         std::to_string(n) + ")";
}

GroupSpec parse_group_spec(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto fail = [&]() { return UnsupportedGroup("cannot parse group name '" + text + "'"); };
  if (s.size() < 2 || (s[0] != 'G' && s[0] != 'g')) throw fail();
  GroupSpec spec;
  try {
    if (s[1] == '(') {
      if (s.back() != ')') throw fail();
      std::string body = s.substr(2, s.size() - 3);
      std::vector<int> parts;
      std::size_t start = 0;
      while (true) {
        std::size_t comma = body.find(',', start);
        std::string piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty() || !std::all_of(piece.begin(), piece.end(), ::isdigit)) throw fail();
        parts.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (parts.size() != 3) throw fail();
      spec.m = parts[0];
      spec.p = parts[1];
      spec.n = parts[2];
    } else {
      std::string digits = s.substr(1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) throw fail();
      spec.st = std::stoi(digits);
    }
  } catch (const std::out_of_range&) {
    throw fail();
  }
  return spec;
}

bool GroupData::discriminant_monic_in_x1() const {
  int d = discriminant_x.degree_in(0);
  if (d < 0) return false;
  MPoly lead = discriminant_x.coeff_in(0, d);
  return lead.is_constant() && lead.constant().is_one();
}

bool GroupData::is_duality_group() const {
  for (int d : degrees) {
    if (d <= 1) return false;
  }
  return x1_degree_of_discriminant() == rank && discriminant_monic_in_x1();
}

namespace {

using Mat = Matrix<CycNum>;

Mat mat2(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) {
  Mat m(2, 2, CycNum());
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Mat inverse_cyc(const Mat& m) {
  CycNum d = det(m);
  return d.inv() * adjugate(m);
}

// Named generator matrices.
struct Generators {
  CycNum i = CycNum::i();
  CycNum z3 = CycNum::zeta(3);
  Mat rho = mat2(0, 1, 1, 0);
  Mat r = mat2(1, 0, 0, -1);
  Mat r1 = (z3 * CycNum(1, 2)) * mat2(CycNum(-1) - i, CycNum(1) - i, CycNum(-1) - i, CycNum(-1) + i);
  Mat r2 = (z3 * CycNum(1, 2)) * mat2(CycNum(-1) + i, CycNum(-1) + i, CycNum(1) + i, CycNum(-1) - i);
  Mat s = mat2(CycNum::zeta(8, -1), 0, 0, CycNum::zeta(8));
  Mat r3 = (CycNum::sqrt2() * CycNum(1, 2)) * mat2(1, -1, -1, -1);
  Mat r4 = mat2(1, 0, 0, i);
  Mat r5 = r5_matrix();

  Mat r5_matrix() const {
    CycNum t = CycNum::golden();
    CycNum pre = CycNum::zeta(5, 2) * CycNum(1, 2);
    return pre * mat2(-t + i, -t + CycNum(1), t - CycNum(1), -t - i);
  }
  static Mat tau(int m) { return mat2(CycNum::zeta(m), 0, 0, 1); }
  Mat sigma(int m) const { return inverse_cyc(tau(m)) * rho * tau(m); }
};

const Generators& gens() {
  static const Generators g;
  return g;
}

MPoly elementary(const std::vector<MPoly>& xs, int k, const Ring& r) {
  // Coefficient of t^k in prod (1 + t x_i).
  std::vector<MPoly> e(xs.size() + 1, MPoly(r));
  e[0] = MPoly(r, CycNum(1));
  for (const auto& x : xs) {
    for (std::size_t j = xs.size(); j >= 1; --j) e[j] += e[j - 1] * x;
  }
  return e[static_cast<std::size_t>(k)];
}

struct Exceptional {
  Ring r;
  MPoly u, v;
  MPoly fT, hT, tT, fO, hO, tO, fI, hI, tI;

  Exceptional() {
    r = make_ring({"u", "v"}, {1, 1});
    u = MPoly::var(r, 0);
    v = MPoly::var(r, 1);
    CycNum is3 = CycNum::i_sqrt3();
    auto mono = [&](int a, int b) { return u.pow(a) * v.pow(b); };
    fT = mono(4, 0) + CycNum(2) * is3 * mono(2, 2) + mono(0, 4);
    hT = mono(4, 0) - CycNum(2) * is3 * mono(2, 2) + mono(0, 4);
    tT = mono(5, 1) - mono(1, 5);
    fO = mono(5, 1) - mono(1, 5);
    hO = mono(8, 0) + CycNum(14) * mono(4, 4) + mono(0, 8);
    tO = mono(12, 0) - CycNum(33) * mono(8, 4) - CycNum(33) * mono(4, 8) + mono(0, 12);
    CycNum s5 = CycNum::sqrt5();
    CycNum c = CycNum(22) * s5.inv();
    fI = mono(12, 0) + c * mono(10, 2) - CycNum(33) * mono(8, 4) -
         CycNum(2) * c * mono(6, 6) - CycNum(33) * mono(4, 8) + c * mono(2, 10) +
         mono(0, 12);
    MPoly hess = fI.diff(0).diff(0) * fI.diff(1).diff(1) - fI.diff(0).diff(1).pow(2);
    hI = (s5 * CycNum(1, 5808)) * hess;
    MPoly jac = fI.diff(0) * hI.diff(1) - fI.diff(1) * hI.diff(0);
    tI = -(CycNum(480) * s5).inv() * jac;
  }
};

const Exceptional& exc() {
  static const Exceptional e;
  return e;
}

struct ExceptionalRow {
  int st;
  int d1, d2;
  std::function<MPoly(const Exceptional&)> x, y, delta;
  std::vector<std::string> words;
};

Mat word_matrix(const std::string& word) {
  const Generators& g = gens();
  std::map<std::string, Mat> named = {{"rho", g.rho}, {"r", g.r},   {"r1", g.r1},
                                      {"r2", g.r2},   {"s", g.s},   {"r3", g.r3},
                                      {"r4", g.r4},   {"r5", g.r5}};
  Mat out = Mat::identity(2, CycNum());
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t end = word.find(' ', pos);
    std::string tok = word.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? word.size() : end + 1;
    if (tok.empty()) continue;
    int power = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      power = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    Mat base = named.at(tok);
    if (power < 0) {
      base = inverse_cyc(base);
      power = -power;
    }
    for (int k = 0; k < power; ++k) out = out * base;
  }
  return out;
}

const std::vector<ExceptionalRow>& exceptional_rows() {
  using E = Exceptional;
  static const std::vector<ExceptionalRow> rows = {
      {4, 6, 4, [](const E& e) { return e.tT; }, [](const E& e) { return e.fT; },
       [](const E& e) { return e.hT.pow(3); }, {"r1", "r r1 r^-1"}},
      {5, 12, 6, [](const E& e) { return e.fT.pow(3); }, [](const E& e) { return e.tT; },
       [](const E& e) { return e.fT.pow(3) * e.hT.pow(3); }, {"r1", "r r2 r"}},
      {6, 12, 4, [](const E& e) { return e.tT.pow(2); }, [](const E& e) { return e.fT; },
       [](const E& e) { return e.hT.pow(3) * e.tT.pow(2); }, {"r", "r1"}},
      {7, 12, 12, [](const E& e) { return e.fT.pow(3); }, [](const E& e) { return e.tT.pow(2); },
       [](const E& e) { return e.fT.pow(3) * e.hT.pow(3) * e.tT.pow(2); }, {"r", "r1", "r2"}},
      {8, 12, 8, [](const E& e) { return e.tO; }, [](const E& e) { return e.hO; },
       [](const E& e) { return e.fO.pow(4); }, {"r4", "r1 r4 r1^-1"}},
      {9, 24, 8, [](const E& e) { return e.tO.pow(2); }, [](const E& e) { return e.hO; },
       [](const E& e) { return e.fO.pow(4) * e.tO.pow(2); }, {"r3", "r4"}},
      {10, 24, 12, [](const E& e) { return e.hO.pow(3); }, [](const E& e) { return e.tO; },
       [](const E& e) { return e.fO.pow(4) * e.hO.pow(3); }, {"r1", "r3^-1 r4 r3"}},
      {11, 24, 24, [](const E& e) { return e.hO.pow(3); }, [](const E& e) { return e.tO.pow(2); },
       [](const E& e) { return e.fO.pow(4) * e.hO.pow(3) * e.tO.pow(2); }, {"r1", "r3", "r4"}},
      {12, 8, 6, [](const E& e) { return e.hO; }, [](const E& e) { return e.fO; },
       [](const E& e) { return e.tO.pow(2); }, {"r3", "r r3 r", "r1 r3 r1^-1"}},
      {13, 12, 8, [](const E& e) { return e.fO.pow(2); }, [](const E& e) { return e.hO; },
       [](const E& e) { return e.fO.pow(2) * e.tO.pow(2); }, {"r", "r3", "r1 r3 r1^-1"}},
      {14, 24, 6, [](const E& e) { return e.tO.pow(2); }, [](const E& e) { return e.fO; },
       [](const E& e) { return e.hO.pow(3) * e.tO.pow(2); }, {"r1", "r4^2 r3 r4^2"}},
      {15, 24, 12, [](const E& e) { return e.tO.pow(2); }, [](const E& e) { return e.fO.pow(2); },
       [](const E& e) { return e.fO.pow(2) * e.hO.pow(3) * e.tO.pow(2); }, {"r", "r1", "r3"}},
      {16, 30, 20, [](const E& e) { return e.tI; }, [](const E& e) { return e.hI; },
       [](const E& e) { return e.fI.pow(5); }, {"r5", "r r5 r"}},
      {17, 60, 20, [](const E& e) { return e.tI.pow(2); }, [](const E& e) { return e.hI; },
       [](const E& e) { return e.fI.pow(5) * e.tI.pow(2); }, {"r", "r5"}},
      {18, 60, 30, [](const E& e) { return e.hI.pow(3); }, [](const E& e) { return e.tI; },
       [](const E& e) { return e.fI.pow(5) * e.hI.pow(3); }, {"r1^2", "r5"}},
      {19, 60, 60, [](const E& e) { return e.hI.pow(3); }, [](const E& e) { return e.tI.pow(2); },
       [](const E& e) { return e.fI.pow(5) * e.hI.pow(3) * e.tI.pow(2); }, {"r", "r1", "r5"}},
      {20, 30, 12, [](const E& e) { return e.tI; }, [](const E& e) { return e.fI; },
       [](const E& e) { return e.hI.pow(3); }, {"r1", "r5 r1 r5^-1"}},
      {21, 60, 12, [](const E& e) { return e.tI.pow(2); }, [](const E& e) { return e.fI; },
       [](const E& e) { return e.hI.pow(3) * e.tI.pow(2); }, {"r", "r5 r1 r5^-1"}},
      {22, 20, 12, [](const E& e) { return e.hI; }, [](const E& e) { return e.fI; },
       [](const E& e) { return e.tI.pow(2); }, {"r", "rho", "r5 r r5^-1"}},
  };
  return rows;
}

void finish(GroupData& g, const MPoly& table_delta_u) {
  for (std::size_t a = 0; a < g.invariants.size(); ++a) {
    auto w = verify_invariance(g.invariants[a], g);
    if (!w.invariant) {
      throw NotInvariant(g.name + ": invariant " + std::to_string(a + 1) +
                         " moved by generator " + g.generator_names[static_cast<std::size_t>(w.generator)]);
    }
  }
  int d1 = g.degrees[0];
  g.max_deg_multiplicity = static_cast<int>(std::count(g.degrees.begin(), g.degrees.end(), d1));
  g.table_discriminant_u = table_delta_u;
  g.table_discriminant_x = invariant_reduce(table_delta_u, g);
  int k = g.table_discriminant_x.degree_in(0);
  MPoly lead = g.table_discriminant_x.coeff_in(0, k);
  g.table_scale = lead.is_constant() ? lead.constant() : CycNum(1);
  CycNum inv = g.table_scale.inv();
  g.discriminant_u = g.table_discriminant_u.scaled(inv);
  g.discriminant_x = g.table_discriminant_x.scaled(inv);
  if (g.discriminant_x.substitute(g.invariants) != g.discriminant_u) {
    throw PropertyViolation(g.name + ": discriminant does not pull back to delta");
  }
}

GroupData build_monomial(const GroupSpec& spec) {
  int m = spec.m, p = spec.p, n = spec.n;
  if (m < 1 || p < 1 || m % p != 0) {
    throw UnsupportedGroup(spec.name() + ": need p dividing m");
  }
  if (n < 2 || n > 3) throw UnsupportedGroup(spec.name() + ": rank must be 2 or 3");
  if (m == 1 || (m == 2 && p == 2 && n == 2)) {
    throw ReducibleGroup(spec.name() + " is not irreducible");
  }
  GroupData g;
  g.spec = spec;
  g.name = spec.name();
  g.rank = n;
  std::vector<std::string> un = n == 2 ? std::vector<std::string>{"u", "v"}
                                       : std::vector<std::string>{"u", "v", "w"};
  g.u_ring = make_ring(un, std::vector<int>(static_cast<std::size_t>(n), 1));
  std::vector<MPoly> us, ums;
  for (int i = 0; i < n; ++i) {
    us.push_back(MPoly::var(g.u_ring, i));
    ums.push_back(us.back().pow(static_cast<unsigned>(m)));
  }
  // Ascending convention x^i = sigma_{n-i}, x^n = e_n(u)^(m/p), then a stable
  // sort by descending degree.
  struct Inv {
    MPoly poly;
    int degree;
    bool is_sigma_n;
  };
  std::vector<Inv> inv;
  for (int i = 1; i <= n - 1; ++i) {
    int k = n - i;
    inv.push_back({elementary(ums, k, g.u_ring), k * m, false});
  }
  MPoly en = MPoly(g.u_ring, CycNum(1));
  for (const auto& u : us) en = en * u;
  inv.push_back({en.pow(static_cast<unsigned>(m / p)), n * m / p, true});
  std::stable_sort(inv.begin(), inv.end(), [](const Inv& a, const Inv& b) { return a.degree > b.degree; });
  for (std::size_t a = 0; a < inv.size(); ++a) {
    g.invariants.push_back(inv[a].poly);
    g.degrees.push_back(inv[a].degree);
    if (inv[a].is_sigma_n) g.sigma_n_index = static_cast<int>(a);
  }
  std::vector<std::string> xn = n == 2 ? std::vector<std::string>{"x", "y"}
                                       : std::vector<std::string>{"x", "y", "z"};
  g.x_ring = make_ring(xn, g.degrees);

  // Generators: transpositions, the conjugated transposition and diag(zeta^p).
  auto ident = Mat::identity(n, CycNum());
  auto swap = [&](int a, int b) {
    Mat s = ident;
    s(a, a) = 0;
    s(b, b) = 0;
    s(a, b) = 1;
    s(b, a) = 1;
    return s;
  };
  Mat tau = ident;
  tau(0, 0) = CycNum::zeta(m);
  Mat tau_inv = ident;
  tau_inv(0, 0) = CycNum::zeta(m, -1);
  g.generators.push_back(tau_inv * swap(0, 1) * tau);
  g.generator_names.push_back("sigma_" + std::to_string(m));
  if (p < m) {
    Mat t = ident;
    t(0, 0) = CycNum::zeta(m, p);
    g.generators.push_back(t);
    g.generator_names.push_back("tau_" + std::to_string(m) + "^" + std::to_string(p));
  }
  for (int i = 0; i + 1 < n; ++i) {
    g.generators.push_back(swap(i, i + 1));
    g.generator_names.push_back(n == 2 ? "rho" : "s" + std::to_string(i + 1) + std::to_string(i + 2));
  }

  MPoly delta(g.u_ring, CycNum(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) delta = delta * (ums[static_cast<std::size_t>(i)] - ums[static_cast<std::size_t>(j)]).pow(2);
  }
  if (p < m) delta = delta * en.pow(static_cast<unsigned>(m / p));
  finish(g, delta);
  return g;
}

GroupData build_exceptional(const GroupSpec& spec) {
  if (spec.st >= 23 && spec.st <= 37) {
    throw UnsupportedGroup(spec.name() + ": rank at least three exceptional groups are not tabulated");
  }
  const ExceptionalRow* row = nullptr;
  for (const auto& r : exceptional_rows()) {
    if (r.st == spec.st) row = &r;
  }
  if (!row) throw UnsupportedGroup(spec.name() + " is not a Shephard-Todd exceptional group");
  const Exceptional& e = exc();
  GroupData g;
  g.spec = spec;
  g.name = spec.name();
  g.rank = 2;
  g.degrees = {row->d1, row->d2};
  g.u_ring = e.r;
  g.x_ring = make_ring({"x", "y"}, g.degrees);
  g.invariants = {row->x(e), row->y(e)};
  for (const auto& w : row->words) {
    g.generators.push_back(word_matrix(w));
    g.generator_names.push_back(w);
  }
  finish(g, row->delta(e));
  return g;
}

}  // namespace

GroupData build_group(const GroupSpec& spec) {
  return spec.monomial() ? build_monomial(spec) : build_exceptional(spec);
}

GroupData build_group(const std::string& name) {
  return build_group(parse_group_spec(name));
}

GroupPtr make_group(const std::string& name) {
  return std::make_shared<const GroupData>(build_group(name));
}

std::vector<std::string> catalog_duality_rank2() {
  std::vector<std::string> out;
  for (int m = 2; m <= 6; ++m) out.push_back("G(" + std::to_string(m) + ",1,2)");
  for (int m = 3; m <= 6; ++m) out.push_back("G(" + std::to_string(m) + "," + std::to_string(m) + ",2)");
  for (int st : {4, 5, 6, 8, 9, 10, 14, 16, 17, 18, 20, 21}) out.push_back("G" + std::to_string(st));
  return out;
}

std::vector<std::string> catalog_rank3() {
  return {"G(2,1,3)", "G(3,1,3)", "G(2,2,3)", "G(3,3,3)"};
}

MPoly act(const Matrix<CycNum>& g, const MPoly& p) {
  const Ring& r = p.ring();
  int n = p.nvars();
  std::vector<MPoly> images;
  for (int i = 0; i < n; ++i) {
    MPoly s(r);
    for (int j = 0; j < n; ++j) {
      if (!g(i, j).is_zero()) s += g(i, j) * MPoly::var(r, j);
    }
    images.push_back(s);
  }
  return p.substitute(images);
}

InvarianceWitness verify_invariance(const MPoly& p, const GroupData& g) {
  InvarianceWitness w;
  for (std::size_t k = 0; k < g.generators.size(); ++k) {
    MPoly d = act(g.generators[k], p) - p;
    if (!d.is_zero()) {
      w.invariant = false;
      w.generator = static_cast<int>(k);
      w.difference = d;
      return w;
    }
  }
  return w;
}

BasisReducer::BasisReducer(std::vector<MPoly> basis, Ring target)
    : basis_(std::move(basis)), target_(std::move(target)), powers_(basis_.size()) {}

const MPoly& BasisReducer::power(std::size_t i, int k) {
  auto& cache = powers_[i];
  if (cache.empty()) cache.push_back(MPoly(basis_[i].ring(), CycNum(1)));
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * basis_[i]);
  return cache[static_cast<std::size_t>(k)];
}

MPoly BasisReducer::reduce(const MPoly& p) {
  if (p.is_zero()) return MPoly(target_);
  if (p.is_homogeneous()) return reduce_homogeneous(p);
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : p.terms()) parts[t.wdeg].push_back(t);
  MPoly out(target_);
  for (auto& [d, ts] : parts) out += reduce_homogeneous(MPoly::from_terms(p.ring(), ts));
  return out;
}

MPoly BasisReducer::reduce_homogeneous(const MPoly& p) {
  int deg = p.weighted_degree();
  const auto& w = target_->weights;
  std::size_t n = basis_.size();
  std::vector<std::vector<int>> monos = weighted_exponents(w, deg);
  if (monos.empty()) throw NotInvariant("no basis monomial of degree " + std::to_string(deg));
  std::vector<MPoly> images;
  for (const auto& e : monos) {
    MPoly img(p.ring(), CycNum(1));
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] > 0) img = img * power(i, e[i]);
    }
    images.push_back(std::move(img));
  }
  std::unordered_map<Monomial, int, MonomialHash> row_of;
  auto row = [&](const Monomial& m) {
    auto [it, inserted] = row_of.emplace(m, static_cast<int>(row_of.size()));
    return it->second;
  };
  for (const auto& img : images) {
    for (const auto& t : img.terms()) row(t.m);
  }
  for (const auto& t : p.terms()) row(t.m);
  Matrix<CycNum> a(static_cast<int>(row_of.size()), static_cast<int>(monos.size()), CycNum());
  std::vector<CycNum> b(row_of.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (const auto& t : images[c].terms()) a(row_of.at(t.m), static_cast<int>(c)) = t.c;
  }
  for (const auto& t : p.terms()) b[static_cast<std::size_t>(row_of.at(t.m))] = t.c;
  LinSolution sol;
  try {
    sol = linsolve(a, b);
  } catch (const Inconsistent&) {
    throw NotInvariant("polynomial is not in the span of the basis monomials");
  }
  if (!sol.unique()) throw NotInvariant("basis is not algebraically independent");
  MPoly out(target_);
  for (std::size_t c = 0; c < monos.size(); ++c) {
    if (!sol.particular[c].is_zero()) out += MPoly::monomial(target_, monos[c], sol.particular[c]);
  }
  return out;
}

MPoly invariant_reduce(const MPoly& p, const GroupData& g) {
  BasisReducer r(g.invariants, g.x_ring);
  return r.reduce(p);
}

MPoly semi_invariant_project(const MPoly& z, const CharacterTable& q, std::size_t chi) {
  if (q.elements.empty()) return z;
  const auto& values = q.characters.at(chi);
  MPoly sum(z.ring());
  for (std::size_t k = 0; k < q.elements.size(); ++k) {
    sum += values[k].inv() * act(q.elements[k], z);
  }
  sum = sum.scaled(CycNum(1, static_cast<long>(q.elements.size())));
  if (sum.is_zero()) throw ZeroProjection("character is not realized on this degree slice");
  return sum;
}

std::vector<Matrix<CycNum>> quotient_elements(const GroupData& g, const GroupData& k) {
  auto key = [&](const Matrix<CycNum>& m) {
    std::string s;
    for (const auto& z : k.invariants) s += act(m, z).to_string() + "|";
    return s;
  };
  std::vector<Matrix<CycNum>> out = {Matrix<CycNum>::identity(g.rank, CycNum())};
  std::set<std::string> seen = {key(out[0])};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& gen : g.generators) {
      Matrix<CycNum> next = out[i] * gen;
      std::string kk = key(next);
      if (seen.insert(kk).second) out.push_back(next);
      if (out.size() > 512) throw AssumptionViolated("quotient is too large");
    }
  }
  return out;
}

SemiInvariantBasis semi_invariant_basis(const GroupData& g, const GroupData& k) {
  SemiInvariantBasis out;
  out.quotient.elements = quotient_elements(g, k);
  BasisReducer red(k.invariants, k.x_ring);
  int n = k.rank;
  for (int a = 0; a < n; ++a) {
    std::vector<CycNum> chi;
    for (const auto& el : out.quotient.elements) {
      MPoly image = red.reduce(act(el, k.invariants[static_cast<std::size_t>(a)]));
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(a)] = 1;
      CycNum c;
      for (const auto& t : image.terms()) {
        bool linear_other = false;
        int total = 0;
        for (int b = 0; b < n; ++b) total += t.m.e[b];
        if (total == 1 && t.m.e[a] == 0) linear_other = true;
        if (total == 1 && t.m.e[a] == 1) c = t.c;
        if (linear_other) {
          throw AssumptionViolated("degree slice of the K-invariants is not one dimensional");
        }
      }
      if (c.is_zero()) throw AssumptionViolated("quotient does not act by a character");
      chi.push_back(c);
    }
    out.quotient.characters.push_back(chi);
  }
  int top = k.degrees[0];
  for (int a = 0; a < n; ++a) {
    const MPoly& z = k.invariants[static_cast<std::size_t>(a)];
    if (k.degrees[static_cast<std::size_t>(a)] != top) {
      out.invariants.push_back(z);
      continue;
    }
    MPoly y;
    try {
      y = semi_invariant_project(z, out.quotient, static_cast<std::size_t>(a));
    } catch (const ZeroProjection&) {
      throw AssumptionViolated("projection of a top degree invariant vanished");
    }
    if (k.degrees[0] == g.degrees[0] && !verify_invariance(y, g).invariant) {
      throw AssumptionViolated("top degree invariant is not G-invariant");
    }
    out.invariants.push_back(y);
  }
  return out;
}

}  // namespace sf
