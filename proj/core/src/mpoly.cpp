#include "saitoforge/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "saitoforge/errors.hpp"

namespace sf {

std::vector<std::vector<int>> weighted_exponents(const std::vector<int>& weights, int deg) {
  std::vector<std::vector<int>> out;
  if (deg < 0) return out;
  std::size_t n = weights.size();
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (weights[i] <= 0) throw std::invalid_argument("weighted_exponents needs positive weights");
    for (int k = 0; k * weights[i] <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k * weights[i]);
    }
    cur[i] = 0;
  };
  rec(0, deg);
  return out;
}

Ring make_ring(std::vector<std::string> names, std::vector<int> weights) {
  if (names.size() != weights.size()) {
    throw std::invalid_argument("ring: names and weights differ in length");
  }
  if (names.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("ring: too many variables");
  }
  for (int w : weights) {
    if (w < 0) throw std::invalid_argument("ring: negative weight");
  }
  return std::make_shared<const RingInfo>(
      RingInfo{std::move(names), std::move(weights)});
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names == b->names && a->weights == b->weights;
}

bool term_greater(const Term& a, const Term& b) {
  if (a.wdeg != b.wdeg) return a.wdeg > b.wdeg;
  return a.m.e > b.m.e;
}

namespace {

int wdeg_of(const RingInfo& r, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < r.weights.size(); ++i) d += r.weights[i] * m.e[i];
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = static_cast<unsigned>(a.e[i]) + b.e[i];
    if (s > 0xFFFFu) throw std::overflow_error("exponent overflow");
    out.e[i] = static_cast<std::uint16_t>(s);
  }
  return out;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (d.e[i] > m.e[i]) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) out.e[i] = m.e[i] - d.e[i];
  return out;
}

void sort_terms(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), term_greater);
}

}  // namespace

Ring MPoly::pick_ring(const Ring& a, const Ring& b) {
  if (!a) return b;
  if (!b) return a;
  if (!same_ring(a, b)) {
    throw RingMismatch("polynomials live in different rings");
  }
  return a;
}

MPoly::MPoly(Ring r, const CycNum& c) : ring_(std::move(r)) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial{}, 0, c});
}

MPoly MPoly::var(const Ring& r, int i) {
  std::vector<int> e(r->names.size(), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(r, e, CycNum(1));
}

MPoly MPoly::monomial(const Ring& r, const std::vector<int>& exps,
                      const CycNum& c) {
  MPoly p(r);
  if (c.is_zero()) return p;
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    m.e[i] = static_cast<std::uint16_t>(exps[i]);
  }
  p.terms_.push_back(Term{m, wdeg_of(*r, m), c});
  return p;
}

MPoly MPoly::from_terms(const Ring& r, std::vector<Term> terms) {
  std::unordered_map<Monomial, CycNum, MonomialHash> acc;
  for (auto& t : terms) acc[t.m] += t.c;
  MPoly p(r);
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back(Term{m, wdeg_of(*r, m), c});
  }
  sort_terms(p.terms_);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Monomial{});
}

CycNum MPoly::constant() const {
  if (!is_constant()) throw NotPolynomial("polynomial is not constant");
  return terms_.empty() ? CycNum() : terms_[0].c;
}

CycNum MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().m == Monomial{}) return terms_.back().c;
  return CycNum();
}

CycNum MPoly::lead_coeff() const {
  return terms_.empty() ? CycNum() : terms_.front().c;
}

int MPoly::weighted_degree() const {
  return terms_.empty() ? -1 : terms_.front().wdeg;
}

int MPoly::weighted_low_degree() const {
  return terms_.empty() ? -1 : terms_.back().wdeg;
}

bool MPoly::is_homogeneous() const {
  return terms_.empty() || terms_.front().wdeg == terms_.back().wdeg;
}

int MPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.e[var]);
  return d;
}

MPoly MPoly::coeff_in(int var, int k) const {
  MPoly out(ring_);
  for (const auto& t : terms_) {
    if (t.m.e[var] != k) continue;
    Term u = t;
    u.m.e[var] = 0;
    u.wdeg = wdeg_of(*ring_, u.m);
    out.terms_.push_back(std::move(u));
  }
  sort_terms(out.terms_);
  return out;
}

std::vector<std::pair<Monomial, MPoly>> MPoly::collect(
    const std::vector<bool>& outer) const {
  std::map<std::array<std::uint16_t, kMaxVars>, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Monomial key;
    Term inner = t;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      if (outer[i]) {
        key.e[i] = t.m.e[i];
        inner.m.e[i] = 0;
      }
    }
    inner.wdeg = wdeg_of(*ring_, inner.m);
    groups[key.e].push_back(std::move(inner));
  }
  std::vector<std::pair<Monomial, MPoly>> out;
  for (auto& [k, ts] : groups) {
    Monomial m;
    m.e = k;
    MPoly p(ring_);
    p.terms_ = std::move(ts);
    sort_terms(p.terms_);
    out.emplace_back(m, std::move(p));
  }
  return out;
}

MPoly MPoly::diff(int var) const {
  MPoly out(ring_);
  int w = ring_->weights.at(static_cast<std::size_t>(var));
  for (const auto& t : terms_) {
    int k = t.m.e[var];
    if (k == 0) continue;
    Term u = t;
    u.m.e[var] = static_cast<std::uint16_t>(k - 1);
    u.wdeg -= w;
    u.c = t.c * CycNum(k);
    out.terms_.push_back(std::move(u));
  }
  // Lowering one exponent can reorder terms only within equal weight blocks
  // when the weight is zero; sorting keeps the invariant in every case.
  sort_terms(out.terms_);
  return out;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(ring_, CycNum(1));
  MPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly MPoly::scaled(const CycNum& c) const {
  if (c.is_zero()) return MPoly(ring_);
  if (c.is_one()) return *this;
  MPoly out = *this;
  for (auto& t : out.terms_) t.c = t.c * c;
  return out;
}

MPoly MPoly::map_coeffs(const std::function<CycNum(const CycNum&)>& f) const {
  MPoly out(ring_);
  for (const auto& t : terms_) {
    CycNum c = f(t.c);
    if (!c.is_zero()) out.terms_.push_back(Term{t.m, t.wdeg, c});
  }
  return out;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != static_cast<std::size_t>(nvars())) {
    throw std::invalid_argument("substitute: wrong number of images");
  }
  Ring target;
  for (const auto& im : images) target = pick_ring(target, im.ring());
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly(target, CycNum(1)));
    while (static_cast<int>(cache.size()) <= k) {
      cache.push_back(cache.back() * images[i]);
    }
    return cache[static_cast<std::size_t>(k)];
  };
  std::unordered_map<Monomial, CycNum, MonomialHash> acc;
  for (const auto& t : terms_) {
    MPoly prod(target, t.c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.m.e[i] > 0) prod = prod * power(i, t.m.e[i]);
    }
    for (const auto& u : prod.terms_) acc[u.m] += u.c;
  }
  MPoly out(target);
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back(Term{m, wdeg_of(*target, m), c});
  }
  sort_terms(out.terms_);
  return out;
}

MPoly MPoly::embed(const Ring& target, const std::vector<int>& map) const {
  MPoly out(target);
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("embed: variable dropped");
      m.e[static_cast<std::size_t>(map[i])] += t.m.e[i];
    }
    out.terms_.push_back(Term{m, wdeg_of(*target, m), t.c});
  }
  sort_terms(out.terms_);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  ring_ = pick_ring(ring_, o.ring_);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[j];
    if (a.m == b.m) {
      CycNum c = a.c + b.c;
      if (!c.is_zero()) out.push_back(Term{a.m, a.wdeg, std::move(c)});
      ++i;
      ++j;
    } else if (term_greater(a, b)) {
      out.push_back(a);
      ++i;
    } else {
      out.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.c = -t.c;
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  Ring r = MPoly::pick_ring(a.ring_, b.ring_);
  MPoly out(r);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    const MPoly& big = a.terms_.size() == 1 ? b : a;
    const Term& t = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    out.terms_.reserve(big.terms_.size());
    for (const auto& u : big.terms_) {
      out.terms_.push_back(Term{mono_mul(u.m, t.m), u.wdeg + t.wdeg, u.c * t.c});
    }
    return out;
  }
  std::unordered_map<Monomial, CycNum, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) acc[mono_mul(x.m, y.m)] += x.c * y.c;
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back(Term{m, wdeg_of(*r, m), std::move(c)});
  }
  sort_terms(out.terms_);
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) {
      return false;
    }
  }
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string coeff;
    bool negative = false;
    if (t.c.is_rational()) {
      mpq_class q = t.c.rational();
      negative = q < 0;
      if (negative) q = -q;
      coeff = q.get_str();
    } else {
      coeff = t.c.to_string();
    }
    bool is_unit_monomial = t.m == Monomial{};
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (coeff != "1" || is_unit_monomial) {
      os << coeff;
      wrote = true;
    }
    for (int i = 0; i < nvars(); ++i) {
      int k = t.m.e[i];
      if (k == 0) continue;
      if (wrote) os << "*";
      os << ring_->names[static_cast<std::size_t>(i)];
      if (k > 1) os << "^" << k;
      wrote = true;
    }
  }
  return os.str();
}

bool try_exact_div(const MPoly& num, const MPoly& den, MPoly* quotient) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  Ring r = num.ring() ? num.ring() : den.ring();
  if (num.ring() && den.ring() && !same_ring(num.ring(), den.ring())) {
    throw RingMismatch("division across rings");
  }
  if (num.is_zero()) {
    if (quotient) *quotient = MPoly(r);
    return true;
  }
  const Term& dl = den.lead();
  CycNum inv_lc = dl.c.inv();
  if (den.size() == 1) {
    std::vector<Term> q;
    q.reserve(num.size());
    for (const auto& t : num.terms()) {
      if (!mono_divides(dl.m, t.m)) return false;
      q.push_back(Term{mono_div(t.m, dl.m), t.wdeg - dl.wdeg, t.c * inv_lc});
    }
    if (quotient) *quotient = MPoly::from_terms(r, std::move(q));
    return true;
  }
  // Cheap necessary conditions on per-variable degree ranges.
  int n = r ? static_cast<int>(r->names.size()) : 0;
  for (int i = 0; i < n; ++i) {
    int nmax = 0, nmin = 0xFFFF, dmax = 0, dmin = 0xFFFF;
    for (const auto& t : num.terms()) {
      nmax = std::max<int>(nmax, t.m.e[i]);
      nmin = std::min<int>(nmin, t.m.e[i]);
    }
    for (const auto& t : den.terms()) {
      dmax = std::max<int>(dmax, t.m.e[i]);
      dmin = std::min<int>(dmin, t.m.e[i]);
    }
    if (nmax < dmax || nmin < dmin) return false;
  }
  if (num.weighted_degree() < den.weighted_degree()) return false;

  const RingInfo& info = *r;
  auto cmp = [&info](const Monomial& a, const Monomial& b) {
    int wa = wdeg_of(info, a);
    int wb = wdeg_of(info, b);
    if (wa != wb) return wa > wb;
    return a.e > b.e;
  };
  std::map<Monomial, CycNum, decltype(cmp)> rem(cmp);
  for (const auto& t : num.terms()) rem.emplace(t.m, t.c);
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!mono_divides(dl.m, it->first)) return false;
    Monomial qm = mono_div(it->first, dl.m);
    CycNum qc = it->second * inv_lc;
    rem.erase(it);
    for (std::size_t k = 1; k < den.terms().size(); ++k) {
      const Term& t = den.terms()[k];
      Monomial m = mono_mul(t.m, qm);
      CycNum c = t.c * qc;
      auto [pos, inserted] = rem.emplace(m, -c);
      if (!inserted) {
        pos->second -= c;
        if (pos->second.is_zero()) rem.erase(pos);
      }
    }
    q.push_back(Term{qm, wdeg_of(info, qm), std::move(qc)});
  }
  if (quotient) {
    MPoly out = MPoly::from_terms(r, std::move(q));
    *quotient = std::move(out);
  }
  return true;
}

MPoly exact_div(const MPoly& num, const MPoly& den) {
  MPoly q;
  if (!try_exact_div(num, den, &q)) {
    throw NotDivisible("remainder after dividing a degree " +
                       std::to_string(num.weighted_degree()) +
                       " polynomial by a degree " +
                       std::to_string(den.weighted_degree()) + " polynomial");
  }
  return q;
}

}  // namespace sf
