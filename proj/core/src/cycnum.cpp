#include "saitoforge/cycnum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "saitoforge/errors.hpp"

namespace sf {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> compute_cyclotomic(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = cyclotomic_poly(d);
    int dq = static_cast<int>(q.size()) - 1;
    int dp = static_cast<int>(p.size()) - 1;
    std::vector<long> out(dp - dq + 1, 0);
    for (int k = dp - dq; k >= 0; --k) {
      long c = p[k + dq];
      out[k] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dq; ++j) p[k + j] -= c * q[j];
    }
    p = std::move(out);
  }
  return p;
}

// Reduce coefficients (power basis, arbitrary length) modulo Phi_n in place,
// leaving phi(n) entries.
void reduce_mod_phi(std::vector<mpz_class>& c, int n) {
  const auto& phi = cyclotomic_poly(n);
  int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(c.size()) - 1; k >= deg; --k) {
    if (c[k] == 0) continue;
    mpz_class lead = c[k];
    for (int j = 0; j < deg; ++j) {
      if (phi[j] != 0) c[k - deg + j] -= lead * phi[j];
    }
    c[k] = 0;
  }
  c.resize(deg);
}

std::vector<mpz_class> embed(const std::vector<mpz_class>& c, int from,
                             int to) {
  int step = to / from;
  std::vector<mpz_class> out(static_cast<std::size_t>(to), 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) out[(j * step) % to] += c[j];
  }
  reduce_mod_phi(out, to);
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<long>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  std::vector<long> p;
  if (n == 1) {
    p = {-1, 1};
  } else {
    p = compute_cyclotomic(n);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] =
      cache.emplace(n, std::make_unique<std::vector<long>>(std::move(p)));
  return *it->second;
}

CycNum::CycNum() : order_(1), num_{0}, den_(1) {}

CycNum::CycNum(long v) : order_(1), num_{mpz_class(v)}, den_(1) {}

CycNum::CycNum(const mpq_class& q)
    : order_(1), num_{q.get_num()}, den_(q.get_den()) {}

CycNum::CycNum(long p, long q) : order_(1) {
  if (q == 0) throw DivisionByZero("zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  num_ = {r.get_num()};
  den_ = r.get_den();
}

CycNum::CycNum(int order, std::vector<mpz_class> num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycNum CycNum::zeta(int n, long k) {
  if (n <= 0) throw std::invalid_argument("zeta order must be positive");
  long e = ((k % n) + n) % n;
  std::vector<mpz_class> c(static_cast<std::size_t>(n), 0);
  c[e] = 1;
  reduce_mod_phi(c, n);
  return CycNum(n, std::move(c), 1);
}

CycNum CycNum::from_coeffs(int order, const std::vector<mpq_class>& coeffs) {
  mpz_class den = 1;
  for (const auto& q : coeffs) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    den = g;
  }
  std::vector<mpz_class> num(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    num[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
  }
  if (order <= 0) throw std::invalid_argument("order must be positive");
  auto phi = static_cast<std::size_t>(euler_phi(order));
  if (num.size() != phi) {
    num.resize(std::max(num.size(), phi));
    reduce_mod_phi(num, order);
  }
  return CycNum(order, std::move(num), den);
}

CycNum CycNum::i() { return zeta(4); }
CycNum CycNum::i_sqrt3() { return zeta(3) - zeta(3, 2); }
CycNum CycNum::sqrt2() { return zeta(8) + zeta(8, -1); }
CycNum CycNum::sqrt3() { return -(i() * i_sqrt3()); }
CycNum CycNum::sqrt5() {
  return zeta(5) - zeta(5, 2) - zeta(5, 3) + zeta(5, 4);
}
CycNum CycNum::golden() { return zeta(5) + zeta(5, -1) + CycNum(1); }

void CycNum::normalize() {
  if (den_ == 0) throw DivisionByZero("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  bool all_zero = true;
  for (const auto& v : num_) {
    if (v != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    order_ = 1;
    num_.assign(1, 0);
    den_ = 1;
    return;
  }
  if (order_ > 1) {
    bool rational = true;
    for (std::size_t j = 1; j < num_.size(); ++j) {
      if (num_[j] != 0) {
        rational = false;
        break;
      }
    }
    if (rational) {
      order_ = 1;
      num_.resize(1);
    }
  }
  if (den_ != 1) {
    mpz_class g = den_;
    for (const auto& v : num_) {
      if (v == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (g != 1) {
      den_ /= g;
      for (auto& v : num_) {
        if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      }
    }
  }
}

std::vector<mpq_class> CycNum::coeffs() const {
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (const auto& v : num_) {
    mpq_class q(v, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

bool CycNum::is_zero() const { return order_ == 1 && num_[0] == 0; }

bool CycNum::is_one() const {
  return order_ == 1 && num_[0] == 1 && den_ == 1;
}

mpq_class CycNum::rational() const {
  if (order_ != 1) throw std::logic_error("CycNum is not rational");
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

CycNum CycNum::promoted(int n) const {
  if (n == order_) return *this;
  if (n % order_ != 0) throw std::invalid_argument("order does not divide");
  if (order_ == 1) {
    CycNum out = *this;
    return out;
  }
  return CycNum(n, embed(num_, order_, n), den_);
}

namespace {

int common_order(int a, int b) {
  if (a == b) return a;
  return std::lcm(a, b);
}

// Bring both operands to a shared order without going through normalize(),
// which would demote rationals back to order 1.
std::vector<mpz_class> lift(const CycNum& x, int n) {
  if (x.order() == n) return x.numerators();
  if (x.order() == 1) {
    std::vector<mpz_class> out(static_cast<std::size_t>(euler_phi(n)), 0);
    out[0] = x.numerators()[0];
    return out;
  }
  return embed(x.numerators(), x.order(), n);
}

}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int n = common_order(order_, o.order_);
  std::vector<mpz_class> a = lift(*this, n);
  std::vector<mpz_class> b = lift(o, n);
  if (den_ == o.den_) {
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    *this = CycNum(n, std::move(a), den_);
    return *this;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
  mpz_class fa = o.den_ / g;
  mpz_class fb = den_ / g;
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = a[j] * fa + b[j] * fb;
  *this = CycNum(n, std::move(a), den_ * fa);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& v : out.num_) v = -v;
  return out;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return CycNum();
  if (a.order_ == 1) {
    if (b.order_ == 1) {
      return CycNum(1, {a.num_[0] * b.num_[0]}, a.den_ * b.den_);
    }
    std::vector<mpz_class> c = b.num_;
    for (auto& v : c) v *= a.num_[0];
    return CycNum(b.order_, std::move(c), a.den_ * b.den_);
  }
  if (b.order_ == 1) return b * a;
  int n = common_order(a.order_, b.order_);
  std::vector<mpz_class> x = lift(a, n);
  std::vector<mpz_class> y = lift(b, n);
  std::vector<mpz_class> prod(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  reduce_mod_phi(prod, n);
  return CycNum(n, std::move(prod), a.den_ * b.den_);
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this * o.inv(); }

CycNum CycNum::galois(long k) const {
  if (order_ == 1) return *this;
  long n = order_;
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) throw std::invalid_argument("not a unit mod N");
  std::vector<mpz_class> c(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] != 0) c[(j * kk) % n] += num_[j];
  }
  reduce_mod_phi(c, order_);
  return CycNum(order_, std::move(c), den_);
}

CycNum CycNum::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (order_ == 1) {
    return CycNum(1, {den_}, num_[0]);
  }
  // a^{-1} = (prod of the other Galois conjugates) / norm(a).
  CycNum prod(1);
  for (long k = 2; k < order_; ++k) {
    if (std::gcd(k, static_cast<long>(order_)) == 1) prod *= galois(k);
  }
  CycNum norm = *this * prod;
  if (norm.order_ != 1) throw std::logic_error("norm is not rational");
  return prod * CycNum(1, {norm.den_}, norm.num_[0]);
}

CycNum CycNum::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  CycNum result(1);
  CycNum base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
  return (a - b).is_zero();
}

std::string CycNum::to_string() const {
  auto qstr = [](const mpq_class& q) { return q.get_str(); };
  if (order_ == 1) return qstr(rational());
  std::ostringstream os;
  os << "(";
  bool first = true;
  auto cs = coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j] == 0) continue;
    mpq_class c = cs[j];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (j == 0) {
      os << qstr(c);
    } else {
      if (c == -1 && first) {
        os << "-";
      } else if (c != 1) {
        os << qstr(c) << "*";
      }
      os << "z" << order_;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace sf
