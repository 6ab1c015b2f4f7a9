#include "saitoforge/ratfn.hpp"

#include "saitoforge/errors.hpp"

namespace sf {

RatFn::RatFn(MPoly p) : num_(std::move(p)) {
  den_ = MPoly(num_.ring(), CycNum(1));
}

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFn RatFn::constant(const Ring& r, const CycNum& c) {
  return RatFn(MPoly(r, c));
}

void RatFn::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  Ring r = num_.ring() ? num_.ring() : den_.ring();
  if (num_.is_zero()) {
    num_ = MPoly(r);
    den_ = MPoly(r, CycNum(1));
    return;
  }
  CycNum lc = den_.lead_coeff();
  if (!lc.is_one()) {
    CycNum inv = lc.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (den_.is_constant()) return;
  MPoly q;
  if (try_exact_div(num_, den_, &q)) {
    num_ = std::move(q);
    den_ = MPoly(r, CycNum(1));
  }
}

MPoly RatFn::to_poly() const {
  if (den_.is_constant()) return num_.scaled(den_.constant().inv());
  MPoly q;
  if (try_exact_div(num_, den_, &q)) return q;
  throw NotPolynomial("rational function has a nontrivial denominator");
}

RatFn RatFn::diff(int var) const {
  if (den_.is_constant()) return RatFn(num_.diff(var), den_);
  MPoly dd = den_.diff(var);
  if (dd.is_zero()) return RatFn(num_.diff(var), den_);
  return RatFn(num_.diff(var) * den_ - num_ * dd, den_ * den_);
}

RatFn RatFn::inv() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFn(den_, num_);
}

RatFn RatFn::reduced_by(const MPoly& f) const {
  if (f.is_constant()) return *this;
  MPoly n = num_;
  MPoly d = den_;
  MPoly qn;
  MPoly qd;
  while (try_exact_div(d, f, &qd) && try_exact_div(n, f, &qn)) {
    n = std::move(qn);
    d = std::move(qd);
  }
  return RatFn(n, d);
}

RatFn RatFn::substitute(const std::vector<MPoly>& images) const {
  return RatFn(num_.substitute(images), den_.substitute(images));
}

RatFn RatFn::scaled(const CycNum& c) const {
  RatFn out = *this;
  out.num_ = num_.scaled(c);
  if (out.num_.is_zero()) out.den_ = MPoly(ring(), CycNum(1));
  return out;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = RatFn(num_ + o.num_, den_);
  if (o.den_.is_constant()) return *this = RatFn(num_ + o.num_ * den_, den_);
  if (den_.is_constant()) return *this = RatFn(num_ * o.den_ + o.num_, o.den_);
  MPoly q;
  if (try_exact_div(den_, o.den_, &q)) return *this = RatFn(num_ + o.num_ * q, den_);
  if (try_exact_div(o.den_, den_, &q)) return *this = RatFn(num_ * q + o.num_, o.den_);
  return *this = RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn RatFn::operator-() const {
  RatFn out = *this;
  out.num_ = -num_;
  return out;
}

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  MPoly a = num_;
  MPoly b = den_;
  MPoly c = o.num_;
  MPoly d = o.den_;
  MPoly q;
  if (!d.is_constant() && try_exact_div(a, d, &q)) {
    a = std::move(q);
    d = MPoly(d.ring(), CycNum(1));
  }
  if (!b.is_constant() && try_exact_div(c, b, &q)) {
    c = std::move(q);
    b = MPoly(b.ring(), CycNum(1));
  }
  return *this = RatFn(a * c, b * d);
}

RatFn& RatFn::operator/=(const RatFn& o) { return *this *= o.inv(); }

bool operator==(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFn::to_string() const {
  if (den_.is_constant()) return to_poly().to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace sf
