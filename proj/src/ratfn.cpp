#include "herglotz/ratfn.hpp"

#include <ostream>

#include "herglotz/error.hpp"

namespace herglotz {

RatFn::RatFn(Poly num, Poly den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den.degree() > 0 && num.degree() > 0) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const GaussRat inv = den.lead().inverse();
  num_ = num * inv;
  den_ = den * inv;
}

GaussRat RatFn::eval(const GaussRat& z) const {
  const GaussRat d = den_.eval(z);
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "evaluation at a pole");
  return num_.eval(z) / d;
}

std::complex<double> RatFn::eval(std::complex<double> z) const {
  return num_.eval(z) / den_.eval(z);
}

std::complex<double> RatFn::log_derivative(std::complex<double> z) const {
  const Poly dn = num_.derivative();
  const Poly dd = den_.derivative();
  return dn.eval(z) / num_.eval(z) - dd.eval(z) / den_.eval(z);
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of the zero function");
  return RatFn(den_, num_);
}

RatFn RatFn::derivative() const {
  return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = RatFn(num_ + o.num_, den_);
  if (o.is_polynomial()) return *this = RatFn(num_ + o.num_ * den_, den_, Reduced{});
  if (is_polynomial()) return *this = RatFn(num_ * o.den_ + o.num_, o.den_, Reduced{});
  // Henrici: only the common part g of the denominators can cancel.
  const Poly g = gcd(den_, o.den_);
  if (g.degree() == 0) return *this = RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Reduced{});
  const Poly b = exact_div(den_, g), d = exact_div(o.den_, g);
  Poly n = num_ * d + o.num_ * b;
  if (n.is_zero()) return *this = RatFn();
  Poly h = gcd(n, g);
  Poly gg = g;
  if (h.degree() > 0) {
    n = exact_div(n, h);
    gg = exact_div(g, h);
  }
  return *this = RatFn(std::move(n), b * d * gg, Reduced{});
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) return *this = RatFn();
  if (is_polynomial() && o.is_polynomial()) return *this = RatFn(num_ * o.num_, Poly::constant(1), Reduced{});
  // Cross-cancel before multiplying to keep degrees small.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  const GaussRat inv = d.lead().inverse();
  return *this = RatFn(n * inv, d * inv, Reduced{});
}

RatFn& RatFn::operator/=(const RatFn& o) { return *this *= o.inverse(); }

RatFn sharp_conjugate(const RatFn& f) { return RatFn(f.num().conj(), f.den().conj()); }

std::string to_string(const RatFn& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << to_string(f); }

}  // namespace herglotz
