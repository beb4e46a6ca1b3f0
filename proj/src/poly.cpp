#include "herglotz/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "herglotz/error.hpp"

namespace herglotz {

Poly::Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const GaussRat& c) { return Poly(std::vector<GaussRat>{c}); }

Poly Poly::z() { return Poly({GaussRat(0), GaussRat(1)}); }

Poly Poly::monomial(const GaussRat& c, int k) {
  std::vector<GaussRat> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const GaussRat& r) { return Poly({-r, GaussRat(1)}); }

GaussRat Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return GaussRat();
  return c_[static_cast<std::size_t>(k)];
}

bool Poly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

Poly Poly::conj() const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.conj();
  return r;
}

Poly Poly::real_part() const {
  std::vector<GaussRat> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.emplace_back(c.re());
  return Poly(std::move(v));
}

Poly Poly::imag_part() const {
  std::vector<GaussRat> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.emplace_back(c.im());
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussRat> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GaussRat(static_cast<long>(k));
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const GaussRat inv = lead().inverse();
  Poly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

GaussRat Poly::eval(const GaussRat& z) const {
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GaussRat> r = a.coeffs();
  const int db = b.degree();
  std::vector<GaussRat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const GaussRat inv = b.lead().inverse();
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    const GaussRat& top = r[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussRat f = top * inv;
    for (int j = 0; j <= db; ++j) {
      if (bc[static_cast<std::size_t>(j)].is_zero()) continue;
      r[static_cast<std::size_t>(k - db + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(k - db)] = std::move(f);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  if ((a.degree() == 0) || (b.degree() == 0)) return Poly::constant(1);
  Poly x = a.monic();
  Poly y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (exact_div(a, gcd(a, b)) * b).monic();
}

Poly pow(const Poly& p, int k) {
  Poly r = Poly::constant(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // Extended Euclid: track s with s*a = r (mod m).
  Poly r0 = m, r1 = divmod(a, m).second;
  Poly s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::logic_error("inverse_mod: not invertible");
  return divmod(s0 * r0.lead().inverse(), m).second;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const GaussRat c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool paren = !c.is_real() && sgn(c.re()) != 0;
    if (k == 0) {
      os << (paren ? "(" + to_string(c) + ")" : to_string(c));
      continue;
    }
    if (!(c == GaussRat(1))) os << (paren ? "(" + to_string(c) + ")" : to_string(c)) << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace herglotz
