#include "herglotz/real_roots.hpp"

#include <algorithm>
#include <cmath>

namespace herglotz {

namespace {

// Primitive integer polynomials carry the Sturm machinery; rationals there
// would be far slower.
using ZVec = std::vector<mpz_class>;

int zdeg(const ZVec& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZVec& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void make_primitive(ZVec& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZVec to_zvec(const Poly& p) {
  if (!p.is_real()) throw std::logic_error("integer image of a non-real polynomial");
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
  ZVec out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.re().get_num() * (l / c.re().get_den()));
  make_primitive(out);
  return out;
}

int zsign_at(const ZVec& c, const Rat& x) {
  if (c.empty()) return 0;
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class acc = c.back();
  mpz_class qpow = 1;
  for (int k = zdeg(c) - 1; k >= 0; --k) {
    qpow *= q;
    acc *= p;
    acc += c[static_cast<std::size_t>(k)] * qpow;
  }
  return sgn(acc);
}

ZVec zderiv(const ZVec& p) {
  ZVec d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  ztrim(d);
  return d;
}

// Negated remainder of a by b up to a positive factor.
ZVec neg_rem(const ZVec& a, const ZVec& b) {
  ZVec r = a;
  const mpz_class& lb = b.back();
  const int db = zdeg(b);
  int steps = 0;
  while (zdeg(r) >= db) {
    const mpz_class lr = r.back();
    const int shift = zdeg(r) - db;
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= lr * b[static_cast<std::size_t>(j)];
    ztrim(r);
    ++steps;
  }
  const bool flip = !(sgn(lb) < 0 && steps % 2 == 1);
  if (flip)
    for (auto& c : r) c = -c;
  make_primitive(r);
  return r;
}

class Sturm {
 public:
  explicit Sturm(ZVec p) {
    ztrim(p);
    seq_.push_back(std::move(p));
    if (seq_[0].empty()) return;
    ZVec d = zderiv(seq_[0]);
    make_primitive(d);
    while (!d.empty()) {
      seq_.push_back(d);
      const std::size_t n = seq_.size();
      d = neg_rem(seq_[n - 2], seq_[n - 1]);
    }
  }

  const ZVec& poly() const { return seq_[0]; }

  int variations(const Rat& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
      const int s = zsign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Roots in (a, b); endpoints must not be roots.
  int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }

 private:
  std::vector<ZVec> seq_;
};

Rat integer_cauchy_bound(const ZVec& p) {
  mpz_class m = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) m = std::max(m, mpz_class(abs(p[k])));
  mpz_class lc = abs(p.back());
  mpz_class q = m / lc;
  return Rat(q + 2);
}

bool is_real_root(const Poly& p, const RealAlgebraic& x) {
  if (p.is_zero()) return true;
  if (x.is_rational()) return p.eval(GaussRat(x.value())).is_zero();
  const Poly h = gcd(p, x.defining_poly());
  if (h.degree() < 1) return false;
  const ZVec hz = to_zvec(h);
  return zsign_at(hz, x.lo()) * zsign_at(hz, x.hi()) < 0;
}

bool is_root(const Poly& p, const RealAlgebraic& x) {
  return is_real_root(p.real_part(), x) && is_real_root(p.imag_part(), x);
}

// Stage for one interval containing exactly one root of a squarefree polynomial.
struct Isolated {
  Rat key;
  bool rational;
  Rat lo, hi;
};

void isolate_squarefree(const Sturm& st, std::vector<Isolated>& out) {
  const ZVec& s = st.poly();
  if (zdeg(s) < 1) return;
  const Rat b = integer_cauchy_bound(s);
  struct Job {
    Rat lo, hi;
    int n;
  };
  std::vector<Job> stack;
  const int total = st.count(-b, b);
  if (total > 0) stack.push_back({-b, b, total});
  const mpz_class lc = abs(s.back());
  while (!stack.empty()) {
    Job j = std::move(stack.back());
    stack.pop_back();
    if (j.n == 1) {
      // Shrink until at most one multiple of 1/lc fits, then test it.
      Rat lo = j.lo, hi = j.hi;
      const int slo = zsign_at(s, lo);
      bool exact = false;
      while (true) {
        if ((hi - lo) * lc < 1) break;
        Rat mid = (lo + hi) / 2;
        const int sm = zsign_at(s, mid);
        if (sm == 0) {
          out.push_back({mid, true, mid, mid});
          exact = true;
          break;
        }
        if (sm == slo) lo = std::move(mid);
        else hi = std::move(mid);
      }
      if (exact) continue;
      mpz_class k;
      const Rat scaled = lo * lc;
      mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      k += 1;
      Rat cand(k, lc);
      cand.canonicalize();
      if (cand > lo && cand < hi && zsign_at(s, cand) == 0) {
        out.push_back({cand, true, cand, cand});
      } else {
        out.push_back({lo, false, lo, hi});
      }
      continue;
    }
    Rat mid = (j.lo + j.hi) / 2;
    if (zsign_at(s, mid) == 0) {
      Rat d = (j.hi - j.lo) / 4;
      while (zsign_at(s, mid - d) == 0 || zsign_at(s, mid + d) == 0 || st.count(mid - d, mid + d) != 1) d /= 2;
      out.push_back({mid, true, mid, mid});
      const int nl = st.count(j.lo, mid - d);
      const int nr = j.n - 1 - nl;
      if (nr > 0) stack.push_back({mid + d, j.hi, nr});
      if (nl > 0) stack.push_back({j.lo, mid - d, nl});
      continue;
    }
    const int nl = st.count(j.lo, mid);
    const int nr = j.n - nl;
    if (nr > 0) stack.push_back({mid, j.hi, nr});
    if (nl > 0) stack.push_back({j.lo, std::move(mid), nl});
  }
}

void charge(int& used, const Limits& limits, const char* what) {
  if (++used > limits.max_refine) throw Error(Errc::Undecided, what);
}

}  // namespace

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Sturm count of the zero polynomial");
  const ZVec z = to_zvec(p);
  if (zsign_at(z, a) == 0 || zsign_at(z, b) == 0)
    throw Error(Errc::EndpointIsRoot, "interval endpoint is a root");
  if (a >= b) return 0;
  return Sturm(z).count(a, b);
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  const Poly a = p.monic();
  const Poly b = a.derivative();
  const Poly c = gcd(a, b);
  Poly w = exact_div(a, c);
  Poly y = exact_div(b, c);
  Poly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly g = gcd(w, z);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
    if (g.degree() > 0) out.emplace_back(std::move(g), i);
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree part of zero");
  if (p.degree() < 1) return Poly::constant(1);
  return exact_div(p, gcd(p, p.derivative())).monic();
}

Rat cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root bound of zero");
  auto mag = [](const GaussRat& c) -> Rat { return abs_rat(c.re()) + abs_rat(c.im()); };
  Rat m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rat(mag(p.coeff(k))));
  const Rat lc = std::max(abs_rat(p.lead().re()), abs_rat(p.lead().im()));
  return 1 + m / lc;
}

bool all_roots_real(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root test of zero");
  const Poly m = p.monic();
  if (!m.is_real()) return false;
  if (m.degree() < 1) return true;
  const Poly s = squarefree_part(m);
  const ZVec z = to_zvec(s);
  const Rat b = integer_cauchy_bound(z);
  return Sturm(z).count(-b, b) == s.degree();
}

RealAlgebraic::RealAlgebraic(const Rat& value)
    : poly_(Poly::linear_root(GaussRat(value))), lo_(value), hi_(value), rational_(true) {}

const Rat& RealAlgebraic::value() const {
  if (!rational_) throw std::logic_error("value() of an irrational point");
  return lo_;
}

RealAlgebraic RealAlgebraic::from_isolating_interval(const Poly& poly, const Rat& lo, const Rat& hi) {
  if (poly.is_zero() || poly.degree() < 1)
    throw Error(Errc::MalformedInput, "defining polynomial must be nonconstant");
  if (!(lo < hi)) throw Error(Errc::MalformedInput, "empty isolating interval");
  if (poly.eval(GaussRat(lo)).is_zero() || poly.eval(GaussRat(hi)).is_zero())
    throw Error(Errc::MalformedInput, "isolating interval endpoint is a root");
  std::vector<RealAlgebraic> inside;
  for (auto& r : isolate_real_roots(poly))
    if (compare(r.point, lo) > 0 && compare(r.point, hi) < 0) inside.push_back(r.point);
  if (inside.size() != 1)
    throw Error(Errc::MalformedInput, "interval does not isolate exactly one real root");
  return inside.front();
}

RealAlgebraic RealAlgebraic::refined() const {
  if (rational_) return *this;
  RealAlgebraic r = *this;
  const Rat mid = (lo_ + hi_) / 2;
  const int sm = sign(poly_.eval(GaussRat(mid)).re());
  const int sl = sign(poly_.eval(GaussRat(lo_)).re());
  if (sm == 0) return RealAlgebraic(mid);
  if (sm == sl) r.lo_ = mid;
  else r.hi_ = mid;
  return r;
}

double RealAlgebraic::approx() const {
  if (rational_) return lo_.get_d();
  RealAlgebraic r = *this;
  for (int k = 0; k < 200 && !r.rational_; ++k) {
    const double lo = r.lo_.get_d(), hi = r.hi_.get_d();
    if (hi - lo <= 1e-17 * std::max(1.0, std::fabs(lo))) break;
    r = r.refined();
  }
  if (r.rational_) return r.lo_.get_d();
  return Rat((r.lo_ + r.hi_) / 2).get_d();
}

std::string RealAlgebraic::to_string() const {
  if (rational_) return herglotz::to_string(lo_);
  return "root of " + herglotz::to_string(poly_) + " in (" + herglotz::to_string(lo_) + ", " +
         herglotz::to_string(hi_) + ")";
}

std::vector<RealRoot> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "real roots of zero");
  Poly m = p.monic();
  if (!m.is_real()) m = gcd(m.real_part(), m.imag_part());
  std::vector<RealRoot> out;
  if (m.degree() < 1) return out;
  const auto factors = squarefree_decompose(m);
  Poly s = Poly::constant(1);
  for (const auto& f : factors) s *= f.first;
  const Sturm st(to_zvec(s));
  std::vector<Isolated> found;
  isolate_squarefree(st, found);
  std::sort(found.begin(), found.end(), [](const Isolated& a, const Isolated& b) { return a.key < b.key; });

  // Divide the rational roots out of each factor to get lean defining polynomials.
  std::vector<Poly> lean;
  std::vector<ZVec> factor_z;
  for (const auto& f : factors) {
    Poly q = f.first;
    for (const auto& r : found)
      if (r.rational && q.eval(GaussRat(r.key)).is_zero()) q = exact_div(q, Poly::linear_root(GaussRat(r.key)));
    lean.push_back(q.monic());
    factor_z.push_back(to_zvec(f.first));
  }
  for (const auto& r : found) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (r.rational) {
        if (zsign_at(factor_z[k], r.key) != 0) continue;
        out.push_back({RealAlgebraic(r.key), factors[k].second});
        break;
      }
      if (zsign_at(factor_z[k], r.lo) * zsign_at(factor_z[k], r.hi) >= 0) continue;
      out.push_back({RealAlgebraic(lean[k], r.lo, r.hi), factors[k].second});
      break;
    }
  }
  return out;
}

int compare(const RealAlgebraic& x, const Rat& r) {
  if (x.is_rational()) return sgn(Rat(x.value() - r));
  if (r <= x.lo()) return 1;
  if (r >= x.hi()) return -1;
  const ZVec z = to_zvec(x.defining_poly());
  const int sr = zsign_at(z, r);
  if (sr == 0) return 0;
  return sr == zsign_at(z, x.lo()) ? 1 : -1;
}

int compare(const RealAlgebraic& x, const RealAlgebraic& y, const Limits& limits) {
  if (y.is_rational()) return compare(x, y.value());
  if (x.is_rational()) return -compare(y, x.value());
  const Poly g = gcd(x.defining_poly(), y.defining_poly());
  if (g.degree() >= 1) {
    const ZVec gz = to_zvec(g);
    if (zsign_at(gz, x.lo()) * zsign_at(gz, x.hi()) < 0 && zsign_at(gz, y.lo()) * zsign_at(gz, y.hi()) < 0) {
      const Rat lo = std::min(x.lo(), y.lo());
      const Rat hi = std::max(x.hi(), y.hi());
      if (zsign_at(gz, lo) != 0 && zsign_at(gz, hi) != 0 && Sturm(gz).count(lo, hi) == 1) return 0;
    }
  }
  RealAlgebraic a = x, b = y;
  int used = 0;
  while (true) {
    if (a.is_rational() || b.is_rational()) return compare(a, b, limits);
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    charge(used, limits, "ordering of two algebraic points not decided within the refinement budget");
    if (a.hi() - a.lo() >= b.hi() - b.lo()) a = a.refined();
    else b = b.refined();
  }
}

int sign_at(const Poly& g, const RealAlgebraic& x, const Limits& limits) {
  if (!g.is_real()) {
    if (!is_real_root(g.imag_part(), x))
      throw Error(Errc::HermitianViolation, "value at a real point is not real");
  }
  const Poly gr = g.real_part();
  if (gr.is_zero()) return 0;
  if (x.is_rational()) return sign(gr.eval(GaussRat(x.value())).re());
  if (is_real_root(gr, x)) return 0;
  const ZVec gz = to_zvec(gr);
  const Sturm st(gz);
  RealAlgebraic a = x;
  int used = 0;
  while (true) {
    if (a.is_rational()) return sign(gr.eval(GaussRat(a.value())).re());
    const int sl = zsign_at(gz, a.lo());
    if (sl != 0 && zsign_at(gz, a.hi()) != 0 && st.count(a.lo(), a.hi()) == 0) return sl;
    charge(used, limits, "sign at an algebraic point not decided within the refinement budget");
    a = a.refined();
  }
}

Rat rational_between(const RealAlgebraic& x, const RealAlgebraic& y, const Limits& limits) {
  RealAlgebraic a = x, b = y;
  int used = 0;
  while (true) {
    if (a.is_rational() && b.is_rational()) {
      if (!(a.value() < b.value())) throw std::logic_error("rational_between: points out of order");
      return (a.value() + b.value()) / 2;
    }
    const Rat& u = a.is_rational() ? a.value() : a.hi();
    const Rat& l = b.is_rational() ? b.value() : b.lo();
    if (u < l) return (u + l) / 2;
    if (u == l && !a.is_rational() && !b.is_rational()) return u;
    charge(used, limits, "separating rational not found within the refinement budget");
    if (a.is_rational()) b = b.refined();
    else if (b.is_rational()) a = a.refined();
    else if (a.hi() - a.lo() >= b.hi() - b.lo()) a = a.refined();
    else b = b.refined();
  }
}

Rat rational_below(const RealAlgebraic& x) { return x.is_rational() ? Rat(x.value() - 1) : x.lo(); }

Rat rational_above(const RealAlgebraic& x) { return x.is_rational() ? Rat(x.value() + 1) : x.hi(); }

bool vanishes_at(const Poly& p, const RealAlgebraic& x) { return is_root(p, x); }

int root_multiplicity(const Poly& p, const RealAlgebraic& x) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "multiplicity in the zero polynomial");
  int k = 0;
  Poly q = p;
  while (q.degree() >= 1 && is_root(q, x)) {
    ++k;
    q = q.derivative();
  }
  return k;
}

GaussRat AlgebraicValue::exact() const {
  if (!is_exact()) throw std::logic_error("exact() of an irrational value");
  const GaussRat x = at.is_rational() ? GaussRat(at.value()) : GaussRat(0);
  return num.eval(x) / den.eval(x);
}

int AlgebraicValue::sign(const Limits& limits) const {
  if (is_exact()) {
    const GaussRat v = exact();
    if (!v.is_real()) throw Error(Errc::HermitianViolation, "sign of a non-real value");
    return herglotz::sign(v.re());
  }
  return sign_at(num, at, limits) * sign_at(den, at, limits);
}

std::complex<double> AlgebraicValue::approx() const {
  if (is_exact()) return exact().to_complex();
  const std::complex<double> x(at.approx(), 0.0);
  return num.eval(x) / den.eval(x);
}

std::string AlgebraicValue::to_string() const {
  if (is_exact()) return herglotz::to_string(exact());
  return "(" + herglotz::to_string(num) + ")/(" + herglotz::to_string(den) + ") at " + at.to_string();
}

}  // namespace herglotz
