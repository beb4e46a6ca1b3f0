#include "herglotz/scalar_herglotz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "herglotz/numeric.hpp"
#include "herglotz/root_sums.hpp"

namespace herglotz {

namespace {

Check make_check(std::string condition, bool ok, std::vector<std::pair<std::string, std::string>> witness = {}) {
  return Check{{}, std::move(condition), ok ? "pass" : "fail", std::move(witness)};
}

std::string describe(const AlgebraicValue& v) {
  if (v.is_exact()) return v.to_string();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v.approx().real());
  return std::string(buf) + " [" + v.to_string() + "]";
}

struct Tagged {
  RealAlgebraic point;
  bool zero;
};

// Points of both kinds in increasing order; throws InterlacingViolated on
// coincident points.
std::vector<Tagged> merged(const std::vector<RealAlgebraic>& zeros, const std::vector<RealAlgebraic>& poles,
                           const Limits& limits) {
  std::vector<Tagged> all;
  for (const auto& a : zeros) all.push_back({a, true});
  for (const auto& b : poles) all.push_back({b, false});
  std::stable_sort(all.begin(), all.end(),
                   [&](const Tagged& x, const Tagged& y) { return compare(x.point, y.point, limits) < 0; });
  for (std::size_t k = 1; k < all.size(); ++k)
    if (compare(all[k - 1].point, all[k].point, limits) == 0)
      throw Error(Errc::InterlacingViolated, "repeated point " + all[k].point.to_string());
  return all;
}

bool alternates(const std::vector<Tagged>& all) {
  for (std::size_t k = 1; k < all.size(); ++k)
    if (all[k - 1].zero == all[k].zero) return false;
  return true;
}

// prod (x - z) over the points, or nullopt when an irrational group is incomplete.
std::optional<Poly> product_of_differences(const std::vector<RealAlgebraic>& pts) {
  Poly out = Poly::constant(1);
  std::vector<std::pair<Poly, int>> groups;
  for (const auto& x : pts) {
    if (x.is_rational()) {
      out *= Poly::linear_root(GaussRat(x.value())) * GaussRat(-1);
      continue;
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == x.defining_poly(); });
    if (it == groups.end()) groups.emplace_back(x.defining_poly(), 1);
    else ++it->second;
  }
  for (const auto& [s, count] : groups) {
    if (count != s.degree()) return std::nullopt;
    out *= s * GaussRat(count % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace

ScalarPFRep scalar_partial_fractions(const RatFn& q) {
  ScalarPFRep rep{Rat(0), Rat(0), {}};
  if (q.is_zero()) return rep;
  if (!q.is_real()) throw Error(Errc::NotSharpReal, "coefficients are not all real");
  if (q.degree_excess() > 1) throw Error(Errc::NotRepresentable, "numerator degree exceeds denominator degree + 1");
  const Poly& den = q.den();
  if (!all_roots_real(den)) throw Error(Errc::NonRealRoots, "non-real poles");
  const Poly dd = den.derivative();
  if (gcd(den, dd).degree() > 0) throw Error(Errc::NonSimplePole, "pole of order >= 2");
  auto [quot, rem] = divmod(q.num(), den);
  rep.d = quot.coeff(1).re();
  rep.c = quot.coeff(0).re();
  if (den.degree() < 1) return rep;
  // A(a) = -rem(a)/den'(a); C picks up sum A(a) a/(1+a^2).
  const Poly h = divide_mod(rem * Poly::z(), Poly({GaussRat(1), GaussRat(0), GaussRat(1)}), den);
  rep.c -= sum_over_roots(divide_mod(h, dd, den), den).re();
  for (auto& r : isolate_real_roots(den)) rep.terms.push_back({r.point, AlgebraicValue{-rem, dd, r.point}});
  return rep;
}

RatFn rebuild(const ScalarPFRep& rep) {
  RatFn out = RatFn(GaussRat(rep.c)) + RatFn(GaussRat(rep.d)) * RatFn::z();
  struct Group {
    Poly s, num, den;
    int count;
  };
  std::vector<Group> groups;
  const Poly one_plus_z2({GaussRat(1), GaussRat(0), GaussRat(1)});
  for (const auto& t : rep.terms) {
    if (t.pole.is_rational()) {
      const Rat& x = t.pole.value();
      if (!t.weight.is_exact()) throw Error(Errc::NotRepresentable, "irrational weight at a rational pole");
      const GaussRat a = t.weight.exact();
      out += RatFn(a) / RatFn(Poly::constant(GaussRat(x)) - Poly::z());
      out -= RatFn(a * GaussRat(x / (1 + x * x)));
      continue;
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.s == t.pole.defining_poly() && g.num == t.weight.num && g.den == t.weight.den;
    });
    if (it == groups.end()) groups.push_back({t.pole.defining_poly(), t.weight.num, t.weight.den, 1});
    else ++it->count;
  }
  for (const auto& g : groups) {
    if (g.count != g.s.degree()) throw Error(Errc::NotRepresentable, "incomplete set of conjugate poles");
    const Poly w = divide_mod(g.num, g.den, g.s);
    // sum w(a)/(a - z) = -N/S and the constant sum w(a) a/(1+a^2).
    out -= RatFn(lagrange_numerator(w, g.s), g.s);
    out -= RatFn(sum_over_roots(divide_mod(w * Poly::z(), one_plus_z2, g.s), g.s));
  }
  return out;
}

Verdict check_scalar_herglotz(const RatFn& q, const Limits& limits) {
  Verdict v;
  if (q.is_zero()) {
    v.add(make_check("zero_function", true));
    return v.settle();
  }
  v.add(make_check("sharp_real", q.is_real()));
  v.add(make_check("growth", q.degree_excess() <= 1, {{"degree_excess", std::to_string(q.degree_excess())}}));
  const bool real_poles = !q.den().is_real() ? false : all_roots_real(q.den());
  v.add(make_check("real_poles", real_poles));
  const bool simple = gcd(q.den(), q.den().derivative()).degree() < 1;
  v.add(make_check("simple_poles", simple));
  if (v.first_failure()) return v.settle();

  const ScalarPFRep rep = scalar_partial_fractions(q);
  v.add(make_check("constant", true, {{"c", to_string(rep.c)}}));
  v.add(make_check("linear_coefficient", sign(rep.d) >= 0, {{"d", to_string(rep.d)}}));
  for (const auto& t : rep.terms) {
    Check c{{}, "pole_weight", "pass", {{"pole", t.pole.to_string()}, {"weight", describe(t.weight)}}};
    try {
      if (t.weight.sign(limits) < 0) c.result = "fail";
    } catch (const Error& e) {
      if (e.code() != Errc::Undecided) throw;
      c.result = "undecided";
    }
    v.add(std::move(c));
  }
  return v.settle();
}

std::optional<RatFn> HerglotzFactor::as_ratfn() const {
  auto num = product_of_differences(zeros);
  auto den = product_of_differences(poles);
  if (!num || !den) return std::nullopt;
  return RatFn(*num * GaussRat(scale), *den);
}

std::complex<double> HerglotzFactor::eval(std::complex<double> z) const {
  std::complex<double> v = scale.get_d();
  for (const auto& a : zeros) v *= a.approx() - z;
  for (const auto& b : poles) v /= b.approx() - z;
  return v;
}

std::string HerglotzFactor::to_string() const {
  if (auto f = as_ratfn()) return herglotz::to_string(*f);
  std::string s = herglotz::to_string(scale);
  for (const auto& a : zeros) s += " * (" + a.to_string() + " - z)";
  for (const auto& b : poles) s += " / (" + b.to_string() + " - z)";
  return s;
}

HerglotzFactor herglotz_factor_from(const InterlacingData& data, const Limits& limits) {
  if (sign(data.scale) <= 0) throw Error(Errc::InterlacingViolated, "scale must be positive");
  const auto all = merged(data.zeros, data.poles, limits);
  if (!alternates(all)) throw Error(Errc::InterlacingViolated, "zeros and poles do not alternate");
  HerglotzFactor f;
  f.scale = data.scale;
  if (!all.empty() && all.front().zero) f.scale = -f.scale;
  for (const auto& t : all) (t.zero ? f.zeros : f.poles).push_back(t.point);
  return f;
}

RatFn synth_from_interlacing(const InterlacingData& data, const Limits& limits) {
  const HerglotzFactor f = herglotz_factor_from(data, limits);
  auto r = f.as_ratfn();
  if (!r) throw Error(Errc::NotRepresentable, "irrational points without their conjugates");
  return *r;
}

bool is_herglotz_factor(const HerglotzFactor& f, const Limits& limits) {
  std::vector<Tagged> all;
  try {
    all = merged(f.zeros, f.poles, limits);
  } catch (const Error& e) {
    if (e.code() == Errc::InterlacingViolated) return false;
    throw;
  }
  if (!alternates(all)) return false;
  if (all.empty()) return true;
  return all.front().zero ? sign(f.scale) < 0 : sign(f.scale) > 0;
}

std::optional<RatFn> HerglotzFactorization::product() const {
  RatFn out(sign);
  for (const auto& f : factors) {
    auto r = f.as_ratfn();
    if (!r) return std::nullopt;
    out *= *r;
  }
  return out;
}

HerglotzFactorization factor_into_herglotz(const RatFn& f, int n, const Limits& limits) {
  (void)limits;
  if (n < 1) throw Error(Errc::MalformedInput, "factor count must be positive");
  if (f.is_zero()) throw Error(Errc::ZeroFunction, "cannot factor the zero function");
  if (!f.is_real()) throw Error(Errc::NotSharpReal, "coefficients are not all real");
  const DivisorFn theta = divisor_of(f);
  const int order = min_interlacing_order(theta);
  if (order > n)
    throw Error(Errc::NotNInterlacing, "interlacing order " + std::to_string(order) + " exceeds " + std::to_string(n));
  auto parts = colour_decompose(theta);
  HerglotzFactorization out;
  int total = 0;
  for (int v : theta.values()) total += v;
  int sigma = 1;
  for (const auto& part : parts) {
    HerglotzFactor h;
    for (const auto& p : part.support()) (p.value > 0 ? h.zeros : h.poles).push_back(p.point);
    if (!part.empty() && part.support().front().value > 0) {
      h.scale = -1;
      sigma = -sigma;
    }
    out.factors.push_back(std::move(h));
  }
  while (static_cast<int>(out.factors.size()) < n) out.factors.push_back(HerglotzFactor{});
  // f = kappa prod (z-a)/prod (z-b) = kappa (-1)^total prod_j (sigma_j q_j).
  Rat c = f.num().lead().re() * (total % 2 == 0 ? 1 : -1) * sigma;
  out.sign = sign(c);
  out.factors.front().scale *= abs_rat(c);
  return out;
}

double winding_oracle(const RatFn& f, const Rat& a, const Rat& b, int steps) {
  if (!(a < b)) throw Error(Errc::MalformedInput, "interval must satisfy a < b");
  if (steps < 1) throw Error(Errc::MalformedInput, "steps must be positive");
  if (f.is_zero()) throw Error(Errc::SingularOnContour, "zero function");
  for (const Rat& x : {a, b})
    if (f.num().eval(GaussRat(x)).is_zero() || f.den().eval(GaussRat(x)).is_zero())
      throw Error(Errc::SingularOnContour, "zero or pole at an interval endpoint");
  const double c = Rat((a + b) / 2).get_d();
  const double r = Rat((b - a) / 2).get_d();
  for (const Poly* p : {&f.num(), &f.den()})
    for (auto root : numeric_roots(*p))
      if (std::abs(std::abs(root - c) - r) < 1e-12 * (1 + r))
        throw Error(Errc::SingularOnContour, "zero or pole on the contour");
  if (f.is_constant()) return 0.0;
  const Poly dn = f.num().derivative(), dd = f.den().derivative();
  // Both arcs together form the full circle; the trapezoid rule on a periodic
  // integrand uses 2*steps equal subintervals.
  const int m = 2 * steps;
  std::complex<double> acc = 0;
  for (int k = 0; k < m; ++k) {
    const double t = 2 * std::numbers::pi * k / m;
    const std::complex<double> e = std::polar(1.0, t);
    const std::complex<double> z = c + r * e;
    std::complex<double> ld = dn.eval(z) / f.num().eval(z);
    if (f.den().degree() > 0) ld -= dd.eval(z) / f.den().eval(z);
    acc += ld * r * e;
  }
  return (acc / static_cast<double>(m)).real();
}

Verdict classical_hb_check(const Poly& a, const Poly& b, const Limits& limits) {
  if (a.is_zero() || b.is_zero() || !a.is_real() || !b.is_real())
    throw Error(Errc::MalformedInput, "A and B must be nonzero with real coefficients");
  Verdict v;
  auto real_simple = [](const Poly& p) {
    return p.degree() < 1 || (all_roots_real(p) && gcd(p, p.derivative()).degree() < 1);
  };
  const bool ra = real_simple(a), rb = real_simple(b);
  v.add(make_check("A_real_simple", ra));
  v.add(make_check("B_real_simple", rb));
  const bool coprime = gcd(a, b).degree() < 1;
  v.add(make_check("coprime", coprime));
  if (ra && rb && coprime) {
    const DivisorFn theta = divisor_of(RatFn(a, b));
    const int order = min_interlacing_order(theta);
    Check c = make_check("interlacing", order <= 1, {{"order", std::to_string(order)}});
    if (order > 1) {
      const OrderWitness w = order_witness(theta, limits);
      c.witness.push_back({"interval", "(" + to_string(w.a) + ", " + to_string(w.b) + ")"});
      c.witness.push_back({"sum", std::to_string(w.sum)});
    }
    v.add(std::move(c));
  }
  const Poly w = a.derivative() * b - b.derivative() * a;
  // Under (i) W has no real zeros, so one non-root sample fixes its sign.
  Rat x = 0;
  GaussRat wx = w.eval(GaussRat(x));
  for (int k = 1; wx.is_zero() && k <= w.degree() + 1; ++k) {
    x = k;
    wx = w.eval(GaussRat(x));
  }
  v.add(make_check("wronskian_sign", sign(wx.re()) > 0, {{"x", to_string(x)}, {"value", to_string(wx)}}));
  v.notes.push_back("A'B - B'A is sampled at a single point; under (i) it has no real zeros");
  return v.settle();
}

int lower_halfplane_roots_oracle(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root count of zero");
  int count = 0;
  for (auto r : numeric_roots(p)) {
    if (std::abs(r.imag()) < 1e-9) throw Error(Errc::RootNearAxis, "root within 1e-9 of the real axis");
    if (r.imag() < 0) ++count;
  }
  return count;
}

}  // namespace herglotz
