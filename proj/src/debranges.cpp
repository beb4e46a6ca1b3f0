#include "herglotz/debranges.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "herglotz/matrix_herglotz.hpp"
#include "herglotz/numeric.hpp"
#include "herglotz/real_roots.hpp"

namespace herglotz {

namespace {

Check make_check(std::string condition, std::string result) {
  Check c;
  c.condition = std::move(condition);
  c.result = std::move(result);
  return c;
}

std::string entry_name(int k, int l) { return "(" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")"; }

const GaussRat kI(0, 1);

CMat imag_part(const CMat& m) { return GaussRat(0, Rat(-1, 2)) * (m - m.adjoint()); }

// Accumulated argument of p along gamma(t), t in [t0, t1]. Steps stay below
// a tenth of the distance to the nearest approximate root, and any increment
// above 0.25 rad is halved again. False when the subdivision runs out.
bool track_arg(const Poly& p, const std::vector<std::complex<double>>& roots,
               const std::function<std::complex<double>(double)>& gamma, double speed, double t0, double t1,
               double& total) {
  auto f = [&](double t) { return p.eval(gamma(t)); };
  std::function<bool(double, double, std::complex<double>, std::complex<double>, int)> rec =
      [&](double a, double b, std::complex<double> fa, std::complex<double> fb, int depth) {
        const double d = std::arg(fb / fa);
        if (std::abs(d) < 0.25) {
          total += d;
          return true;
        }
        if (depth == 0) return false;
        const double m = 0.5 * (a + b);
        const auto fm = f(m);
        return rec(a, m, fa, fm, depth - 1) && rec(m, b, fm, fb, depth - 1);
      };
  double a = t0;
  auto fa = f(a);
  for (int steps = 0; a < t1; ++steps) {
    if (steps > 1000000) return false;
    double dist = INFINITY;
    for (const auto& r : roots) dist = std::min(dist, std::abs(gamma(a) - r));
    const double b = std::min(t1, a + std::max(0.1 * dist / speed, 1e-12));
    const auto fb = f(b);
    if (!rec(a, b, fa, fb, 30)) return false;
    a = b;
    fa = fb;
  }
  return true;
}

}  // namespace

MatRatFn schur_quotient(const DeBrangesInput& input) {
  const MatRatFn& ep = input.e_plus;
  const MatRatFn& em = input.e_minus;
  if (!ep.is_square() || !em.is_square() || ep.rows() != em.rows())
    throw Error(Errc::DimensionMismatch, "E- and E+ must be square of the same size");
  if (det(ep).is_zero()) throw Error(Errc::SingularEPlus, "det E+ vanishes identically");
  return inverse(ep) * em;
}

Verdict inner_check(const MatRatFn& s) {
  Verdict v;
  const MatRatFn defect = MatRatFn::identity(s.rows()) - s * s.sharp();
  Check c = make_check("inner", defect.is_zero() ? "pass" : "fail");
  if (!defect.is_zero()) c.witness.push_back({"I - s s^#", to_string(defect)});
  v.add(std::move(c));
  return v.settle();
}

SchurData build_schur_data(const MatRatFn& s) {
  if (!s.is_square()) throw Error(Errc::DimensionMismatch, "Schur function must be square");
  const int n = s.rows();
  SchurData d;
  d.s = s;
  d.r = s - MatRatFn::identity(n);
  d.r_plus = moore_penrose(d.r);
  d.q = RatFn(GaussRat(0, -1)) * (d.r_plus * (d.r + RatFn(2) * MatRatFn::identity(n)));

  const auto pts = upper_samples(3, {&d.s, &d.r_plus});
  bool im_ok = true, back_ok = true;
  for (const auto& z : pts) {
    const CMat sv = d.s.eval(z), rv = d.r.eval(z), rp = d.r_plus.eval(z), qv = d.q.eval(z);
    const CMat id = CMat::identity(n);
    im_ok = im_ok && imag_part(qv) == rp * (id - sv * sv.adjoint()) * rp.adjoint();
    back_ok = back_ok && GaussRat(0, -1) * rv == GaussRat(-2) * moore_penrose(qv + kI * (rp * rv));
  }
  if (!im_ok || !back_ok) throw std::logic_error("build_schur_data: sampled identity failed");
  Check a = make_check("imag_q_identity", "pass");
  Check b = make_check("r_from_q_identity", "pass");
  for (const auto& z : pts) {
    a.witness.push_back({"z", to_string(z)});
    b.witness.push_back({"z", to_string(z)});
  }
  d.checks = {a, b};
  return d;
}

HalfPlaneCount upper_root_count(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root count of zero");
  HalfPlaneCount out;
  // g carries every real root with its full multiplicity plus conjugate pairs
  // common to p and its conjugate; half of the latter lie above the axis.
  const Poly g = gcd(p.real_part(), p.imag_part());
  int real_roots = 0;
  if (g.degree() > 0)
    for (const auto& [f, m] : squarefree_decompose(g)) real_roots += m * static_cast<int>(isolate_real_roots(f).size());
  const int paired = std::max(g.degree(), 0) - real_roots;
  const Poly h = g.degree() > 0 ? exact_div(p, g) : p;

  out.count = paired / 2;
  if (h.degree() < 1) {
    out.decided = true;
    out.margin = INFINITY;
    return out;
  }
  const double rho = 2 * cauchy_bound(h).get_d();
  const auto roots = numeric_roots(h);
  double margin = INFINITY;
  int numeric_upper = 0;
  for (const auto& r : roots) {
    margin = std::min({margin, std::abs(r.imag()), rho - std::abs(r)});
    if (r.imag() > 0) ++numeric_upper;
  }
  out.margin = margin;
  if (!(margin > 1e-6)) {
    out.reason = "root within 1e-6 of the contour";
    return out;
  }
  double total = 0;
  const bool ok =
      track_arg(h, roots, [](double t) { return std::complex<double>(t, 0); }, 1.0, -rho, rho, total) &&
      track_arg(h, roots, [&](double t) { return std::polar(rho, t); }, rho, 0, std::numbers::pi, total);
  if (!ok) {
    out.reason = "argument tracking did not converge";
    return out;
  }
  out.winding = total / (2 * std::numbers::pi);
  const double k = std::round(out.winding);
  if (std::abs(out.winding - k) > 0.1) {
    out.reason = "winding number not within 0.1 of an integer";
    return out;
  }
  if (static_cast<int>(k) != numeric_upper) {
    out.reason = "winding number disagrees with the eigenvalue count";
    return out;
  }
  out.count += static_cast<int>(k);
  out.decided = true;
  return out;
}

Verdict check_debranges(const DeBrangesInput& input, const Limits& limits) {
  const MatRatFn s = schur_quotient(input);
  const int n = s.rows();
  Verdict v;
  v.add(make_check("bounded_type", "vacuous"));
  v.notes.push_back("bounded type holds for every rational function");

  std::optional<SchurData> data;
  Check kernel = make_check("constant_kernel", "pass");
  try {
    data = build_schur_data(s);
  } catch (const Error& e) {
    if (e.code() != Errc::ConstantKernelViolated && e.code() != Errc::KernelAdjointMismatch) throw;
    kernel.result = "fail";
    kernel.witness.push_back({"error", std::string(errc_name(e.code()))});
    kernel.witness.push_back({"detail", e.what()});
  }
  v.add(std::move(kernel));

  Check poles = make_check("rplus_upper_poles", "not_applicable");
  if (data) {
    Poly l = Poly::constant(1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) l = lcm(l, data->r_plus(i, j).den());
    const HalfPlaneCount c = upper_root_count(l);
    poles.witness.push_back({"denominator", to_string(l)});
    if (!c.decided) {
      poles.result = "undecided";
      poles.witness.push_back({"reason", c.reason});
    } else {
      poles.result = c.count == 0 ? "pass" : "fail";
      poles.witness.push_back({"count", std::to_string(c.count)});
    }
  }
  v.add(std::move(poles));

  for (Check& c : inner_check(s).checks) v.add(std::move(c));

  Check growth = make_check("rplus_growth", "not_applicable");
  if (data) {
    growth.result = "pass";
    for (int i = 0; i < n && growth.result == "pass"; ++i)
      for (int j = 0; j < n; ++j) {
        const RatFn& f = data->r_plus(i, j);
        if (!f.is_zero() && f.degree_excess() > 1) {
          growth.result = "fail";
          growth.witness.push_back({"entry", entry_name(i, j)});
          growth.witness.push_back({"degree_excess", std::to_string(f.degree_excess())});
          break;
        }
      }
  }
  v.add(std::move(growth));

  Check minors = make_check("criterion_ii", "not_applicable");
  if (data) {
    const Verdict qv = verify_criterion_ii(data->q, limits);
    minors.result = qv.accepted() ? "pass" : qv.rejected() ? "fail" : "undecided";
    minors.witness.push_back({"Q", to_string(data->q)});
    const Check* bad = qv.first_failure();
    if (!bad && !qv.accepted())
      for (const Check& c : qv.checks)
        if (c.undecided()) {
          bad = &c;
          break;
        }
    if (bad) {
      minors.index_set = bad->index_set;
      minors.witness.push_back({"condition", bad->condition});
      for (const auto& w : bad->witness) minors.witness.push_back(w);
    }
    for (const auto& note : qv.notes) v.notes.push_back(note);
  }
  v.add(std::move(minors));
  return v.settle();
}

Verdict check_hb_n(const MatRatFn& e, const Limits& limits) {
  if (!e.is_square()) throw Error(Errc::DimensionMismatch, "E must be square");
  if (det(e).is_zero()) throw Error(Errc::SingularE, "det E vanishes identically");
  return check_debranges({e.sharp(), e}, limits);
}

MatRatFn r_from_q_subspace(const MatRatFn& q, const CMat& l) {
  if (!q.is_square() || l.rows() != q.rows()) throw Error(Errc::DimensionMismatch, "basis and Q sizes differ");
  const CMat p = projection_onto_colspace(l);
  if (!(MatRatFn(p) * q == q)) throw Error(Errc::SubspaceTooSmall, "ran Q is not contained in the span of L");
  return RatFn(GaussRat(0, -2)) * moore_penrose(q + MatRatFn(kI * p));
}

SplitAB split_AB(const DeBrangesInput& input) {
  const MatRatFn& ep = input.e_plus;
  const MatRatFn& em = input.e_minus;
  if (!ep.is_square() || !em.is_square() || ep.rows() != em.rows())
    throw Error(Errc::DimensionMismatch, "E- and E+ must be square of the same size");
  SplitAB out{RatFn(GaussRat(Rat(1, 2))) * (ep + em), RatFn(GaussRat(0, Rat(-1, 2))) * (ep - em)};
  for (const auto& z : upper_samples(3, {&ep, &em})) {
    const CMat p = ep.eval(z), m = em.eval(z), a = out.a.eval(z), b = out.b.eval(z);
    if (!(p * p.adjoint() - m * m.adjoint() == GaussRat(0, 2) * (b * a.adjoint() - a * b.adjoint())))
      throw std::logic_error("split_AB: sampled identity failed");
  }
  return out;
}

}  // namespace herglotz
