#include "herglotz/matrix_herglotz.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <stdexcept>

#include "herglotz/divisors.hpp"
#include "herglotz/root_sums.hpp"

namespace herglotz {

namespace {

std::string entry_name(int k, int l) { return "(" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")"; }

Poly one_plus_z2() { return Poly({GaussRat(1), GaussRat(0), GaussRat(1)}); }

Check make_check(std::string condition, std::string result, IndexSet idx = {}) {
  Check c;
  c.index_set = std::move(idx);
  c.condition = std::move(condition);
  c.result = std::move(result);
  return c;
}

std::string index_string(const IndexSet& idx) {
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + "]";
}

}  // namespace

// ---- PoleWeight -------------------------------------------------------------

CMat PoleWeight::exact() const {
  if (!pole.is_rational()) throw std::logic_error("exact() of a weight at an irrational pole");
  const GaussRat x(pole.value());
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entries[static_cast<std::size_t>(i) * n + j].eval(x);
  return m;
}

std::vector<std::complex<double>> PoleWeight::approx() const {
  std::vector<std::complex<double>> out;
  for (const auto& p : entries) out.push_back(AlgebraicValue{p, Poly::constant(1), pole}.approx());
  return out;
}

Poly PoleWeight::minor_poly(const IndexSet& idx) const {
  const int k = static_cast<int>(idx.size());
  MatRatFn m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = RatFn(entries[static_cast<std::size_t>(idx[i] - 1) * n + (idx[j] - 1)]);
  Poly d = det(m).num();
  if (!pole.is_rational()) d = divmod(d, pole.defining_poly()).second;
  return d;
}

bool is_hermitian(const PoleWeight& w) {
  for (int i = 0; i < w.n; ++i)
    for (int j = i; j < w.n; ++j) {
      const Poly diff = w.entries[static_cast<std::size_t>(i) * w.n + j] - w.entries[static_cast<std::size_t>(j) * w.n + i].conj();
      if (!diff.is_zero() && !vanishes_at(diff, w.pole)) return false;
    }
  return true;
}

std::optional<PoleMinorWitness> negative_minor(const PoleWeight& w, const Limits& limits) {
  if (!is_hermitian(w)) throw Error(Errc::NotHermitian, "weight at " + w.pole.to_string() + " is not Hermitian");
  if (w.pole.is_rational()) {
    auto m = negative_minor(w.exact());
    if (!m) return std::nullopt;
    return PoleMinorWitness{m->index_set, AlgebraicValue::constant(m->value)};
  }
  for (const auto& idx : all_index_sets(w.n)) {
    AlgebraicValue v{w.minor_poly(idx), Poly::constant(1), w.pole};
    if (v.sign(limits) < 0) return PoleMinorWitness{idx, std::move(v)};
  }
  return std::nullopt;
}

// ---- hypotheses and representation ------------------------------------------

Verdict check_hypotheses(const MatRatFn& q) {
  Verdict v;
  if (!q.is_square()) {
    Check c = make_check("square", "fail");
    c.witness = {{"rows", std::to_string(q.rows())}, {"cols", std::to_string(q.cols())}};
    v.add(c);
    return v.settle();
  }
  const int n = q.rows();
  Check sharp = make_check("sharp_real", "pass");
  Check poles = make_check("real_poles", "pass");
  Check growth = make_check("growth", "pass");
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const RatFn& f = q(k, l);
      if (sharp.result == "pass" && !(sharp_conjugate(q(l, k)) == f)) {
        sharp.result = "fail";
        sharp.witness = {{"entry", entry_name(k, l)}, {"value", to_string(f)}, {"sharp_of_transpose", to_string(sharp_conjugate(q(l, k)))}};
      }
      if (poles.result == "pass" && !all_roots_real(f.den())) {
        poles.result = "fail";
        poles.witness = {{"entry", entry_name(k, l)}, {"denominator", to_string(f.den())}};
      }
      if (growth.result == "pass" && !f.is_zero() && f.degree_excess() > 1) {
        growth.result = "fail";
        growth.witness = {{"entry", entry_name(k, l)}, {"degree_excess", std::to_string(f.degree_excess())}};
      }
    }
  v.add(sharp);
  v.add(poles);
  v.add(growth);
  Check bt = make_check("bounded_type", "vacuous");
  v.add(bt);
  v.notes.push_back("bounded type holds for every rational function");
  return v.settle();
}

PartialFractionRep extract_partial_fractions(const MatRatFn& q) {
  if (!q.is_square()) throw Error(Errc::DimensionMismatch, "matrix function must be square");
  const int n = q.rows();
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const RatFn& f = q(k, l);
      if (!(sharp_conjugate(q(l, k)) == f)) throw Error(Errc::NotSharpReal, "entry " + entry_name(k, l) + " breaks Q = Q^#");
      if (!f.is_zero() && f.degree_excess() > 1) throw Error(Errc::NotRepresentable, "entry " + entry_name(k, l) + " grows faster than linearly");
      if (!all_roots_real(f.den())) throw Error(Errc::NonRealRoots, "entry " + entry_name(k, l) + " has non-real poles");
      if (f.den().degree() > 0 && gcd(f.den(), f.den().derivative()).degree() > 0)
        throw Error(Errc::NonSimplePole, "entry " + entry_name(k, l) + " has a multiple pole");
    }

  PartialFractionRep rep{CMat(n, n), CMat(n, n), {}};
  Poly l = Poly::constant(1);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const RatFn& f = q(k, j);
      if (!f.is_zero() && f.degree_excess() == 1) rep.d(k, j) = f.num().lead();
      if (!f.is_polynomial() && !(f.den() == l)) l = lcm(l, f.den());
    }
  // Constant of the polynomial part of Q - D z.
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const RatFn r = q(k, j) - RatFn(Poly::monomial(rep.d(k, j), 1));
      rep.c(k, j) = divmod(r.num(), r.den()).first.coeff(0);
    }
  if (l.degree() > 0) {
    std::vector<Poly> h(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        const RatFn& f = q(k, j);
        if (!f.is_zero()) h[static_cast<std::size_t>(k) * n + j] = f.num() * exact_div(l, f.den());
      }
    const Poly lp = l.derivative();
    std::map<std::string, std::vector<Poly>> by_poly;  // weight polynomials per irrational group
    for (auto& root : isolate_real_roots(l)) {
      PoleWeight w{root.point, n, {}};
      const Poly& s = root.point.defining_poly();
      const std::string key = to_string(s);
      auto it = by_poly.find(key);
      if (it == by_poly.end()) {
        std::vector<Poly> g;
        for (const auto& hk : h) g.push_back(divide_mod(-hk, lp, s));
        it = by_poly.emplace(key, std::move(g)).first;
        // sum over the roots of s of A(a) a / (1 + a^2)
        for (int k = 0; k < n; ++k)
          for (int j = 0; j < n; ++j) {
            const Poly& gk = it->second[static_cast<std::size_t>(k) * n + j];
            if (gk.is_zero()) continue;
            rep.c(k, j) += sum_over_roots(divide_mod(gk * Poly::z(), one_plus_z2(), s), s);
          }
      }
      w.entries = it->second;
      rep.terms.push_back(std::move(w));
    }
  }

  if (!rep.c.is_hermitian()) throw Error(Errc::HermitianViolation, "constant term " + to_string(rep.c) + " is not Hermitian");
  if (!rep.d.is_hermitian()) throw Error(Errc::HermitianViolation, "linear term " + to_string(rep.d) + " is not Hermitian");
  for (const auto& t : rep.terms)
    if (!is_hermitian(t)) throw Error(Errc::HermitianViolation, "weight at pole " + t.pole.to_string() + " is not Hermitian");
  if (!(rebuild(rep) == q)) throw std::logic_error("partial fraction reconstruction failed");
  return rep;
}

MatRatFn rebuild(const PartialFractionRep& rep) {
  const int n = rep.c.rows();
  MatRatFn q(rep.c);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      if (!rep.d(k, j).is_zero()) q(k, j) += RatFn(Poly::monomial(rep.d(k, j), 1));
  std::map<std::string, std::pair<const PoleWeight*, int>> groups;
  for (const auto& t : rep.terms) {
    if (t.pole.is_rational()) {
      const Rat& r = t.pole.value();
      const CMat a = t.exact();
      const RatFn kernel = RatFn(Poly::constant(1), Poly::linear_root(GaussRat(r))) * RatFn(-1) - RatFn(GaussRat(r / (1 + r * r)));
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          if (!a(k, j).is_zero()) q(k, j) += RatFn(a(k, j)) * kernel;
      continue;
    }
    auto& g = groups[to_string(t.pole.defining_poly())];
    if (g.first && g.first->entries != t.entries)
      throw Error(Errc::NotRepresentable, "weights within a conjugate group differ");
    g.first = &t;
    ++g.second;
  }
  for (const auto& [key, g] : groups) {
    const Poly& s = g.first->pole.defining_poly();
    if (g.second != s.degree()) throw Error(Errc::NotRepresentable, "incomplete conjugate group for " + key);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        const Poly& gk = g.first->entries[static_cast<std::size_t>(k) * n + j];
        if (gk.is_zero()) continue;
        // sum_a G(a)/(a - z) = -N/S
        q(k, j) -= RatFn(lagrange_numerator(gk, s), s);
        q(k, j) -= RatFn(sum_over_roots(divide_mod(gk * Poly::z(), one_plus_z2(), s), s));
      }
  }
  return q;
}

PoleWeight signed_residue(const MatRatFn& q, const RealAlgebraic& z0) {
  const int n = q.rows();
  PoleWeight w{z0, n, std::vector<Poly>(static_cast<std::size_t>(n) * n)};
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const RatFn& f = q(k, j);
      if (f.is_polynomial()) continue;
      const int mult = root_multiplicity(f.den(), z0);
      if (mult == 0) continue;
      if (mult > 1) throw Error(Errc::NonSimplePole, "entry " + entry_name(k, j) + " has a pole of order " + std::to_string(mult));
      // Only the roots of the defining polynomial that are poles of this entry matter.
      Poly s = z0.defining_poly();
      if (!z0.is_rational()) {
        s = gcd(s, f.den());
        s = exact_div(s, gcd(s, f.den().derivative()));
      }
      w.entries[static_cast<std::size_t>(k) * n + j] = divide_mod(-f.num(), f.den().derivative(), s);
    }
  return w;
}

RatFn minor_fn(const MatRatFn& q, const IndexSet& idx) { return det(principal_submatrix(q, idx)); }

InfinityLimit infinity_limit(const RatFn& f, int m) {
  InfinityLimit out;
  if (f.is_zero()) return out;
  const int e = f.degree_excess();
  if (e > m) out.diverges = true;
  else if (e == m) out.value = f.num().lead() / f.den().lead();
  return out;
}

PoleSign pole_sign_condition(const RatFn& f, int m, const Limits& limits) {
  PoleSign out;
  if (f.is_polynomial()) return out;
  const auto parts = squarefree_decompose(f.den());
  const GaussRat sgn_m = (m % 2) ? GaussRat(-1) : GaussRat(1);
  for (const auto& [sm, mult] : parts) {
    if (mult != m) continue;
    // (z* - z)^m f(z) -> (-1)^m num(z*) / (s_m'(z*)^m prod_{i != m} s_i(z*)^i)
    Poly den = pow(sm.derivative(), m);
    for (const auto& [si, i] : parts)
      if (i != m) den *= pow(si, i);
    for (auto& root : isolate_real_roots(sm)) {
      AlgebraicValue v{f.num() * sgn_m, den, root.point};
      const int s = v.sign(limits);
      if (s > 0) {
        out.status = PoleSign::Holds;
        out.limit = std::move(v);
        return out;
      }
      if (!out.limit) out.limit = std::move(v);
      out.status = PoleSign::Fails;
    }
  }
  return out;
}

// ---- criteria ---------------------------------------------------------------

namespace {

struct MinorOptions {
  bool pole_sign = false;
  bool limit = false;
};

// Checks on one principal minor f of order m; appends to v.
void check_minor(Verdict& v, const RatFn& f, const IndexSet& idx, const MinorOptions& opt, const Limits& limits) {
  const int m = static_cast<int>(idx.size());
  if (f.is_zero()) {
    Check c = make_check("minor", "zero_minor", idx);
    c.witness = {{"note", "identically zero; met by a zero factor"}};
    v.add(c);
    return;
  }
  if (!all_roots_real(f.num()) || !all_roots_real(f.den())) {
    Check c = make_check("real_divisor", "fail", idx);
    c.witness = {{"minor", to_string(f)}};
    v.add(c);
    return;
  }
  try {
    const DivisorFn theta = divisor_of(f);
    const int order = min_interlacing_order(theta);
    Check c = make_check("interlacing", order <= m ? "pass" : "fail", idx);
    c.witness = {{"order", std::to_string(order)}};
    if (order > m) {
      const OrderWitness w = order_witness(theta, limits);
      c.witness.push_back({"interval", "(" + to_string(w.a) + "," + to_string(w.b) + ")"});
      c.witness.push_back({"sum", std::to_string(w.sum)});
    }
    v.add(c);
    if (order > m) return;
  } catch (const Error& e) {
    if (e.code() != Errc::Undecided) throw;
    Check c = make_check("interlacing", "undecided", idx);
    c.witness = {{"reason", e.what()}};
    v.add(c);
    return;
  }
  if (opt.pole_sign) {
    try {
      const PoleSign ps = pole_sign_condition(f, m, limits);
      Check c = make_check("pole_sign", ps.status == PoleSign::NotApplicable ? "not_applicable" : ps.status == PoleSign::Holds ? "pass" : "fail", idx);
      if (ps.limit) c.witness = {{"pole", ps.limit->at.to_string()}, {"value", ps.limit->to_string()}};
      v.add(c);
    } catch (const Error& e) {
      if (e.code() != Errc::Undecided) throw;
      Check c = make_check("pole_sign", "undecided", idx);
      c.witness = {{"reason", e.what()}};
      v.add(c);
    }
  }
  if (opt.limit) {
    const InfinityLimit lim = infinity_limit(f, m);
    // m-interlacing bounds the degree excess by m.
    if (lim.diverges) throw std::logic_error("minor " + index_string(idx) + " grows faster than its interlacing order allows");
    const bool ok = lim.value.is_real() && sign(lim.value.re()) >= 0;
    Check c = make_check("infinity_limit", ok ? "pass" : "fail", idx);
    c.witness = {{"value", to_string(lim.value)}};
    v.add(c);
  }
}

// Hypothesis checks first; returns false when they fail (v is then settled).
bool hypotheses_into(Verdict& v, const MatRatFn& q) {
  Verdict h = check_hypotheses(q);
  for (auto& c : h.checks) v.add(std::move(c));
  for (auto& note : h.notes) v.notes.push_back(std::move(note));
  if (h.rejected()) {
    v.settle();
    return false;
  }
  return true;
}

void note_zero_minors(Verdict& v) {
  if (v.find("minor"))
    v.notes.push_back("identically zero principal minors are accepted: the matching minors of every weight and of the linear term vanish too");
}

}  // namespace

Verdict verify_criterion_iii(const MatRatFn& q, const Limits& limits) {
  Verdict v;
  if (!hypotheses_into(v, q)) return v;
  const int n = q.rows();
  for (int m = 1; m <= std::min(2, n); ++m)
    for (const auto& idx : index_sets(n, m)) check_minor(v, minor_fn(q, idx), idx, {m == 2, false}, limits);

  PartialFractionRep rep;
  try {
    rep = extract_partial_fractions(q);
  } catch (const Error& e) {
    if (e.code() != Errc::NonSimplePole && e.code() != Errc::HermitianViolation) throw;
    Check c = make_check(e.code() == Errc::NonSimplePole ? "simple_poles" : "hermitian", "fail");
    c.witness = {{"reason", e.what()}};
    v.add(c);
    note_zero_minors(v);
    return v.settle();
  }
  for (const auto& t : rep.terms) {
    try {
      const auto w = negative_minor(t, limits);
      Check c = make_check("residue_psd", w ? "fail" : "pass", w ? w->index_set : IndexSet{});
      c.witness = {{"pole", t.pole.to_string()}};
      if (w) c.witness.push_back({"minor", w->value.to_string()});
      v.add(c);
    } catch (const Error& e) {
      if (e.code() != Errc::Undecided) throw;
      Check c = make_check("residue_psd", "undecided");
      c.witness = {{"pole", t.pole.to_string()}, {"reason", e.what()}};
      v.add(c);
    }
  }
  const auto wd = negative_minor(rep.d);
  Check c = make_check("linear_psd", wd ? "fail" : "pass", wd ? wd->index_set : IndexSet{});
  c.witness = {{"D", to_string(rep.d)}};
  if (wd) c.witness.push_back({"minor", to_string(wd->value)});
  v.add(c);
  note_zero_minors(v);
  return v.settle();
}

Verdict verify_criterion_ii(const MatRatFn& q, const Limits& limits) {
  Verdict v;
  if (!hypotheses_into(v, q)) return v;
  for (const auto& idx : all_index_sets(q.rows())) check_minor(v, minor_fn(q, idx), idx, {true, true}, limits);
  note_zero_minors(v);
  return v.settle();
}

Verdict sample_criterion_i(const MatRatFn& q, const std::vector<GaussRat>& grid) {
  if (grid.empty()) throw Error(Errc::MalformedInput, "empty sample grid");
  Verdict v;
  const GaussRat half_over_i(0, Rat(-1, 2));  // 1/(2i)
  for (const auto& z : grid) {
    if (sign(z.im()) <= 0) throw Error(Errc::MalformedInput, "grid point " + to_string(z) + " is not in the upper half-plane");
    if (q.has_pole_at(z)) throw Error(Errc::PoleOnGrid, "grid point " + to_string(z) + " is a pole");
    const CMat m = q.eval(z);
    const CMat im = half_over_i * (m - m.adjoint());
    const auto w = negative_minor(im);
    Check c = make_check("imaginary_part_psd", w ? "fail" : "pass", w ? w->index_set : IndexSet{});
    c.witness = {{"z", to_string(z)}};
    if (w) c.witness.push_back({"minor", to_string(w->value)});
    v.add(c);
  }
  v.settle();
  if (v.outcome == Outcome::Accept) v.outcome = Outcome::Consistent;
  v.notes.push_back("sampling checks a necessary condition only");
  return v;
}

// ---- determinant factorization ----------------------------------------------

namespace {

// Recursion on a verified Herglotz matrix: det Q = det Q_(j) * (-q^-1) where q
// is the j-th diagonal entry of -Q^-1.
std::vector<RatFn> factor_rec(const MatRatFn& q) {
  const int n = q.rows();
  if (n == 0) return {};
  const RatFn d = det(q);
  if (q.is_constant() || d.is_zero()) {
    std::vector<RatFn> out(static_cast<std::size_t>(n), RatFn(1));
    out[0] = d;
    return out;
  }
  for (int j = 1; j <= n; ++j) {
    const MatRatFn sub = delete_index(q, j);
    const RatFn qj = -det(sub) / d;
    if (qj.is_zero()) continue;
    std::vector<RatFn> out{-qj.inverse()};
    auto rest = factor_rec(sub);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  // Some diagonal entry of the invertible -Q^-1 is nonzero, since a Herglotz
  // matrix with vanishing diagonal is constant.
  throw std::logic_error("no pivot for the determinant factorization");
}

}  // namespace

std::vector<RatFn> factor_determinant(const MatRatFn& q, const Limits& limits) {
  const Verdict v = verify_criterion_ii(q, limits);
  if (!v.accepted()) throw Error(Errc::NotVerifiedHerglotz, std::string("criterion check outcome: ") + std::string(outcome_name(v.outcome)));
  auto out = factor_rec(q);
  RatFn prod = 1;
  for (const auto& f : out) prod *= f;
  if (!(prod == det(q))) throw std::logic_error("determinant factorization does not multiply out");
  return out;
}

// ---- Stieltjes inversion oracle ---------------------------------------------

std::vector<std::complex<double>> stieltjes_sum_oracle(const PartialFractionRep& rep, const Rat& c, const Rat& d, double eta) {
  using cd = std::complex<double>;
  const int n = rep.c.rows();
  std::vector<cd> cm, dm;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cm.push_back(rep.c(i, j).to_complex());
      dm.push_back(rep.d(i, j).to_complex());
    }
  std::vector<double> poles;
  std::vector<std::vector<cd>> weights;
  for (const auto& t : rep.terms) {
    poles.push_back(t.pole.approx());
    weights.push_back(t.approx());
  }
  auto q_at = [&](cd z) {
    std::vector<cd> m(static_cast<std::size_t>(n) * n);
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = cm[k] + dm[k] * z;
    for (std::size_t t = 0; t < poles.size(); ++t) {
      const double p = poles[t];
      const cd kern = 1.0 / (p - z) - p / (1 + p * p);
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += weights[t][k] * kern;
    }
    return m;
  };
  const double a = to_double(c), b = to_double(d);
  // Break points at the poles and a few widths around them.
  std::vector<double> cuts{a, b};
  for (double p : poles)
    for (double off : {-100 * eta, -10 * eta, -eta, 0.0, eta, 10 * eta, 100 * eta})
      if (p + off > a && p + off < b) cuts.push_back(p + off);
  std::sort(cuts.begin(), cuts.end());

  std::vector<cd> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // (Q - Q^*)_{ij} / (2i)
      auto re_part = [&](double x) {
        const auto m = q_at(cd(x, eta));
        return ((m[i * n + j] - std::conj(m[j * n + i])) / cd(0, 2)).real();
      };
      auto im_part = [&](double x) {
        const auto m = q_at(cd(x, eta));
        return ((m[i * n + j] - std::conj(m[j * n + i])) / cd(0, 2)).imag();
      };
      double re = 0, im = 0;
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        re += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(re_part, cuts[k], cuts[k + 1], 10, 1e-9);
        im += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(im_part, cuts[k], cuts[k + 1], 10, 1e-9);
      }
      out[static_cast<std::size_t>(i) * n + j] = cd(re, im) / M_PI;
    }
  return out;
}

}  // namespace herglotz
