#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "herglotz/error.hpp"
#include "herglotz/poly.hpp"

namespace herglotz {

/// Number of distinct real roots of p in the open interval (a, b), computed
/// as the Sturm sign-variation difference. p must have real coefficients.
/// Throws Errc::EndpointIsRoot when p(a) = 0 or p(b) = 0.
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

/// Yun decomposition: pairwise coprime monic squarefree factors with their
/// multiplicities, ascending by multiplicity. Constants give an empty list.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p);

/// Product of the squarefree factors (monic).
Poly squarefree_part(const Poly& p);

/// Strict bound 1 + max|c_k|/|c_lead| on the moduli of all roots
/// (|re| + |im| stands in for the modulus of a non-real coefficient).
Rat cauchy_bound(const Poly& p);

/// True iff every complex root of p is real.
bool all_roots_real(const Poly& p);

struct RealRoot;

/// A real algebraic number: either an exact rational, or the unique root of a
/// monic squarefree rational polynomial without rational roots inside an open
/// isolating interval (lo, hi) whose endpoints are not roots.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rat(0)) {}
  RealAlgebraic(const Rat& value);
  RealAlgebraic(int value) : RealAlgebraic(Rat(value)) {}

  /// Validates that (lo, hi) isolates exactly one root of `poly` and
  /// normalizes (squarefree part, rational roots detected exactly).
  /// Throws Errc::MalformedInput otherwise.
  static RealAlgebraic from_isolating_interval(const Poly& poly, const Rat& lo, const Rat& hi);

  bool is_rational() const { return rational_; }
  /// Exact value; only for rational points.
  const Rat& value() const;
  /// Monic squarefree defining polynomial; z - r for a rational r.
  const Poly& defining_poly() const { return poly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }

  /// One bisection step (identity for rationals).
  RealAlgebraic refined() const;
  double approx() const;
  std::string to_string() const;

 private:
  friend std::vector<RealRoot> isolate_real_roots(const Poly& p);
  RealAlgebraic(Poly poly, Rat lo, Rat hi) : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  Poly poly_;
  Rat lo_;
  Rat hi_;
  bool rational_ = false;
};

struct RealRoot {
  RealAlgebraic point;
  int multiplicity = 1;
};

/// Distinct real roots in increasing order with multiplicities. Non-real
/// coefficients are allowed: the real roots are those of gcd(Re p, Im p).
std::vector<RealRoot> isolate_real_roots(const Poly& p);

/// Exact comparison with a rational; never refines.
int compare(const RealAlgebraic& x, const Rat& r);
/// Certified comparison; throws Errc::Undecided once the refinement budget is spent.
int compare(const RealAlgebraic& x, const RealAlgebraic& y, const Limits& limits = {});

/// Sign of g(x) for a polynomial g whose value at x is real (the imaginary part
/// polynomial must vanish at x, else Errc::HermitianViolation).
int sign_at(const Poly& g, const RealAlgebraic& x, const Limits& limits = {});

/// A rational strictly between x < y.
Rat rational_between(const RealAlgebraic& x, const RealAlgebraic& y, const Limits& limits = {});
/// Rationals strictly below / above x.
Rat rational_below(const RealAlgebraic& x);
Rat rational_above(const RealAlgebraic& x);

/// p(x) = 0, decided exactly.
bool vanishes_at(const Poly& p, const RealAlgebraic& x);

/// Multiplicity of x as a root of p (0 when not a root).
int root_multiplicity(const Poly& p, const RealAlgebraic& x);

/// The number num(x)/den(x) for a real algebraic x with den(x) != 0. Complex
/// coefficients are allowed; sign() needs the value to be real.
struct AlgebraicValue {
  Poly num;
  Poly den;
  RealAlgebraic at;

  static AlgebraicValue constant(const GaussRat& c) { return {Poly::constant(c), Poly::constant(1), RealAlgebraic()}; }

  bool is_exact() const { return at.is_rational() || (num.degree() < 1 && den.degree() < 1); }
  /// Exact value; only when is_exact().
  GaussRat exact() const;
  int sign(const Limits& limits = {}) const;
  std::complex<double> approx() const;
  std::string to_string() const;
};

}  // namespace herglotz
