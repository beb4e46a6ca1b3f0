#pragma once

#include <optional>
#include <vector>

#include "herglotz/divisors.hpp"
#include "herglotz/ratfn.hpp"
#include "herglotz/real_roots.hpp"
#include "herglotz/verdict.hpp"

namespace herglotz {

/// q(z) = c + d z + sum_j a_j (1/(z_j - z) - z_j/(1 + z_j^2)).
struct ScalarPFRep {
  struct Term {
    RealAlgebraic pole;
    AlgebraicValue weight;
  };
  Rat c;
  Rat d;
  std::vector<Term> terms;
};

/// Partial fractions of a real function with simple real poles and
/// deg num <= deg den + 1. Throws Errc::NotSharpReal, Errc::NonRealRoots or
/// Errc::NonSimplePole when the shape does not allow the representation.
ScalarPFRep scalar_partial_fractions(const RatFn& q);

/// Exact reconstruction of a representation whose poles are all rational.
RatFn rebuild(const ScalarPFRep& rep);

Verdict check_scalar_herglotz(const RatFn& q, const Limits& limits = {});

/// Real zeros and poles of c * prod (a - z) / prod (b - z), alternating.
struct InterlacingData {
  std::vector<RealAlgebraic> zeros;
  std::vector<RealAlgebraic> poles;
  Rat scale{1};
};

/// sign * scale * prod (a - z) / prod (b - z) with points kept symbolic; the
/// points may be irrational without their conjugates.
struct HerglotzFactor {
  Rat scale{1};
  std::vector<RealAlgebraic> zeros;
  std::vector<RealAlgebraic> poles;

  /// Gaussian-rational form, when every irrational point comes with all the
  /// roots of its defining polynomial.
  std::optional<RatFn> as_ratfn() const;
  std::complex<double> eval(std::complex<double> z) const;
  std::string to_string() const;
};

/// Checks distinctness, strict alternation and a positive scale, and returns
/// the Herglotz factor with the leading-zero sign fix. Errc::InterlacingViolated.
HerglotzFactor herglotz_factor_from(const InterlacingData& data, const Limits& limits = {});

/// Errc::InterlacingViolated, or Errc::NotRepresentable when the points do
/// not form complete sets of conjugates.
RatFn synth_from_interlacing(const InterlacingData& data, const Limits& limits = {});

/// Herglotz test of a symbolic factor: alternation and the sign rule.
bool is_herglotz_factor(const HerglotzFactor& f, const Limits& limits = {});

struct HerglotzFactorization {
  int sign = 1;
  std::vector<HerglotzFactor> factors;

  /// Product as a rational function when every factor is representable.
  std::optional<RatFn> product() const;
};

/// f = sign * prod factors with n Herglotz factors.
/// Errc::ZeroFunction, Errc::NotSharpReal, Errc::NonRealRoots, Errc::NotNInterlacing.
HerglotzFactorization factor_into_herglotz(const RatFn& f, int n, const Limits& limits = {});

/// (1/2 pi i) times the integral of f'/f over the circle on the diameter
/// [a, b], using `steps` trapezoid nodes on each half. Errc::SingularOnContour.
double winding_oracle(const RatFn& f, const Rat& a, const Rat& b, int steps);

/// Classical Hermite-Biehler test for p = A + iB with real A, B.
Verdict classical_hb_check(const Poly& a, const Poly& b, const Limits& limits = {});

/// Numeric count of roots with negative imaginary part. Errc::RootNearAxis.
int lower_halfplane_roots_oracle(const Poly& p);

}  // namespace herglotz
