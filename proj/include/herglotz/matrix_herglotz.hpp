#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "herglotz/linalg.hpp"
#include "herglotz/real_roots.hpp"
#include "herglotz/verdict.hpp"

namespace herglotz {

/// Matrix attached to a real pole; entry (k, l) is entries[k n + l] evaluated
/// at the pole. Rational poles have constant entries.
struct PoleWeight {
  RealAlgebraic pole;
  int n = 0;
  std::vector<Poly> entries;

  /// Exact value; only for rational poles.
  CMat exact() const;
  std::vector<std::complex<double>> approx() const;
  /// Principal minor as a polynomial to be evaluated at the pole.
  Poly minor_poly(const IndexSet& idx) const;
};

/// Hermitian at the pole, decided exactly.
bool is_hermitian(const PoleWeight& w);

struct PoleMinorWitness {
  IndexSet index_set;
  AlgebraicValue value;
};
/// A negative principal minor, if any. Errc::Undecided at the refinement cap.
std::optional<PoleMinorWitness> negative_minor(const PoleWeight& w, const Limits& limits = {});

/// Q(z) = C + D z + sum_j A_j (1/(z_j - z) - z_j/(1 + z_j^2)), poles increasing.
struct PartialFractionRep {
  CMat c;
  CMat d;
  std::vector<PoleWeight> terms;
};

/// Real poles, #-real entries, growth at most linear; bounded type is vacuous.
Verdict check_hypotheses(const MatRatFn& q);

/// Errc::NonSimplePole, Errc::HermitianViolation; hypothesis failures raise
/// Errc::NotSharpReal, Errc::NonRealRoots or Errc::NotRepresentable.
PartialFractionRep extract_partial_fractions(const MatRatFn& q);

/// Exact reconstruction; every irrational pole must come with all roots of its
/// defining polynomial and a shared weight polynomial. Errc::NotRepresentable.
MatRatFn rebuild(const PartialFractionRep& rep);

/// lim (z0 - z) Q(z). Errc::NonSimplePole.
PoleWeight signed_residue(const MatRatFn& q, const RealAlgebraic& z0);

RatFn minor_fn(const MatRatFn& q, const IndexSet& idx);

/// lim f(i y) / (i y)^m as y -> +inf.
struct InfinityLimit {
  bool diverges = false;
  GaussRat value;
};
InfinityLimit infinity_limit(const RatFn& f, int m);

/// Whether some pole of order exactly m has lim (z* - z)^m f(z) > 0.
struct PoleSign {
  enum Status { Holds, Fails, NotApplicable } status = NotApplicable;
  /// The pole and limit that decided it (the first pole when it fails).
  std::optional<AlgebraicValue> limit;
};
/// f must have real zeros and poles. Errc::Undecided at the refinement cap.
PoleSign pole_sign_condition(const RatFn& f, int m, const Limits& limits = {});

/// Principal minors of order 1 and 2, residues and the linear term.
Verdict verify_criterion_iii(const MatRatFn& q, const Limits& limits = {});
/// Every principal minor: interlacing, pole sign and the limit at infinity.
Verdict verify_criterion_ii(const MatRatFn& q, const Limits& limits = {});

/// Im Q(z) >= 0 at the given points. Outcome::Consistent or Outcome::Reject.
/// Errc::PoleOnGrid; Errc::MalformedInput for points off the upper half-plane.
Verdict sample_criterion_i(const MatRatFn& q, const std::vector<GaussRat>& grid);

/// n scalar Herglotz functions whose product is det Q.
/// Errc::NotVerifiedHerglotz unless verify_criterion_ii accepts.
std::vector<RatFn> factor_determinant(const MatRatFn& q, const Limits& limits = {});

/// (1/pi) times the integral of Im Q(x + i eta) over [c, d] by adaptive
/// Gauss-Kronrod quadrature; row-major n x n.
std::vector<std::complex<double>> stieltjes_sum_oracle(const PartialFractionRep& rep, const Rat& c, const Rat& d, double eta);

}  // namespace herglotz
