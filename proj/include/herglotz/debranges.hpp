#pragma once

#include <string>
#include <vector>

#include "herglotz/linalg.hpp"
#include "herglotz/verdict.hpp"

namespace herglotz {

/// The pair [E-, E+]; polynomial matrices are MatRatFn with constant denominators.
struct DeBrangesInput {
  MatRatFn e_minus;
  MatRatFn e_plus;
};

/// E+^-1 E-. Errc::SingularEPlus, Errc::DimensionMismatch.
MatRatFn schur_quotient(const DeBrangesInput& input);

/// Accept iff I - s s^# vanishes identically.
Verdict inner_check(const MatRatFn& s);

struct SchurData {
  MatRatFn s;
  MatRatFn r;       // s - I
  MatRatFn r_plus;  // Moore-Penrose inverse of r
  MatRatFn q;       // -i r_plus (r + 2I)
  /// Sampled identities linking the four functions.
  std::vector<Check> checks;
};

/// Errc::ConstantKernelViolated, Errc::KernelAdjointMismatch from the pseudoinverse.
SchurData build_schur_data(const MatRatFn& s);

/// Roots of p in the open upper half-plane, with multiplicity. Real roots and
/// conjugate pairs are split off exactly; the rest is counted by the argument
/// principle on a half disc and cross-checked against companion eigenvalues.
struct HalfPlaneCount {
  bool decided = false;
  int count = 0;
  /// Smallest root distance to the contour.
  double margin = 0;
  /// Winding number before rounding.
  double winding = 0;
  std::string reason;
};
HalfPlaneCount upper_root_count(const Poly& p);

/// Bounded type (vacuous), constant kernel and analytic R+, innerness, growth
/// of R+, then every principal minor of Q. Errc::SingularEPlus.
Verdict check_debranges(const DeBrangesInput& input, const Limits& limits = {});

/// check_debranges on [E^#, E]. Errc::SingularE.
Verdict check_hb_n(const MatRatFn& e, const Limits& limits = {});

/// -2i (Q + i P_L)^+ where P_L projects onto the columns of l.
/// Errc::SubspaceTooSmall unless P_L Q = Q; Errc::RankDeficient for dependent columns.
MatRatFn r_from_q_subspace(const MatRatFn& q, const CMat& l);

struct SplitAB {
  MatRatFn a;  // (E+ + E-) / 2
  MatRatFn b;  // (E+ - E-) / 2i
};
SplitAB split_AB(const DeBrangesInput& input);

}  // namespace herglotz
