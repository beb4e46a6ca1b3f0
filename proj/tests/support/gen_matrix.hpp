#pragma once

// Random matrix-valued instances built from a partial fraction representation.

#include "herglotz/matrix_herglotz.hpp"
#include "support/gen.hpp"

namespace gen {

using herglotz::CMat;
using herglotz::MatRatFn;
using herglotz::PartialFractionRep;
using herglotz::PoleWeight;

inline CMat small_matrix(Rng& rng, int rows, int cols, int num = 3) {
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = GaussRat(Rat(uniform(rng, -num, num)), Rat(uniform(rng, -num, num)));
  return m;
}

/// B B^* with B of size n x rank.
inline CMat psd(Rng& rng, int n, int rank) {
  if (rank == 0) return CMat(n, n);
  const CMat b = small_matrix(rng, n, rank);
  return b * b.adjoint();
}

inline CMat hermitian(Rng& rng, int n) {
  const CMat m = small_matrix(rng, n, n);
  return GaussRat(Rat(1, 2)) * (m + m.adjoint());
}

inline PoleWeight constant_weight(const Rat& pole, const CMat& a) {
  const int n = a.rows();
  PoleWeight w{herglotz::RealAlgebraic(pole), n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.entries.push_back(Poly::constant(a(i, j)));
  return w;
}

/// Hermitian C, PSD D, up to max_poles PSD weights (nonzero) at rational poles in [-10, 10].
inline PartialFractionRep herglotz_rep(Rng& rng, int n, int max_poles) {
  PartialFractionRep rep{hermitian(rng, n), psd(rng, n, uniform(rng, 0, n)), {}};
  const int k = uniform(rng, 0, max_poles);
  for (const Rat& p : distinct_points(rng, k, 10, 2)) rep.terms.push_back(constant_weight(p, psd(rng, n, uniform(rng, 1, n))));
  return rep;
}

/// Small linear term, unit-scale weights at integer poles: (1/pi) int Im Q(x + i eta)
/// then differs from the exact weight sum by O(eta) for half-integer endpoints.
inline PartialFractionRep stieltjes_rep(Rng& rng, int n, int max_poles) {
  const CMat v = small_matrix(rng, n, 1, 1);
  PartialFractionRep rep{hermitian(rng, n), GaussRat(Rat(1, 4)) * (v * v.adjoint()), {}};
  const int k = uniform(rng, 1, max_poles);
  for (const Rat& p : distinct_points(rng, k, 10, 1)) {
    const CMat b = small_matrix(rng, n, 1, 1);
    rep.terms.push_back(constant_weight(p, b.is_zero() ? CMat::identity(n) : b * b.adjoint()));
  }
  return rep;
}

/// A - t w w^* with t chosen so that w^*(A')w / |w|^2 <= -1/4.
inline CMat make_indefinite(Rng& rng, const CMat& a) {
  const int n = a.rows();
  CMat w = small_matrix(rng, n, 1);
  while (w.is_zero()) w = small_matrix(rng, n, 1);
  const Rat wn = (w.adjoint() * w)(0, 0).re();
  const Rat waw = (w.adjoint() * a * w)(0, 0).re();
  Rat t = (waw + wn / 4) / (wn * wn);
  if (t <= 0) t = Rat(1, 4) / wn;
  return a - GaussRat(t) * (w * w.adjoint());
}

}  // namespace gen
