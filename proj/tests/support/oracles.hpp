#pragma once

// Floating-point reference computations used only to cross-check the exact code.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "herglotz/poly.hpp"

namespace oracle {

using cd = std::complex<double>;

/// Eigenvalues of the companion matrix.
inline std::vector<cd> roots(const herglotz::Poly& p) {
  const int n = p.degree();
  std::vector<cd> out;
  if (n < 1) return out;
  const cd lc = p.lead().to_complex();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) c(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) c(k, n - 1) = -p.coeff(k).to_complex() / lc;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  for (int k = 0; k < n; ++k) out.push_back(es.eigenvalues()(k));
  return out;
}

inline int count_real_in(const herglotz::Poly& p, double a, double b, double tol = 1e-7) {
  int k = 0;
  for (const auto& r : roots(p))
    if (std::abs(r.imag()) < tol && r.real() > a && r.real() < b) ++k;
  return k;
}

}  // namespace oracle
