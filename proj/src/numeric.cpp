#include "herglotz/numeric.hpp"

#include <Eigen/Dense>

namespace herglotz {

std::vector<std::complex<double>> numeric_roots(const Poly& p) {
  const int n = p.degree();
  std::vector<std::complex<double>> out;
  if (n < 1) return out;
  const std::complex<double> lc = p.lead().to_complex();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) c(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) c(k, n - 1) = -p.coeff(k).to_complex() / lc;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  for (int k = 0; k < n; ++k) out.push_back(es.eigenvalues()(k));
  return out;
}

}  // namespace herglotz
