#include "herglotz/root_sums.hpp"

namespace herglotz {

// Euler-Jacobi: sum_a r(a)/S'(a) is the coefficient of z^{d-1} in r mod S.
GaussRat sum_over_roots(const Poly& h, const Poly& s) {
  if (s.degree() < 1) return GaussRat();
  return divmod(h * s.derivative(), s).second.coeff(s.degree() - 1);
}

Poly lagrange_numerator(const Poly& h, const Poly& s) {
  if (s.degree() < 1) return {};
  return divmod(h * s.derivative(), s).second;
}

Poly divide_mod(const Poly& h, const Poly& g, const Poly& s) {
  return divmod(h * inverse_mod(g, s), s).second;
}

}  // namespace herglotz
