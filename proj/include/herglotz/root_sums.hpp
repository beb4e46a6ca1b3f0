#pragma once

// Symmetric sums over the roots of a monic squarefree polynomial, computed
// without the roots themselves.

#include "herglotz/poly.hpp"

namespace herglotz {

/// sum of h(a) over the roots a of S.
GaussRat sum_over_roots(const Poly& h, const Poly& s);

/// N with sum_a h(a) / (z - a) = N(z) / S(z), deg N < deg S.
Poly lagrange_numerator(const Poly& h, const Poly& s);

/// h * g^{-1} reduced mod S; g must be invertible mod S.
Poly divide_mod(const Poly& h, const Poly& g, const Poly& s);

}  // namespace herglotz
