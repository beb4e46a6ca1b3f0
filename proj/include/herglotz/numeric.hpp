#pragma once

// Double-precision helpers for the numeric oracles only; exact decisions never use them.

#include <complex>
#include <vector>

#include "herglotz/poly.hpp"

namespace herglotz {

/// Companion-matrix eigenvalues.
std::vector<std::complex<double>> numeric_roots(const Poly& p);

}  // namespace herglotz
