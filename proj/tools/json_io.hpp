#pragma once

// JSON readers and writers for the command-line front end. Readers raise
// Errc::MalformedInput on any shape or literal error.

#include <json.hpp>

#include "herglotz/debranges.hpp"
#include "herglotz/divisors.hpp"
#include "herglotz/linalg.hpp"
#include "herglotz/scalar_herglotz.hpp"
#include "herglotz/verdict.hpp"

namespace herglotz::io {

using Json = nlohmann::ordered_json;

Json read_file(const std::string& path);

Rat to_rat(const Json& j);
GaussRat to_gauss(const Json& j);
Poly to_poly(const Json& j);
/// {"num": [...], "den": [...]} with den optional; a bare array is a polynomial.
RatFn to_ratfn(const Json& j);
/// {"n": n, "entries": [[ratfn, ...], ...]}
MatRatFn to_matrix(const Json& j);
/// Rational string or {"poly": [...], "interval": [a, b]}.
RealAlgebraic to_point(const Json& j);
/// [{"point": ..., "value": int}, ...]
DivisorFn to_divisor(const Json& j);
/// {"zeros": [point...], "poles": [point...], "scale": rational}
InterlacingData to_interlacing(const Json& j);

Json from(const Rat& r);
Json from(const GaussRat& z);
Json from(const Poly& p);
Json from(const RatFn& f);
Json from(const MatRatFn& m);
Json from(const RealAlgebraic& x);
Json from(const DivisorFn& d);
Json from(const Verdict& v);

}  // namespace herglotz::io
