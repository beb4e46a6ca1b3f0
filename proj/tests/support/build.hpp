#pragma once

// Terse constructors for test fixtures.

#include <initializer_list>
#include <string>

#include "herglotz/ratfn.hpp"

namespace fx {

using herglotz::GaussRat;
using herglotz::Poly;
using herglotz::Rat;
using herglotz::RatFn;

inline Rat q(const char* s) { return herglotz::parse_rat(s); }

/// Real polynomial from ascending integer coefficients.
inline Poly P(std::initializer_list<long> c) {
  std::vector<GaussRat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

inline const GaussRat I = GaussRat::i();
inline const RatFn Z = RatFn::z();

/// (z - r) as a function.
inline RatFn lin(const GaussRat& r) { return RatFn(Poly::linear_root(r)); }

}  // namespace fx
