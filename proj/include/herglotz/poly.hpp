#pragma once

#include <complex>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "herglotz/number.hpp"

namespace herglotz {

/// Univariate polynomial over Q(i), coefficients stored in ascending order.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRat> coeffs);
  Poly(std::initializer_list<GaussRat> coeffs) : Poly(std::vector<GaussRat>(coeffs)) {}

  static Poly constant(const GaussRat& c);
  /// The identity polynomial z.
  static Poly z();
  /// c * z^k
  static Poly monomial(const GaussRat& c, int k);
  /// (z - r)
  static Poly linear_root(const GaussRat& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Coefficient of z^k, zero beyond the degree.
  GaussRat coeff(int k) const;
  const GaussRat& lead() const { return c_.back(); }
  const std::vector<GaussRat>& coeffs() const { return c_; }

  bool is_real() const;
  Poly conj() const;
  Poly real_part() const;
  Poly imag_part() const;
  Poly derivative() const;
  Poly monic() const;

  GaussRat eval(const GaussRat& z) const;
  std::complex<double> eval(std::complex<double> z) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussRat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
  friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<GaussRat> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws std::logic_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic greatest common divisor (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Monic least common multiple.
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& p, int k);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
Poly inverse_mod(const Poly& a, const Poly& m);

std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace herglotz
