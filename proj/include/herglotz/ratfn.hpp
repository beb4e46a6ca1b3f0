#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

#include "herglotz/poly.hpp"

namespace herglotz {

/// Reduced quotient num/den of polynomials over Q(i). The denominator is monic
/// and coprime to the numerator, so equality is coefficient-wise equality.
class RatFn {
 public:
  RatFn() : den_(Poly::constant(1)) {}
  RatFn(const GaussRat& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
  RatFn(int c) : RatFn(GaussRat(c)) {}
  RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}
  /// Reduces; throws Errc::DivisionByZero for a zero denominator.
  RatFn(Poly num, Poly den);

  static RatFn z() { return RatFn(Poly::z()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// deg num - deg den; meaningless for the zero function.
  int degree_excess() const { return num_.degree() - den_.degree(); }
  /// All coefficients real.
  bool is_real() const { return num_.is_real() && den_.is_real(); }

  /// Throws Errc::DivisionByZero at a pole.
  GaussRat eval(const GaussRat& z) const;
  std::complex<double> eval(std::complex<double> z) const;
  /// Logarithmic derivative f'/f evaluated numerically.
  std::complex<double> log_derivative(std::complex<double> z) const;

  RatFn inverse() const;
  RatFn derivative() const;

  RatFn operator-() const { return RatFn(-num_, den_, Reduced{}); }
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RatFn(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// f^#: conjugates every coefficient, so that f^#(z) = conj(f(conj z)).
RatFn sharp_conjugate(const RatFn& f);

std::string to_string(const RatFn& f);
std::ostream& operator<<(std::ostream& os, const RatFn& f);

}  // namespace herglotz
