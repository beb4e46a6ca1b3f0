#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and Gaussian rationals.

#include <complex>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace herglotz {

/// Reduced fraction with positive denominator (GMP keeps mpq canonical).
using Rat = mpq_class;

/// Parses "a/b", "a" or a decimal-free integer literal; canonicalizes.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
int sign(const Rat& r);
Rat abs_rat(const Rat& r);
double to_double(const Rat& r);

/// Element of Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rat re, Rat im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussRat(long v) : re_(v), im_(0) {}
  GaussRat(int v) : re_(v), im_(0) {}

  static GaussRat i() { return GaussRat(0, 1); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// |z|^2
  Rat norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  Rat re_{0};
  Rat im_{0};
};

/// "a/b" for real values, "a/b+c/d*i" otherwise.
std::string to_string(const GaussRat& z);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace herglotz
