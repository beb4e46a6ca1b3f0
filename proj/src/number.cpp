#include "herglotz/number.hpp"

#include <ostream>

#include "herglotz/error.hpp"

namespace herglotz {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(Errc::MalformedInput, "empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t k = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(Errc::MalformedInput, "bad rational literal '" + s + "'");
    return Rat(mpz_class(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(Errc::MalformedInput, "bad rational literal '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw Error(Errc::MalformedInput, "zero denominator in '" + s + "'");
  Rat r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rat& r) { return sgn(r); }

Rat abs_rat(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

double to_double(const Rat& r) { return r.get_d(); }

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (is_real()) return GaussRat(Rat(1) / re_);
  const Rat n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rat re = re_ * o.re_ - im_ * o.im_;
  Rat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const GaussRat& z) {
  if (z.is_real()) return to_string(z.re());
  if (sgn(z.re()) == 0) return to_string(z.im()) + "*i";
  std::string im = to_string(z.im());
  if (im[0] != '-') im = "+" + im;
  return to_string(z.re()) + im + "*i";
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

}  // namespace herglotz
