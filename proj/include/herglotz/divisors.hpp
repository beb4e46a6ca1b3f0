#pragma once

#include <vector>

#include "herglotz/ratfn.hpp"
#include "herglotz/real_roots.hpp"

namespace herglotz {

struct DivisorPoint {
  RealAlgebraic point;
  int value = 0;
};

/// Integer-valued function on the real line with finite support, stored as
/// strictly increasing points with nonzero values.
class DivisorFn {
 public:
  DivisorFn() = default;
  /// Sorts, merges coincident points and drops zero values.
  static DivisorFn from_points(std::vector<DivisorPoint> points, const Limits& limits = {});
  /// Caller guarantees strictly increasing points; zero values are dropped.
  static DivisorFn from_sorted(std::vector<DivisorPoint> points);

  const std::vector<DivisorPoint>& support() const { return pts_; }
  bool empty() const { return pts_.empty(); }
  std::size_t size() const { return pts_.size(); }
  std::vector<int> values() const;
  /// Value at x (0 off the support).
  int at(const RealAlgebraic& x, const Limits& limits = {}) const;

  friend DivisorFn operator+(const DivisorFn& a, const DivisorFn& b);
  friend bool operator==(const DivisorFn& a, const DivisorFn& b);

 private:
  std::vector<DivisorPoint> pts_;
};

/// Zero multiplicities minus pole multiplicities of a function whose zeros and
/// poles are all real. Errc::ZeroFunction, Errc::NonRealRoots.
DivisorFn divisor_of(const RatFn& f);

/// Sum of the values strictly inside (a, b). Errc::EndpointOnSupport.
int interval_sum(const DivisorFn& theta, const Rat& a, const Rat& b);

/// Least n with |interval sum| <= n on every interval.
int min_interlacing_order(const DivisorFn& theta);
bool is_n_interlacing(const DivisorFn& theta, int n);

/// An open interval with rational endpoints whose sum attains the order.
struct OrderWitness {
  Rat a;
  Rat b;
  int sum = 0;
};
OrderWitness order_witness(const DivisorFn& theta, const Limits& limits = {});

/// Splits theta into min_interlacing_order(theta) divisors with values in
/// {-1, +1}, each 1-interlacing, summing to theta. Ordered by level.
std::vector<DivisorFn> colour_decompose(const DivisorFn& theta);

}  // namespace herglotz
