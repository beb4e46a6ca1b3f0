#include "herglotz/divisors.hpp"

#include <algorithm>

namespace herglotz {

namespace {

// Prefix sums with a leading 0: level[k] is the cumulative value left of point k.
std::vector<int> levels(const DivisorFn& theta) {
  std::vector<int> out{0};
  for (const auto& p : theta.support()) out.push_back(out.back() + p.value);
  return out;
}

}  // namespace

DivisorFn DivisorFn::from_points(std::vector<DivisorPoint> points, const Limits& limits) {
  std::stable_sort(points.begin(), points.end(), [&](const DivisorPoint& x, const DivisorPoint& y) {
    return compare(x.point, y.point, limits) < 0;
  });
  DivisorFn d;
  for (auto& p : points) {
    if (!d.pts_.empty() && compare(d.pts_.back().point, p.point, limits) == 0) {
      d.pts_.back().value += p.value;
      if (d.pts_.back().value == 0) d.pts_.pop_back();
      continue;
    }
    if (p.value != 0) d.pts_.push_back(std::move(p));
  }
  return d;
}

DivisorFn DivisorFn::from_sorted(std::vector<DivisorPoint> points) {
  DivisorFn d;
  for (auto& p : points)
    if (p.value != 0) d.pts_.push_back(std::move(p));
  return d;
}

std::vector<int> DivisorFn::values() const {
  std::vector<int> v;
  for (const auto& p : pts_) v.push_back(p.value);
  return v;
}

int DivisorFn::at(const RealAlgebraic& x, const Limits& limits) const {
  for (const auto& p : pts_)
    if (compare(p.point, x, limits) == 0) return p.value;
  return 0;
}

DivisorFn operator+(const DivisorFn& a, const DivisorFn& b) {
  std::vector<DivisorPoint> all = a.pts_;
  all.insert(all.end(), b.pts_.begin(), b.pts_.end());
  return DivisorFn::from_points(std::move(all));
}

bool operator==(const DivisorFn& a, const DivisorFn& b) {
  if (a.pts_.size() != b.pts_.size()) return false;
  for (std::size_t k = 0; k < a.pts_.size(); ++k) {
    if (a.pts_[k].value != b.pts_[k].value) return false;
    if (compare(a.pts_[k].point, b.pts_[k].point) != 0) return false;
  }
  return true;
}

DivisorFn divisor_of(const RatFn& f) {
  if (f.is_zero()) throw Error(Errc::ZeroFunction, "divisor of the zero function");
  if (!all_roots_real(f.num()) || !all_roots_real(f.den()))
    throw Error(Errc::NonRealRoots, "function has non-real zeros or poles");
  std::vector<DivisorPoint> pts;
  // Numerator and denominator are coprime, so the two root sets are disjoint.
  for (auto& r : isolate_real_roots(f.num())) pts.push_back({std::move(r.point), r.multiplicity});
  for (auto& r : isolate_real_roots(f.den())) pts.push_back({std::move(r.point), -r.multiplicity});
  return DivisorFn::from_points(std::move(pts));
}

int interval_sum(const DivisorFn& theta, const Rat& a, const Rat& b) {
  int s = 0;
  for (const auto& p : theta.support()) {
    const int ca = compare(p.point, a);
    const int cb = compare(p.point, b);
    if (ca == 0 || cb == 0) throw Error(Errc::EndpointOnSupport, "interval endpoint lies on the support");
    if (ca > 0 && cb < 0) s += p.value;
  }
  return s;
}

int min_interlacing_order(const DivisorFn& theta) {
  const auto lv = levels(theta);
  const auto [lo, hi] = std::minmax_element(lv.begin(), lv.end());
  return *hi - *lo;
}

bool is_n_interlacing(const DivisorFn& theta, int n) { return min_interlacing_order(theta) <= n; }

OrderWitness order_witness(const DivisorFn& theta, const Limits& limits) {
  OrderWitness w{Rat(-1), Rat(1), 0};
  const auto& pts = theta.support();
  if (pts.empty()) return w;
  const auto lv = levels(theta);
  // The run of points s..e-1 has sum lv[e] - lv[s].
  std::size_t s = 0, e = 0;
  int best = -1;
  for (std::size_t i = 0; i < lv.size(); ++i)
    for (std::size_t j = i + 1; j < lv.size(); ++j)
      if (std::abs(lv[j] - lv[i]) > best) {
        best = std::abs(lv[j] - lv[i]);
        s = i;
        e = j;
      }
  w.sum = lv[e] - lv[s];
  w.a = s == 0 ? rational_below(pts[0].point) : rational_between(pts[s - 1].point, pts[s].point, limits);
  w.b = e == pts.size() ? rational_above(pts.back().point) : rational_between(pts[e - 1].point, pts[e].point, limits);
  return w;
}

std::vector<DivisorFn> colour_decompose(const DivisorFn& theta) {
  std::vector<DivisorFn> out;
  if (theta.empty()) return out;
  const auto lv = levels(theta);
  const auto [lo, hi] = std::minmax_element(lv.begin(), lv.end());
  const auto& pts = theta.support();
  for (int j = *lo; j < *hi; ++j) {
    std::vector<DivisorPoint> part;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const int left = lv[k], right = lv[k + 1];
      if (right > j && j >= left) part.push_back({pts[k].point, 1});
      else if (left > j && j >= right) part.push_back({pts[k].point, -1});
    }
    out.push_back(DivisorFn::from_sorted(std::move(part)));
  }
  return out;
}

}  // namespace herglotz
