#include "herglotz/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace herglotz {

// ---- CMat -------------------------------------------------------------------

CMat::CMat(std::initializer_list<std::initializer_list<GaussRat>> rows) {
  r_ = static_cast<int>(rows.size());
  c_ = r_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

CMat CMat::diagonal(const std::vector<GaussRat>& d) {
  const int n = static_cast<int>(d.size());
  CMat m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = d[k];
  return m;
}

CMat CMat::adjoint() const {
  CMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

bool CMat::is_hermitian() const { return is_square() && adjoint() == *this; }

bool CMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

CMat CMat::columns(const std::vector<int>& idx) const {
  CMat m(r_, static_cast<int>(idx.size()));
  for (int i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, static_cast<int>(j)) = (*this)(i, idx[j]);
  return m;
}

CMat CMat::operator-() const {
  CMat m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

CMat& CMat::operator+=(const CMat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw Error(Errc::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw Error(Errc::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.c_ != b.r_) throw Error(Errc::DimensionMismatch, "matrix product");
  CMat m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const GaussRat& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

CMat operator*(const GaussRat& s, CMat a) {
  for (auto& x : a.a_) x *= s;
  return a;
}

std::string to_string(const CMat& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---- index sets -------------------------------------------------------------

std::vector<IndexSet> index_sets(int n, int m) {
  std::vector<IndexSet> out;
  if (m < 1 || m > n) return out;
  IndexSet cur(m);
  for (int k = 0; k < m; ++k) cur[k] = k + 1;
  while (true) {
    out.push_back(cur);
    int k = m - 1;
    while (k >= 0 && cur[k] == n - (m - 1 - k)) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> all_index_sets(int n) {
  std::vector<IndexSet> out;
  for (int m = 1; m <= n; ++m) {
    auto part = index_sets(n, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

void check_index_set(int n, const IndexSet& idx) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > n || (k > 0 && idx[k] <= idx[k - 1]))
      throw Error(Errc::IndexOutOfRange, "index set must be increasing within 1.." + std::to_string(n));
  }
}

}  // namespace

CMat principal_submatrix(const CMat& m, const IndexSet& idx) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "principal submatrix of a non-square matrix");
  check_index_set(m.rows(), idx);
  const int k = static_cast<int>(idx.size());
  CMat s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s(i, j) = m(idx[i] - 1, idx[j] - 1);
  return s;
}

// ---- elimination over Q(i) --------------------------------------------------

Echelon row_reduce(const CMat& m) {
  Echelon e{m, {}};
  CMat& a = e.form;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const GaussRat inv = a(row, col).inverse();
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const GaussRat f = a(i, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

int rank(const CMat& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

GaussRat det(const CMat& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  CMat a = m;
  const int n = a.rows();
  GaussRat d = 1;
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    const GaussRat inv = a(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const GaussRat f = a(i, col) * inv;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

CMat inverse(const CMat& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const int n = m.rows();
  CMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1)
    throw Error(Errc::RankDeficient, "singular matrix");
  CMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.form(i, n + j);
  return inv;
}

CMat nullspace(const CMat& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> pivot(m.cols(), false);
  for (int p : e.pivots) pivot[p] = true;
  std::vector<int> free;
  for (int j = 0; j < m.cols(); ++j)
    if (!pivot[j]) free.push_back(j);
  CMat k(m.cols(), static_cast<int>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    const int col = static_cast<int>(f);
    k(free[f], col) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], col) = -e.form(static_cast<int>(r), free[f]);
  }
  return k;
}

bool same_column_space(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows()) return false;
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  CMat both(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) both(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) both(i, a.cols() + j) = b(i, j);
  }
  return rank(both) == ra;
}

std::optional<MinorWitness> negative_minor(const CMat& m) {
  if (!m.is_hermitian()) throw Error(Errc::NotHermitian, "matrix is not Hermitian");
  for (const auto& idx : all_index_sets(m.rows())) {
    const GaussRat d = det(principal_submatrix(m, idx));
    // Minors of a Hermitian matrix are real.
    if (sgn(d.re()) < 0) return MinorWitness{idx, d};
  }
  return std::nullopt;
}

bool is_psd(const CMat& m) { return !negative_minor(m).has_value(); }

CMat moore_penrose(const CMat& m) {
  const Echelon e = row_reduce(m);
  const int r = static_cast<int>(e.pivots.size());
  if (r == 0) return CMat(m.cols(), m.rows());
  const CMat f = m.columns(e.pivots);
  CMat g(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) g(i, j) = e.form(i, j);
  const CMat gs = g.adjoint(), fs = f.adjoint();
  return gs * inverse(g * gs) * inverse(fs * f) * fs;
}

CMat projection_onto_colspace(const CMat& v) {
  if (rank(v) != v.cols()) throw Error(Errc::RankDeficient, "columns are linearly dependent");
  if (v.cols() == 0) return CMat(v.rows(), v.rows());
  const CMat vs = v.adjoint();
  return v * inverse(vs * v) * vs;
}

// ---- MatRatFn ---------------------------------------------------------------

MatRatFn::MatRatFn(const CMat& m) : MatRatFn(m.rows(), m.cols()) {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) (*this)(i, j) = RatFn(m(i, j));
}

MatRatFn::MatRatFn(std::initializer_list<std::initializer_list<RatFn>> rows) {
  r_ = static_cast<int>(rows.size());
  c_ = r_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

MatRatFn MatRatFn::scalar(int n, const RatFn& f) {
  MatRatFn m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = f;
  return m;
}

bool MatRatFn::is_zero() const {
  for (const auto& f : a_)
    if (!f.is_zero()) return false;
  return true;
}

bool MatRatFn::is_constant() const {
  for (const auto& f : a_)
    if (!f.is_constant() && !f.is_zero()) return false;
  return true;
}

CMat MatRatFn::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant matrix");
  CMat m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).num().coeff(0);
  return m;
}

MatRatFn MatRatFn::sharp() const {
  MatRatFn t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = sharp_conjugate((*this)(i, j));
  return t;
}

CMat MatRatFn::eval(const GaussRat& z) const {
  CMat m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).eval(z);
  return m;
}

std::vector<std::complex<double>> MatRatFn::eval(std::complex<double> z) const {
  std::vector<std::complex<double>> out;
  out.reserve(a_.size());
  for (const auto& f : a_) out.push_back(f.eval(z));
  return out;
}

bool MatRatFn::has_pole_at(const GaussRat& z) const {
  for (const auto& f : a_)
    if (f.den().eval(z).is_zero()) return true;
  return false;
}

MatRatFn MatRatFn::operator-() const {
  MatRatFn m = *this;
  for (auto& f : m.a_) f = -f;
  return m;
}

MatRatFn& MatRatFn::operator+=(const MatRatFn& o) {
  if (r_ != o.r_ || c_ != o.c_) throw Error(Errc::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

MatRatFn& MatRatFn::operator-=(const MatRatFn& o) {
  if (r_ != o.r_ || c_ != o.c_) throw Error(Errc::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

namespace {

// Monic lcm of all entry denominators.
Poly common_denominator(const std::vector<RatFn>& entries) {
  Poly l = Poly::constant(1);
  for (const auto& f : entries) {
    if (f.is_polynomial() || f.den() == l) continue;
    l = lcm(l, f.den());
  }
  return l;
}

}  // namespace

// Products go through polynomial matrices over a common denominator, so each
// entry is reduced once instead of once per term.
MatRatFn operator*(const MatRatFn& a, const MatRatFn& b) {
  if (a.c_ != b.r_) throw Error(Errc::DimensionMismatch, "matrix product");
  const Poly da = common_denominator(a.a_), db = common_denominator(b.a_);
  std::vector<Poly> pa(a.a_.size()), pb(b.a_.size());
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (!a.a_[k].is_zero()) pa[k] = a.a_[k].num() * exact_div(da, a.a_[k].den());
  for (std::size_t k = 0; k < b.a_.size(); ++k)
    if (!b.a_[k].is_zero()) pb[k] = b.a_[k].num() * exact_div(db, b.a_[k].den());
  const Poly d = da * db;
  MatRatFn m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int j = 0; j < b.c_; ++j) {
      Poly acc;
      for (int k = 0; k < a.c_; ++k) {
        const Poly& x = pa[static_cast<std::size_t>(i) * a.c_ + k];
        const Poly& y = pb[static_cast<std::size_t>(k) * b.c_ + j];
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      if (!acc.is_zero()) m(i, j) = RatFn(std::move(acc), d);
    }
  return m;
}

MatRatFn operator*(const RatFn& s, MatRatFn a) {
  for (auto& f : a.a_) f *= s;
  return a;
}

std::string to_string(const MatRatFn& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

MatRatFn principal_submatrix(const MatRatFn& m, const IndexSet& idx) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "principal submatrix of a non-square matrix");
  check_index_set(m.rows(), idx);
  const int k = static_cast<int>(idx.size());
  MatRatFn s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s(i, j) = m(idx[i] - 1, idx[j] - 1);
  return s;
}

MatRatFn delete_index(const MatRatFn& m, int j) {
  IndexSet keep;
  for (int k = 1; k <= m.rows(); ++k)
    if (k != j) keep.push_back(k);
  return principal_submatrix(m, keep);
}

namespace {

// Gauss-Jordan over the rational function field; returns the pivot count.
int eliminate(MatRatFn& a) {
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const RatFn inv = a(row, col).inverse();
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const RatFn f = a(i, col);
      for (int j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    ++row;
  }
  return row;
}

}  // namespace

RatFn det(const MatRatFn& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  // Clear denominators row by row, then fraction-free (Bareiss) elimination.
  std::vector<std::vector<Poly>> a(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  Poly scale = Poly::constant(1);
  for (int i = 0; i < n; ++i) {
    Poly l = Poly::constant(1);
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_polynomial()) l = lcm(l, m(i, j).den());
    scale *= l;
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j).num() * exact_div(l, m(i, j).den());
  }
  bool negate = false;
  Poly prev = Poly::constant(1);
  for (int k = 0; k < n - 1; ++k) {
    int p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return RatFn();
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  Poly d = std::move(a[n - 1][n - 1]);
  if (negate) d = -d;
  return RatFn(std::move(d), std::move(scale));
}

int rank(const MatRatFn& m) {
  MatRatFn a = m;
  return eliminate(a);
}

MatRatFn inverse(const MatRatFn& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const int n = m.rows();
  MatRatFn aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && aug(p, col).is_zero()) ++p;
    if (p == n) throw Error(Errc::RankDeficient, "determinant vanishes identically");
    if (p != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(col, j));
    const RatFn inv = aug(col, col).inverse();
    for (int j = col; j < 2 * n; ++j) aug(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug(i, col).is_zero()) continue;
      const RatFn f = aug(i, col);
      for (int j = col; j < 2 * n; ++j)
        if (!aug(col, j).is_zero()) aug(i, j) -= f * aug(col, j);
    }
  }
  MatRatFn out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<GaussRat> upper_samples(int count, const std::vector<const MatRatFn*>& avoid) {
  std::vector<GaussRat> cand{GaussRat(0, 1), GaussRat(0, 2), GaussRat(1, 1)};
  for (int b = 1; b <= 6; ++b)
    for (int a = -3; a <= 3; ++a) cand.emplace_back(Rat(a), Rat(b + 1) / 2);
  std::vector<GaussRat> out;
  for (const auto& z : cand) {
    if (static_cast<int>(out.size()) == count) break;
    bool ok = std::find(out.begin(), out.end(), z) == out.end();
    for (const MatRatFn* m : avoid) ok = ok && !m->has_pole_at(z);
    if (ok) out.push_back(z);
  }
  if (static_cast<int>(out.size()) < count) throw std::logic_error("upper_samples: too many poles");
  return out;
}

MatRatFn moore_penrose(const MatRatFn& r) {
  if (!r.is_square()) throw Error(Errc::DimensionMismatch, "pseudoinverse of a non-square rational matrix");
  const int n = r.rows();
  const int rk = rank(r);
  if (rk == 0) return MatRatFn(n, n);

  const auto pts = upper_samples(3, {&r});
  CMat kernel;
  for (const auto& z : pts) {
    const CMat v = r.eval(z);
    const CMat k = nullspace(v);
    if (k.cols() != n - rk) throw Error(Errc::ConstantKernelViolated, "rank drops at z = " + to_string(z));
    if (kernel.rows() == 0) kernel = k;
    else if (!same_column_space(kernel, k))
      throw Error(Errc::ConstantKernelViolated, "kernel at z = " + to_string(z) + " differs from the kernel at " + to_string(pts[0]));
  }
  for (const auto& z : pts)
    if (!same_column_space(kernel, nullspace(r.eval(z).adjoint())))
      throw Error(Errc::KernelAdjointMismatch, "ker R(z) != ker R(z)* at z = " + to_string(z));
  const MatRatFn kfn(kernel);
  if (!(r * kfn).is_zero()) throw Error(Errc::ConstantKernelViolated, "sampled kernel is not annihilated identically");
  if (!(r.sharp() * kfn).is_zero()) throw Error(Errc::KernelAdjointMismatch, "kernel of the adjoint is not constant");

  // P projects onto the orthogonal complement of the kernel, which is also ran R.
  CMat p = CMat::identity(n);
  if (kernel.cols() > 0) p -= projection_onto_colspace(kernel);
  const CMat v = p.columns(row_reduce(p).pivots);
  const CMat vplus = inverse(v.adjoint() * v) * v.adjoint();
  const MatRatFn vf(v), vpf(vplus);
  const MatRatFn y = vf * inverse(vpf * r * vf) * vpf;

  const MatRatFn pf(p);
  if (!(r * y == pf) || !(y * r == pf) || !(r * y * r == r) || !(y * r * y == y))
    throw std::logic_error("pseudoinverse identities failed");
  return y;
}

}  // namespace herglotz
