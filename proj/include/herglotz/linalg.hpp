#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "herglotz/error.hpp"
#include "herglotz/ratfn.hpp"

namespace herglotz {

/// Dense matrix over Q(i), row-major.
class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  CMat(std::initializer_list<std::initializer_list<GaussRat>> rows);

  static CMat identity(int n);
  static CMat diagonal(const std::vector<GaussRat>& d);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  GaussRat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const GaussRat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  CMat adjoint() const;
  bool is_hermitian() const;
  bool is_zero() const;
  /// Columns with the given 0-based indices.
  CMat columns(const std::vector<int>& idx) const;

  CMat operator-() const;
  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(const CMat& a, const CMat& b);
  friend CMat operator*(const GaussRat& s, CMat a);
  friend bool operator==(const CMat& a, const CMat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<GaussRat> a_;
};

std::string to_string(const CMat& m);

/// Strictly increasing 1-based indices.
using IndexSet = std::vector<int>;

/// All index sets of size m in lexicographic order.
std::vector<IndexSet> index_sets(int n, int m);
/// All nonempty index sets, ordered by size and then lexicographically.
std::vector<IndexSet> all_index_sets(int n);

/// Errc::IndexOutOfRange when an index is outside 1..n or not increasing.
CMat principal_submatrix(const CMat& m, const IndexSet& idx);

/// Reduced row echelon form and the pivot columns.
struct Echelon {
  CMat form;
  std::vector<int> pivots;
};
Echelon row_reduce(const CMat& m);

int rank(const CMat& m);
GaussRat det(const CMat& m);
/// Errc::RankDeficient for a singular matrix.
CMat inverse(const CMat& m);
/// Columns form a basis of the nullspace (zero columns when trivial).
CMat nullspace(const CMat& m);
bool same_column_space(const CMat& a, const CMat& b);

/// A principal minor that is negative, if any. Errc::NotHermitian.
struct MinorWitness {
  IndexSet index_set;
  GaussRat value;
};
std::optional<MinorWitness> negative_minor(const CMat& m);
/// All principal minors nonnegative. Errc::NotHermitian.
bool is_psd(const CMat& m);

/// Via a full-rank factorization M = F G: M+ = G*(GG*)^-1 (F*F)^-1 F*.
CMat moore_penrose(const CMat& m);

/// V (V*V)^-1 V*; Errc::RankDeficient unless V has full column rank.
CMat projection_onto_colspace(const CMat& v);

/// Matrix of rational functions, row-major.
class MatRatFn {
 public:
  MatRatFn() = default;
  MatRatFn(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  MatRatFn(const CMat& m);
  MatRatFn(std::initializer_list<std::initializer_list<RatFn>> rows);

  static MatRatFn identity(int n) { return MatRatFn(CMat::identity(n)); }
  static MatRatFn scalar(int n, const RatFn& f);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  RatFn& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const RatFn& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  bool is_zero() const;
  bool is_constant() const;
  /// Only for constant matrices.
  CMat constant_value() const;

  /// M^#(z) = M(conj z)^*: entrywise sharp conjugate, transposed.
  MatRatFn sharp() const;
  /// Errc::DivisionByZero when z is a pole of some entry.
  CMat eval(const GaussRat& z) const;
  std::vector<std::complex<double>> eval(std::complex<double> z) const;
  bool has_pole_at(const GaussRat& z) const;

  MatRatFn operator-() const;
  MatRatFn& operator+=(const MatRatFn& o);
  MatRatFn& operator-=(const MatRatFn& o);
  friend MatRatFn operator+(MatRatFn a, const MatRatFn& b) { return a += b; }
  friend MatRatFn operator-(MatRatFn a, const MatRatFn& b) { return a -= b; }
  friend MatRatFn operator*(const MatRatFn& a, const MatRatFn& b);
  friend MatRatFn operator*(const RatFn& s, MatRatFn a);
  friend bool operator==(const MatRatFn& a, const MatRatFn& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<RatFn> a_;
};

std::string to_string(const MatRatFn& m);

MatRatFn principal_submatrix(const MatRatFn& m, const IndexSet& idx);
/// The matrix with row and column j (1-based) removed.
MatRatFn delete_index(const MatRatFn& m, int j);
RatFn det(const MatRatFn& m);
/// Rank over the field of rational functions.
int rank(const MatRatFn& m);
/// Errc::RankDeficient when det vanishes identically.
MatRatFn inverse(const MatRatFn& m);

/// Points of the upper half-plane, i, 2i, 1+i first, skipping poles of every
/// matrix in `avoid`.
std::vector<GaussRat> upper_samples(int count, const std::vector<const MatRatFn*>& avoid);

/// Moore-Penrose inverse of a rational matrix with constant kernel and
/// ker R = ker R^*. The result satisfies the four axioms as exact identities.
/// Errc::ConstantKernelViolated, Errc::KernelAdjointMismatch.
MatRatFn moore_penrose(const MatRatFn& r);

}  // namespace herglotz
