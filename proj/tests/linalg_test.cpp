#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "herglotz/linalg.hpp"
#include "support/build.hpp"
#include "support/gen.hpp"

using namespace herglotz;
using fx::I;
using fx::Z;

namespace {

// The four defining identities, checked by plain multiplication.
void expect_mp_axioms(const CMat& t, const CMat& p) {
  EXPECT_EQ(t * p * t, t);
  EXPECT_EQ(p * t * p, p);
  EXPECT_TRUE((t * p).is_hermitian());
  EXPECT_TRUE((p * t).is_hermitian());
}

void expect_mp_axioms(const MatRatFn& t, const MatRatFn& p) {
  EXPECT_EQ(t * p * t, t);
  EXPECT_EQ(p * t * p, p);
  // T T+ and T+ T are constant here, so Hermitian means Hermitian as a constant.
  ASSERT_TRUE((t * p).is_constant());
  ASSERT_TRUE((p * t).is_constant());
  EXPECT_TRUE((t * p).constant_value().is_hermitian());
  EXPECT_TRUE((p * t).constant_value().is_hermitian());
}

CMat random_matrix(gen::Rng& rng, int rows, int cols, int num = 4) {
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = gen::gauss(rng, num, 3);
  return m;
}

// Product of random n x r and r x n factors: rank at most r.
CMat random_rank(gen::Rng& rng, int n, int r) {
  if (r == 0) return CMat(n, n);
  return random_matrix(rng, n, r) * random_matrix(rng, r, n);
}

CMat random_hermitian(gen::Rng& rng, int n) {
  CMat m = random_matrix(rng, n, n);
  return m + m.adjoint();
}

Eigen::MatrixXcd to_eigen(const CMat& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
  return e;
}

}  // namespace

TEST(PrincipalSubmatrix, KnownExamples) {
  const CMat m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  EXPECT_EQ(principal_submatrix(m, {1, 3}), (CMat{{1, 3}, {7, 9}}));
  EXPECT_EQ(principal_submatrix(m, {1, 2, 3}), m);
  EXPECT_EQ(principal_submatrix(CMat::diagonal({1, 2, 3}), {2}), (CMat{{2}}));
  try {
    principal_submatrix(m, {0, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
  EXPECT_THROW(principal_submatrix(m, {2, 1}), Error);
}

TEST(IndexSets, OrderedBySizeThenLex) {
  const auto all = all_index_sets(3);
  const std::vector<IndexSet> want{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  EXPECT_EQ(all, want);
  EXPECT_EQ(all_index_sets(5).size(), 31u);
}

TEST(IsPsd, KnownExamples) {
  EXPECT_FALSE(is_psd(CMat{{1, 2}, {2, 1}}));
  const auto w = negative_minor(CMat{{1, 2}, {2, 1}});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->index_set, (IndexSet{1, 2}));
  EXPECT_EQ(w->value, GaussRat(-3));
  EXPECT_TRUE(is_psd(CMat::identity(3)));
  EXPECT_TRUE(is_psd(CMat{{1, 1}, {1, 1}}));
  // Leading minors alone would accept this one.
  EXPECT_FALSE(is_psd(CMat::diagonal({0, -1})));
  try {
    is_psd(CMat{{1, I}, {I, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotHermitian);
  }
}

TEST(MoorePenrose, KnownExamples) {
  EXPECT_EQ(moore_penrose(CMat::diagonal({1, 0})), CMat::diagonal({1, 0}));
  const CMat ones{{1, 1}, {1, 1}};
  const CMat want = GaussRat(Rat(1, 4)) * ones;
  EXPECT_EQ(moore_penrose(ones), want);
  expect_mp_axioms(ones, want);
  EXPECT_EQ(moore_penrose(CMat(2, 3)), CMat(3, 2));
}

TEST(Projection, KnownExamples) {
  CMat e1(3, 1);
  e1(0, 0) = 1;
  EXPECT_EQ(projection_onto_colspace(e1), CMat::diagonal({1, 0, 0}));
  CMat ones(2, 1);
  ones(0, 0) = ones(1, 0) = 1;
  const CMat p = projection_onto_colspace(ones);
  EXPECT_EQ(p, GaussRat(Rat(1, 2)) * (CMat{{1, 1}, {1, 1}}));
  EXPECT_EQ(p * p, p);
  EXPECT_EQ(projection_onto_colspace(CMat::identity(3)), CMat::identity(3));
  try {
    projection_onto_colspace(CMat{{1, 2}, {2, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RankDeficient);
  }
}

TEST(MoorePenroseRatFn, KnownExamples) {
  const RatFn r = RatFn(Poly::constant(GaussRat(0, -2)), Poly::linear_root(-I));
  const MatRatFn blaschke = MatRatFn::scalar(2, r);
  const MatRatFn plus = moore_penrose(blaschke);
  const RatFn want = RatFn(Poly::constant(I)) * (Z + RatFn(I)) / RatFn(2);
  EXPECT_EQ(plus, MatRatFn::scalar(2, want));
  expect_mp_axioms(blaschke, plus);

  const MatRatFn dz{{Z, 0}, {0, 0}};
  const MatRatFn dzp = moore_penrose(dz);
  EXPECT_EQ(dzp, (MatRatFn{{RatFn(1) / Z, 0}, {0, 0}}));
  expect_mp_axioms(dz, dzp);

  try {
    moore_penrose(MatRatFn{{1, Z}, {0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConstantKernelViolated);
  }
}

TEST(MoorePenroseRatFn, KernelAdjointMismatch) {
  // Constant kernel span{e2}, but the adjoint kills e1.
  try {
    moore_penrose(MatRatFn{{0, 0}, {Z, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::KernelAdjointMismatch);
  }
}

TEST(RatFnMatrices, DetAndInverse) {
  const MatRatFn q{{RatFn(-1) / Z, RatFn(-2) / Z}, {RatFn(-2) / Z, RatFn(-1) / Z}};
  EXPECT_EQ(det(q), RatFn(-3) / (Z * Z));
  const MatRatFn inv = inverse(q);
  EXPECT_EQ(q * inv, MatRatFn::identity(2));
  EXPECT_EQ(rank(MatRatFn{{1, Z}, {Z, Z * Z}}), 1);
  EXPECT_THROW(inverse(MatRatFn{{1, Z}, {Z, Z * Z}}), Error);
  EXPECT_EQ(det(MatRatFn(0, 0)), RatFn(1));
}

// ---- properties -------------------------------------------------------------

TEST(Properties, MoorePenroseAxiomsAndInvolution) {
  gen::Rng rng(31);
  for (int t = 0; t < 120; ++t) {
    const int n = gen::uniform(rng, 1, 5);
    const int r = gen::uniform(rng, 0, n);
    const CMat m = random_rank(rng, n, r);
    const CMat p = moore_penrose(m);
    expect_mp_axioms(m, p);
    EXPECT_EQ(moore_penrose(p), m);
    GaussRat lambda;
    while (lambda.is_zero()) lambda = gen::gauss(rng, 5, 3);
    EXPECT_EQ(moore_penrose(lambda * m), lambda.inverse() * p);
  }
}

TEST(Properties, MoorePenroseRectangular) {
  gen::Rng rng(32);
  for (int t = 0; t < 60; ++t) {
    const int rows = gen::uniform(rng, 1, 5), cols = gen::uniform(rng, 1, 5);
    const int r = gen::uniform(rng, 1, std::min(rows, cols));
    const CMat a = random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
    const CMat p = moore_penrose(a);
    ASSERT_EQ(p.rows(), cols);
    ASSERT_EQ(p.cols(), rows);
    expect_mp_axioms(a, p);
  }
}

TEST(Properties, KernelOfProjector) {
  gen::Rng rng(33);
  for (int t = 0; t < 80; ++t) {
    const int n = gen::uniform(rng, 1, 5);
    const CMat m = random_rank(rng, n, gen::uniform(rng, 0, n));
    const CMat k1 = nullspace(m);
    const CMat k2 = nullspace(moore_penrose(m) * m);
    EXPECT_TRUE(same_column_space(k1, k2));
    EXPECT_TRUE((m * k1).is_zero());
    EXPECT_EQ(k1.cols(), n - rank(m));
  }
}

TEST(Properties, PsdAgreesWithEigenvalues) {
  gen::Rng rng(34);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 200; ++t) {
    const int n = gen::uniform(rng, 1, 4);
    CMat m = random_hermitian(rng, n);
    // Bias toward PSD: half the time use B*B, possibly shifted.
    if (gen::uniform(rng, 0, 1)) {
      const CMat b = random_matrix(rng, n, n);
      m = b.adjoint() * b - GaussRat(gen::uniform(rng, 0, 1)) * CMat::identity(n);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m));
    const auto ev = es.eigenvalues();
    bool separated = true;
    for (int k = 0; k < n; ++k) separated = separated && std::abs(ev(k)) > 1e-6;
    if (!separated) continue;
    ++tested;
    EXPECT_EQ(is_psd(m), ev.minCoeff() >= -1e-9) << to_string(m);
  }
  EXPECT_GE(tested, 150);
}

TEST(Properties, ProjectionIsHermitianIdempotent) {
  gen::Rng rng(35);
  for (int t = 0; t < 60; ++t) {
    const int n = gen::uniform(rng, 1, 5), p = gen::uniform(rng, 1, n);
    const CMat v = random_matrix(rng, n, p);
    if (rank(v) != p) continue;
    const CMat proj = projection_onto_colspace(v);
    EXPECT_TRUE(proj.is_hermitian());
    EXPECT_EQ(proj * proj, proj);
    EXPECT_EQ(proj * v, v);
    EXPECT_EQ(rank(proj), p);
  }
}

TEST(Properties, RationalPseudoinverseWithConstantKernel) {
  gen::Rng rng(36);
  for (int t = 0; t < 30; ++t) {
    const int n = gen::uniform(rng, 1, 4), r = gen::uniform(rng, 1, n);
    // R = U diag(f_1..f_r, 0..0) U* for constant invertible U is kernel-stable.
    CMat u = random_matrix(rng, n, n, 3);
    while (rank(u) < n) u = random_matrix(rng, n, n, 3);
    MatRatFn d(n, n);
    for (int k = 0; k < r; ++k) {
      const Rat a = gen::rat(rng, 5, 2);
      d(k, k) = RatFn(GaussRat(Rat(gen::rat(rng, 4, 3) + 1))) / (Z - RatFn(GaussRat(a))) + RatFn(GaussRat(gen::rat(rng, 3, 2)));
      if (d(k, k).is_zero()) d(k, k) = Z;
    }
    const MatRatFn rfn = MatRatFn(u) * d * MatRatFn(u.adjoint());
    const MatRatFn p = moore_penrose(rfn);
    expect_mp_axioms(rfn, p);
    // Pointwise agreement with the constant pseudoinverse.
    for (const auto& z : upper_samples(2, {&rfn, &p})) EXPECT_EQ(p.eval(z), moore_penrose(rfn.eval(z)));
  }
}
