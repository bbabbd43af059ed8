#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "parabose/bargmann.hpp"

namespace {

using namespace parabose;

const std::vector<double> kMuGrid{-0.4, 0.0, 0.3, 1.7, 5.0};

PolyCoeffs random_poly(std::mt19937& rng, std::size_t degree) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> c(degree + 1);
  for (double& x : c) x = u(rng);
  return PolyCoeffs(c);
}

double derivative_at(const PolyCoeffs& p, double x) {
  double s = 0.0;
  for (std::size_t n = 1; n <= p.degree(); ++n) s += n * p[n] * std::pow(x, double(n - 1));
  return s;
}

TEST(Dunkl, LoweringIsDifferentialDifference) {
  // J- f(x) = f'(x) + (mu / x)(f(x) - f(-x))
  std::mt19937 rng(11);
  for (double mu : kMuGrid)
    for (std::size_t deg : {0u, 1u, 4u, 9u}) {
      const PolyCoeffs p = random_poly(rng, deg);
      const PolyCoeffs jm = dunkl_apply(Generator::Jminus, p, mu);
      for (double x : {-1.3, 0.4, 0.9}) {
        const double want = derivative_at(p, x) + mu / x * (p.eval(x) - p.eval(-x));
        EXPECT_NEAR(jm.eval(x), want, 1e-11 * (1.0 + std::abs(want)));
      }
    }
}

TEST(Dunkl, MonomialActions) {
  const PolyCoeffs z3 = PolyCoeffs::monomial(3);
  EXPECT_EQ(dunkl_apply(Generator::Jminus, z3, 0.25).coeffs, (std::vector<double>{0, 0, 3.5}));
  EXPECT_EQ(dunkl_apply(Generator::Jplus, z3, 0.25).coeffs, (std::vector<double>{0, 0, 0, 0, 1}));
  EXPECT_EQ(dunkl_apply(Generator::J0, z3, 0.25).coeffs, (std::vector<double>{0, 0, 0, 3.75}));
  EXPECT_EQ(dunkl_apply(Generator::R, z3, 0.25).coeffs, (std::vector<double>{0, 0, 0, -1}));
  EXPECT_EQ(dunkl_apply(Generator::Jminus, PolyCoeffs{4.0}, 0.25).coeffs,
            std::vector<double>{0.0});
  EXPECT_THROW(dunkl_apply(Generator::J0, z3, -0.5), DomainError);
}

// Property: the polynomial generators satisfy the defining relations exactly.
TEST(Dunkl, RelationsOnRandomPolynomials) {
  std::mt19937 rng(23);
  const auto apply = [](Generator g, const PolyCoeffs& p, double mu) {
    return dunkl_apply(g, p, mu);
  };
  for (int trial = 0; trial < 40; ++trial) {
    const double mu = kMuGrid[trial % kMuGrid.size()];
    const PolyCoeffs p = random_poly(rng, 1 + trial % 11);
    const auto jp = [&](const PolyCoeffs& f) { return apply(Generator::Jplus, f, mu); };
    const auto jm = [&](const PolyCoeffs& f) { return apply(Generator::Jminus, f, mu); };
    const auto j0 = [&](const PolyCoeffs& f) { return apply(Generator::J0, f, mu); };
    const auto r = [&](const PolyCoeffs& f) { return apply(Generator::R, f, mu); };

    EXPECT_LT(max_abs_diff(jp(jm(p)) + jm(jp(p)), 2.0 * j0(p)), 1e-11);
    EXPECT_LT(max_abs_diff(j0(jp(p)) - jp(j0(p)), jp(p)), 1e-11);
    EXPECT_LT(max_abs_diff(j0(jm(p)) - jm(j0(p)), -1.0 * jm(p)), 1e-11);
    EXPECT_LT(max_abs_diff(r(jp(p)) + jp(r(p)), PolyCoeffs{0.0}), 1e-12);
    EXPECT_LT(max_abs_diff(r(jm(p)) + jm(r(p)), PolyCoeffs{0.0}), 1e-12);
    EXPECT_LT(max_abs_diff(jm(jp(p)) - jp(jm(p)), p + 2.0 * mu * r(p)), 1e-11);
    EXPECT_LT(max_abs_diff(r(r(p)), p), 0.0 + 1e-300);
  }
}

TEST(LMatrix, MatchesPointwiseOperator) {
  // Evaluate L f(z) directly with (R f)(z) = f(-z), (R f)'(z) = -f'(-z).
  std::mt19937 rng(31);
  for (long N = 0; N <= 9; ++N)
    for (double mu1 : {-0.4, 1.7})
      for (double mu2 : {0.0, 0.3}) {
        const double S = N % 2 ? -1.0 : 1.0;
        const Matrix L = build_L_matrix(N, mu1, mu2);
        const PolyCoeffs f = random_poly(rng, std::size_t(N));
        const auto lf = L * std::span<const double>(f.coeffs);
        const PolyCoeffs lf_poly(lf);
        for (double z : {-0.8, 0.35, 1.2}) {
          const double rf = f.eval(-z);
          const double drf = -derivative_at(f, -z);
          const double want = S * (z * z + 1.0) * drf +
                              (S * mu1 / z - S * (mu2 + N) * z - mu1 - S * mu2) * rf +
                              (mu2 * z - 0.5 - S * mu1 / z) * f.eval(z);
          EXPECT_NEAR(lf_poly.eval(z), want, 1e-10 * (1.0 + std::abs(want)))
              << "N=" << N << " z=" << z;
        }
      }
}

TEST(LMatrix, IsTwistedConjugateOfQTilde) {
  for (long N = 0; N <= 12; ++N)
    for (double mu1 : kMuGrid)
      for (double mu2 : kMuGrid) {
        const double S = N % 2 ? -1.0 : 1.0;
        EXPECT_LT(max_abs_diff(build_L_matrix(N, mu1, mu2),
                               S * bargmann_casimir_matrix(N, mu1, mu2)),
                  1e-11);
      }
}

TEST(Hyp2F1, LowOrderAndErrors) {
  const double b = 0.7, c = 1.3, x = -0.45;
  const double want = 1.0 + (-2.0) * b / c * x + 2.0 * b * (b + 1.0) / (c * (c + 1.0) * 2.0) * x * x;
  EXPECT_NEAR(hyp2f1_terminating(-2.0, b, c, x), want, 1e-15);
  EXPECT_EQ(hyp2f1_terminating(0.0, b, c, x), 1.0);
  EXPECT_THROW(hyp2f1_terminating(0.5, b, c, x), DomainError);
  EXPECT_THROW(hyp2f1_terminating(2.0, b, c, x), DomainError);
  EXPECT_THROW(hyp2f1_terminating(-2.0, b, 0.0, x), DomainError);
  EXPECT_THROW(hyp2f1_terminating(-3.0, b, -1.0, x), DomainError);
}

TEST(Hyp2F1, ChuVandermonde) {
  // 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
  for (long n = 0; n <= 8; ++n)
    for (double b : {-2.5, 0.3, 4.0})
      for (double c : {0.5, 1.7}) {
        double num = 1.0, den = 1.0;
        for (long i = 0; i < n; ++i) {
          num *= c - b + i;
          den *= c + i;
        }
        EXPECT_NEAR(hyp2f1_terminating(-double(n), b, c, 1.0), num / den,
                    1e-12 * (1.0 + std::abs(num / den)));
      }
}

TEST(PhiSeries, RawNormalizationExample) {
  const auto g = phi_series(2, 1, 0.0, 0.0);
  EXPECT_EQ(g.phi.coeffs, (std::vector<double>{1.0, -2.0, -1.0}));
  const auto n = g.normalized();
  EXPECT_NEAR(norm2(n.coeffs), 1.0, 1e-15);
  EXPECT_NEAR(n[1], -2.0 / std::sqrt(6.0), 1e-15);
}

TEST(PhiSeries, ConstantTermAndDegree) {
  for (long N = 0; N <= 12; ++N)
    for (long k = 0; k <= N; ++k) {
      const auto g = phi_series(N, k, 0.3, 1.7);
      EXPECT_EQ(g.phi.degree(), std::size_t(N));
      EXPECT_DOUBLE_EQ(g.phi[0], 1.0);
      EXPECT_GT(g.normalized()[0], 0.0);
    }
  EXPECT_THROW(phi_series(3, 4, 0.0, 0.0), IndexError);
  EXPECT_THROW(phi_series(3, -1, 0.0, 0.0), IndexError);
  EXPECT_THROW(phi_series(3, 1, -0.6, 0.0), DomainError);
}

TEST(PhiSeries, CollinearWithRescaledCgcColumns) {
  for (long N = 0; N <= 12; ++N)
    for (double mu1 : kMuGrid)
      for (double mu2 : kMuGrid)
        EXPECT_LT(compare_genfunc_cgc(N, mu1, mu2, cgc_direct(N, mu1, mu2)), 1e-10)
            << "N=" << N << " mu1=" << mu1 << " mu2=" << mu2;
}

TEST(PhiSeries, EigenRelationBranchDependsOnParity) {
  for (long N = 0; N <= 12; ++N)
    for (long k = 0; k <= N; ++k) {
      const auto er = genfunc_eigen_relation(N, k, 0.3, 1.7);
      const double qk = q_eigenvalue(N, k, 0.3, 1.7);
      EXPECT_LT(er.residual, 1e-10);
      EXPECT_EQ(er.parity_twisted, N % 2 == 1);
      EXPECT_NEAR(er.rayleigh, (N % 2 ? -qk : qk), 1e-10);
    }
}

TEST(CgcGenfunc, AgreesWithDirectTables) {
  for (long N = 0; N <= 12; ++N)
    for (double mu1 : kMuGrid)
      for (double mu2 : kMuGrid) {
        const auto g = cgc_genfunc(N, mu1, mu2);
        EXPECT_LT(max_abs_diff(g.W, cgc_direct(N, mu1, mu2).W), 1e-9);
        for (std::size_t k = 0; k < g.q_values.size(); ++k)
          EXPECT_NEAR(g.spectrum[k], g.q_values[k], 1e-10);
      }
}

TEST(Collinearity, Basics) {
  const std::vector<double> a{1.0, 2.0}, b{-2.0, -4.0}, c{2.0, -1.0}, z{0.0, 0.0};
  EXPECT_NEAR(collinearity_defect(a, b), 0.0, 1e-15);
  EXPECT_NEAR(collinearity_defect(a, c), 1.0, 1e-15);
  EXPECT_THROW(collinearity_defect(a, z), ConsistencyError);
  auto t = cgc_direct(2, 0.0, 0.0);
  EXPECT_THROW(compare_genfunc_cgc(3, 0.0, 0.0, t), DomainError);
}

}  // namespace
