#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "parabose/qdeform.hpp"

namespace {

using namespace parabose;

// Naive r_n^2 for positive q, straight from the closed form.
double r_sq_naive(long n, double q, double nu) {
  return 2.0 * (1.0 - std::pow(q, n)) * (1.0 - std::pow(q, n + 2.0 * nu - 1.0)) /
         ((q + 1.0) * (q - 1.0) * (q - 1.0));
}

double int_pow(double q, long m) {
  double r = 1.0;
  for (long i = 0; i < std::abs(m); ++i) r *= q;
  return m < 0 ? 1.0 / r : r;
}

double mu_number_oracle(long n, double mu) { return n % 2 ? n + 2.0 * mu : double(n); }

TEST(RSq, PositiveQAgreesWithNaiveFormula) {
  for (double q : {0.3, 0.5, 0.9, 1.7})
    for (double nu : {0.5, 1.0, 2.5})
      for (long n = 0; n < 12; ++n)
        EXPECT_NEAR(r_sq(n, {q, nu}), r_sq_naive(n, q, nu),
                    1e-12 * (1.0 + std::abs(r_sq_naive(n, q, nu))));
}

TEST(RSq, NearMinusOneAgreesWithIntegerPowers) {
  // Moderate tau: no cancellation, so integer powers of q = -e^tau are exact enough.
  for (double tau : {0.7, 0.3})
    for (long nu : {1, 2, 3}) {
      const double q = -std::exp(tau);
      for (long n = 1; n < 10; ++n) {
        const double want = 2.0 * (1.0 - int_pow(q, n)) * (1.0 - int_pow(q, n + 2 * nu - 1)) /
                            ((q + 1.0) * (q - 1.0) * (q - 1.0));
        EXPECT_NEAR(r_sq(n, QRepParams::near_minus_one(tau, double(nu))), want,
                    1e-11 * std::abs(want));
      }
    }
}

TEST(RSq, ReferenceValues) {
  for (double tau : {0.1, 1e-3, 1e-8})
    EXPECT_NEAR(r_sq(1, QRepParams::near_minus_one(tau, 1.0)), 2.0, 1e-12);
  EXPECT_NEAR(r_sq(2, QRepParams::near_minus_one(0.01, 1.0)), 2.0203023459, 1e-9);
  EXPECT_EQ(r_sq(0, {0.5, 1.0}), 0.0);
}

TEST(RSq, DomainErrors) {
  EXPECT_THROW(r_sq(1, {1.0, 1.0}), DomainError);
  EXPECT_THROW(r_sq(1, {-1.0, 1.0}), DomainError);
  EXPECT_THROW(r_sq(1, {0.0, 1.0}), DomainError);
  EXPECT_THROW(r_sq(1, {0.5, 0.0}), DomainError);
  EXPECT_THROW(r_sq(1, {-0.5, 1.25}), DomainError);
  EXPECT_NO_THROW(r_sq(1, {-0.5, 2.5}));
  EXPECT_THROW(r_sq(-1, {0.5, 1.0}), IndexError);
}

TEST(RSq, ConvergesToMuNumbersAsTauShrinks) {
  for (long nu : {1, 2, 3, 4}) {
    const double mu = nu - 0.5;
    for (long n = 1; n <= 10; ++n) {
      const double err = std::abs(r_sq(n, QRepParams::near_minus_one(1e-7, double(nu))) -
                                  mu_number_oracle(n, mu));
      EXPECT_LT(err, 1e-4) << "nu=" << nu << " n=" << n;
    }
  }
}

TEST(QNumber, GeometricSum) {
  EXPECT_EQ(q_number(0, 0.3), 0.0);
  EXPECT_EQ(q_number(1, 0.3), 1.0);
  for (double q : {0.3, 1.7, -0.8})
    for (long n = 1; n < 10; ++n)
      EXPECT_NEAR(q_number(n, q), (std::pow(q, n) - 1.0) / (q - 1.0), 1e-12);
}

TEST(QDerivative, ActsOnMonomials) {
  const PolyCoeffs p({1.0, 2.0, 0.0, 4.0});
  const PolyCoeffs d = q_derivative(p, 0.5);
  ASSERT_EQ(d.degree(), 2u);
  EXPECT_DOUBLE_EQ(d[0], 2.0);
  EXPECT_DOUBLE_EQ(d[1], 0.0);
  EXPECT_DOUBLE_EQ(d[2], 4.0 * 1.75);
  EXPECT_EQ(q_derivative(PolyCoeffs{3.0}, 0.5).coeffs, std::vector<double>{0.0});
  EXPECT_THROW(q_derivative(p, 1.0), DomainError);
}

TEST(QDerivative, DifferenceQuotientProperty) {
  // D_q f(z) = (f(qz) - f(z)) / ((q - 1) z)
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> c(1 + trial % 8);
    for (double& x : c) x = u(rng);
    const PolyCoeffs p(c);
    const double q = 0.2 + 0.1 * (trial % 7);
    const double z = 0.9;
    const double want = (p.eval(q * z) - p.eval(z)) / ((q - 1.0) * z);
    EXPECT_NEAR(q_derivative(p, q).eval(z), want, 1e-12);
  }
}

TEST(FockBargmann, LoweringMatchesRSq) {
  for (double q : {0.3, 0.5, 0.9, 1.7})
    for (double nu : {0.5, 1.0, 2.5}) {
      const QRepParams p{q, nu};
      const Matrix jm = fock_bargmann_q_matrix(p, QGenerator::Jminus, 10);
      for (std::size_t n = 1; n < 10; ++n)
        EXPECT_NEAR(jm(n - 1, n), r_sq(long(n), p), 1e-11 * (1.0 + r_sq(long(n), p)));
    }
  const auto p = QRepParams::near_minus_one(0.05, 2.0);
  const Matrix jm = fock_bargmann_q_matrix(p, QGenerator::Jminus, 8);
  for (std::size_t n = 1; n < 8; ++n) EXPECT_NEAR(jm(n - 1, n), r_sq(long(n), p), 1e-9);
}

TEST(FockBargmann, RelationsOnGrid) {
  for (double q : {0.3, 0.5, 0.9, 1.7})
    for (double nu : {0.5, 1.0, 2.5})
      for (const auto& r : fock_bargmann_relations({q, nu}, 12)) {
        EXPECT_LE(r.max_residual, 1e-9) << r.name << " q=" << q << " nu=" << nu;
        EXPECT_EQ(r.interior_dim, 11u);
      }
}

TEST(FockBargmann, StepRecurrence) {
  // Diagonal of J-J+ - q J+J- on z^n: r_{n+1}^2 - q r_n^2.
  for (double tau : {0.2, 0.01})
    for (long nu : {1, 2}) {
      const auto p = QRepParams::near_minus_one(tau, double(nu));
      const double q = p.q;
      for (long n = 0; n < 10; ++n) {
        const double want = 2.0 * (int_pow(q, 2 * (n + nu)) - 1.0) / (q * q - 1.0);
        EXPECT_NEAR(r_sq(n + 1, p) - q * r_sq(n, p), want, 1e-8 * (1.0 + std::abs(want)));
      }
    }
}

TEST(FockBargmann, CasimirIsScalar) {
  // r_n^2 q^{-x} - 2 q^x / (q (q-1)(q^2-1)) + 2 q^{-x} / ((1-q)(q^2-1)), x = n + nu,
  // must not depend on n and must equal the closed-form Casimir value.
  for (double q : {0.3, 0.5, 1.7})
    for (double nu : {0.5, 1.0, 2.5}) {
      const QRepParams p{q, nu};
      const double c = q_casimir_value(p);
      const double a = -2.0 / (q * (q - 1.0) * (q * q - 1.0));
      const double b = 2.0 / ((1.0 - q) * (q * q - 1.0));
      for (long n = 0; n < 10; ++n) {
        const double x = n + nu;
        const double cn = r_sq(n, p) * std::pow(q, -x) + a * std::pow(q, x) + b * std::pow(q, -x);
        EXPECT_NEAR(cn, c, 1e-10 * (1.0 + std::abs(c))) << "q=" << q << " nu=" << nu;
      }
    }
}

TEST(FockBargmann, QPowerJ0TendsToParity) {
  for (long nu : {1, 2}) {
    const auto d = q_power_j0_diag(QRepParams::near_minus_one(1e-9, double(nu)), 7);
    for (std::size_t n = 0; n < 7; ++n)
      EXPECT_NEAR(d[n], (n + nu) % 2 ? -1.0 : 1.0, 1e-8);
  }
  EXPECT_THROW(q_power_j0_diag({-0.5, 1.5}, 3), DomainError);
}

TEST(LimitScan, ErrorsShrinkLinearlyOnFineDecades) {
  const std::vector<double> taus{1e-2, 1e-3, 1e-4};
  for (long nu : {1, 2, 3}) {
    const auto res = limit_scan(double(nu), taus, 10);
    ASSERT_EQ(res.max_errors.size(), 3u);
    ASSERT_TRUE(res.fitted_slope.has_value());
    EXPECT_NEAR(*res.fitted_slope, 1.0, 0.05) << "nu=" << nu;
    EXPECT_GT(res.max_errors[0], res.max_errors[1]);
    EXPECT_GT(res.max_errors[1], res.max_errors[2]);
  }
}

TEST(LimitScan, DefaultDecadesIncludePreAsymptoticPoint) {
  // The tau = 0.1 point sits where n tau ~ 1 and steepens the fit.
  const std::vector<double> taus{1e-1, 1e-2, 1e-3, 1e-4};
  const auto res = limit_scan(1.0, taus, 10);
  ASSERT_TRUE(res.fitted_slope.has_value());
  EXPECT_NEAR(*res.fitted_slope, 1.1034, 5e-4);
  EXPECT_NEAR(res.max_errors[0] / res.max_errors[1], 20.28, 0.05);
}

TEST(LimitScan, DomainErrors) {
  const std::vector<double> taus{1e-2};
  const std::vector<double> none;
  const std::vector<double> bad{1e-2, 0.0};
  EXPECT_THROW(limit_scan(2.5, taus, 10), DomainError);
  EXPECT_THROW(limit_scan(0.0, taus, 10), DomainError);
  EXPECT_THROW(limit_scan(1.0, none, 10), DomainError);
  EXPECT_THROW(limit_scan(1.0, bad, 10), DomainError);
  EXPECT_THROW(limit_scan(1.0, taus, 1), DomainError);
  EXPECT_FALSE(limit_scan(1.0, taus, 10).fitted_slope.has_value());
}

TEST(FitSlope, ExactLine) {
  const std::vector<double> x{0.0, 1.0, 2.0}, y{1.0, 3.0, 5.0};
  EXPECT_NEAR(*fit_slope(x, y), 2.0, 1e-15);
  const std::vector<double> flat{1.0, 1.0};
  EXPECT_FALSE(fit_slope(flat, flat).has_value());
}

}  // namespace
