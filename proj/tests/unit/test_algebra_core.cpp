#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "parabose/algebra_core.hpp"

namespace {

using namespace parabose;

TEST(MuNumber, Examples) {
  EXPECT_EQ(mu_number(0, 0.7), 0.0);
  EXPECT_DOUBLE_EQ(mu_number(3, 0.25), 3.5);
  EXPECT_DOUBLE_EQ(mu_number(5, 1.2), 7.4);
  EXPECT_EQ(mu_number(6, 9.0), 6.0);
}

TEST(MuFactorial, Examples) {
  EXPECT_EQ(mu_factorial(0, 0.9), 1.0);
  EXPECT_DOUBLE_EQ(mu_factorial(3, 0.5), 16.0);
  EXPECT_DOUBLE_EQ(mu_factorial(2, 0.0), 2.0);
  EXPECT_DOUBLE_EQ(mu_factorial(5, 0.0), 120.0);
}

TEST(BuildRep, HalfIntegerMu) {
  const auto rep = build_rep({0.5, 1}, 3);
  EXPECT_EQ(rep.j0, (std::vector<double>{1.0, 2.0, 3.0}));
  EXPECT_EQ(rep.rho[0], 0.0);
  EXPECT_DOUBLE_EQ(rep.rho[1], std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(rep.rho[2], std::sqrt(2.0));
  EXPECT_EQ(rep.r_diag, (std::vector<int>{1, -1, 1}));
}

TEST(BuildRep, OrdinaryOscillatorAtMuZero) {
  const auto rep = build_rep({0.0, 1}, 4);
  for (int n = 0; n < 4; ++n) EXPECT_DOUBLE_EQ(rep.rho[n], std::sqrt(double(n)));
}

TEST(BuildRep, MatrixPlacement) {
  const auto rep = build_rep({0.3, -1}, 5);
  const Matrix jm = rep.jminus_matrix();
  const Matrix jp = rep.jplus_matrix();
  for (std::size_t n = 1; n < 5; ++n) {
    EXPECT_EQ(jm(n - 1, n), rep.rho[n]);
    EXPECT_EQ(jp(n, n - 1), rep.rho[n]);
  }
  EXPECT_EQ(rep.r_diag[0], -1);
}

TEST(BuildRep, RejectsMuAtOrBelowMinusHalf) {
  EXPECT_THROW(build_rep({-0.6, 1}, 2), DomainError);
  EXPECT_THROW(build_rep({-0.5, 1}, 2), DomainError);
  EXPECT_THROW(build_rep({0.0, 0}, 2), DomainError);
  EXPECT_THROW(build_rep({0.0, 1}, 1), DomainError);
}

TEST(CasimirMatrix, ConstantOnInterior) {
  struct Case {
    double mu;
    int eps;
    std::size_t dim;
    double value;
  };
  for (const Case c : {Case{0.5, 1, 5, -0.5}, Case{0.0, 1, 5, 0.0}, Case{1.3, -1, 6, 1.3}}) {
    const Matrix q = casimir_matrix(build_rep({c.mu, c.eps}, c.dim));
    for (std::size_t n = 0; n + 1 < c.dim; ++n) {
      EXPECT_NEAR(q(n, n), c.value, 1e-12) << "mu=" << c.mu << " n=" << n;
      for (std::size_t m = 0; m + 1 < c.dim; ++m)
        if (m != n) {
          EXPECT_EQ(q(n, m), 0.0);
        }
    }
  }
}

TEST(CheckRelations, SmallTruncations) {
  for (double mu : {0.5, 0.0}) {
    const auto reports = check_relations(build_rep({mu, 1}, 10));
    ASSERT_EQ(reports.size(), 7u);
    for (const auto& r : reports) {
      EXPECT_LE(r.max_residual, 1e-12) << r.name;
      EXPECT_EQ(r.interior_dim, 8u);
    }
    EXPECT_EQ(reports.back().name, "R^2 - I");
    EXPECT_EQ(reports.back().max_residual, 0.0);
  }
}

TEST(CheckRelations, TopRowsAreExcludedForAReason) {
  // The anticommutator fails at the truncation edge; the interior hides it.
  const auto rep = build_rep({0.5, 1}, 6);
  const Matrix full = anticommutator(rep.jplus_matrix(), rep.jminus_matrix()) -
                      2.0 * rep.j0_matrix();
  EXPECT_GT(std::abs(full(5, 5)), 1.0);
}

TEST(OspCheck, SmallTruncations) {
  for (double mu : {0.5, 0.0}) {
    const auto reports = osp_check(build_rep({mu, 1}, 12));
    for (const auto& r : reports) {
      EXPECT_LE(r.max_residual, 1e-10) << r.name;
      EXPECT_EQ(r.interior_dim, 8u);
    }
  }
  const auto rep = build_rep({0.5, 1}, 12);
  const Matrix q = casimir_matrix(rep);
  const Matrix q2 = q * q;
  for (std::size_t n = 0; n < 8; ++n) EXPECT_NEAR(q2(n, n), 0.25, 1e-12);
}

TEST(CheckRelations, DimensionPreconditions) {
  EXPECT_THROW(check_relations(build_rep({0.1, 1}, 3)), DomainError);
  EXPECT_THROW(osp_check(build_rep({0.1, 1}, 5)), DomainError);
}

TEST(ParaboseCommutator, HoldsWithEpsilonMu) {
  for (int eps : {1, -1})
    for (double mu : {-0.3, 0.0, 2.2})
      EXPECT_LE(parabose_check(build_rep({mu, eps}, 20)).max_residual, 1e-12);
}

// Property sweep over random (mu, eps, D).
TEST(AlgebraProperties, RandomRepresentations) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> mu_dist(-0.49, 10.0);
  std::uniform_int_distribution<int> dim_dist(6, 200);
  for (int trial = 0; trial < 12; ++trial) {
    const double mu = mu_dist(rng);
    const int eps = trial % 2 ? 1 : -1;
    const auto dim = static_cast<std::size_t>(dim_dist(rng));
    const auto rep = build_rep({mu, eps}, dim);

    // rho_n^2 + rho_{n+1}^2 = 2 j0[n]
    for (std::size_t n = 0; n + 1 < dim; ++n)
      EXPECT_NEAR(rep.rho[n] * rep.rho[n] + rep.rho[n + 1] * rep.rho[n + 1], 2.0 * rep.j0[n],
                  1e-10);
    // j0 steps by exactly one; r_diag alternates
    for (std::size_t n = 0; n + 1 < dim; ++n) {
      EXPECT_NEAR(rep.j0[n + 1] - rep.j0[n], 1.0, 1e-12);
      EXPECT_EQ(rep.r_diag[n] * rep.r_diag[n + 1], -1);
    }
    for (const auto& r : check_relations(rep)) EXPECT_LE(r.max_residual, 1e-10) << r.name;
    for (const auto& r : osp_check(rep)) EXPECT_LE(r.max_residual, 1e-10) << r.name;

    // Casimir constant -eps mu on the interior
    const Matrix q = casimir_matrix(rep);
    for (std::size_t n = 0; n + 1 < dim; ++n) EXPECT_NEAR(q(n, n), -eps * mu, 1e-12);

    // J+ flips parity: nonzero entries only between opposite-parity states
    const Matrix jp = rep.jplus_matrix();
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (jp(i, j) != 0.0) {
          EXPECT_EQ(rep.r_diag[i], -rep.r_diag[j]);
        }
  }
}

}  // namespace
