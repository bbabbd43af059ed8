#pragma once

// Symmetric eigensolvers for the small matrices that appear here.
//
//  * jacobi_eigen      - cyclic Jacobi rotations on a dense symmetric matrix.
//  * tridiagonal_eigen - implicit QL with Wilkinson shifts on a symmetric
//                        tridiagonal matrix (Golub-Welsch style).
//
// Both return unsorted eigenvalues; column j of `vectors` is the unit
// eigenvector for `values[j]`. Callers assign meaning to columns themselves.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "parabose/errors.hpp"
#include "parabose/matrix.hpp"

namespace parabose {

struct EigenSystem {
  std::vector<double> values;
  Matrix vectors;
};

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

/// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm drops to
/// `rel_tol * ||A||_F`.
inline EigenSystem jacobi_eigen(Matrix a, double rel_tol = 1e-14,
                                int max_sweeps = 100) {
  if (!a.square()) throw DomainError("jacobi_eigen: matrix is not square");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) >
          1e-12 * (1.0 + std::abs(a(i, j)) + std::abs(a(j, i))))
        throw DomainError("jacobi_eigen: matrix is not symmetric");

  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);
  const double target = rel_tol * scale;

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > max_sweeps)
      throw ConsistencyError("jacobi_eigen: no convergence after " +
                             std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  return {a.diag(), std::move(v)};
}

/// Implicit QL on the symmetric tridiagonal matrix with diagonal `diag` and
/// sub/super-diagonal `offdiag` (offdiag[i] couples i and i+1).
inline EigenSystem tridiagonal_eigen(std::span<const double> diag,
                                     std::span<const double> offdiag,
                                     int max_iter = 60) {
  const std::size_t n = diag.size();
  if (n == 0) return {{}, Matrix()};
  if (offdiag.size() + 1 != n)
    throw DomainError("tridiagonal_eigen: offdiag must have length n-1");

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = offdiag[i];
  Matrix z = Matrix::identity(n);
  const double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == max_iter)
        throw ConsistencyError("tridiagonal_eigen: too many iterations");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        for (std::size_t k = 0; k < n; ++k) {
          f = z(k, ii + 1);
          z(k, ii + 1) = s * z(k, ii) + c * f;
          z(k, ii) = c * z(k, ii) - s * f;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  return {std::move(d), std::move(z)};
}

}  // namespace parabose
