#pragma once

// Dual -1 Hahn polynomials R_n(x; alpha, beta, N) in monic form:
//
//   R_{n+1}(x) = (x - b_n) R_n(x) - u_n R_{n-1}(x),
//   u_n = 4 [n]_xi [N+1-n]_eta,   b_n = 2([n]_xi + [N-n]_eta) + zeta,
//
// with (xi, eta, zeta) fixed by (alpha, beta, N):
//
//   N even:  xi = (beta - N - 1)/2,  eta = (alpha - N - 1)/2,  zeta = 1 - alpha - beta
//   N odd:   xi = alpha/2,           eta = beta/2,             zeta = -2N - 1 - alpha - beta
//
// The monic CGC polynomials of tensor_cgc.hpp satisfy
//   P^_n(x) = lambda^{-n} R_n(lambda (x - x0)),  lambda = sigma c,
// at xi = mu1, eta = mu2. affine_match() finds (c, sigma, x0) from the
// coefficient sequences instead of assuming them.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "parabose/algebra_core.hpp"
#include "parabose/eigen.hpp"
#include "parabose/errors.hpp"
#include "parabose/matrix.hpp"
#include "parabose/tensor_cgc.hpp"

namespace parabose {

struct DualHahnParams {
  double alpha = 0.0;
  double beta = 0.0;
  long N = 1;

  double xi() const { return N % 2 == 0 ? (beta - N - 1.0) / 2.0 : alpha / 2.0; }
  double eta() const { return N % 2 == 0 ? (alpha - N - 1.0) / 2.0 : beta / 2.0; }
  double zeta() const {
    return N % 2 == 0 ? 1.0 - alpha - beta : -2.0 * N - 1.0 - alpha - beta;
  }
};

/// Inverse of the (alpha, beta) -> (xi, eta) map at xi = mu1, eta = mu2.
inline DualHahnParams param_map(double mu1, double mu2, long N) {
  AlgebraParams{mu1, 1}.validate();
  AlgebraParams{mu2, 1}.validate();
  if (N < 1) throw DomainError("dual -1 Hahn family needs N >= 1");
  if (N % 2 == 0) return {2.0 * mu2 + N + 1.0, 2.0 * mu1 + N + 1.0, N};
  return {2.0 * mu1, 2.0 * mu2, N};
}

/// u_n for any n >= 0 (u_0 and u_{N+1} vanish).
inline double dual_hahn_u(long n, const DualHahnParams& p) {
  return 4.0 * mu_number(n, p.xi()) * mu_number(p.N + 1 - n, p.eta());
}

inline double dual_hahn_b(long n, const DualHahnParams& p) {
  return 2.0 * (mu_number(n, p.xi()) + mu_number(p.N - n, p.eta())) + p.zeta();
}

struct DualHahnRecurrence {
  std::vector<double> u;  // u_1..u_N
  std::vector<double> b;  // b_0..b_N
};

inline DualHahnRecurrence dual_hahn_recurrence(const DualHahnParams& p) {
  DualHahnRecurrence r;
  for (long n = 0; n <= p.N; ++n) r.b.push_back(dual_hahn_b(n, p));
  for (long n = 1; n <= p.N; ++n) {
    const double u = dual_hahn_u(n, p);
    if (!(u > 0.0))
      throw PositivityError("u_" + std::to_string(n) + " = " + std::to_string(u) +
                            " is not positive; parameters are outside the "
                            "orthogonality regime");
    r.u.push_back(u);
  }
  return r;
}

/// Monic R_n(x) for 0 <= n <= N+1 by forward recurrence.
inline double eval_dual_hahn(long n, double x, const DualHahnParams& p) {
  if (n < 0 || n > p.N + 1)
    throw IndexError("eval_dual_hahn: degree outside 0..N+1");
  double prev = 0.0;
  double cur = 1.0;
  for (long m = 0; m < n; ++m) {
    const double next = (x - dual_hahn_b(m, p)) * cur - (m ? dual_hahn_u(m, p) : 0.0) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Symmetrized Jacobi matrix: diagonal b_n, off-diagonal sqrt(u_n).
inline Tridiagonal dual_hahn_jacobi(const DualHahnParams& p) {
  const auto r = dual_hahn_recurrence(p);
  Tridiagonal t;
  t.diag = r.b;
  for (double u : r.u) t.offdiag.push_back(std::sqrt(u));
  return t;
}

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Spectral nodes and Christoffel weights (squared first components of the
/// unit eigenvectors) of a symmetric Jacobi matrix, in ascending node order.
inline Quadrature christoffel_weights(const Tridiagonal& jac) {
  const EigenSystem es = tridiagonal_eigen(jac.diag, jac.offdiag);
  std::vector<std::size_t> order(es.values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return es.values[a] < es.values[b]; });
  Quadrature q;
  for (std::size_t i : order) {
    q.nodes.push_back(es.values[i]);
    q.weights.push_back(es.vectors(0, i) * es.vectors(0, i));
  }
  return q;
}

inline Quadrature christoffel_weights(const DualHahnParams& p) {
  return christoffel_weights(dual_hahn_jacobi(p));
}

/// Monic form of the CGC recurrence: P^_n = P_n A_1 ... A_n satisfies
/// P^_{n+1} = (x - B_n) P^_n - A_n^2 P^_{n-1}.
struct MonicRecurrence {
  std::vector<double> u;  // A_n^2, n = 1..N
  std::vector<double> b;  // B_n, n = 0..N
};

inline MonicRecurrence monic_cgc_recurrence(long N, double mu1, double mu2) {
  const Tridiagonal rec = recurrence_coeffs(N, mu1, mu2);
  MonicRecurrence m;
  m.b = rec.diag;
  for (double a : rec.offdiag) m.u.push_back(a * a);
  return m;
}

inline double eval_monic(const MonicRecurrence& r, long n, double x) {
  double prev = 0.0;
  double cur = 1.0;
  for (long m = 0; m < n; ++m) {
    const double next = (x - r.b[m]) * cur - (m ? r.u[m - 1] : 0.0) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct AffineMatch {
  double scale = 2.0;   // c
  double shift = 0.0;   // x0
  int parity_sign = 1;  // sigma; -1 means the reflection x -> -x
  double coefficient_residual = 0.0;
  double polynomial_residual = 0.0;

  double lambda() const { return parity_sign * scale; }
};

class AffineMatchError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

/// Finds (c, sigma, x0) with c in {+2, -2}, sigma in {+1, -1} such that
///   B_n = b_n / (sigma c) + x0   and   A_n^2 = u_n / c^2   for all n,
/// then checks P^_n(x) = (sigma c)^{-n} R_n(sigma c (x - x0)) at sample
/// points for every n <= N.
inline AffineMatch affine_match(long N, double mu1, double mu2, double tol = 1e-10) {
  validate_pair(N, mu1, mu2);
  if (N == 0) return {};

  const DualHahnParams dh = param_map(mu1, mu2, N);
  const MonicRecurrence cgc = monic_cgc_recurrence(N, mu1, mu2);
  std::vector<double> b(N + 1), u(N);
  for (long n = 0; n <= N; ++n) b[n] = dual_hahn_b(n, dh);
  for (long n = 1; n <= N; ++n) u[n - 1] = dual_hahn_u(n, dh);

  // With a constant CGC diagonal (odd N with mu1 = mu2, even N with
  // mu1 + mu2 = 0) both orientations fit; keep the one with the smallest shift.
  constexpr std::array<double, 2> scales{2.0, -2.0};
  constexpr std::array<int, 2> signs{1, -1};
  std::optional<AffineMatch> best;
  for (double c : scales) {
    for (int sigma : signs) {
      const double lambda = sigma * c;
      const double x0 = cgc.b[0] - b[0] / lambda;
      double res = 0.0;
      for (long n = 0; n <= N; ++n)
        res = std::max(res, std::abs(cgc.b[n] - b[n] / lambda - x0));
      for (long n = 0; n < N; ++n)
        res = std::max(res, std::abs(cgc.u[n] - u[n] / (c * c)));
      if (res > tol) continue;

      AffineMatch m{c, x0, sigma, res, 0.0};
      // Polynomial identity at a spread of points, relative to magnitude.
      for (double x : {-3.7, -1.1, 0.0, 0.45, 2.3, 5.9}) {
        for (long n = 0; n <= N; ++n) {
          const double lhs = eval_monic(cgc, n, x);
          const double rhs = eval_dual_hahn(n, lambda * (x - x0), dh) / std::pow(lambda, n);
          m.polynomial_residual = std::max(
              m.polynomial_residual, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
      }
      if (m.polynomial_residual > tol) continue;
      if (!best || std::abs(m.shift) < std::abs(best->shift) - tol) best = m;
    }
  }
  if (best) return *best;
  std::ostringstream os;
  os.precision(17);
  os << "affine_match failed for N=" << N << " mu1=" << mu1 << " mu2=" << mu2
     << "; CGC B = " << detail::format_list(cgc.b) << ", A^2 = " << detail::format_list(cgc.u)
     << "; dual Hahn b = " << detail::format_list(b) << ", u = " << detail::format_list(u);
  throw AffineMatchError(os.str());
}

inline double binomial(long n, long k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

/// Orthonormal symmetric (p = 1/2) Krawtchouk function
///   sqrt(C(N,k) C(N,s) / 2^N) K_k(s),   K_k(s) = 2F1(-k, -s; -N; 2),
/// with K_k(s) from the forward recurrence
///   (N - k) K_{k+1} = (N - 2s) K_k - k K_{k-1}.
/// The matrix [s][k] is symmetric and orthogonal.
inline double krawtchouk_eval(long k, long s, long N) {
  if (k < 0 || s < 0 || k > N || s > N) throw IndexError("krawtchouk_eval: index outside 0..N");
  double prev = 0.0;
  double cur = 1.0;
  for (long m = 0; m < k; ++m) {
    const double next =
        (static_cast<double>(N - 2 * s) * cur - static_cast<double>(m) * prev) /
        static_cast<double>(N - m);
    prev = cur;
    cur = next;
  }
  return std::sqrt(binomial(N, k) * binomial(N, s) / std::ldexp(1.0, static_cast<int>(N))) *
         cur;
}

inline Matrix krawtchouk_matrix(long N) {
  const auto d = static_cast<std::size_t>(N + 1);
  Matrix m(d, d);
  for (long s = 0; s <= N; ++s)
    for (long k = 0; k <= N; ++k) m(s, k) = krawtchouk_eval(k, s, N);
  return m;
}

/// At mu1 = mu2 = 0 the CGC table is the Krawtchouk transform with rows
/// signed by (-1)^{s(s+1)/2} and column j = (N - (-1)^N/2 - q_k)/2 for k.
/// Returns that predicted table.
inline Matrix krawtchouk_predicted_cgc(long N) {
  const Matrix kr = krawtchouk_matrix(N);
  const auto d = static_cast<std::size_t>(N + 1);
  Matrix w(d, d);
  for (long k = 0; k <= N; ++k) {
    const double q = q_eigenvalue(N, k, 0.0, 0.0);
    const long j = std::lround((static_cast<double>(N) - parity_sign(N) * 0.5 - q) / 2.0);
    for (long s = 0; s <= N; ++s)
      w(s, k) = parity_sign(s * (s + 1) / 2) * kr(s, j);
  }
  return w;
}

}  // namespace parabose
