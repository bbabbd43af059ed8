#pragma once

// Polynomial (Fock-Bargmann) realization.
//
// One variable:  R = R_x,  J+ = x,  J- = d/dx + (mu/x)(1 - R_x),
//                J0 = x d/dx + mu + 1/2,
// acting on monomial coefficients, so J- x^n = [n]_mu x^{n-1} without any
// division.
//
// Two variables, homogeneous of degree N: f(x, y) = y^N Phi(x/y). The total
// Casimir becomes the first-order Dunkl-type operator
//
//   L = (-1)^N (z^2 + 1) d/dz R
//     + ((-1)^N mu1/z - (-1)^N (mu2 + N) z - mu1 - (-1)^N mu2) R
//     + (mu2 z - 1/2 - (-1)^N mu1/z) I,
//
// tridiagonal on z^0..z^N. Its eigenpolynomials Phi_k are sums of two
// terminating 2F1 series in -z^2 times (1 + z^2)^p; their coefficients are
// the CGC columns in the monomial basis, i.e. W[s][k] / sqrt([s]_mu1! [N-s]_mu2!).
//
// Observed: L has eigenvalues (-1)^N q_k on Phi_k (L = (-1)^N D Q~ D^{-1}
// with D the monomial rescaling), so for odd N the eigenvalue attached to
// Phi_k is -q_k. The branch is measured, not assumed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "parabose/algebra_core.hpp"
#include "parabose/dual_hahn.hpp"
#include "parabose/errors.hpp"
#include "parabose/matrix.hpp"
#include "parabose/polynomial.hpp"
#include "parabose/tensor_cgc.hpp"

namespace parabose {

enum class Generator { J0, Jplus, Jminus, R };

inline PolyCoeffs dunkl_apply(Generator gen, const PolyCoeffs& p, double mu) {
  AlgebraParams{mu, 1}.validate();
  const std::size_t d = p.degree();
  switch (gen) {
    case Generator::R: {
      PolyCoeffs out = p;
      for (std::size_t n = 1; n <= d; n += 2) out.coeffs[n] = -out.coeffs[n];
      return out;
    }
    case Generator::Jplus: {
      std::vector<double> c(d + 2, 0.0);
      for (std::size_t n = 0; n <= d; ++n) c[n + 1] = p.coeffs[n];
      return PolyCoeffs(std::move(c));
    }
    case Generator::J0: {
      PolyCoeffs out = p;
      for (std::size_t n = 0; n <= d; ++n)
        out.coeffs[n] *= static_cast<double>(n) + mu + 0.5;
      return out;
    }
    case Generator::Jminus: {
      if (d == 0) return PolyCoeffs{0.0};
      std::vector<double> c(d, 0.0);
      for (std::size_t n = 1; n <= d; ++n)
        c[n - 1] = mu_number(static_cast<long>(n), mu) * p.coeffs[n];
      return PolyCoeffs(std::move(c));
    }
  }
  return p;
}

namespace detail {

// Laurent polynomial with one negative power: slot 0 holds z^{-1}.
struct Laurent {
  std::vector<double> c;
  explicit Laurent(std::size_t max_power) : c(max_power + 2, 0.0) {}
  double& at(long power) { return c[static_cast<std::size_t>(power + 1)]; }
  double at(long power) const { return c[static_cast<std::size_t>(power + 1)]; }
};

}  // namespace detail

/// Matrix of L on z^0..z^N (column n is L z^n), assembled term by term.
/// The z^{-1} and z^{N+1} coefficients must cancel; otherwise throws
/// ConsistencyError.
inline Matrix build_L_matrix(long N, double mu1, double mu2) {
  validate_pair(N, mu1, mu2);
  const double S = parity_sign(N);
  const auto dim = static_cast<std::size_t>(N + 1);
  Matrix L(dim, dim);

  for (long n = 0; n <= N; ++n) {
    detail::Laurent out(static_cast<std::size_t>(N + 1));
    const double rz = parity_sign(n);  // R z^n = rz z^n

    // (-1)^N (z^2 + 1) d/dz R
    const double deriv = rz * static_cast<double>(n);  // d/dz (R z^n) = deriv z^{n-1}
    if (n >= 1) {
      out.at(n + 1) += S * deriv;
      out.at(n - 1) += S * deriv;
    }
    // ((-1)^N mu1/z - (-1)^N (mu2 + N) z - mu1 - (-1)^N mu2) R
    out.at(n - 1) += S * mu1 * rz;
    out.at(n + 1) -= S * (mu2 + static_cast<double>(N)) * rz;
    out.at(n) -= (mu1 + S * mu2) * rz;
    // (mu2 z - 1/2 - (-1)^N mu1/z) I
    out.at(n + 1) += mu2;
    out.at(n) -= 0.5;
    out.at(n - 1) -= S * mu1;

    const double scale = 1.0 + std::abs(mu1) + std::abs(mu2) + static_cast<double>(N);
    if (std::abs(out.at(-1)) > 1e-12 * scale)
      throw ConsistencyError("build_L_matrix: z^-1 coefficient does not cancel for n = " +
                             std::to_string(n));
    if (std::abs(out.at(N + 1)) > 1e-12 * scale)
      throw ConsistencyError("build_L_matrix: degree raised above N for n = " +
                             std::to_string(n));
    for (long i = 0; i <= N; ++i) L(i, n) = out.at(i);
  }
  return L;
}

/// Coefficients t_m of 2F1(a, b; c; w) = sum_m t_m w^m for a = 0, -1, -2, ...
inline std::vector<double> hyp2f1_terminating_coeffs(double a, double b, double c) {
  if (a > 0.0 || std::nearbyint(a) != a)
    throw DomainError("hyp2f1_terminating: a must be a nonpositive integer");
  const long top = -static_cast<long>(std::nearbyint(a));
  std::vector<double> t{1.0};
  for (long m = 0; m < top; ++m) {
    const double denom = (c + m) * static_cast<double>(m + 1);
    if (c + m == 0.0)
      throw DomainError("hyp2f1_terminating: pole, c + " + std::to_string(m) + " = 0");
    t.push_back(t.back() * (a + m) * (b + m) / denom);
  }
  return t;
}

inline double hyp2f1_terminating(double a, double b, double c, double arg) {
  const auto t = hyp2f1_terminating_coeffs(a, b, c);
  double acc = 0.0;
  for (std::size_t m = t.size(); m-- > 0;) acc = acc * arg + t[m];
  return acc;
}

namespace detail {

/// 2F1(a, b; c; -z^2) as a polynomial in z.
inline PolyCoeffs hyp2f1_in_minus_z2(long a, double b, double c) {
  const auto t = hyp2f1_terminating_coeffs(static_cast<double>(a), b, c);
  std::vector<double> out(2 * (t.size() - 1) + 1, 0.0);
  for (std::size_t m = 0; m < t.size(); ++m) out[2 * m] = (m % 2 ? -1.0 : 1.0) * t[m];
  return PolyCoeffs(std::move(out));
}

/// (1 + z^2)^p with exact binomial coefficients.
inline PolyCoeffs one_plus_z2_pow(long p) {
  if (p < 0) throw ConsistencyError("negative power of (1 + z^2) in generating function");
  std::vector<double> out(2 * p + 1, 0.0);
  for (long i = 0; i <= p; ++i) out[2 * i] = binomial(p, i);
  return PolyCoeffs(std::move(out));
}

}  // namespace detail

struct GenFunction {
  long N = 0;
  long k = 0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  PolyCoeffs phi;         // raw normalization: constant term 1
  PolyCoeffs even_branch;  // first 2F1 term
  PolyCoeffs odd_branch;   // z * second 2F1 term

  /// Unit Euclidean norm, first nonzero coefficient positive.
  PolyCoeffs normalized() const {
    PolyCoeffs out = phi;
    const double n = norm2(out.coeffs);
    double first = 0.0;
    for (double c : out.coeffs)
      if (c != 0.0) {
        first = c;
        break;
      }
    out *= (first < 0.0 ? -1.0 : 1.0) / n;
    return out;
  }
};

/// Phi_k(z) for the four (N mod 2, k mod 2) cases.
inline GenFunction phi_series(long N, long k, double mu1, double mu2) {
  validate_pair(N, mu1, mu2);
  if (k < 0 || k > N) throw IndexError("phi_series: k outside 0..N");

  const double c1 = mu1 + 0.5;
  const double c2 = mu1 + 1.5;
  const double den = 2.0 * mu1 + 1.0;
  const double kd = static_cast<double>(k);
  long a1, a2, power;
  double b1, b2, kappa;

  if (N % 2 == 0 && k % 2 == 0) {
    a1 = -k / 2;
    b1 = -mu2 - kd / 2.0 + 0.5;
    kappa = kd / den;
    a2 = 1 - k / 2;
    b2 = b1;
    power = (N - k) / 2;
  } else if (N % 2 == 0) {
    a1 = -(k + 1) / 2;
    b1 = -mu2 - kd / 2.0;
    kappa = -(2.0 * mu1 + 2.0 * mu2 + kd + 1.0) / den;
    a2 = -(k - 1) / 2;
    b2 = -mu2 - kd / 2.0;
    power = (N - k - 1) / 2;
  } else if (k % 2 == 0) {
    a1 = -k / 2;
    b1 = -mu2 - (kd + 1.0) / 2.0;
    kappa = (2.0 * mu1 + kd + 1.0) / den;
    a2 = -k / 2;
    b2 = -mu2 - (kd - 1.0) / 2.0;
    power = (N - k - 1) / 2;
  } else {
    a1 = -(k - 1) / 2;
    b1 = -mu2 - kd / 2.0;
    kappa = -(2.0 * mu2 + kd) / den;
    a2 = -(k - 1) / 2;
    b2 = 1.0 - mu2 - kd / 2.0;
    power = (N - k) / 2;
  }

  const PolyCoeffs envelope = detail::one_plus_z2_pow(power);
  GenFunction g;
  g.N = N;
  g.k = k;
  g.mu1 = mu1;
  g.mu2 = mu2;
  g.even_branch = detail::hyp2f1_in_minus_z2(a1, b1, c1) * envelope;
  if (kappa != 0.0) {
    if (a2 > 0) throw ConsistencyError("phi_series: nonterminating second branch");
    g.odd_branch = PolyCoeffs{0.0, kappa} * detail::hyp2f1_in_minus_z2(a2, b2, c2) * envelope;
  }
  g.phi = g.even_branch + g.odd_branch;
  if (g.phi.degree() > static_cast<std::size_t>(N))
    throw ConsistencyError("phi_series: degree exceeds N");
  g.phi.coeffs.resize(static_cast<std::size_t>(N + 1), 0.0);
  return g;
}

/// sqrt([s]_mu1! [N-s]_mu2!), the factor between a monomial coefficient and
/// the orthonormal-basis component of e_s (x) e_{N-s}.
inline double monomial_rescale(long N, long s, double mu1, double mu2) {
  return std::sqrt(mu_factorial(s, mu1) * mu_factorial(N - s, mu2));
}

/// CGC column k in monomial normalization: W[s][k] / sqrt([s]! [N-s]!).
inline std::vector<double> rescaled_column(const CGCTable& table, long k) {
  std::vector<double> c(table.W.rows());
  for (long s = 0; s <= table.N; ++s)
    c[s] = table.W(s, k) / monomial_rescale(table.N, s, table.mu1, table.mu2);
  return c;
}

/// 1 - |cos| between two nonzero vectors, clamped at 0.
inline double collinearity_defect(std::span<const double> a, std::span<const double> b) {
  const double na = norm2(a);
  const double nb = norm2(b);
  if (na == 0.0 || nb == 0.0) throw ConsistencyError("collinearity of a zero vector");
  return std::max(0.0, 1.0 - std::abs(dot(a, b)) / (na * nb));
}

/// max over k of the collinearity defect between the rescaled CGC column
/// and the Phi_k coefficient vector.
inline double compare_genfunc_cgc(long N, double mu1, double mu2, const CGCTable& table) {
  if (table.N != N || table.mu1 != mu1 || table.mu2 != mu2)
    throw DomainError("compare_genfunc_cgc: table parameters differ from (N, mu1, mu2)");
  double worst = 0.0;
  for (long k = 0; k <= N; ++k) {
    const auto g = phi_series(N, k, mu1, mu2);
    worst = std::max(worst, collinearity_defect(rescaled_column(table, k), g.phi.coeffs));
  }
  return worst;
}

struct EigenRelation {
  double rayleigh = 0.0;      // realized eigenvalue (Rayleigh quotient)
  bool parity_twisted = false;  // true when the realized eigenvalue is (-1)^N q_k != q_k
  double residual = 0.0;      // |L phi - lambda phi| / |phi|
};

/// Eigen-relation of Phi_k under L, against whichever of q_k, (-1)^N q_k is
/// realized.
inline EigenRelation genfunc_eigen_relation(long N, long k, double mu1, double mu2) {
  const Matrix L = build_L_matrix(N, mu1, mu2);
  const auto g = phi_series(N, k, mu1, mu2);
  const auto lphi = L * std::span<const double>(g.phi.coeffs);
  EigenRelation er;
  er.rayleigh = dot(g.phi.coeffs, lphi) / dot(g.phi.coeffs, g.phi.coeffs);
  const double qk = q_eigenvalue(N, k, mu1, mu2);
  const double twisted = parity_sign(N) * qk;
  er.parity_twisted = N % 2 == 1 && std::abs(er.rayleigh - twisted) < std::abs(er.rayleigh - qk);
  const double lambda = er.parity_twisted ? twisted : qk;
  double r = 0.0;
  for (std::size_t i = 0; i < lphi.size(); ++i) {
    const double d = lphi[i] - lambda * g.phi.coeffs[i];
    r += d * d;
  }
  er.residual = std::sqrt(r) / norm2(g.phi.coeffs);
  return er;
}

/// D Q~ D^{-1} with D = diag(1 / sqrt([s]_mu1! [N-s]_mu2!)): the total
/// Casimir acting on monomial coefficients of Phi.
inline Matrix bargmann_casimir_matrix(long N, double mu1, double mu2) {
  const TensorBlock b = build_tensor_block(N, mu1, mu2);
  Matrix m = b.q_tilde;
  for (long i = 0; i <= N; ++i)
    for (long j = 0; j <= N; ++j)
      m(i, j) *= monomial_rescale(N, j, mu1, mu2) / monomial_rescale(N, i, mu1, mu2);
  return m;
}

/// CGC table read off the generating functions: column k is Phi_k rescaled
/// to the orthonormal basis, normalized, with W[0][k] > 0.
inline CGCTable cgc_genfunc(long N, double mu1, double mu2) {
  validate_pair(N, mu1, mu2);
  CGCTable t;
  t.N = N;
  t.mu1 = mu1;
  t.mu2 = mu2;
  t.q_values = q_eigenvalues(N, mu1, mu2);
  const auto dim = static_cast<std::size_t>(N + 1);
  t.W = Matrix(dim, dim);
  for (long k = 0; k <= N; ++k) {
    const auto g = phi_series(N, k, mu1, mu2);
    for (long s = 0; s <= N; ++s) t.W(s, k) = g.phi.coeffs[s] * monomial_rescale(N, s, mu1, mu2);
    t.spectrum.push_back(parity_sign(N) * genfunc_eigen_relation(N, k, mu1, mu2).rayleigh);
  }
  detail::normalize_columns(t.W);
  return t;
}

}  // namespace parabose
