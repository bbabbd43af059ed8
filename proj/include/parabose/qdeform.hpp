#pragma once

// Discrete series of the q-deformed algebra
//
//   [J0, J+-] = +-J+-,   J- J+ - q J+ J- = 2 (q^{2 J0} - 1) / (q^2 - 1),
//
// its Fock-Bargmann realization by q-derivatives, and the q -> -1 limit
// that recovers the reflection algebra of algebra_core.hpp.
//
// Near q = -1 the closed forms for r_n^2 are 0/0 quotients. Parameters built
// with QRepParams::near_minus_one(tau, nu) carry tau exactly (q = -e^tau) and
// every factor 1 - q^m, q + 1, q - 1 is then evaluated through expm1.

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parabose/algebra_core.hpp"
#include "parabose/errors.hpp"
#include "parabose/matrix.hpp"
#include "parabose/polynomial.hpp"

namespace parabose {

struct QRepParams {
  QRepParams() = default;
  QRepParams(double q_, double nu_, std::optional<double> tau_ = std::nullopt)
      : q(q_), nu(nu_), tau(tau_) {}

  double q = 0.5;
  double nu = 1.0;
  /// Set when q = -exp(tau) was requested explicitly.
  std::optional<double> tau;

  static QRepParams near_minus_one(double tau, double nu) {
    return {-std::exp(tau), nu, tau};
  }

  void validate() const {
    if (q == 0.0) throw DomainError("deformation parameter q must be nonzero");
    if (std::abs(q) == 1.0 || (tau && *tau == 0.0))
      throw DomainError(
          "q = +-1 is excluded; use the parity-split limit formulas instead");
    if (!(nu > 0.0)) throw DomainError("representation parameter nu must be > 0");
  }
};

namespace detail {

inline bool is_integer(double x) { return std::nearbyint(x) == x; }

inline void require_real_power(const QRepParams& p, double exponent) {
  if ((p.q < 0.0 || p.tau) && !is_integer(exponent))
    throw DomainError("q^" + std::to_string(exponent) +
                      " is not real for negative q; need an integer exponent");
}

inline double qpow(const QRepParams& p, double x) {
  require_real_power(p, x);
  if (p.tau) {
    const double sign = parity_sign(static_cast<long>(std::nearbyint(x)));
    return sign * std::exp(*p.tau * x);
  }
  return std::pow(p.q, x);
}

/// 1 - q^m.
inline double one_minus_qpow(const QRepParams& p, double m) {
  require_real_power(p, m);
  if (p.tau) {
    const double em = std::expm1(*p.tau * m);
    return parity_sign(static_cast<long>(std::nearbyint(m))) == 1 ? -em
                                                                   : 2.0 + em;
  }
  return 1.0 - std::pow(p.q, m);
}

inline double q_plus_one(const QRepParams& p) {
  return p.tau ? -std::expm1(*p.tau) : p.q + 1.0;
}

inline double q_minus_one(const QRepParams& p) {
  return p.tau ? -(2.0 + std::expm1(*p.tau)) : p.q - 1.0;
}

}  // namespace detail

/// r_n^2 = 2 (1 - q^n)(1 - q^{n + 2 nu - 1}) / ((q + 1)(q - 1)^2).
inline double r_sq(long n, const QRepParams& params) {
  params.validate();
  if (n < 0) throw IndexError("r_sq: n must be nonnegative");
  if (n == 0) return 0.0;
  const double qm1 = detail::q_minus_one(params);
  const double num = 2.0 * detail::one_minus_qpow(params, static_cast<double>(n)) *
                     detail::one_minus_qpow(params, n + 2.0 * params.nu - 1.0);
  return num / (detail::q_plus_one(params) * qm1 * qm1);
}

/// Casimir eigenvalue 2 (q^{nu-1} + q^{-nu}) / ((1 - q)(q^2 - 1)).
inline double q_casimir_value(const QRepParams& params) {
  params.validate();
  const double qm1 = detail::q_minus_one(params);
  const double qp1 = detail::q_plus_one(params);
  const double num = 2.0 * (detail::qpow(params, params.nu - 1.0) +
                            detail::qpow(params, -params.nu));
  return num / (-qm1 * qm1 * qp1);
}

/// [n]_q = (q^n - 1)/(q - 1), summed as 1 + q + ... + q^{n-1}.
inline double q_number(long n, double q) {
  double s = 0.0;
  double term = 1.0;
  for (long i = 0; i < n; ++i) {
    s += term;
    term *= q;
  }
  return s;
}

/// D_q z^n = [n]_q z^{n-1}.
inline PolyCoeffs q_derivative(const PolyCoeffs& p, double q) {
  if (q == 1.0)
    throw DomainError("q_derivative: q = 1 (classical derivative) is not modeled");
  if (p.degree() == 0) return PolyCoeffs{0.0};
  std::vector<double> out(p.degree(), 0.0);
  for (std::size_t n = 1; n <= p.degree(); ++n)
    out[n - 1] = q_number(static_cast<long>(n), q) * p.coeffs[n];
  return PolyCoeffs(std::move(out));
}

enum class QGenerator { J0, Jplus, Jminus };

/// Matrix (column n = image of z^n) of
///   J0 = z d/dz + nu,  J+ = z,  J- = alpha z D_q^2 + beta D_q
/// with alpha = 2 q^{2nu}/(1+q) and beta = 2 (1 - q^{2nu})/(1 - q^2).
/// D_q^2 acts as [n]_q [n-1]_q on z^n.
inline Matrix fock_bargmann_q_matrix(const QRepParams& params, QGenerator gen,
                                     std::size_t dim) {
  params.validate();
  if (dim < 2) throw DomainError("fock_bargmann_q_matrix: dim must be >= 2");
  Matrix m(dim, dim);
  switch (gen) {
    case QGenerator::J0:
      for (std::size_t n = 0; n < dim; ++n)
        m(n, n) = static_cast<double>(n) + params.nu;
      break;
    case QGenerator::Jplus:
      for (std::size_t n = 0; n + 1 < dim; ++n) m(n + 1, n) = 1.0;
      break;
    case QGenerator::Jminus: {
      const double q = params.q;
      const double qp1 = detail::q_plus_one(params);
      const double q2nu = detail::qpow(params, 2.0 * params.nu);
      const double alpha = 2.0 * q2nu / qp1;
      const double beta = 2.0 * detail::one_minus_qpow(params, 2.0 * params.nu) /
                          (-detail::q_minus_one(params) * qp1);
      for (std::size_t n = 1; n < dim; ++n) {
        const auto ln = static_cast<long>(n);
        const double qn = q_number(ln, q);
        m(n - 1, n) = alpha * qn * q_number(ln - 1, q) + beta * qn;
      }
      break;
    }
  }
  return m;
}

/// q^{J0} on the discrete-series basis: diagonal q^{n + nu}.
inline std::vector<double> q_power_j0_diag(const QRepParams& params,
                                           std::size_t dim) {
  params.validate();
  std::vector<double> d(dim);
  for (std::size_t n = 0; n < dim; ++n)
    d[n] = detail::qpow(params, static_cast<double>(n) + params.nu);
  return d;
}

/// Residuals of the deformed relations for the Fock-Bargmann matrices on
/// rows/columns 0..D-2.
inline std::vector<RelationReport> fock_bargmann_relations(
    const QRepParams& params, std::size_t dim) {
  const Matrix j0 = fock_bargmann_q_matrix(params, QGenerator::J0, dim);
  const Matrix jp = fock_bargmann_q_matrix(params, QGenerator::Jplus, dim);
  const Matrix jm = fock_bargmann_q_matrix(params, QGenerator::Jminus, dim);
  const std::size_t interior = dim - 1;

  Matrix rhs(dim, dim);
  const double qp1 = detail::q_plus_one(params);
  const double qm1 = detail::q_minus_one(params);
  for (std::size_t n = 0; n < dim; ++n)
    rhs(n, n) = -2.0 *
                detail::one_minus_qpow(params, 2.0 * (static_cast<double>(n) + params.nu)) /
                (qm1 * qp1);

  std::vector<RelationReport> out;
  out.push_back(make_report("[J0,J+] - J+", commutator(j0, jp) - jp, interior));
  out.push_back(make_report("[J0,J-] + J-", commutator(j0, jm) + jm, interior));
  out.push_back(make_report("J-J+ - qJ+J- - 2(q^{2J0}-1)/(q^2-1)",
                            jm * jp - params.q * (jp * jm) - rhs, interior));
  return out;
}

struct LimitScanResult {
  long nu = 1;
  std::vector<double> tau_values;
  std::vector<double> max_errors;
  /// Least-squares slope of log(max_error) against log(tau); empty when
  /// fewer than two usable points were scanned.
  std::optional<double> fitted_slope;
};

/// Least-squares slope of y against x.
inline std::optional<double> fit_slope(std::span<const double> x,
                                       std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

/// For each tau, max over 1 <= n <= n_max of |r_n^2(q = -e^tau) - [n]_{nu-1/2}|.
/// The limit only exists for integer nu.
inline LimitScanResult limit_scan(double nu, std::span<const double> tau_values,
                                  long n_max) {
  if (!(nu >= 1.0) || !detail::is_integer(nu))
    throw DomainError("q -> -1 limit of r_n is not well defined for non-integer nu (got nu = " +
                      std::to_string(nu) + "); need a positive integer");
  if (tau_values.empty()) throw DomainError("limit_scan: empty tau list");
  if (n_max < 2) throw DomainError("limit_scan: n_max must be >= 2");
  for (double t : tau_values)
    if (!(t > 0.0)) throw DomainError("limit_scan: every tau must be > 0");

  LimitScanResult res;
  res.nu = static_cast<long>(nu);
  res.tau_values.assign(tau_values.begin(), tau_values.end());
  const double mu = nu - 0.5;
  std::vector<double> log_tau, log_err;
  for (double tau : tau_values) {
    const auto p = QRepParams::near_minus_one(tau, nu);
    double worst = 0.0;
    for (long n = 1; n <= n_max; ++n)
      worst = std::max(worst, std::abs(r_sq(n, p) - mu_number(n, mu)));
    res.max_errors.push_back(worst);
    if (worst > 0.0) {
      log_tau.push_back(std::log(tau));
      log_err.push_back(std::log(worst));
    }
  }
  res.fitted_slope = fit_slope(log_tau, log_err);
  return res;
}

}  // namespace parabose
