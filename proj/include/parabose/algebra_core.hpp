#pragma once

// Discrete-series representations of the algebra generated by J0, J+, J-, R
// with
//
//   [J0, J+-] = +-J+-,  [R, J0] = 0,  {J+, J-} = 2 J0,  {R, J+-} = 0,  R^2 = I.
//
// A lowest-weight irreducible module is fixed by (mu, epsilon):
//
//   J0 e_n = (n + mu + 1/2) e_n,   R e_n = epsilon (-1)^n e_n,
//   J- e_n = rho_n e_{n-1},        J+ e_n = rho_{n+1} e_{n+1},
//   rho_n^2 = [n]_mu = n + mu (1 - (-1)^n).
//
// Everything below works on a truncation to e_0..e_{D-1}. Truncation only
// corrupts the top rows/columns, so relation checks are evaluated on an
// explicit leading block whose size excludes the shift degree of the
// expression being checked.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "parabose/errors.hpp"
#include "parabose/matrix.hpp"

namespace parabose {

/// (-1)^n as an int.
constexpr int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

/// [n]_mu = n + mu (1 - (-1)^n).
constexpr double mu_number(long n, double mu) {
  return (n % 2 == 0) ? static_cast<double>(n)
                      : static_cast<double>(n) + 2.0 * mu;
}

/// [1]_mu [2]_mu ... [n]_mu, with the empty product equal to 1.
constexpr double mu_factorial(long n, double mu) {
  double p = 1.0;
  for (long k = 1; k <= n; ++k) p *= mu_number(k, mu);
  return p;
}

struct AlgebraParams {
  double mu = 0.0;
  int epsilon = 1;

  /// Throws DomainError unless mu > -1/2 and epsilon is +-1.
  void validate() const {
    if (!(mu > -0.5))
      throw DomainError("representation parameter must satisfy mu > -1/2 (got mu = " +
                        std::to_string(mu) + ")");
    if (epsilon != 1 && epsilon != -1)
      throw DomainError("parity sign epsilon must be +1 or -1");
  }
};

struct TruncatedRep {
  AlgebraParams params;
  std::size_t dim = 0;
  std::vector<double> j0;
  std::vector<double> rho;
  std::vector<int> r_diag;

  Matrix j0_matrix() const { return Matrix::diagonal(j0); }

  Matrix jplus_matrix() const {
    Matrix m(dim, dim);
    for (std::size_t n = 0; n + 1 < dim; ++n) m(n + 1, n) = rho[n + 1];
    return m;
  }

  Matrix jminus_matrix() const {
    Matrix m(dim, dim);
    for (std::size_t n = 1; n < dim; ++n) m(n - 1, n) = rho[n];
    return m;
  }

  Matrix r_matrix() const {
    Matrix m(dim, dim);
    for (std::size_t n = 0; n < dim; ++n) m(n, n) = r_diag[n];
    return m;
  }
};

inline TruncatedRep build_rep(const AlgebraParams& params, std::size_t dim) {
  params.validate();
  if (dim < 2) throw DomainError("truncation dimension must be at least 2");
  TruncatedRep rep;
  rep.params = params;
  rep.dim = dim;
  rep.j0.resize(dim);
  rep.rho.resize(dim);
  rep.r_diag.resize(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const auto ln = static_cast<long>(n);
    rep.j0[n] = static_cast<double>(n) + params.mu + 0.5;
    rep.rho[n] = std::sqrt(mu_number(ln, params.mu));
    rep.r_diag[n] = params.epsilon * parity_sign(ln);
  }
  return rep;
}

/// Q = J+ J- R - (J0 - 1/2) R.
inline Matrix casimir_matrix(const TruncatedRep& rep) {
  const Matrix r = rep.r_matrix();
  const Matrix shifted_j0 = rep.j0_matrix() - 0.5 * Matrix::identity(rep.dim);
  return rep.jplus_matrix() * rep.jminus_matrix() * r - shifted_j0 * r;
}

struct RelationReport {
  std::string name;
  double max_residual = 0.0;
  std::size_t interior_dim = 0;
};

inline RelationReport make_report(std::string name, const Matrix& residual,
                                  std::size_t interior) {
  return {std::move(name), max_abs_leading(residual, interior), interior};
}

/// Residuals of the defining relations on rows/columns 0..D-3.
inline std::vector<RelationReport> check_relations(const TruncatedRep& rep) {
  if (rep.dim < 4) throw DomainError("check_relations needs dim >= 4");
  const std::size_t interior = rep.dim - 2;
  const Matrix j0 = rep.j0_matrix();
  const Matrix jp = rep.jplus_matrix();
  const Matrix jm = rep.jminus_matrix();
  const Matrix r = rep.r_matrix();
  const Matrix id = Matrix::identity(rep.dim);

  std::vector<RelationReport> out;
  out.push_back(make_report("[J0,J+] - J+", commutator(j0, jp) - jp, interior));
  out.push_back(make_report("[J0,J-] + J-", commutator(j0, jm) + jm, interior));
  out.push_back(
      make_report("{J+,J-} - 2J0", anticommutator(jp, jm) - 2.0 * j0, interior));
  out.push_back(make_report("{R,J+}", anticommutator(r, jp), interior));
  out.push_back(make_report("{R,J-}", anticommutator(r, jm), interior));
  out.push_back(make_report("[R,J0]", commutator(r, j0), interior));
  out.push_back(make_report("R^2 - I", r * r - id, interior));
  return out;
}

/// Embedding checks for K+- = J+-^2: the sl(2) relations of (J0, K+, K-) and
/// Q^2 = (J0 - 1/2)^2 - K+ K- - J+ J-. Rows/columns 0..D-5.
inline std::vector<RelationReport> osp_check(const TruncatedRep& rep) {
  if (rep.dim < 6) throw DomainError("osp_check needs dim >= 6");
  const std::size_t interior = rep.dim - 4;
  const Matrix j0 = rep.j0_matrix();
  const Matrix jp = rep.jplus_matrix();
  const Matrix jm = rep.jminus_matrix();
  const Matrix kp = jp * jp;
  const Matrix km = jm * jm;
  const Matrix q = casimir_matrix(rep);
  const Matrix shifted = j0 - 0.5 * Matrix::identity(rep.dim);

  std::vector<RelationReport> out;
  out.push_back(make_report("[K-,K+] - 4J0", commutator(km, kp) - 4.0 * j0, interior));
  out.push_back(make_report("[J0,K+] - 2K+", commutator(j0, kp) - 2.0 * kp, interior));
  out.push_back(make_report("[J0,K-] + 2K-", commutator(j0, km) + 2.0 * km, interior));
  out.push_back(make_report("Q^2 - osp(1|2) Casimir",
                            q * q - (shifted * shifted - kp * km - jp * jm),
                            interior));
  return out;
}

/// [J-, J+] - (1 + 2 epsilon mu R) on rows/columns 0..D-2.
inline RelationReport parabose_check(const TruncatedRep& rep) {
  const Matrix lhs = commutator(rep.jminus_matrix(), rep.jplus_matrix());
  const Matrix rhs = Matrix::identity(rep.dim) +
                     (2.0 * rep.params.epsilon * rep.params.mu) * rep.r_matrix();
  return make_report("[J-,J+] - 1 - 2 eps mu R", lhs - rhs, rep.dim - 1);
}

}  // namespace parabose
