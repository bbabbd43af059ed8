#pragma once

// Clebsch-Gordan coefficients for the reflection-twisted coproduct
//
//   J0~ = J0 (x) I + I (x) J0,   J+-~ = J+- (x) R + I (x) J+-,   R~ = R (x) R,
//
// of two discrete-series modules (mu1, +1) and (mu2, +1). The states
// psi_s = e_s (x) e_{N-s}, s = 0..N, span an exact eigenspace of J0~; the
// total Casimir Q~ = J+~ J-~ R~ - (J0~ - 1/2) R~ preserves it and is
// symmetric tridiagonal there. Its eigenvalues are
//
//   q_k = (-1)^{k+1} (mu1 + mu2 + 1/2 + k),  k = 0..N,
//
// and column k of the orthogonal matrix W[s][k] holds the eigenvector for
// q_k, with W[0][k] > 0.
//
// Two independent routes produce W:
//  * cgc_direct     - cyclic Jacobi on the assembled block Q~;
//  * cgc_recurrence - implicit QL on the (A_s, B_s) recurrence matrix, then
//                     Christoffel weights and the three-term recurrence for
//                     the polynomials P_s evaluated at the nodes.
//
// Sign law: the (A, B) tridiagonal coincides entrywise with Q~ and so has
// spectrum {q_k}. Q0 = J+~ J-~ - J0~ + 1/2 = (-1)^N Q~ has spectrum
// {(-1)^N q_k}. Tables always carry q_k.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "parabose/algebra_core.hpp"
#include "parabose/eigen.hpp"
#include "parabose/errors.hpp"
#include "parabose/matrix.hpp"

namespace parabose {

inline void validate_pair(long N, double mu1, double mu2) {
  if (N < 0) throw DomainError("total degree N must be >= 0");
  AlgebraParams{mu1, 1}.validate();
  AlgebraParams{mu2, 1}.validate();
}

/// q_k = (-1)^{k+1} (mu1 + mu2 + 1/2 + k).
inline double q_eigenvalue(long N, long k, double mu1, double mu2) {
  if (k < 0 || k > N)
    throw IndexError("q_eigenvalue: k = " + std::to_string(k) +
                     " outside 0.." + std::to_string(N));
  return -parity_sign(k) * (mu1 + mu2 + 0.5 + static_cast<double>(k));
}

inline std::vector<double> q_eigenvalues(long N, double mu1, double mu2) {
  std::vector<double> q(static_cast<std::size_t>(N + 1));
  for (long k = 0; k <= N; ++k) q[k] = q_eigenvalue(N, k, mu1, mu2);
  return q;
}

/// J-~ from block N (basis psi_s) to block N-1 (basis e_t (x) e_{N-1-t}).
/// Shape N x (N+1); empty for N = 0.
inline Matrix coproduct_lowering(long N, double mu1, double mu2) {
  Matrix m(static_cast<std::size_t>(N), static_cast<std::size_t>(N + 1));
  for (long s = 0; s <= N; ++s) {
    // J- e_s (x) R e_{N-s}
    if (s >= 1) m(s - 1, s) += std::sqrt(mu_number(s, mu1)) * parity_sign(N - s);
    // e_s (x) J- e_{N-s}
    if (N - s >= 1) m(s, s) += std::sqrt(mu_number(N - s, mu2));
  }
  return m;
}

/// J+~ from block N-1 to block N. Shape (N+1) x N.
inline Matrix coproduct_raising(long N, double mu1, double mu2) {
  Matrix m(static_cast<std::size_t>(N + 1), static_cast<std::size_t>(N));
  for (long t = 0; t < N; ++t) {
    // J+ e_t (x) R e_{N-1-t}
    m(t + 1, t) += std::sqrt(mu_number(t + 1, mu1)) * parity_sign(N - 1 - t);
    // e_t (x) J+ e_{N-1-t}
    m(t, t) += std::sqrt(mu_number(N - t, mu2));
  }
  return m;
}

struct TensorBlock {
  long N = 0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  Matrix q_tilde;
  int r_tilde_sign = 1;
};

inline TensorBlock build_tensor_block(long N, double mu1, double mu2) {
  validate_pair(N, mu1, mu2);
  const auto dim = static_cast<std::size_t>(N + 1);
  TensorBlock b;
  b.N = N;
  b.mu1 = mu1;
  b.mu2 = mu2;
  b.r_tilde_sign = parity_sign(N);

  Matrix jpjm(dim, dim);
  if (N > 0) jpjm = coproduct_raising(N, mu1, mu2) * coproduct_lowering(N, mu1, mu2);
  const double j0 = mu1 + mu2 + static_cast<double>(N) + 1.0;
  b.q_tilde = static_cast<double>(b.r_tilde_sign) *
              (jpjm - (j0 - 0.5) * Matrix::identity(dim));
  return b;
}

/// Q0 = J+~ J-~ - J0~ + 1/2 on block N.
inline Matrix q0_matrix(long N, double mu1, double mu2) {
  validate_pair(N, mu1, mu2);
  const auto dim = static_cast<std::size_t>(N + 1);
  Matrix jpjm(dim, dim);
  if (N > 0) jpjm = coproduct_raising(N, mu1, mu2) * coproduct_lowering(N, mu1, mu2);
  return jpjm - (mu1 + mu2 + static_cast<double>(N) + 0.5) * Matrix::identity(dim);
}

struct Tridiagonal {
  std::vector<double> diag;     // B_0..B_N
  std::vector<double> offdiag;  // A_1..A_N

  Matrix dense() const {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    for (std::size_t i = 0; i < offdiag.size(); ++i)
      m(i, i + 1) = m(i + 1, i) = offdiag[i];
    return m;
  }
};

/// Simplified two-case form of B_s.
inline double recurrence_b_simplified(long N, long s, double mu1, double mu2) {
  if (N % 2 == 0) return -0.5 - parity_sign(s) * (mu1 + mu2);
  return 0.5 + parity_sign(s) * (mu1 - mu2);
}

/// A_s = (-1)^s sqrt([s]_mu1 [N-s+1]_mu2), s = 1..N;
/// B_s = (-1)^N ([s]_mu1 + [N-s]_mu2 - N - mu1 - mu2 - 1/2), s = 0..N.
inline Tridiagonal recurrence_coeffs(long N, double mu1, double mu2) {
  validate_pair(N, mu1, mu2);
  Tridiagonal t;
  for (long s = 0; s <= N; ++s) {
    const double b = parity_sign(N) *
                     (mu_number(s, mu1) + mu_number(N - s, mu2) -
                      static_cast<double>(N) - mu1 - mu2 - 0.5);
    const double simplified = recurrence_b_simplified(N, s, mu1, mu2);
    if (std::abs(b - simplified) > 1e-12 * (1.0 + std::abs(b)))
      throw ConsistencyError("recurrence_coeffs: simplified B_" + std::to_string(s) +
                             " disagrees with the unsimplified form");
    t.diag.push_back(b);
  }
  for (long s = 1; s <= N; ++s)
    t.offdiag.push_back(parity_sign(s) *
                        std::sqrt(mu_number(s, mu1) * mu_number(N - s + 1, mu2)));
  return t;
}

struct CGCTable {
  long N = 0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  Matrix W;                      // W[s][k]
  std::vector<double> q_values;  // q_k from the closed form
  std::vector<double> spectrum;  // eigenvalue/node actually assigned to k

  std::vector<double> weights() const {
    std::vector<double> w(W.cols());
    for (std::size_t k = 0; k < W.cols(); ++k) w[k] = W(0, k) * W(0, k);
    return w;
  }
};

/// max |W^T W - I|.
inline double orthogonality_residual(const CGCTable& table) {
  const Matrix g = table.W.transpose() * table.W;
  return max_abs_diff(g, Matrix::identity(g.rows()));
}

namespace detail {

inline std::string format_list(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

/// For each k, the index j of `found` that matches q[k]. With `by_abs`,
/// compares absolute values. Throws ConsistencyError on any miss or reuse.
inline std::vector<std::size_t> assign_to_formula(const std::vector<double>& found,
                                                  const std::vector<double>& q,
                                                  bool by_abs, double tol = 1e-8) {
  std::vector<std::size_t> pick(q.size());
  std::vector<bool> used(found.size(), false);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double target = by_abs ? std::abs(q[k]) : q[k];
    bool ok = false;
    for (std::size_t j = 0; j < found.size(); ++j) {
      const double v = by_abs ? std::abs(found[j]) : found[j];
      if (!used[j] && std::abs(v - target) <= tol * std::max(1.0, std::abs(target))) {
        pick[k] = j;
        used[j] = true;
        ok = true;
        break;
      }
    }
    if (!ok)
      throw ConsistencyError("eigenvalue matching failed for k = " + std::to_string(k) +
                             ": computed spectrum " + format_list(found) +
                             ", expected " + format_list(q));
  }
  return pick;
}

/// Normalize every column to unit length and make row 0 positive.
inline void normalize_columns(Matrix& w) {
  for (std::size_t k = 0; k < w.cols(); ++k) {
    double nrm = 0.0;
    for (std::size_t s = 0; s < w.rows(); ++s) nrm += w(s, k) * w(s, k);
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw ConsistencyError("zero column in CGC table");
    if (std::abs(w(0, k)) <= 1e-300 || std::abs(w(0, k)) < 1e-14 * nrm)
      throw ConsistencyError("W[0][k] vanishes; sign convention undefined for k = " +
                             std::to_string(k));
    const double scale = (w(0, k) > 0.0 ? 1.0 : -1.0) / nrm;
    for (std::size_t s = 0; s < w.rows(); ++s) w(s, k) *= scale;
  }
}

}  // namespace detail

inline CGCTable cgc_direct(long N, double mu1, double mu2) {
  const TensorBlock block = build_tensor_block(N, mu1, mu2);
  const EigenSystem es = jacobi_eigen(block.q_tilde);
  CGCTable t;
  t.N = N;
  t.mu1 = mu1;
  t.mu2 = mu2;
  t.q_values = q_eigenvalues(N, mu1, mu2);
  const auto pick = detail::assign_to_formula(es.values, t.q_values, false);
  const auto dim = static_cast<std::size_t>(N + 1);
  t.W = Matrix(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    t.spectrum.push_back(es.values[pick[k]]);
    for (std::size_t s = 0; s < dim; ++s) t.W(s, k) = es.vectors(s, pick[k]);
  }
  detail::normalize_columns(t.W);
  return t;
}

/// P_0..P_N at x from A_{s+1} P_{s+1} + A_s P_{s-1} + B_s P_s = x P_s.
inline std::vector<double> recurrence_polynomials(const Tridiagonal& rec, double x) {
  const std::size_t n = rec.diag.size();
  std::vector<double> p(n, 0.0);
  p[0] = 1.0;
  for (std::size_t s = 0; s + 1 < n; ++s) {
    const double prev = s ? rec.offdiag[s - 1] * p[s - 1] : 0.0;
    p[s + 1] = ((x - rec.diag[s]) * p[s] - prev) / rec.offdiag[s];
  }
  return p;
}

inline CGCTable cgc_recurrence(long N, double mu1, double mu2) {
  const Tridiagonal rec = recurrence_coeffs(N, mu1, mu2);
  const EigenSystem es = tridiagonal_eigen(rec.diag, rec.offdiag);
  CGCTable t;
  t.N = N;
  t.mu1 = mu1;
  t.mu2 = mu2;
  t.q_values = q_eigenvalues(N, mu1, mu2);
  const auto pick = detail::assign_to_formula(es.values, t.q_values, true);
  const auto dim = static_cast<std::size_t>(N + 1);
  t.W = Matrix(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double node = es.values[pick[k]];
    const double w = es.vectors(0, pick[k]) * es.vectors(0, pick[k]);
    t.spectrum.push_back(node);
    const auto p = recurrence_polynomials(rec, node);
    for (std::size_t s = 0; s < dim; ++s) t.W(s, k) = std::sqrt(w) * p[s];
  }
  detail::normalize_columns(t.W);
  return t;
}

/// Relation residuals of the coproduct generators on block N, built from
/// Kronecker products of two truncated modules of dimension N+2. Columns are
/// restricted to block-N states; all rows are kept.
inline std::vector<RelationReport> check_coproduct_relations(long N, double mu1,
                                                             double mu2) {
  validate_pair(N, mu1, mu2);
  const auto d = static_cast<std::size_t>(N + 2);
  const TruncatedRep r1 = build_rep({mu1, 1}, d);
  const TruncatedRep r2 = build_rep({mu2, 1}, d);
  const Matrix id = Matrix::identity(d);
  const Matrix R1 = r1.r_matrix();
  const Matrix R2 = r2.r_matrix();
  const Matrix j0 = kron(r1.j0_matrix(), id) + kron(id, r2.j0_matrix());
  const Matrix jp = kron(r1.jplus_matrix(), R2) + kron(id, r2.jplus_matrix());
  const Matrix jm = kron(r1.jminus_matrix(), R2) + kron(id, r2.jminus_matrix());
  const Matrix rr = kron(R1, R2);
  const Matrix big_id = Matrix::identity(d * d);

  std::vector<std::size_t> cols;
  for (long s = 0; s <= N; ++s) cols.push_back(s * d + (N - s));

  auto restricted = [&](std::string name, const Matrix& res) {
    double m = 0.0;
    for (std::size_t c : cols)
      for (std::size_t r = 0; r < res.rows(); ++r) m = std::max(m, std::abs(res(r, c)));
    return RelationReport{std::move(name), m, cols.size()};
  };

  std::vector<RelationReport> out;
  out.push_back(restricted("[J0~,J+~] - J+~", commutator(j0, jp) - jp));
  out.push_back(restricted("[J0~,J-~] + J-~", commutator(j0, jm) + jm));
  out.push_back(restricted("{J+~,J-~} - 2J0~", anticommutator(jp, jm) - 2.0 * j0));
  out.push_back(restricted("{R~,J+~}", anticommutator(rr, jp)));
  out.push_back(restricted("{R~,J-~}", anticommutator(rr, jm)));
  out.push_back(restricted("[R~,J0~]", commutator(rr, j0)));
  out.push_back(restricted("R~^2 - I", rr * rr - big_id));

  // Total Casimir from the Kronecker operators must agree with the block.
  const Matrix q_full = jp * jm * rr - (j0 - 0.5 * big_id) * rr;
  const TensorBlock block = build_tensor_block(N, mu1, mu2);
  double qdiff = 0.0;
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      qdiff = std::max(qdiff, std::abs(q_full(cols[a], cols[b]) - block.q_tilde(a, b)));
  out.push_back({"Q~ (Kronecker) - Q~ (block)", qdiff, cols.size()});
  return out;
}

}  // namespace parabose
