#pragma once

// Built-in invariant sweep used by `parabose verify`. Each check reports the
// worst residual it saw over its parameter grid.

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <vector>

#include "parabose/algebra_core.hpp"
#include "parabose/bargmann.hpp"
#include "parabose/dual_hahn.hpp"
#include "parabose/qdeform.hpp"
#include "parabose/tensor_cgc.hpp"

namespace parabose {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  std::string note;  // first failure message, if a check threw
};

struct VerifyGrid {
  long max_n = 12;
  std::vector<double> mu_values{-0.4, 0.0, 0.3, 1.7, 5.0};
  std::vector<double> rep_mu_values{-0.49, 0.0, 0.5, 3.0};
  std::size_t rep_dim = 50;
};

namespace detail {

inline std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

template <class Fn>
CheckResult run_check(std::string name, Fn&& fn) {
  CheckResult c{std::move(name), 0.0, {}};
  try {
    fn(c.max_residual);
  } catch (const std::exception& e) {
    c.max_residual = std::numeric_limits<double>::infinity();
    c.note = e.what();
  }
  return c;
}

}  // namespace detail

inline std::vector<CheckResult> run_verification_suite(const VerifyGrid& grid = {}) {
  std::vector<CheckResult> out;
  const long genfunc_max_n = std::min<long>(grid.max_n, 10);
  const long kron_max_n = std::min<long>(grid.max_n, 8);

  auto over_pairs = [&](long n_max, auto&& body) {
    for (long N = 0; N <= n_max; ++N)
      for (double a : grid.mu_values)
        for (double b : grid.mu_values) body(N, a, b);
  };

  out.push_back(detail::run_check("algebra_relations", [&](double& worst) {
    for (double mu : grid.rep_mu_values) {
      const auto rep = build_rep({mu, 1}, grid.rep_dim);
      for (const auto& r : check_relations(rep)) worst = std::max(worst, r.max_residual);
      worst = std::max(worst, parabose_check(rep).max_residual);
    }
  }));

  out.push_back(detail::run_check("osp12_embedding", [&](double& worst) {
    for (double mu : grid.rep_mu_values)
      for (const auto& r : osp_check(build_rep({mu, 1}, grid.rep_dim)))
        worst = std::max(worst, r.max_residual);
  }));

  out.push_back(detail::run_check("casimir_constant", [&](double& worst) {
    for (double mu : grid.rep_mu_values)
      for (int eps : {1, -1}) {
        const auto rep = build_rep({mu, eps}, grid.rep_dim);
        const Matrix q = casimir_matrix(rep);
        for (std::size_t n = 0; n + 1 < rep.dim; ++n)
          worst = std::max(worst, std::abs(q(n, n) + eps * mu));
      }
  }));

  out.push_back(detail::run_check("dunkl_lowering", [&](double& worst) {
    for (double mu : grid.rep_mu_values)
      for (std::size_t n = 0; n <= 40; ++n) {
        const auto img = dunkl_apply(Generator::Jminus, PolyCoeffs::monomial(n), mu);
        const PolyCoeffs expect =
            n ? PolyCoeffs::monomial(n - 1, mu_number(static_cast<long>(n), mu)) : PolyCoeffs{0.0};
        worst = std::max(worst, max_abs_diff(img, expect));
      }
  }));

  out.push_back(detail::run_check("q_fock_bargmann_relations", [&](double& worst) {
    for (double q : {0.3, 0.5, 0.9, 1.7})
      for (double nu : {0.5, 1.0, 2.5})
        for (const auto& r : fock_bargmann_relations({q, nu, {}}, 12))
          worst = std::max(worst, r.max_residual);
  }));

  out.push_back(detail::run_check("coproduct_relations", [&](double& worst) {
    over_pairs(kron_max_n, [&](long N, double a, double b) {
      for (const auto& r : check_coproduct_relations(N, a, b))
        worst = std::max(worst, r.max_residual);
    });
  }));

  out.push_back(detail::run_check("spectrum_law", [&](double& worst) {
    over_pairs(grid.max_n, [&](long N, double a, double b) {
      const auto es = jacobi_eigen(build_tensor_block(N, a, b).q_tilde);
      worst = std::max(worst, detail::max_abs_diff(detail::sorted(es.values),
                                                   detail::sorted(q_eigenvalues(N, a, b))));
    });
  }));

  out.push_back(detail::run_check("recurrence_sign_law", [&](double& worst) {
    over_pairs(grid.max_n, [&](long N, double a, double b) {
      const auto rec = recurrence_coeffs(N, a, b);
      const auto ab = tridiagonal_eigen(rec.diag, rec.offdiag);
      const auto q0 = jacobi_eigen(q0_matrix(N, a, b));
      auto twisted = q_eigenvalues(N, a, b);
      for (double& v : twisted) v *= parity_sign(N);
      worst = std::max(worst, detail::max_abs_diff(detail::sorted(ab.values),
                                                   detail::sorted(q_eigenvalues(N, a, b))));
      worst = std::max(worst, detail::max_abs_diff(detail::sorted(q0.values),
                                                   detail::sorted(twisted)));
    });
  }));

  out.push_back(detail::run_check("orthogonality", [&](double& worst) {
    over_pairs(grid.max_n, [&](long N, double a, double b) {
      worst = std::max({worst, orthogonality_residual(cgc_direct(N, a, b)),
                        orthogonality_residual(cgc_recurrence(N, a, b))});
    });
  }));

  out.push_back(detail::run_check("cross_method_direct_recurrence", [&](double& worst) {
    over_pairs(grid.max_n, [&](long N, double a, double b) {
      worst = std::max(worst, max_abs_diff(cgc_direct(N, a, b).W, cgc_recurrence(N, a, b).W));
    });
  }));

  out.push_back(detail::run_check("affine_match", [&](double& worst) {
    over_pairs(grid.max_n, [&](long N, double a, double b) {
      const auto m = affine_match(N, a, b);
      worst = std::max({worst, m.coefficient_residual, m.polynomial_residual});
      if (N > 0) {
        const int expected_sigma = N % 2 == 0 ? 1 : -1;
        if (m.parity_sign != expected_sigma || std::abs(m.shift) > 1e-12)
          worst = std::numeric_limits<double>::infinity();
      }
    });
  }));

  out.push_back(detail::run_check("christoffel_weights", [&](double& worst) {
    over_pairs(grid.max_n, [&](long N, double a, double b) {
      if (N == 0) return;
      const auto dh = param_map(a, b, N);
      if (dual_hahn_u(N + 1, dh) != 0.0) worst = std::numeric_limits<double>::infinity();
      const auto quad = christoffel_weights(dh);
      double sum = 0.0;
      for (double w : quad.weights) {
        if (!(w > 0.0)) worst = std::numeric_limits<double>::infinity();
        sum += w;
      }
      worst = std::max(worst, std::abs(sum - 1.0));
      // Same weights as W[0][k]^2, ordered by node lambda q_k.
      const auto t = cgc_direct(N, a, b);
      const double lambda = N % 2 == 0 ? 2.0 : -2.0;
      for (long k = 0; k <= N; ++k) {
        const double node = lambda * t.q_values[k];
        const auto it = std::min_element(quad.nodes.begin(), quad.nodes.end(),
                                         [&](double x, double y) {
                                           return std::abs(x - node) < std::abs(y - node);
                                         });
        const auto j = static_cast<std::size_t>(it - quad.nodes.begin());
        worst = std::max({worst, std::abs(*it - node) / (1.0 + std::abs(node)),
                          std::abs(quad.weights[j] - t.W(0, k) * t.W(0, k))});
      }
    });
  }));

  out.push_back(detail::run_check("genfunc_collinearity", [&](double& worst) {
    over_pairs(genfunc_max_n, [&](long N, double a, double b) {
      worst = std::max(worst, compare_genfunc_cgc(N, a, b, cgc_direct(N, a, b)));
    });
  }));

  out.push_back(detail::run_check("genfunc_eigen_relation", [&](double& worst) {
    over_pairs(genfunc_max_n, [&](long N, double a, double b) {
      for (long k = 0; k <= N; ++k)
        worst = std::max(worst, genfunc_eigen_relation(N, k, a, b).residual);
    });
  }));

  out.push_back(detail::run_check("krawtchouk_specialization", [&](double& worst) {
    for (long N = 0; N <= grid.max_n; ++N) {
      worst = std::max(worst, max_abs_diff(cgc_direct(N, 0.0, 0.0).W, krawtchouk_predicted_cgc(N)));
      std::vector<double> expect;
      for (long k = 0; k <= N; ++k) expect.push_back(2.0 * k - N - parity_sign(N) * 0.5);
      worst = std::max(worst, detail::max_abs_diff(detail::sorted(q_eigenvalues(N, 0, 0)),
                                                   detail::sorted(expect)));
    }
  }));

  return out;
}

}  // namespace parabose
