#pragma once

// Command dispatch behind the `parabose` executable. Every run_* function
// writes its document to `out`, diagnostics to `err`, and returns the exit
// status:
//
//   0  success
//   1  verification failure (some residual above tolerance)
//   2  usage or parameter-domain error
//   3  internal-consistency error

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "parabose/bargmann.hpp"
#include "parabose/canonical_json.hpp"
#include "parabose/dual_hahn.hpp"
#include "parabose/errors.hpp"
#include "parabose/qdeform.hpp"
#include "parabose/tensor_cgc.hpp"
#include "parabose/verify.hpp"

namespace parabose::cli {

namespace exit_status {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;
}  // namespace exit_status

enum class Command { cgc, verify, qlimit, dualhahn, genfunc };
enum class Method { direct, recurrence, genfunc, all };
enum class Format { json, csv };

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct RunConfig {
  Command command = Command::cgc;
  long N = 1;
  double mu1 = 0.0;
  double mu2 = 0.0;
  Method method = Method::direct;
  Format output_format = Format::json;
  double tolerance = 1e-9;
  std::optional<std::string> output_path;

  // qlimit
  double nu = 1.0;
  std::vector<double> tau_values{1e-1, 1e-2, 1e-3, 1e-4};
  long n_max = 10;

  // verify
  long max_n = 12;

  /// Throws UsageError / DomainError before anything is computed.
  void validate() const {
    if (!(tolerance > 0.0)) throw UsageError("--tolerance must be > 0");
    switch (command) {
      case Command::cgc:
      case Command::dualhahn:
      case Command::genfunc:
        validate_pair(N, mu1, mu2);
        break;
      case Command::verify:
        if (max_n < 0) throw UsageError("--max-n must be >= 0");
        break;
      case Command::qlimit:
        if (tau_values.empty()) throw UsageError("--tau: nothing to scan (empty list)");
        break;
    }
  }
};

/// "1e-1,1e-2" -> {0.1, 0.01}. Empty text gives an empty list.
inline std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline const char* method_name(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::recurrence: return "recurrence";
    case Method::genfunc: return "genfunc";
    case Method::all: return "all";
  }
  return "?";
}

namespace detail {

inline nlohmann::json matrix_rows(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline nlohmann::json table_json(const CGCTable& t, Method m) {
  nlohmann::json j;
  j["method"] = method_name(m);
  j["W"] = matrix_rows(t.W);
  j["q_values"] = t.q_values;
  j["weights"] = t.weights();
  return j;
}

inline CGCTable compute_table(Method m, long N, double mu1, double mu2) {
  switch (m) {
    case Method::recurrence: return cgc_recurrence(N, mu1, mu2);
    case Method::genfunc: return cgc_genfunc(N, mu1, mu2);
    default: return cgc_direct(N, mu1, mu2);
  }
}

inline void emit_json(std::ostream& out, const nlohmann::json& doc) {
  out << dump_canonical(doc) << '\n';
}

inline void emit_table_csv(std::ostream& out, const CGCTable& t) {
  out << 's';
  for (double q : t.q_values) out << ',' << format_real(q);
  out << '\n';
  for (std::size_t s = 0; s < t.W.rows(); ++s) {
    out << s;
    for (std::size_t k = 0; k < t.W.cols(); ++k) out << ',' << format_real(t.W(s, k));
    out << '\n';
  }
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_status::kUsage;
  } catch (const IndexError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_status::kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_status::kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return exit_status::kInternal;
  }
}

}  // namespace detail

/// CGC table(s) for (N, mu1, mu2). With Method::all, every method plus the
/// pairwise max entrywise discrepancies.
inline int run_cgc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    if (cfg.method != Method::all) {
      const auto t = detail::compute_table(cfg.method, cfg.N, cfg.mu1, cfg.mu2);
      if (cfg.output_format == Format::csv) {
        detail::emit_table_csv(out, t);
      } else {
        auto doc = detail::table_json(t, cfg.method);
        doc["N"] = cfg.N;
        doc["mu1"] = cfg.mu1;
        doc["mu2"] = cfg.mu2;
        detail::emit_json(out, doc);
      }
      return exit_status::kOk;
    }

    const auto d = cgc_direct(cfg.N, cfg.mu1, cfg.mu2);
    const auto r = cgc_recurrence(cfg.N, cfg.mu1, cfg.mu2);
    const auto g = cgc_genfunc(cfg.N, cfg.mu1, cfg.mu2);
    nlohmann::json disc;
    disc["direct_vs_recurrence"] = max_abs_diff(d.W, r.W);
    disc["direct_vs_genfunc"] = max_abs_diff(d.W, g.W);
    disc["recurrence_vs_genfunc"] = max_abs_diff(r.W, g.W);
    if (cfg.output_format == Format::csv) {
      detail::emit_table_csv(out, d);
      for (auto it = disc.begin(); it != disc.end(); ++it)
        out << "# " << it.key() << ',' << format_real(it.value().get<double>()) << '\n';
    } else {
      nlohmann::json doc;
      doc["N"] = cfg.N;
      doc["mu1"] = cfg.mu1;
      doc["mu2"] = cfg.mu2;
      doc["method"] = "all";
      doc["tables"] = {detail::table_json(d, Method::direct),
                       detail::table_json(r, Method::recurrence),
                       detail::table_json(g, Method::genfunc)};
      doc["discrepancies"] = disc;
      detail::emit_json(out, doc);
    }
    return exit_status::kOk;
  });
}

inline int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    VerifyGrid grid;
    grid.max_n = cfg.max_n;
    const auto checks = run_verification_suite(grid);
    bool all_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : checks) {
      const bool ok = c.max_residual <= cfg.tolerance;
      all_ok = all_ok && ok;
      if (!ok) {
        err << "check failed: " << c.name << " (max residual " << format_real(c.max_residual)
            << " > tolerance " << format_real(cfg.tolerance) << ")";
        if (!c.note.empty()) err << ": " << c.note;
        err << '\n';
      }
      nlohmann::json row;
      row["name"] = c.name;
      row["max_residual"] = std::isfinite(c.max_residual) ? nlohmann::json(c.max_residual)
                                                          : nlohmann::json(nullptr);
      row["pass"] = ok;
      rows.push_back(std::move(row));
    }
    if (cfg.output_format == Format::csv) {
      out << "check,max_residual,pass\n";
      for (const auto& c : checks)
        out << c.name << ',' << format_real(c.max_residual) << ','
            << (c.max_residual <= cfg.tolerance ? "true" : "false") << '\n';
    } else {
      nlohmann::json doc;
      doc["checks"] = rows;
      doc["max_n"] = cfg.max_n;
      doc["tolerance"] = cfg.tolerance;
      doc["passed"] = all_ok;
      detail::emit_json(out, doc);
    }
    return all_ok ? exit_status::kOk : exit_status::kVerificationFailed;
  });
}

inline int run_qlimit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    const auto res = limit_scan(cfg.nu, cfg.tau_values, cfg.n_max);
    if (cfg.output_format == Format::csv) {
      out << "tau,max_error\n";
      for (std::size_t i = 0; i < res.tau_values.size(); ++i)
        out << format_real(res.tau_values[i]) << ',' << format_real(res.max_errors[i]) << '\n';
      out << "# fitted_slope," << (res.fitted_slope ? format_real(*res.fitted_slope) : "null")
          << '\n';
    } else {
      nlohmann::json doc;
      doc["nu"] = res.nu;
      doc["n_max"] = cfg.n_max;
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < res.tau_values.size(); ++i)
        rows.push_back({{"tau", res.tau_values[i]}, {"max_error", res.max_errors[i]}});
      doc["rows"] = rows;
      doc["fitted_slope"] =
          res.fitted_slope ? nlohmann::json(*res.fitted_slope) : nlohmann::json(nullptr);
      detail::emit_json(out, doc);
    }
    return exit_status::kOk;
  });
}

inline int run_dualhahn(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    if (cfg.N < 1) throw UsageError("dualhahn needs --n >= 1");
    const auto p = param_map(cfg.mu1, cfg.mu2, cfg.N);
    const auto rec = dual_hahn_recurrence(p);
    const auto quad = christoffel_weights(p);
    const auto match = affine_match(cfg.N, cfg.mu1, cfg.mu2);
    if (cfg.output_format == Format::csv) {
      out << "n,b_n,u_n,node,weight\n";
      for (long n = 0; n <= cfg.N; ++n)
        out << n << ',' << format_real(rec.b[n]) << ','
            << format_real(n ? rec.u[n - 1] : 0.0) << ',' << format_real(quad.nodes[n]) << ','
            << format_real(quad.weights[n]) << '\n';
      out << "# alpha," << format_real(p.alpha) << "\n# beta," << format_real(p.beta)
          << "\n# scale," << format_real(match.scale) << "\n# parity_sign,"
          << match.parity_sign << "\n# shift," << format_real(match.shift) << '\n';
    } else {
      nlohmann::json doc;
      doc["N"] = cfg.N;
      doc["mu1"] = cfg.mu1;
      doc["mu2"] = cfg.mu2;
      doc["alpha"] = p.alpha;
      doc["beta"] = p.beta;
      doc["xi"] = p.xi();
      doc["eta"] = p.eta();
      doc["zeta"] = p.zeta();
      doc["b"] = rec.b;
      doc["u"] = rec.u;
      doc["nodes"] = quad.nodes;
      doc["weights"] = quad.weights;
      doc["affine_match"] = {{"scale", match.scale},
                             {"shift", match.shift},
                             {"parity_sign", match.parity_sign},
                             {"coefficient_residual", match.coefficient_residual},
                             {"polynomial_residual", match.polynomial_residual}};
      detail::emit_json(out, doc);
    }
    return exit_status::kOk;
  });
}

inline int run_genfunc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    const auto table = cgc_direct(cfg.N, cfg.mu1, cfg.mu2);
    const double defect = compare_genfunc_cgc(cfg.N, cfg.mu1, cfg.mu2, table);
    std::vector<GenFunction> gens;
    std::vector<EigenRelation> rels;
    for (long k = 0; k <= cfg.N; ++k) {
      gens.push_back(phi_series(cfg.N, k, cfg.mu1, cfg.mu2));
      rels.push_back(genfunc_eigen_relation(cfg.N, k, cfg.mu1, cfg.mu2));
    }
    if (cfg.output_format == Format::csv) {
      out << 'k';
      for (long s = 0; s <= cfg.N; ++s) out << ",z^" << s;
      out << ",L_eigenvalue,residual\n";
      for (long k = 0; k <= cfg.N; ++k) {
        out << k;
        for (double c : gens[k].phi.coeffs) out << ',' << format_real(c);
        out << ',' << format_real(rels[k].rayleigh) << ',' << format_real(rels[k].residual)
            << '\n';
      }
      out << "# collinearity_defect," << format_real(defect) << '\n';
    } else {
      nlohmann::json doc;
      doc["N"] = cfg.N;
      doc["mu1"] = cfg.mu1;
      doc["mu2"] = cfg.mu2;
      doc["collinearity_defect"] = defect;
      nlohmann::json rows = nlohmann::json::array();
      for (long k = 0; k <= cfg.N; ++k)
        rows.push_back({{"k", k},
                        {"phi", gens[k].phi.coeffs},
                        {"q_k", q_eigenvalue(cfg.N, k, cfg.mu1, cfg.mu2)},
                        {"L_eigenvalue", rels[k].rayleigh},
                        {"parity_twisted", rels[k].parity_twisted},
                        {"eigen_residual", rels[k].residual}});
      doc["generating_functions"] = rows;
      detail::emit_json(out, doc);
    }
    return exit_status::kOk;
  });
}

/// Dispatches on cfg.command; honours cfg.output_path.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = exit_status::kUsage;
  switch (cfg.command) {
    case Command::cgc: status = run_cgc(cfg, buffer, err); break;
    case Command::verify: status = run_verify(cfg, buffer, err); break;
    case Command::qlimit: status = run_qlimit(cfg, buffer, err); break;
    case Command::dualhahn: status = run_dualhahn(cfg, buffer, err); break;
    case Command::genfunc: status = run_genfunc(cfg, buffer, err); break;
  }
  if (cfg.output_path) {
    std::ofstream f(*cfg.output_path);
    if (!f) {
      err << "cannot open output file: " << *cfg.output_path << '\n';
      return exit_status::kUsage;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

}  // namespace parabose::cli
