#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace parabose {

/// Univariate polynomial in the monomial basis; coeffs[n] multiplies z^n.
/// Storage is explicit: degree() is the last stored index, even if that
/// coefficient is zero. Always holds at least one coefficient.
struct PolyCoeffs {
  std::vector<double> coeffs{0.0};

  PolyCoeffs() = default;
  explicit PolyCoeffs(std::vector<double> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0.0);
  }
  PolyCoeffs(std::initializer_list<double> c) : coeffs(c) {
    if (coeffs.empty()) coeffs.push_back(0.0);
  }

  static PolyCoeffs monomial(std::size_t n, double c = 1.0) {
    std::vector<double> v(n + 1, 0.0);
    v[n] = c;
    return PolyCoeffs(std::move(v));
  }

  std::size_t degree() const { return coeffs.size() - 1; }
  double operator[](std::size_t n) const {
    return n < coeffs.size() ? coeffs[n] : 0.0;
  }

  double eval(double z) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
  }

  PolyCoeffs& operator+=(const PolyCoeffs& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0.0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  PolyCoeffs& operator-=(const PolyCoeffs& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0.0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  PolyCoeffs& operator*=(double s) {
    for (double& c : coeffs) c *= s;
    return *this;
  }

  friend PolyCoeffs operator+(PolyCoeffs a, const PolyCoeffs& b) { return a += b; }
  friend PolyCoeffs operator-(PolyCoeffs a, const PolyCoeffs& b) { return a -= b; }
  friend PolyCoeffs operator*(PolyCoeffs a, double s) { return a *= s; }
  friend PolyCoeffs operator*(double s, PolyCoeffs a) { return a *= s; }

  friend PolyCoeffs operator*(const PolyCoeffs& a, const PolyCoeffs& b) {
    std::vector<double> c(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        c[i + j] += a.coeffs[i] * b.coeffs[j];
    return PolyCoeffs(std::move(c));
  }

  /// Max coefficient difference, treating missing entries as zero.
  friend double max_abs_diff(const PolyCoeffs& a, const PolyCoeffs& b) {
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
  }
};

}  // namespace parabose
