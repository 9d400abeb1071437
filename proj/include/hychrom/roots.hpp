#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hychrom/caps.hpp"
#include "hychrom/chromatic.hpp"
#include "hychrom/errors.hpp"
#include "hychrom/hypergraph.hpp"
#include "hychrom/numeric.hpp"
#include "hychrom/polynomial.hpp"

namespace hychrom {

struct RootSet {
  std::vector<Complex> roots;  // zero roots first, then solver order
  std::vector<Real> residuals;  // |P(z)| / max|coefficient| per root
  int zero_multiplicity = 0;
  Real max_modulus;     // 0 when there are no roots
  Real max_residual;    // max over roots
};

namespace detail {

inline Complex horner(const std::vector<Real>& coeffs, const Complex& z) {
  Complex acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

}  // namespace detail

// Aberth-Ehrlich iteration with a Newton polish. Zero roots are removed
// exactly beforehand, so the deflated polynomial has a nonzero constant
// term. Deterministic: fixed starting circle, no randomness.
inline RootSet find_roots(const IntPolynomial& p, int max_iterations = 400) {
  if (p.is_zero()) throw RootFindingError("zero polynomial has no root set");
  RootSet result;
  result.max_modulus = 0;
  result.max_residual = 0;

  int deg = p.degree();
  int zeros = 0;
  while (zeros < deg && p.coefficient(zeros) == 0) ++zeros;
  result.zero_multiplicity = zeros;
  for (int i = 0; i < zeros; ++i) {
    result.roots.emplace_back(Real(0), Real(0));
    result.residuals.emplace_back(0);  // factored out exactly
  }

  int d = deg - zeros;
  if (d == 0) return result;

  std::vector<Real> coeffs(d + 1);
  Real scale = 0;
  for (int i = 0; i <= d; ++i) {
    coeffs[i] = Real(p.coefficient(i + zeros));
    scale = std::max(scale, abs(coeffs[i]));
  }
  std::vector<Real> dcoeffs(d);
  for (int i = 1; i <= d; ++i) dcoeffs[i - 1] = i * coeffs[i];

  // Start on a circle of the geometric-mean root modulus, angles offset so
  // no start lies on the real axis.
  const Real pi = 4 * atan(Real(1));
  Real radius = pow(abs(coeffs[0]) / abs(coeffs[d]), Real(1) / d);
  if (radius == 0) radius = 1;
  std::vector<Complex> z(d);
  for (int j = 0; j < d; ++j) {
    Real angle = 2 * pi * j / d + Real("0.4");
    z[j] = Complex(radius * cos(angle), radius * sin(angle));
  }

  const Real tol = Real("1e-38") * scale;
  bool converged = false;
  for (int iter = 0; iter < max_iterations && !converged; ++iter) {
    converged = true;
    for (int j = 0; j < d; ++j) {
      Complex pv = detail::horner(coeffs, z[j]);
      if (abs(pv) <= tol) continue;
      converged = false;
      Complex dv = detail::horner(dcoeffs, z[j]);
      if (abs(dv) == 0) {
        z[j] += Complex(Real("1e-3"), Real("1e-3"));
        continue;
      }
      Complex newton = pv / dv;
      Complex repulsion = 0;
      for (int k = 0; k < d; ++k) {
        if (k == j) continue;
        Complex diff = z[j] - z[k];
        if (abs(diff) == 0) diff = Complex(Real("1e-20"), Real(0));
        repulsion += Complex(Real(1), Real(0)) / diff;
      }
      Complex denom = Complex(Real(1), Real(0)) - newton * repulsion;
      if (abs(denom) == 0)
        z[j] -= newton;
      else
        z[j] -= newton / denom;
    }
  }
  if (!converged) throw RootFindingError("root iteration did not converge");

  for (int j = 0; j < d; ++j) {
    for (int step = 0; step < 3; ++step) {
      Complex dv = detail::horner(dcoeffs, z[j]);
      if (abs(dv) == 0) break;
      Complex correction = detail::horner(coeffs, z[j]) / dv;
      if (abs(correction) > Real("1e-6")) break;  // multiple root: keep Aberth value
      z[j] -= correction;
    }
    result.roots.push_back(z[j]);
    result.residuals.push_back(abs(detail::horner(coeffs, z[j])) / scale);
    result.max_modulus = std::max(result.max_modulus, abs(z[j]));
    result.max_residual = std::max(result.max_residual, result.residuals.back());
  }
  return result;
}

// Every root of the chromatic polynomial has modulus at most 8*e*t*D, and
// also at most 7.04*e*t*D by the sharper constant.
struct RootBoundReport {
  int degree = 0;
  RootSet roots;
  Real bound_eight;
  Real bound_c;
  bool within_eight = true;
  bool within_c = true;
};

inline RootBoundReport root_bound_check(const Hypergraph& h,
                                        const Caps& caps = {}) {
  IntPolynomial p = chromatic_polynomial_auto(h, caps);
  RootBoundReport report;
  report.degree = p.degree();
  report.roots = find_roots(p);
  int t = h.uniformity() ? *h.uniformity() : max_edge_size(h);
  Real etd = euler_number() * t * h.max_degree();
  report.bound_eight = 8 * etd;
  report.bound_c = Real("7.04") * etd;
  report.within_eight =
      leq_with_slack(report.roots.max_modulus, report.bound_eight);
  report.within_c = leq_with_slack(report.roots.max_modulus, report.bound_c);
  return report;
}

}  // namespace hychrom
