#ifndef MEIXNER_QUADRATURE_HPP
#define MEIXNER_QUADRATURE_HPP

// Gauss quadrature from Jacobi coefficients (Golub-Welsch eigenvalues,
// Newton-polished against the monic recurrence, weights from the Christoffel
// sum).  Float-level machinery only; exact integrals go through moments().

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "meixner/jacobi.hpp"

namespace meixner {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive, summing to 1
};

namespace detail {

// Value of the monic P_m and its derivative at x.
inline std::pair<double, double> monic_value(const JacobiCoeffs<double>& J, int m, double x) {
  double p0 = 1.0, p1 = x - J.b[0];
  double d0 = 0.0, d1 = 1.0;
  for (int n = 1; n < m; ++n) {
    const double p2 = (x - J.b[static_cast<std::size_t>(n)]) * p1 - J.a[static_cast<std::size_t>(n)] * p0;
    const double d2 = p1 + (x - J.b[static_cast<std::size_t>(n)]) * d1 - J.a[static_cast<std::size_t>(n)] * d0;
    p0 = p1; p1 = p2;
    d0 = d1; d1 = d2;
  }
  return {p1, d1};
}

// 1 / sum_k p_k(x)^2 over the orthonormal family of degree < m.
inline double christoffel_weight(const JacobiCoeffs<double>& J, int m, double x) {
  double q0 = 1.0;  // orthonormal p_0 (total mass 1)
  double sum = q0 * q0;
  double q1 = (x - J.b[0]) / std::sqrt(J.a[1]);
  if (m > 1) sum += q1 * q1;
  for (int n = 1; n + 1 < m; ++n) {
    const double q2 = ((x - J.b[static_cast<std::size_t>(n)]) * q1 -
                       std::sqrt(J.a[static_cast<std::size_t>(n)]) * q0) /
                      std::sqrt(J.a[static_cast<std::size_t>(n + 1)]);
    q0 = q1; q1 = q2;
    sum += q1 * q1;
  }
  return 1.0 / sum;
}

}  // namespace detail

inline QuadratureRule gauss_quadrature(const JacobiCoeffs<double>& J, int m) {
  if (m < 1) throw std::invalid_argument("gauss_quadrature: need at least one node");
  if (J.length() >= 1 && J.a[1] == 0.0) {
    // point mass delta_{b_0}
    return QuadratureRule{{J.b[0]}, {1.0}};
  }
  if (m == 1) return QuadratureRule{{J.b[0]}, {1.0}};
  if (J.length() < m - 1)
    throw std::invalid_argument("gauss_quadrature: jacobi coefficients too short");
  for (int k = 1; k < m; ++k)
    if (!(J.a[static_cast<std::size_t>(k)] > 0.0))
      throw std::domain_error("gauss_quadrature: off-diagonal a_" + std::to_string(k) +
                              " is not positive");

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    T(i, i) = J.b[static_cast<std::size_t>(i)];
    if (i > 0) {
      const double off = std::sqrt(J.a[static_cast<std::size_t>(i)]);
      T(i, i - 1) = off;
      T(i - 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(T, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("gauss_quadrature: eigenvalue iteration failed");

  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const auto [value, slope] = detail::monic_value(J, m, x);
      if (slope == 0.0) break;
      const double step = value / slope;
      if (!std::isfinite(step)) break;
      x -= step;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = detail::christoffel_weight(J, m, x);
  }
  for (int i = 1; i < m; ++i)
    if (!(rule.nodes[static_cast<std::size_t>(i - 1)] < rule.nodes[static_cast<std::size_t>(i)]))
      throw std::runtime_error("gauss_quadrature: nodes failed to separate");
  return rule;
}

// Empirical spectral support: extreme nodes of the m-point rule.  Reported
// as observed; no closed-form radius is assumed.
inline std::pair<double, double> support_estimate(const JacobiCoeffs<double>& J, int m) {
  const auto rule = gauss_quadrature(J, m);
  return {rule.nodes.front(), rule.nodes.back()};
}

}  // namespace meixner

#endif
