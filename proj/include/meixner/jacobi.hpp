#ifndef MEIXNER_JACOBI_HPP
#define MEIXNER_JACOBI_HPP

// Jacobi (three-term recurrence) coefficients for the orthogonality measures
// mu and nu, and the moment/norm data derived from them.  The coefficient
// sequences are the measure: every polynomial integral below is computed
// exactly from them.

#include <stdexcept>
#include <string>
#include <vector>

#include "meixner/params.hpp"
#include "meixner/scalar.hpp"

namespace meixner {

// x P_n = P_{n+1} + b_n P_n + a_n P_{n-1}.  b[0..L] and a[1..L] are stored;
// a[0] is a placeholder zero.  a_n = 0 encodes a finitely supported measure.
template <class T>
struct JacobiCoeffs {
  std::vector<T> b;
  std::vector<T> a;

  int length() const { return static_cast<int>(b.size()) - 1; }
};

// Measure mu_{lambda,eta}^{(t)}:
//   classical  b_n = lambda*n,            a_n = n*(t + eta*(n-1))
//   free       b_0 = 0, b_n = lambda,     a_1 = t, a_n = t + eta  (n >= 2)
template <class T>
JacobiCoeffs<T> mu_jacobi(const MeixnerParams& p, int N) {
  if (N < 1) throw std::invalid_argument("mu_jacobi: order must be >= 1");
  const T lambda = scalar_from<T>(p.lambda);
  const T eta = scalar_from<T>(p.eta);
  const T t = scalar_from<T>(p.t);
  JacobiCoeffs<T> J;
  J.b.resize(static_cast<std::size_t>(N) + 1, T(0));
  J.a.resize(static_cast<std::size_t>(N) + 1, T(0));
  for (int n = 0; n <= N; ++n) {
    if (p.framework == Framework::Classical) {
      J.b[static_cast<std::size_t>(n)] = lambda * T(n);
      if (n >= 1) J.a[static_cast<std::size_t>(n)] = T(n) * (t + eta * T(n - 1));
    } else {
      J.b[static_cast<std::size_t>(n)] = n == 0 ? T(0) : lambda;
      if (n == 1) J.a[1] = t;
      if (n >= 2) J.a[static_cast<std::size_t>(n)] = t + eta;
    }
  }
  return J;
}

// Measure nu_{lambda,eta} (the Levy measure data):
//   classical  b_n = lambda*(n+1), a_n = eta*n*(n+1)
//   free       b_n = lambda,       a_n = eta
// For eta = 0, nu = delta_lambda, encoded with b_n = lambda and a_n = 0 so
// consumers can branch on the point mass.
template <class T>
JacobiCoeffs<T> nu_jacobi(const MeixnerParams& p, int N) {
  if (N < 1) throw std::invalid_argument("nu_jacobi: order must be >= 1");
  const T lambda = scalar_from<T>(p.lambda);
  const T eta = scalar_from<T>(p.eta);
  JacobiCoeffs<T> J;
  J.b.resize(static_cast<std::size_t>(N) + 1, T(0));
  J.a.resize(static_cast<std::size_t>(N) + 1, T(0));
  for (int n = 0; n <= N; ++n) {
    if (p.eta == 0) {
      J.b[static_cast<std::size_t>(n)] = lambda;
    } else if (p.framework == Framework::Classical) {
      J.b[static_cast<std::size_t>(n)] = lambda * T(n + 1);
      if (n >= 1) J.a[static_cast<std::size_t>(n)] = eta * T(n) * T(n + 1);
    } else {
      J.b[static_cast<std::size_t>(n)] = lambda;
      if (n >= 1) J.a[static_cast<std::size_t>(n)] = eta;
    }
  }
  return J;
}

// m(n) = top-left entry of the n-th power of the recurrence matrix.  A walk
// of length n returns to level 0 only if it stays below level ceil(n/2), so
// coefficients up to index ceil(N/2) suffice.
template <class T>
std::vector<T> moments(const JacobiCoeffs<T>& J, int N) {
  const int L = J.length();
  if (L < (N + 1) / 2)
    throw std::invalid_argument("moments: jacobi coefficients cover indices up to " +
                                std::to_string(L) + ", need " + std::to_string((N + 1) / 2));
  std::vector<T> m(static_cast<std::size_t>(N) + 1, T(0));
  m[0] = T(1);
  std::vector<T> v(static_cast<std::size_t>(L) + 1, T(0)), w(v);
  v[0] = T(1);
  for (int n = 1; n <= N; ++n) {
    for (int j = 0; j <= L; ++j) {
      T acc = J.b[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
      if (j >= 1) acc += v[static_cast<std::size_t>(j - 1)];
      if (j + 1 <= L) acc += J.a[static_cast<std::size_t>(j + 1)] * v[static_cast<std::size_t>(j + 1)];
      w[static_cast<std::size_t>(j)] = acc;
    }
    v.swap(w);
    m[static_cast<std::size_t>(n)] = v[0];
  }
  return m;
}

// ||P_n||^2 = a_1 * ... * a_n for a monic orthogonal family.
template <class T>
std::vector<T> norms(const JacobiCoeffs<T>& J, int N) {
  if (J.length() < N)
    throw std::invalid_argument("norms: jacobi coefficients too short");
  std::vector<T> r(static_cast<std::size_t>(N) + 1, T(1));
  for (int n = 1; n <= N; ++n) {
    if (J.a[static_cast<std::size_t>(n)] == T(0))
      throw std::domain_error("norms: zero off-diagonal coefficient a_" + std::to_string(n));
    r[static_cast<std::size_t>(n)] = r[static_cast<std::size_t>(n - 1)] * J.a[static_cast<std::size_t>(n)];
  }
  return r;
}

template <class T>
JacobiCoeffs<double> to_double_coeffs(const JacobiCoeffs<T>& J) {
  JacobiCoeffs<double> D;
  D.b.resize(J.b.size());
  D.a.resize(J.a.size());
  for (std::size_t k = 0; k < J.b.size(); ++k) D.b[k] = to_double(J.b[k]);
  for (std::size_t k = 0; k < J.a.size(); ++k) D.a[k] = to_double(J.a[k]);
  return D;
}

}  // namespace meixner

#endif
