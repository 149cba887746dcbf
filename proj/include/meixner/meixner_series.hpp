#ifndef MEIXNER_MEIXNER_SERIES_HPP
#define MEIXNER_MEIXNER_SERIES_HPP

// The analytic objects of the Meixner classes as truncated series: Psi and
// its compositional inverse, the cumulant transform C, generating functions,
// and the multiplier symbol of the free raising operator.

#include <stdexcept>
#include <utility>

#include "meixner/jacobi.hpp"
#include "meixner/params.hpp"
#include "meixner/poly.hpp"
#include "meixner/series.hpp"

namespace meixner {

namespace detail {

// 1 + lambda*z + eta*z^2 at the requested order.
template <class T>
TruncatedSeries<T> quadratic_unit(const T& lambda, const T& eta, int N) {
  TruncatedSeries<T> q(N);
  q[0] = T(1);
  if (N >= 1) q[1] = lambda;
  if (N >= 2) q[2] = eta;
  return q;
}

// (e^{c z} - 1) / c, with the c = 0 limit equal to z.
template <class T>
TruncatedSeries<T> exp_increment(const T& c, int N) {
  TruncatedSeries<T> g(N);
  if (N >= 1) g[1] = T(1);
  for (int k = 2; k <= N; ++k) g[k] = div_int(g[k - 1] * c, k);
  return g;
}

}  // namespace detail

// Free Psi_{lambda,eta}(z) = z / (1 + lambda*z + eta*z^2).
template <class T>
TruncatedSeries<T> psi_free(const T& lambda, const T& eta, int N) {
  return detail::quadratic_unit(lambda, eta, N).recip().shift_up(1).truncated(N);
}

inline TruncatedSeries<Rat> psi_free(const MeixnerParams& p, int N) {
  return psi_free<Rat>(p.lambda, p.eta, N);
}

// Free C_{lambda,eta}(Psi_{lambda,eta}(z)) = z^2 / (1 + lambda*z + eta*z^2).
template <class T>
TruncatedSeries<T> c_compose_psi_free(const T& lambda, const T& eta, int N) {
  return detail::quadratic_unit(lambda, eta, N).recip().shift_up(2).truncated(N);
}

// Cumulant transform C^{(t)} = t * C, built from the moments of nu:
//   classical  [z^n] C = m_nu(n-2) / n!
//   free       [z^n] C = m_nu(n-2)
template <class T>
TruncatedSeries<T> cumulant_series(const MeixnerParams& p, int N) {
  if (N < 2) throw std::invalid_argument("cumulant_series: order must be >= 2");
  const auto nu = nu_jacobi<T>(p, N / 2 + 1);
  const auto m = moments(nu, N - 2);
  const T t = scalar_from<T>(p.t);
  TruncatedSeries<T> c(N);
  for (int n = 2; n <= N; ++n) {
    T v = m[static_cast<std::size_t>(n - 2)] * t;
    if (p.framework == Framework::Classical) v = v / scalar_from<T>(factorial(n));
    c[n] = v;
  }
  return c;
}

// Psi^{-1}: classical C', free comp_inverse(Psi).  Both are exact rational
// series for rational parameters; t plays no role.
template <class T>
TruncatedSeries<T> psi_inv(const MeixnerParams& p, int N) {
  if (N < 1) throw std::invalid_argument("psi_inv: order must be >= 1");
  if (p.framework == Framework::Classical) {
    MeixnerParams q = p;
    q.t = 1;
    return cumulant_series<T>(q, N + 1).derivative();
  }
  return psi_free<T>(scalar_from<T>(p.lambda), scalar_from<T>(p.eta), N).comp_inverse();
}

// Free closed form (1 - lambda*z - sqrt((1 - lambda*z)^2 - 4*eta*z^2)) / (2*eta*z),
// reducing to z / (1 - lambda*z) when eta = 0.
template <class T>
TruncatedSeries<T> psi_inv_closed_free(const T& lambda, const T& eta, int N) {
  if (eta == T(0)) {
    TruncatedSeries<T> den(N);
    den[0] = T(1);
    if (N >= 1) den[1] = -lambda;
    return den.recip().shift_up(1).truncated(N);
  }
  TruncatedSeries<T> under(N + 1);
  under[0] = T(1);
  under[1] = lambda * T(-2);
  if (N + 1 >= 2) under[2] = lambda * lambda - T(4) * eta;
  TruncatedSeries<T> num = TruncatedSeries<T>::constant(T(1), N + 1) - under.sqrt_unit();
  num[1] -= lambda;  // 1 - lambda*z - sqrt(...)
  return (num.shift_down(1) * (T(1) / (T(2) * eta))).truncated(N);
}

// Classical closed form in terms of the roots alpha, beta:
//   Psi^{-1}(z) = g / (1 + alpha*g),  g = (e^{z(alpha-beta)} - 1)/(alpha-beta).
template <class T>
TruncatedSeries<T> psi_inv_exp_classical(const T& alpha, const T& beta, int N) {
  const auto g = detail::exp_increment<T>(alpha - beta, N);
  return g / (TruncatedSeries<T>::constant(T(1), N) + alpha * g);
}

// The classical Psi has no closed form here; the compositional inverse of
// C' is definitive.
template <class T>
TruncatedSeries<T> classical_psi(const MeixnerParams& p, int N) {
  return psi_inv<T>(p, N).comp_inverse();
}

// z-expansion of the closed-form generating function at a fixed point x0.
// Coefficient n is P_n(x0)/n! classically and P_n(x0) in the free case.
template <class T>
TruncatedSeries<T> generating_function(const MeixnerParams& p, const T& x0, int N) {
  const T t = scalar_from<T>(p.t);
  if (p.framework == Framework::Free) {
    const T lambda = scalar_from<T>(p.lambda), eta = scalar_from<T>(p.eta);
    const auto one = TruncatedSeries<T>::constant(T(1), N);
    const auto den = one - x0 * psi_free<T>(lambda, eta, N) + t * c_compose_psi_free<T>(lambda, eta, N);
    return den.recip();
  }
  MeixnerParams base = p;
  base.t = 1;
  const auto psi = classical_psi<T>(base, N);
  const auto c_of_psi = cumulant_series<T>(base, N).compose(psi);
  return (x0 * psi - t * c_of_psi).exp_series();
}

// Multiplier symbol (A, B) of the free raising operator:
//   raise (1-xz)^{-1} = (x*A(z) + B(z)) (1-xz)^{-1},
//   A = Psi_{l,e}(w)/w,  B = -Psi_{l,e}(w),  w = Psi^{-1}_{l,e+1}(z).
// Computed both by series composition and by the square-root closed forms;
// disagreement beyond tolerance is a hard error.
template <class T>
struct RaisingSymbol {
  TruncatedSeries<T> a;
  TruncatedSeries<T> b;
};

template <class T>
RaisingSymbol<T> free_raising_symbol(const T& lambda, const T& eta, int N, double tol = 1e-12) {
  // composition route
  const auto w = psi_free<T>(lambda, eta + T(1), N + 1).comp_inverse();
  const auto psi_of_w = psi_free<T>(lambda, eta, N + 1).compose(w);
  const auto a1 = (psi_of_w.shift_down(1) / w.shift_down(1)).truncated(N);
  const auto b1 = -psi_of_w.truncated(N);

  // closed square-root route
  TruncatedSeries<T> under(N + 2);
  under[0] = T(1);
  under[1] = lambda * T(-2);
  under[2] = lambda * lambda - T(4) * (eta + T(1));
  const auto root = under.sqrt_unit();
  TruncatedSeries<T> den(N + 2);  // 2*eta + 1 + lambda*z + sqrt(...)
  den[0] = T(2) * eta + T(1);
  den[1] = lambda;
  den = den + root;
  TruncatedSeries<T> num(N + 2);  // (1 - lambda*z - sqrt(...)) / z^2
  num[0] = T(1);
  num[1] = -lambda;
  num = (num - root).shift_down(2);
  const T c = T(4) * (eta + T(1)) * (eta + T(1));
  const auto a2 = ((den * num).recip() * c).truncated(N);
  const auto b2 = (den.recip().shift_up(1) * (T(-2) * (eta + T(1)))).truncated(N);

  if constexpr (is_exact_scalar_v<T>) {
    if (!(a1 == a2) || !(b1 == b2))
      throw std::runtime_error("free_raising_symbol: composition and closed-form routes disagree");
  } else {
    if (max_coeff_distance(a1, a2) > tol || max_coeff_distance(b1, b2) > tol)
      throw std::runtime_error("free_raising_symbol: composition and closed-form routes disagree");
  }
  return RaisingSymbol<T>{a1, b1};
}

}  // namespace meixner

#endif
