#ifndef MEIXNER_OPERATORS_HPP
#define MEIXNER_OPERATORS_HPP

// Lowering and raising operators in every representation: basis matrices,
// jump/divided-difference integrals against nu, derivative-series symbols,
// difference-operator closed forms, and the cross-representation checks.
// All operator families are the t = 1 ones.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "meixner/meixner_series.hpp"
#include "meixner/ops_basis.hpp"
#include "meixner/params.hpp"

namespace meixner {

// Dense matrix, column j = image of the j-th basis vector.
template <class T>
class Mat {
 public:
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        if (x.at(i, k) == T(0)) continue;
        for (int j = 0; j < y.cols_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("matrix sum: shape mismatch");
    Mat r = x;
    for (std::size_t k = 0; k < r.d_.size(); ++k) r.d_[k] += y.d_[k];
    return r;
  }
  friend Mat operator*(Mat x, const T& s) {
    for (auto& v : x.d_) v = v * s;
    return x;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.d_ == y.d_;
  }

  Mat padded_rows(int rows) const {
    Mat r(rows, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<T> d_;
};

// lower P_n = w(n) P_{n-1} with w(n) = n classically and [n]_0 freely.
template <class T>
Mat<T> lowering_matrix(Framework fw, int N) {
  Mat<T> m(N + 1, N + 1);
  for (int n = 1; n <= N; ++n) m.at(n - 1, n) = T(lowering_weight(fw, n));
  return m;
}

// raise P_n = P_{n+1}; codomain extended by one degree.
template <class T>
Mat<T> raising_matrix(int N) {
  Mat<T> m(N + 2, N + 1);
  for (int n = 0; n <= N; ++n) m.at(n + 1, n) = T(1);
  return m;
}

// Multiplication by x on P_0..P_N (t = 1), codomain P_0..P_{N+1}.
template <class T>
Mat<T> multiplication_matrix(const MeixnerParams& p, int N) {
  MeixnerParams q = p;
  q.t = 1;
  const auto J = mu_jacobi<T>(q, N);
  Mat<T> m(N + 2, N + 1);
  for (int n = 0; n <= N; ++n) {
    m.at(n + 1, n) = T(1);
    m.at(n, n) = J.b[static_cast<std::size_t>(n)];
    if (n >= 1) m.at(n - 1, n) = J.a[static_cast<std::size_t>(n)];
  }
  return m;
}

namespace detail {

template <class T>
std::vector<T> nu_moments(const MeixnerParams& p, const Rat& eta, int upto) {
  MeixnerParams q = p;
  q.eta = eta;
  if (upto < 0) return {T(1)};
  const auto nu = nu_jacobi<T>(q, upto / 2 + 1);
  return moments(nu, upto);
}

}  // namespace detail

// Integral representation of the lowering operator:
//   classical  (Lf)(x) = int (f(x+s) - f(x))/s nu_{l,e}(ds)
//   free       (Lf)(x) = int (f(x) - f(s))/(x-s) nu_{l,e+1}(ds)
// realized exactly by expanding the kernel in powers of s and contracting
// against the moments of nu.  The classical Gaussian case degenerates to the
// derivative (nu = delta_0 in the limiting sense).
template <class T>
Poly<T> lowering_integral_apply(const MeixnerParams& p, const Poly<T>& f) {
  const int d = f.degree();
  if (d < 1) return Poly<T>();
  if (p.framework == Framework::Classical) {
    if (p.lambda == 0 && p.eta == 0) return derivative(f);
    const auto m = detail::nu_moments<T>(p, p.eta, d - 1);
    Poly<T> result;
    Poly<T> taylor = f;  // D^k f / k! after k steps
    for (int k = 1; k <= d; ++k) {
      taylor = derivative(taylor) * (T(1) / T(k));
      result += m[static_cast<std::size_t>(k - 1)] * taylor;
    }
    return result;
  }
  const auto m = detail::nu_moments<T>(p, p.eta + 1, d - 1);
  Poly<T> result;
  for (int k = 0; k <= d - 1; ++k) {
    // coefficient of s^k in (f(x) - f(s))/(x - s)
    std::vector<T> kernel(static_cast<std::size_t>(d - k), T(0));
    for (int j = k + 1; j <= d; ++j) kernel[static_cast<std::size_t>(j - 1 - k)] = f.coeff(j);
    result += m[static_cast<std::size_t>(k)] * Poly<T>(std::move(kernel));
  }
  return result;
}

// Moment form on monomials: lower x^n = sum_k binom(n,k) m(n-1-k) x^k
// classically (binomial replaced by 1 in the free case, with eta shifted).
template <class T>
Poly<T> lowering_moment_formula(const MeixnerParams& p, int n) {
  if (n < 1) throw std::invalid_argument("lowering_moment_formula: n must be >= 1");
  const bool classical = p.framework == Framework::Classical;
  const auto m = detail::nu_moments<T>(p, classical ? p.eta : p.eta + 1, n - 1);
  std::vector<T> c(static_cast<std::size_t>(n), T(0));
  for (int k = 0; k <= n - 1; ++k) {
    T coeff = m[static_cast<std::size_t>(n - 1 - k)];
    if (classical) coeff *= scalar_from<T>(Rat(binomial_int(n, k)));
    c[static_cast<std::size_t>(k)] = coeff;
  }
  return Poly<T>(std::move(c));
}

// Symbol form: classical Psi^{-1}_{l,e}(D), free Psi^{-1}_{l,e+1}(D_free).
// The operator series terminates because D and D_free are nilpotent on
// polynomials.
template <class T>
Poly<T> lowering_symbol_apply(const MeixnerParams& p, const Poly<T>& f) {
  const int d = f.degree();
  if (d < 1) return Poly<T>();
  MeixnerParams q = p;
  if (p.framework == Framework::Free) q.eta = p.eta + 1;
  const auto symbol = psi_inv<T>(q, d);
  Poly<T> result;
  Poly<T> g = f;
  for (int k = 1; k <= d; ++k) {
    g = p.framework == Framework::Classical ? derivative(g) : free_derivative(g);
    result += symbol[k] * g;
  }
  return result;
}

namespace detail {

// shared difference-operator pieces of the classical raising formulas
template <class T>
Poly<T> grad(const Poly<T>& f, const T& s) {  // (f(x+s) - f(x))/s
  return (shift(f, s) - f) * (T(1) / s);
}

}  // namespace detail

// Classical raising operator via the four-regime difference representation.
// The printed regime formulas in the source derivation carry two sign slips;
// the forms below are the ones consistent with raise P_n = P_{n+1} (see the
// regression tests, which pin every regime against the recurrence).
//   gaussian        x - D
//   poisson         x U_{-l} - grad_{-l}
//   gamma (a = b)   x (1 + a D)^2 - (1 + a D) D
//   general         x (1 + a grad_s)^2 U_{-s} - (1 + a grad_s) grad_s U_{-s},  s = a - b
template <class T>
Poly<T> raising_difference_apply(const MeixnerParams& p, const T& alpha, const T& beta,
                                 const Poly<T>& f) {
  if (p.framework != Framework::Classical)
    throw std::invalid_argument("raising_difference_apply: classical framework only");
  const Poly<T> x = Poly<T>::x();
  const MeixnerCase regime = classify(p.lambda, p.eta);
  if (regime == MeixnerCase::Gaussian) return x * f - derivative(f);
  if (regime == MeixnerCase::Poisson) {
    // alpha = -lambda, so U_{-lambda} = U_alpha and grad_{-lambda} = grad_alpha
    const Poly<T> u = shift(f, alpha);
    return x * u - detail::grad(f, alpha);
  }
  if (regime == MeixnerCase::Gamma) {
    auto one_plus_aD = [&](const Poly<T>& g) { return g + alpha * derivative(g); };
    return x * one_plus_aD(one_plus_aD(f)) - one_plus_aD(derivative(f));
  }
  const T s = alpha - beta;
  auto one_plus_agrad = [&](const Poly<T>& g) { return g + alpha * detail::grad(g, s); };
  const Poly<T> g0 = shift(f, -s);
  return x * one_plus_agrad(one_plus_agrad(g0)) - one_plus_agrad(detail::grad(g0, s));
}

// Rational path; available whenever 1 + lambda*x + eta*x^2 splits over Q.
inline std::optional<Poly<Rat>> raising_difference_apply_exact(const MeixnerParams& p,
                                                               const Poly<Rat>& f) {
  const auto ab = alpha_beta_exact(p.lambda, p.eta);
  if (!ab) return std::nullopt;
  return raising_difference_apply<Rat>(p, ab->alpha, ab->beta, f);
}

// Complex path for conjugate roots, in quad precision so the imaginary
// residue gate has headroom; residue beyond the tolerance is an error,
// otherwise it is discarded.
inline Poly<double> raising_difference_apply_complex(const MeixnerParams& p, const Poly<Rat>& f,
                                                     double imag_tol = 1e-10) {
  const auto [alpha, beta] = alpha_beta_hp(p.lambda, p.eta);
  const Poly<CplxHP> r =
      raising_difference_apply<CplxHP>(p, alpha, beta, convert_poly<CplxHP>(f));
  std::vector<double> c(static_cast<std::size_t>(r.degree()) + 1, 0.0);
  for (int k = 0; k <= r.degree(); ++k) {
    const double resid = abs(r.coeff(k).imag()).template convert_to<double>();
    if (resid > imag_tol)
      throw std::runtime_error("raising_difference_apply: residual imaginary part " +
                               format_double(resid) + " at degree " + std::to_string(k));
    c[static_cast<std::size_t>(k)] = r.coeff(k).real().template convert_to<double>();
  }
  return Poly<double>(std::move(c));
}

struct CheckReport {
  bool pass = true;
  bool exact = true;    // false when any comparison went through floats
  double max_err = 0;   // largest float deviation observed
  std::string detail;   // first failing identity

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

namespace detail {

// raise f via basis conversion: coefficients shift up one index.  f must
// have degree below the basis top so the shifted image stays inside it.
template <class T>
Poly<T> raise_in_basis(const Poly<T>& f, const OpsBasis<T>& basis) {
  auto c = to_ops_coeffs(f, basis);
  while (!c.empty() && c.back() == T(0)) c.pop_back();
  if (static_cast<int>(c.size()) > basis.max_degree())
    throw std::invalid_argument("raise_in_basis: degree too high for basis");
  c.insert(c.begin(), T(0));
  return from_ops_coeffs(c, basis);
}

}  // namespace detail

// Free raising theorem as a resolvent identity: compares, order by order in
// z, sum_n z^n raise(x^n) with the Cauchy product (x A(z) + B(z)) sum_n z^n x^n.
inline CheckReport free_raising_resolvent_check(const Rat& lambda, const Rat& eta, int N) {
  if (N < 2) throw std::invalid_argument("free_raising_resolvent_check: order must be >= 2");
  CheckReport report;
  MeixnerParams p(Framework::Free, lambda, eta, 1);
  const auto basis = ops_from_jacobi(mu_jacobi<Rat>(p, N + 1), N + 1);
  RaisingSymbol<Rat> symbol{TruncatedSeries<Rat>(N), TruncatedSeries<Rat>(N)};
  try {
    symbol = free_raising_symbol<Rat>(p.lambda, p.eta, N);
  } catch (const std::runtime_error& e) {
    report.fail(e.what());
    return report;
  }
  for (int n = 0; n <= N - 1; ++n) {
    const Poly<Rat> lhs = detail::raise_in_basis(Poly<Rat>::monomial(n), basis);
    Poly<Rat> rhs;
    for (int i = 0; i <= n; ++i) {
      rhs += symbol.a[i] * Poly<Rat>::monomial(n - i + 1);
      rhs += symbol.b[i] * Poly<Rat>::monomial(n - i);
    }
    if (lhs != rhs) {
      report.fail("resolvent identity fails at z-order " + std::to_string(n));
      return report;
    }
  }
  return report;
}

// Classical raising theorem on e^{xz}, verified as a formal series identity
// with polynomial coefficients: sum_n z^n/n! raise(x^n) against the bracket
// (x A(z) + B(z)) e^{xz}, A = 1/W, B = -Psi^{-1}/W, W = 1 + l Psi^{-1} + e (Psi^{-1})^2.
// Also checks the bracket against its alpha/beta exponential form.
inline CheckReport classical_raising_exponential_check(const Rat& lambda, const Rat& eta, int N,
                                                       double tol = 1e-12) {
  if (N < 2) throw std::invalid_argument("classical_raising_exponential_check: order must be >= 2");
  CheckReport report;
  MeixnerParams p(Framework::Classical, lambda, eta, 1);
  const auto basis = ops_from_jacobi(mu_jacobi<Rat>(p, N + 1), N + 1);
  const auto pinv = psi_inv<Rat>(p, N);
  const auto one = TruncatedSeries<Rat>::constant(Rat(1), N);
  const auto w = one + scalar_from<Rat>(p.lambda) * pinv + scalar_from<Rat>(p.eta) * (pinv * pinv);
  const auto a = w.recip();
  const auto b = -(pinv * a);

  for (int n = 0; n <= N - 1; ++n) {
    // n! * [z^n] of both sides
    const Poly<Rat> lhs = detail::raise_in_basis(Poly<Rat>::monomial(n), basis);
    Poly<Rat> rhs;
    for (int i = 0; i <= n; ++i) {
      const Rat scale = factorial(n) / factorial(n - i);
      rhs += (scale * a[i]) * Poly<Rat>::monomial(n - i + 1);
      rhs += (scale * b[i]) * Poly<Rat>::monomial(n - i);
    }
    if (lhs != rhs) {
      report.fail("exponential identity fails at z-order " + std::to_string(n));
      return report;
    }
  }

  // bracket vs the alpha/beta exponential form
  if (const auto ab = alpha_beta_exact(p.lambda, p.eta)) {
    const auto g = ab->alpha == ab->beta
                       ? TruncatedSeries<Rat>::z(N)
                       : detail::exp_increment<Rat>(ab->alpha - ab->beta, N);
    TruncatedSeries<Rat> neg(N);
    if (N >= 1) neg[1] = ab->beta - ab->alpha;
    const auto damp = neg.exp_series();  // e^{-z(alpha-beta)}
    const auto t_factor = one + ab->alpha * g;
    if (!(damp * t_factor * t_factor == a) || !(damp * t_factor * g == pinv * a))
      report.fail("alpha/beta exponential form disagrees with the Psi^{-1} form");
  } else {
    const auto [alpha, beta] = alpha_beta_hp(p.lambda, p.eta);
    const auto gf = detail::exp_increment<CplxHP>(alpha - beta, N);
    TruncatedSeries<CplxHP> neg(N);
    neg[1] = beta - alpha;
    const auto damp = neg.exp_series();
    const auto onec = TruncatedSeries<CplxHP>::constant(CplxHP(1), N);
    const auto t_factor = onec + alpha * gf;
    const auto ac = convert_series<CplxHP>(a);
    const auto pc = convert_series<CplxHP>(pinv);
    const double err = std::max(max_coeff_distance(damp * t_factor * t_factor, ac),
                                max_coeff_distance(damp * t_factor * gf, pc * ac));
    report.exact = false;
    report.max_err = std::max(report.max_err, err);
    if (err > tol)
      report.fail("alpha/beta exponential form deviates by " + format_double(err));
  }
  return report;
}

// x = raise (1 + lambda lower + eta lower^2) + lower, as an exact
// (N+2) x (N+1) matrix identity at t = 1.
inline CheckReport multiplication_decomposition_check(const MeixnerParams& p, int N) {
  if (N < 3) throw std::invalid_argument("multiplication_decomposition_check: order must be >= 3");
  CheckReport report;
  const auto lower = lowering_matrix<Rat>(p.framework, N);
  const auto raise = raising_matrix<Rat>(N);
  const auto lambda = scalar_from<Rat>(p.lambda);
  const auto eta = scalar_from<Rat>(p.eta);
  const auto inner = Mat<Rat>::identity(N + 1) + lower * lambda + (lower * lower) * eta;
  const auto rhs = raise * inner + lower.padded_rows(N + 2);
  const auto lhs = multiplication_matrix<Rat>(p, N);
  if (!(lhs == rhs)) {
    for (int j = 0; j <= N; ++j)
      for (int i = 0; i <= N + 1; ++i)
        if (!(lhs.at(i, j) == rhs.at(i, j))) {
          std::ostringstream os;
          os << "decomposition mismatch at entry (" << i << "," << j << "): "
             << to_string(lhs.at(i, j)) << " vs " << to_string(rhs.at(i, j));
          report.fail(os.str());
          return report;
        }
  }
  return report;
}

}  // namespace meixner

#endif
