#ifndef MEIXNER_SERIES_HPP
#define MEIXNER_SERIES_HPP

// Formal power series truncated at a fixed order.  Binary operations
// truncate to the smaller order; every result is exact modulo z^{order+1}.

#include <stdexcept>
#include <string>
#include <vector>

#include "meixner/scalar.hpp"

namespace meixner {

template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries() : c_(1, T(0)) {}
  explicit TruncatedSeries(int order) : c_(check_order(order), T(0)) {}
  TruncatedSeries(int order, std::vector<T> coeffs) : c_(std::move(coeffs)) {
    c_.resize(check_order(order), T(0));
  }

  static TruncatedSeries constant(const T& v, int order) {
    TruncatedSeries s(order);
    s.c_[0] = v;
    return s;
  }
  static TruncatedSeries z(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = T(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

  TruncatedSeries truncated(int M) const {
    if (M > order()) throw std::invalid_argument("truncated: cannot extend order");
    return TruncatedSeries(M, std::vector<T>(c_.begin(), c_.begin() + M + 1));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
    const int N = std::min(x.order(), y.order());
    TruncatedSeries r(N);
    for (int k = 0; k <= N; ++k) r[k] = x[k] + y[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
    const int N = std::min(x.order(), y.order());
    TruncatedSeries r(N);
    for (int k = 0; k <= N; ++k) r[k] = x[k] - y[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& x) { return x * T(-1); }
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    const int N = std::min(x.order(), y.order());
    TruncatedSeries r(N);
    for (int i = 0; i <= N; ++i) {
      if (x[i] == T(0)) continue;
      for (int j = 0; i + j <= N; ++j) r[i + j] += x[i] * y[j];
    }
    return r;
  }
  friend TruncatedSeries operator*(TruncatedSeries x, const T& s) {
    for (auto& v : x.c_) v = v * s;
    return x;
  }
  friend TruncatedSeries operator*(const T& s, TruncatedSeries x) { return std::move(x) * s; }

  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x.c_ == y.c_;
  }

  // 1 / this; the constant term must be invertible.
  TruncatedSeries recip() const {
    if (c_[0] == T(0))
      throw std::domain_error("series recip: zero constant term (coefficient 0)");
    const int N = order();
    TruncatedSeries r(N);
    r[0] = T(1) / c_[0];
    for (int k = 1; k <= N; ++k) {
      T acc(0);
      for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * r[k - j];
      r[k] = -acc / c_[0];
    }
    return r;
  }

  friend TruncatedSeries operator/(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x * y.recip();
  }

  // this(inner); inner must have zero constant term.
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    if (inner[0] != T(0))
      throw std::domain_error("series compose: inner constant term nonzero (coefficient 0)");
    const int N = std::min(order(), inner.order());
    TruncatedSeries in = inner.truncated(N);
    TruncatedSeries r = constant((*this)[N], N);
    for (int k = N - 1; k >= 0; --k) r = r * in + constant((*this)[k], N);
    return r;
  }

  // Compositional inverse g with this(g(z)) = z; requires c0 = 0, c1 != 0.
  TruncatedSeries comp_inverse() const {
    if (c_[0] != T(0))
      throw std::domain_error("series comp_inverse: nonzero constant term (coefficient 0)");
    const int N = order();
    if (N < 1 || c_[1] == T(0))
      throw std::domain_error("series comp_inverse: zero linear term (coefficient 1)");
    TruncatedSeries g(N);
    g[1] = T(1) / c_[1];
    for (int k = 2; k <= N; ++k) {
      const TruncatedSeries err = compose(g);
      g[k] = -err[k] / c_[1];
    }
    return g;
  }

  // Square root with constant term +1; requires c0 = 1.
  TruncatedSeries sqrt_unit() const {
    if (c_[0] != T(1))
      throw std::domain_error("series sqrt: constant term must be 1 (coefficient 0)");
    const int N = order();
    TruncatedSeries s(N);
    s[0] = T(1);
    for (int k = 1; k <= N; ++k) {
      T acc(0);
      for (int j = 1; j < k; ++j) acc += s[j] * s[k - j];
      s[k] = div_int(c_[static_cast<std::size_t>(k)] - acc, 2);
    }
    return s;
  }

  // exp of a series with zero constant term.
  TruncatedSeries exp_series() const {
    if (c_[0] != T(0))
      throw std::domain_error("series exp: nonzero constant term (coefficient 0)");
    const int N = order();
    TruncatedSeries e(N);
    e[0] = T(1);
    for (int k = 1; k <= N; ++k) {
      T acc(0);
      for (int j = 1; j <= k; ++j) acc += T(j) * c_[static_cast<std::size_t>(j)] * e[k - j];
      e[k] = div_int(acc, k);
    }
    return e;
  }

  // log of a series with constant term 1.
  TruncatedSeries log_series() const {
    if (c_[0] != T(1))
      throw std::domain_error("series log: constant term must be 1 (coefficient 0)");
    const int N = order();
    TruncatedSeries l(N);
    for (int k = 1; k <= N; ++k) {
      T acc(0);
      for (int j = 1; j < k; ++j) acc += T(j) * l[j] * c_[static_cast<std::size_t>(k - j)];
      l[k] = c_[static_cast<std::size_t>(k)] - div_int(acc, k);
    }
    return l;
  }

  TruncatedSeries derivative() const {
    const int N = order();
    if (N == 0) return TruncatedSeries(0);
    TruncatedSeries d(N - 1);
    for (int k = 1; k <= N; ++k) d[k - 1] = T(k) * c_[static_cast<std::size_t>(k)];
    return d;
  }

  // Multiply by z^k (order grows by k: the product is known that far).
  TruncatedSeries shift_up(int k) const {
    TruncatedSeries r(order() + k);
    for (int j = 0; j <= order(); ++j) r[j + k] = c_[static_cast<std::size_t>(j)];
    return r;
  }

  // Divide by z^k; the first k coefficients must vanish.
  TruncatedSeries shift_down(int k) const {
    for (int j = 0; j < k; ++j)
      if (c_[static_cast<std::size_t>(j)] != T(0))
        throw std::domain_error("series shift_down: nonzero coefficient " + std::to_string(j));
    TruncatedSeries r(order() - k);
    for (int j = k; j <= order(); ++j) r[j - k] = c_[static_cast<std::size_t>(j)];
    return r;
  }

 private:
  static std::size_t check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<T> c_;
};

template <class T>
double max_coeff_distance(const TruncatedSeries<T>& x, const TruncatedSeries<T>& y) {
  double m = 0;
  const int N = std::min(x.order(), y.order());
  for (int k = 0; k <= N; ++k) m = std::max(m, magnitude(x[k] - y[k]));
  return m;
}

template <class T>
double scaled_distance(const TruncatedSeries<T>& x, const TruncatedSeries<T>& y) {
  double m = 0;
  const int N = std::min(x.order(), y.order());
  for (int k = 0; k <= N; ++k) m = std::max(m, scaled_scalar_distance(x[k], y[k]));
  return m;
}

template <class T2, class T1>
TruncatedSeries<T2> convert_series(const TruncatedSeries<T1>& s);

template <>
inline TruncatedSeries<Cplx> convert_series<Cplx, Rat>(const TruncatedSeries<Rat>& s) {
  TruncatedSeries<Cplx> r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = scalar_from<Cplx>(s[k]);
  return r;
}

template <>
inline TruncatedSeries<CplxHP> convert_series<CplxHP, Rat>(const TruncatedSeries<Rat>& s) {
  TruncatedSeries<CplxHP> r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = scalar_from<CplxHP>(s[k]);
  return r;
}

}  // namespace meixner

#endif
