#ifndef MEIXNER_POLY_HPP
#define MEIXNER_POLY_HPP

// Dense univariate polynomials, lowest degree first.  Exact over Rat,
// floating over Cplx/double; the zero polynomial has an empty coefficient
// vector and degree -1.

#include <stdexcept>
#include <vector>

#include "meixner/scalar.hpp"

namespace meixner {

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(int degree, const T& v = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
    c.back() = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<std::size_t>(k)];
  }

  T eval(const T& x0) const {
    T acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x0 + c_[static_cast<std::size_t>(k)];
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a * T(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  friend Poly operator*(Poly a, const T& s) {
    for (auto& v : a.c_) v = v * s;
    a.trim();
    return a;
  }
  friend Poly operator*(const T& s, Poly a) { return std::move(a) * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
Poly<T> derivative(const Poly<T>& f) {
  if (f.degree() < 1) return Poly<T>();
  std::vector<T> c(static_cast<std::size_t>(f.degree()), T(0));
  for (int k = 1; k <= f.degree(); ++k)
    c[static_cast<std::size_t>(k - 1)] = f.coeff(k) * T(k);
  return Poly<T>(std::move(c));
}

// f(x) -> (f(x) - f(0)) / x
template <class T>
Poly<T> free_derivative(const Poly<T>& f) {
  if (f.degree() < 1) return Poly<T>();
  std::vector<T> c(static_cast<std::size_t>(f.degree()), T(0));
  for (int k = 1; k <= f.degree(); ++k) c[static_cast<std::size_t>(k - 1)] = f.coeff(k);
  return Poly<T>(std::move(c));
}

// f(x) -> f(x + s), Horner over (x + s).
template <class T>
Poly<T> shift(const Poly<T>& f, const T& s) {
  if (f.is_zero()) return f;
  Poly<T> xs(std::vector<T>{s, T(1)});
  Poly<T> acc = Poly<T>::constant(f.coeff(f.degree()));
  for (int k = f.degree() - 1; k >= 0; --k)
    acc = acc * xs + Poly<T>::constant(f.coeff(k));
  return acc;
}

// (f(x) - f(s)) / (x - s) as a polynomial in x: synthetic division by (x - s).
template <class T>
Poly<T> divided_difference(const Poly<T>& f, const T& s) {
  if (f.degree() < 1) return Poly<T>();
  std::vector<T> q(static_cast<std::size_t>(f.degree()), T(0));
  T carry = f.coeff(f.degree());
  for (int k = f.degree() - 1; k >= 0; --k) {
    q[static_cast<std::size_t>(k)] = carry;
    carry = carry * s + f.coeff(k);
  }
  return Poly<T>(std::move(q));
}

template <class T2, class T1>
Poly<T2> convert_poly(const Poly<T1>& f);

template <>
inline Poly<Cplx> convert_poly<Cplx, Rat>(const Poly<Rat>& f) {
  std::vector<Cplx> c(f.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = scalar_from<Cplx>(f.coeffs()[k]);
  return Poly<Cplx>(std::move(c));
}

template <>
inline Poly<double> convert_poly<double, Rat>(const Poly<Rat>& f) {
  std::vector<double> c(f.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = to_double(f.coeffs()[k]);
  return Poly<double>(std::move(c));
}

template <>
inline Poly<CplxHP> convert_poly<CplxHP, Rat>(const Poly<Rat>& f) {
  std::vector<CplxHP> c(f.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = scalar_from<CplxHP>(f.coeffs()[k]);
  return Poly<CplxHP>(std::move(c));
}

// Largest coefficient distance, for floating comparisons.
template <class T>
double max_coeff_distance(const Poly<T>& a, const Poly<T>& b) {
  double m = 0;
  const int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) m = std::max(m, magnitude(a.coeff(k) - b.coeff(k)));
  return m;
}

// Scale-normalized variant: |a_k - b_k| / max(1, |a_k|, |b_k|) per
// coefficient, so large-coefficient roundoff is judged relatively.
template <class T>
double scaled_distance(const Poly<T>& a, const Poly<T>& b) {
  double m = 0;
  const int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) m = std::max(m, scaled_scalar_distance(a.coeff(k), b.coeff(k)));
  return m;
}

}  // namespace meixner

#endif
