#ifndef MEIXNER_OPS_BASIS_HPP
#define MEIXNER_OPS_BASIS_HPP

// Monic orthogonal family P_0..P_N generated from Jacobi coefficients, plus
// the triangular change of basis between monomial and P coefficients.

#include <stdexcept>
#include <vector>

#include "meixner/jacobi.hpp"
#include "meixner/poly.hpp"

namespace meixner {

template <class T>
struct OpsBasis {
  std::vector<Poly<T>> family;  // family[n] = P_n, monic of degree n
  JacobiCoeffs<T> source;

  int max_degree() const { return static_cast<int>(family.size()) - 1; }
  const Poly<T>& operator[](int n) const { return family.at(static_cast<std::size_t>(n)); }
};

// P_{n+1} = (x - b_n) P_n - a_n P_{n-1},  P_0 = 1.
template <class T>
OpsBasis<T> ops_from_jacobi(const JacobiCoeffs<T>& J, int N) {
  if (N >= 1 && J.length() < N - 1)
    throw std::invalid_argument("ops_from_jacobi: jacobi coefficients too short");
  OpsBasis<T> basis;
  basis.source = J;
  basis.family.reserve(static_cast<std::size_t>(N) + 1);
  basis.family.push_back(Poly<T>::constant(T(1)));
  if (N == 0) return basis;
  basis.family.push_back(Poly<T>::x() - Poly<T>::constant(J.b[0]));
  const Poly<T> x = Poly<T>::x();
  for (int n = 1; n < N; ++n) {
    const Poly<T>& pn = basis.family[static_cast<std::size_t>(n)];
    const Poly<T>& pm = basis.family[static_cast<std::size_t>(n - 1)];
    basis.family.push_back((x - Poly<T>::constant(J.b[static_cast<std::size_t>(n)])) * pn -
                           J.a[static_cast<std::size_t>(n)] * pm);
  }
  return basis;
}

// f = sum c_k P_k; unipotent triangular elimination against the monic family.
template <class T>
std::vector<T> to_ops_coeffs(const Poly<T>& f, const OpsBasis<T>& basis) {
  if (f.degree() > basis.max_degree())
    throw std::invalid_argument("to_ops_coeffs: polynomial degree exceeds basis");
  std::vector<T> c(static_cast<std::size_t>(basis.max_degree()) + 1, T(0));
  Poly<T> r = f;
  for (int n = r.degree(); n >= 0; n = r.degree()) {
    c[static_cast<std::size_t>(n)] = r.coeff(n);
    r -= r.coeff(n) * basis[n];
  }
  return c;
}

template <class T>
Poly<T> from_ops_coeffs(const std::vector<T>& c, const OpsBasis<T>& basis) {
  if (static_cast<int>(c.size()) > basis.max_degree() + 1)
    throw std::invalid_argument("from_ops_coeffs: too many coefficients for basis");
  Poly<T> f;
  for (std::size_t k = 0; k < c.size(); ++k) f += c[k] * basis[static_cast<int>(k)];
  return f;
}

}  // namespace meixner

#endif
