#ifndef MEIXNER_SCALAR_HPP
#define MEIXNER_SCALAR_HPP

// Scalar domains shared by the whole library: exact rationals for the
// verification path, complex doubles for the floating path.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace meixner {

// Expression templates are disabled so the number types behave as plain
// value types inside generic code.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using Cplx = std::complex<double>;

// Quad-precision complex scalars carry the conjugate-root (case e) paths,
// where double roundoff alone would exhaust the 1e-10 residue budget.
using FloatHP = boost::multiprecision::cpp_bin_float_quad;
using CplxHP = boost::multiprecision::cpp_complex_quad;

template <class T>
inline constexpr bool is_exact_scalar_v = false;
template <>
inline constexpr bool is_exact_scalar_v<Rat> = true;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

template <class T>
T scalar_from(const Rat& r);
template <>
inline Rat scalar_from<Rat>(const Rat& r) { return r; }
template <>
inline double scalar_from<double>(const Rat& r) { return to_double(r); }
template <>
inline Cplx scalar_from<Cplx>(const Rat& r) { return Cplx(to_double(r), 0.0); }
template <>
inline CplxHP scalar_from<CplxHP>(const Rat& r) { return CplxHP(r.template convert_to<FloatHP>()); }

inline double magnitude(const Rat& x) { return std::abs(to_double(x)); }
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Cplx& x) { return std::abs(x); }
inline double magnitude(const CplxHP& x) { return abs(x).template convert_to<double>(); }

// |a - b| relative to max(1, |a|, |b|).
template <class T>
double scaled_scalar_distance(const T& a, const T& b) {
  return magnitude(a - b) / std::max({1.0, magnitude(a), magnitude(b)});
}

template <class T>
T div_int(const T& x, long long k) {
  return x / scalar_from<T>(Rat(k));
}

inline Int factorial_int(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Rat factorial(int n) { return Rat(factorial_int(n)); }

inline Int binomial_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

// Exact square root of a nonnegative rational, when one exists.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  const Int num = numerator(x), den = denominator(x);
  const Int sn = boost::multiprecision::sqrt(num);
  const Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Fixed float formatting used by every CSV-producing surface.
inline std::string format_double(double x) {
  if (x == 0.0) return "0";  // normalizes -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

struct ParsedScalar {
  Rat value;
  bool is_decimal = false;  // decimal notation selects the floating path
};

// Accepts "p/q", integers, and finite decimals ("0.5" parses exactly as 1/2).
inline ParsedScalar parse_scalar(const std::string& s) {
  auto fail = [&] { throw std::invalid_argument("cannot parse scalar '" + s + "'"); };
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  if (digits.empty()) fail();
  ParsedScalar out;
  if (i == s.size()) {
    out.value = Rat(Int(digits));
  } else if (s[i] == '/') {
    std::string den = s.substr(i + 1);
    if (den.empty()) fail();
    for (char c : den)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    if (Int(den) == 0) fail();
    out.value = Rat(Int(digits), Int(den));
  } else if (s[i] == '.') {
    std::string frac = s.substr(i + 1);
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    Int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    out.value = Rat(Int(digits) * scale + (frac.empty() ? Int(0) : Int(frac)), scale);
    out.is_decimal = true;
  } else {
    fail();
  }
  if (neg) out.value = -out.value;
  return out;
}

}  // namespace meixner

#endif
