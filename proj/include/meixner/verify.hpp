#ifndef MEIXNER_VERIFY_HPP
#define MEIXNER_VERIFY_HPP

// Verification suites over a parameter point: each suite machine-checks one
// family of identities and reports pass/fail with the largest deviation.
// Rational inputs run exact; decimal inputs run the complex-float path.

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "meixner/cumulants.hpp"
#include "meixner/meixner_series.hpp"
#include "meixner/operators.hpp"
#include "meixner/params.hpp"

namespace meixner {

enum class Suite { Lowering, Raising, Series, Cumulants, Decomposition };

inline const char* name(Suite s) {
  switch (s) {
    case Suite::Lowering: return "lowering";
    case Suite::Raising: return "raising";
    case Suite::Series: return "series";
    case Suite::Cumulants: return "cumulants";
    case Suite::Decomposition: return "decomposition";
  }
  return "?";
}

inline std::vector<Suite> parse_suites(const std::string& s) {
  if (s == "all")
    return {Suite::Lowering, Suite::Raising, Suite::Series, Suite::Cumulants,
            Suite::Decomposition};
  if (s == "lowering") return {Suite::Lowering};
  if (s == "raising") return {Suite::Raising};
  if (s == "series") return {Suite::Series};
  if (s == "cumulants") return {Suite::Cumulants};
  if (s == "decomposition") return {Suite::Decomposition};
  throw std::invalid_argument("unknown suite '" + s + "'");
}

struct VerificationReport {
  std::string suite;
  Framework framework = Framework::Classical;
  Rat lambda, eta, t;
  int order = 0;
  bool pass = true;
  bool exact = true;
  double max_err = 0;
  std::string detail;
  long long elapsed_ms = 0;

  std::string max_abs_error_str() const { return exact ? "exact" : format_double(max_err); }
};

namespace detail {

template <class T>
struct Check {
  double tol;
  bool pass = true;
  bool exact = is_exact_scalar_v<T>;
  double max_err = 0;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void note_err(double e, const std::string& what) {
    exact = false;
    if (e > max_err) max_err = e;
    if (e > tol) fail(what + " deviates by " + format_double(e));
  }
  // exact equality on the rational path; scale-normalized max coefficient
  // deviation against the tolerance on the float path
  template <class U>
  void equal(const U& a, const U& b, const std::string& what) {
    if constexpr (is_exact_scalar_v<T>) {
      if (!(a == b)) fail(what);
    } else {
      note_err(scaled_distance(a, b), what);
    }
  }
  void equal_scalar(const T& a, const T& b, const std::string& what) {
    if constexpr (is_exact_scalar_v<T>) {
      if (!(a == b)) fail(what);
    } else {
      note_err(scaled_scalar_distance(a, b), what);
    }
  }
  void merge(const CheckReport& r, const std::string& label) {
    if (!r.exact) {
      exact = false;
      if (r.max_err > max_err) max_err = r.max_err;
    }
    if (!r.pass) fail(label + ": " + r.detail);
  }
};

// The operators are defined on the t = 1 families (the free integral
// representation lowers exactly those), so the suite pins t = 1.
template <class T>
void run_lowering(const MeixnerParams& p, int N, Check<T>& chk) {
  MeixnerParams base = p;
  base.t = 1;
  const auto basis = ops_from_jacobi(mu_jacobi<T>(base, N), N);
  for (int n = 0; n <= N; ++n) {
    const Poly<T> expected =
        n == 0 ? Poly<T>() : T(lowering_weight(base.framework, n)) * basis[n - 1];
    chk.equal(lowering_integral_apply(base, basis[n]), expected,
              "integral lowering of P_" + std::to_string(n));
    chk.equal(lowering_symbol_apply(base, basis[n]), expected,
              "symbol lowering of P_" + std::to_string(n));
    if (!chk.pass) return;
  }
  for (int n = 1; n <= N; ++n) {
    chk.equal(lowering_moment_formula<T>(base, n),
              lowering_integral_apply(base, Poly<T>::monomial(n)),
              "moment formula on x^" + std::to_string(n));
    if (!chk.pass) return;
  }
}

template <class T>
void run_raising(const MeixnerParams& p, int N, Check<T>& chk) {
  MeixnerParams base = p;
  base.t = 1;
  if (p.framework == Framework::Free) {
    try {
      chk.merge(free_raising_resolvent_check(p.lambda, p.eta, N), "free raising");
    } catch (const std::exception& e) {
      chk.fail(std::string("free raising: ") + e.what());
    }
    return;
  }
  const auto basis = ops_from_jacobi(mu_jacobi<Rat>(base, N), N);
  const bool splits = alpha_beta_exact(p.lambda, p.eta).has_value();
  for (int n = 0; n <= N - 1; ++n) {
    const Poly<Rat> f = basis[n];
    if (splits) {
      const auto raised = raising_difference_apply_exact(base, f);
      if (!raised || !(*raised == basis[n + 1])) {
        chk.fail("difference raising of P_" + std::to_string(n));
        return;
      }
    } else {
      try {
        const auto raised = raising_difference_apply_complex(base, f, chk.tol);
        chk.note_err(max_coeff_distance(raised, convert_poly<double>(basis[n + 1])),
                     "difference raising of P_" + std::to_string(n));
      } catch (const std::exception& e) {
        chk.fail(e.what());
      }
    }
    if (!chk.pass) return;
  }
  chk.merge(classical_raising_exponential_check(p.lambda, p.eta, N), "classical raising");
}

template <class T>
void run_series(const MeixnerParams& p, int N, Check<T>& chk) {
  const auto zs = TruncatedSeries<T>::z(N);
  const auto one = TruncatedSeries<T>::constant(T(1), N);
  const auto pinv = psi_inv<T>(p, N);
  MeixnerParams base = p;
  base.t = 1;

  if (p.framework == Framework::Classical) {
    const auto psi = pinv.comp_inverse();
    chk.equal(psi.compose(pinv), zs, "psi(psi_inv) = z");
    chk.equal(pinv.compose(psi), zs, "psi_inv(psi) = z");
    chk.equal(cumulant_series<T>(base, N + 1).derivative(), pinv, "psi_inv = C'");
    if (const auto ab = alpha_beta_exact(p.lambda, p.eta)) {
      chk.equal(psi_inv_exp_classical<T>(scalar_from<T>(ab->alpha), scalar_from<T>(ab->beta), N),
                pinv, "exponential closed form of psi_inv");
    } else if constexpr (is_exact_scalar_v<T>) {
      const auto [alpha, beta] = alpha_beta_hp(p.lambda, p.eta);
      const auto closed = psi_inv_exp_classical<CplxHP>(alpha, beta, N);
      chk.note_err(max_coeff_distance(closed, convert_series<CplxHP>(pinv)),
                   "exponential closed form of psi_inv");
    } else {
      const auto ab2 = alpha_beta(p.lambda, p.eta);
      const auto closed = psi_inv_exp_classical<Cplx>(ab2.alpha, ab2.beta, N);
      chk.note_err(max_coeff_distance(closed, pinv), "exponential closed form of psi_inv");
    }
  } else {
    const T lambda = scalar_from<T>(p.lambda), eta = scalar_from<T>(p.eta);
    const auto psi = psi_free<T>(lambda, eta, N);
    chk.equal(psi.compose(pinv), zs, "psi(psi_inv) = z");
    chk.equal(pinv.compose(psi), zs, "psi_inv(psi) = z");
    chk.equal(cumulant_series<T>(base, N + 1).shift_down(1), pinv, "psi_inv = C/z");
    chk.equal(psi_inv_closed_free<T>(lambda, eta, N), pinv, "square-root closed form of psi_inv");
    chk.equal(cumulant_series<T>(base, N).compose(psi), c_compose_psi_free<T>(lambda, eta, N),
              "C(psi) = z^2/(1 + lambda z + eta z^2)");
    const auto psi_up = psi_free<T>(lambda, eta + T(1), N);
    chk.equal(psi - psi_up, zs * (psi * psi_up), "1/psi_{eta+1} - 1/psi_eta = z");
    const auto w = psi_inv<T>(MeixnerParams(Framework::Free, p.lambda, p.eta + 1, 1), N);
    chk.equal(psi.compose(w), (one - zs * w).recip().shift_up(1).truncated(N),
              "psi(psi_inv_{eta+1}) = 1/(1/z - psi_inv_{eta+1})");
    try {
      free_raising_symbol<T>(lambda, eta, N);
    } catch (const std::exception& e) {
      chk.fail(e.what());
    }
  }

  // generating function coefficients against the recurrence family
  const int K = std::min(N, 12);
  const auto basis = ops_from_jacobi(mu_jacobi<T>(p, K), K);
  for (int x0 : {0, 1, -1, 2, -2}) {
    const auto g = generating_function<T>(p, T(x0), K);
    for (int n = 0; n <= K; ++n) {
      T expected = basis[n].eval(T(x0));
      if (p.framework == Framework::Classical)
        expected = expected / scalar_from<T>(factorial(n));
      chk.equal_scalar(g[n], expected,
                       "generating function coefficient " + std::to_string(n) + " at x0=" +
                           std::to_string(x0));
      if (!chk.pass) return;
    }
  }
}

template <class T>
void run_cumulants(const MeixnerParams& p, int N, Check<T>& chk) {
  const int K = std::min(N, 10);
  const auto m = moments(mu_jacobi<T>(p, K), K);
  const auto c = moments_to_cumulants(p.framework, m, K);
  const auto series = cumulant_series<T>(p, std::max(K, 2));
  chk.equal_scalar(c[1], T(0), "first cumulant vanishes (centered)");
  for (int n = 2; n <= K; ++n) {
    T expected = series[n];
    if (p.framework == Framework::Classical) expected *= scalar_from<T>(factorial(n));
    chk.equal_scalar(c[static_cast<std::size_t>(n)], expected,
                     "Levy-series coefficient " + std::to_string(n));
  }
  const auto back = cumulants_to_moments(p.framework, c, K);
  for (int n = 0; n <= K; ++n)
    chk.equal_scalar(back[static_cast<std::size_t>(n)], m[static_cast<std::size_t>(n)],
                     "moment round trip at " + std::to_string(n));
  if (p.t != 1) {
    MeixnerParams unit = p;
    unit.t = 1;
    const auto c1 = moments_to_cumulants(p.framework, moments(mu_jacobi<T>(unit, K), K), K);
    for (int n = 1; n <= K; ++n)
      chk.equal_scalar(c[static_cast<std::size_t>(n)], scalar_from<T>(p.t) * c1[static_cast<std::size_t>(n)],
                       "cumulant additivity in t at " + std::to_string(n));
  }
  int p4 = 0, nc4 = 0;
  for_each_set_partition(4, [&](const std::vector<std::vector<int>>&) { ++p4; });
  for_each_noncrossing_partition(4, [&](const std::vector<std::vector<int>>&) { ++nc4; });
  chk.require(p4 == 15, "|P_4| = 15");
  chk.require(nc4 == 14, "|NC(4)| = 14");
}

inline VerificationReport finalize(const char* suite, const MeixnerParams& p, int N, bool pass,
                                   bool exact, double max_err, std::string detail,
                                   std::chrono::steady_clock::time_point start) {
  VerificationReport r;
  r.suite = suite;
  r.framework = p.framework;
  r.lambda = p.lambda;
  r.eta = p.eta;
  r.t = p.t;
  r.order = N;
  r.pass = pass;
  r.exact = exact;
  r.max_err = max_err;
  r.detail = std::move(detail);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace detail

inline VerificationReport run_suite(Suite suite, const MeixnerParams& p, int N, double tol) {
  const auto start = std::chrono::steady_clock::now();
  auto dispatch = [&](auto tag) {
    using T = decltype(tag);
    detail::Check<T> chk;
    chk.tol = tol;
    try {
      switch (suite) {
        case Suite::Lowering: detail::run_lowering<T>(p, N, chk); break;
        case Suite::Raising: detail::run_raising<T>(p, N, chk); break;
        case Suite::Series: detail::run_series<T>(p, N, chk); break;
        case Suite::Cumulants: detail::run_cumulants<T>(p, N, chk); break;
        case Suite::Decomposition:
          chk.merge(multiplication_decomposition_check(p, N), "decomposition");
          break;
      }
    } catch (const std::exception& e) {
      chk.fail(e.what());
    }
    return detail::finalize(name(suite), p, N, chk.pass, chk.exact, chk.max_err, chk.detail,
                            start);
  };
  return p.exact_inputs ? dispatch(Rat()) : dispatch(Cplx());
}

// One representative per case a)-e), both frameworks, t = 1.
inline std::vector<MeixnerParams> default_grid() {
  const std::pair<int, int> reps[] = {{0, 0}, {1, 0}, {2, 1}, {3, 2}, {1, 1}};
  std::vector<MeixnerParams> grid;
  for (Framework fw : {Framework::Classical, Framework::Free})
    for (const auto& [l, e] : reps) grid.emplace_back(fw, Rat(l), Rat(e), Rat(1));
  return grid;
}

}  // namespace meixner

#endif
