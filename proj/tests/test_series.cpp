#include "meixner/series.hpp"

#include <gtest/gtest.h>

#include "meixner/meixner_series.hpp"
#include "meixner/ops_basis.hpp"
#include "rat_gen.hpp"

using namespace meixner;
using meixner_tests::RatGen;

namespace {

TruncatedSeries<Rat> series(int order, std::initializer_list<Rat> coeffs) {
  return TruncatedSeries<Rat>(order, std::vector<Rat>(coeffs));
}

TruncatedSeries<Rat> random_series(RatGen& gen, int order) {
  TruncatedSeries<Rat> s(order);
  for (int k = 0; k <= order; ++k) s[k] = gen.next();
  return s;
}

}  // namespace

TEST(Series, CompInverse) {
  const auto f = series(4, {0, 1, 1});  // z + z^2
  const auto g = f.comp_inverse();
  // oracle: composing back must give z
  EXPECT_EQ(f.compose(g), TruncatedSeries<Rat>::z(4));
  EXPECT_EQ(g, series(4, {0, 1, -1, 2, -5}));
}

TEST(Series, SqrtUnit) {
  const auto f = series(4, {1, 0, -4});  // 1 - 4z^2
  const auto s = f.sqrt_unit();
  EXPECT_EQ(s * s, f);  // oracle
  EXPECT_EQ(s, series(4, {1, 0, -2, 0, -2}));
}

TEST(Series, ExpAndLog) {
  EXPECT_EQ(TruncatedSeries<Rat>(6).exp_series(), series(6, {1}));
  const auto f = series(8, {0, 1, Rat(-1, 2), 0, Rat(3, 5)});
  EXPECT_EQ(f.exp_series().log_series(), f);
  const auto g = series(8, {1, 2, -1, Rat(1, 7)});
  EXPECT_EQ(g.log_series().exp_series(), g);
}

TEST(Series, RecipAndDiv) {
  const auto f = series(6, {1, -1});  // 1 - z
  TruncatedSeries<Rat> geometric(6);
  for (int k = 0; k <= 6; ++k) geometric[k] = 1;
  EXPECT_EQ(f.recip(), geometric);
  EXPECT_EQ(f / f, series(6, {1}));
}

TEST(Series, PreconditionErrorsCarryIndex) {
  auto expect_message = [](auto&& fn, const char* needle) {
    try {
      fn();
      FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  expect_message([] { series(4, {0, 1}).recip(); }, "coefficient 0");
  expect_message([] { series(4, {1, 1}).compose(series(4, {1})); }, "coefficient 0");
  expect_message([] { series(4, {0, 0, 1}).comp_inverse(); }, "coefficient 1");
  expect_message([] { series(4, {2}).sqrt_unit(); }, "coefficient 0");
  expect_message([] { series(4, {1}).exp_series(); }, "coefficient 0");
  expect_message([] { series(4, {0, 1, 3}).shift_down(2); }, "coefficient 1");
}

TEST(Series, DerivativeAndShifts) {
  const auto f = series(5, {1, 2, 3, 0, 0, 6});
  EXPECT_EQ(f.derivative(), series(4, {2, 6, 0, 0, 30}));
  EXPECT_EQ(f.shift_up(2).order(), 7);
  EXPECT_EQ(f.shift_up(2)[2], 1);
  EXPECT_EQ(series(4, {0, 0, 5, 7}).shift_down(2), series(2, {5, 7, 0}));
}

TEST(PsiFree, Examples) {
  EXPECT_EQ(psi_free<Rat>(0, 0, 5), TruncatedSeries<Rat>::z(5));
  // oracle: psi * (1 + lambda z + eta z^2) = z
  for (auto [l, e] : {std::pair<int, int>{0, 1}, {1, 1}, {3, 2}}) {
    const auto psi = psi_free<Rat>(l, e, 9);
    auto quad = series(9, {1, Rat(l), Rat(e)});
    EXPECT_EQ(psi * quad, TruncatedSeries<Rat>::z(9));
  }
  EXPECT_EQ(psi_free<Rat>(0, 1, 5), series(5, {0, 1, 0, -1, 0, 1}));
  EXPECT_EQ(psi_free<Rat>(1, 1, 4), series(4, {0, 1, -1, 0, 1}));
}

TEST(CComposePsiFree, Examples) {
  EXPECT_EQ(c_compose_psi_free<Rat>(0, 0, 4), series(4, {0, 0, 1}));
  EXPECT_EQ(c_compose_psi_free<Rat>(0, 1, 5), series(5, {0, 0, 1, 0, -1}));
  // consistency: C(psi(z)) built by composition agrees with the closed form
  for (auto [l, e] : {std::pair<int, int>{0, 0}, {1, 0}, {2, 1}, {3, 2}, {1, 1}}) {
    const MeixnerParams p(Framework::Free, l, e);
    const auto composed = cumulant_series<Rat>(p, 12).compose(psi_free(p, 12));
    EXPECT_EQ(composed, c_compose_psi_free<Rat>(l, e, 12));
  }
}

TEST(PsiInv, FreeCatalan) {
  const MeixnerParams p(Framework::Free, 0, 1);
  const auto pinv = psi_inv<Rat>(p, 7);
  EXPECT_EQ(pinv, series(7, {0, 1, 0, 1, 0, 2, 0, 5}));
  EXPECT_EQ(psi_inv_closed_free<Rat>(0, 1, 7), pinv);
}

TEST(PsiInv, ClassicalGaussianIsZ) {
  const MeixnerParams p(Framework::Classical, 0, 0);
  EXPECT_EQ(psi_inv<Rat>(p, 10), TruncatedSeries<Rat>::z(10));
}

TEST(PsiInv, ComposesToIdentity) {
  for (Framework fw : {Framework::Classical, Framework::Free})
    for (auto [l, e] : {std::pair<int, int>{0, 0}, {1, 0}, {2, 1}, {3, 2}, {1, 1}}) {
      const MeixnerParams p(fw, l, e);
      const auto pinv = psi_inv<Rat>(p, 10);
      const auto psi = fw == Framework::Free ? psi_free(p, 10) : pinv.comp_inverse();
      EXPECT_EQ(psi.compose(pinv), TruncatedSeries<Rat>::z(10));
      EXPECT_EQ(pinv.compose(psi), TruncatedSeries<Rat>::z(10));
    }
}

TEST(PsiInv, ExponentialClosedFormPoisson) {
  // lambda = 1, eta = 0: psi_inv = e^z - 1
  const MeixnerParams p(Framework::Classical, 1, 0);
  const auto pinv = psi_inv<Rat>(p, 10);
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(pinv[k], Rat(1) / factorial(k));
  const auto ab = alpha_beta_exact(p.lambda, p.eta);
  EXPECT_EQ(psi_inv_exp_classical<Rat>(ab->alpha, ab->beta, 10), pinv);
}

TEST(CumulantSeries, Examples) {
  const MeixnerParams cg(Framework::Classical, 0, 0);
  auto c = cumulant_series<Rat>(cg, 8);
  EXPECT_EQ(c[2], Rat(1, 2));  // z^2/2
  for (int k : {0, 1, 3, 4, 5, 6, 7, 8}) EXPECT_EQ(c[k], 0);

  const MeixnerParams fg(Framework::Free, 0, 0);
  auto cf = cumulant_series<Rat>(fg, 8);
  EXPECT_EQ(cf[2], 1);
  for (int k : {0, 1, 3, 4, 5, 6, 7, 8}) EXPECT_EQ(cf[k], 0);

  const MeixnerParams poisson(Framework::Classical, 1, 0);
  auto cp = cumulant_series<Rat>(poisson, 8);
  for (int k = 2; k <= 8; ++k) EXPECT_EQ(cp[k], Rat(1) / factorial(k));  // e^z - 1 - z

  // t scaling
  const MeixnerParams scaled(Framework::Classical, 1, 0, Rat(5, 2));
  auto cs = cumulant_series<Rat>(scaled, 8);
  for (int k = 2; k <= 8; ++k) EXPECT_EQ(cs[k], Rat(5, 2) * cp[k]);
}

TEST(GeneratingFunction, CoefficientContract) {
  for (Framework fw : {Framework::Classical, Framework::Free})
    for (auto [l, e] : {std::pair<int, int>{0, 0}, {1, 0}, {2, 1}, {3, 2}, {1, 1}}) {
      const MeixnerParams p(fw, l, e, Rat(2));
      const auto basis = ops_from_jacobi(mu_jacobi<Rat>(p, 12), 12);
      for (int x0 : {0, 1, -1, 2, -2}) {
        const auto g = generating_function<Rat>(p, Rat(x0), 12);
        for (int n = 0; n <= 12; ++n) {
          Rat expected = basis[n].eval(Rat(x0));
          if (fw == Framework::Classical) expected /= factorial(n);
          EXPECT_EQ(g[n], expected) << name(fw) << " (" << l << "," << e << ") n=" << n;
        }
      }
    }
}

TEST(GeneratingFunction, FreeGaussianClosedForm) {
  // (1 - x0 z + z^2)^{-1}: coefficient of z^2 is x0^2 - 1
  const MeixnerParams p(Framework::Free, 0, 0);
  for (int x0 : {0, 1, -1, 2, -2}) {
    const auto g = generating_function<Rat>(p, Rat(x0), 6);
    EXPECT_EQ(g[0], 1);
    EXPECT_EQ(g[2], Rat(x0) * x0 - 1);
  }
}

TEST(GeneratingFunction, ClassicalGaussianAtZero) {
  // e^{-z^2/2}: coefficient of z^2 is -1/2 = P_2(0)/2!
  const MeixnerParams p(Framework::Classical, 0, 0);
  const auto g = generating_function<Rat>(p, Rat(0), 6);
  EXPECT_EQ(g[0], 1);
  EXPECT_EQ(g[1], 0);
  EXPECT_EQ(g[2], Rat(-1, 2));
  EXPECT_EQ(g[4], Rat(1, 8));
}

TEST(FreeRaisingSymbol, GaussianExample) {
  const auto sym = free_raising_symbol<Rat>(0, 0, 9);
  EXPECT_EQ(sym.a, series(9, {1}));  // A = 1 at all orders
  // B = -psi_inv_{0,1} = -(z + z^3 + 2 z^5 + 5 z^7 + ...)
  EXPECT_EQ(sym.b, series(9, {0, -1, 0, -1, 0, -2, 0, -5, 0, -14}));
}

TEST(FreeRaisingSymbol, ReciprocalAndCompositionIdentities) {
  for (auto [l, e] : {std::pair<int, int>{0, 0}, {1, 0}, {2, 1}, {3, 2}, {1, 1}}) {
    const int N = 12;
    const auto psi = psi_free<Rat>(l, e, N);
    const auto psi_up = psi_free<Rat>(l, Rat(e) + 1, N);
    // 1/psi_{eta+1} - 1/psi_eta = z, cleared of denominators
    EXPECT_EQ(psi - psi_up, TruncatedSeries<Rat>::z(N) * (psi * psi_up));
    // psi_{l,e}(psi_inv_{l,e+1}(z)) = 1/(1/z - psi_inv_{l,e+1}(z))
    const auto w = psi_inv<Rat>(MeixnerParams(Framework::Free, l, Rat(e) + 1), N);
    const auto one = TruncatedSeries<Rat>::constant(1, N);
    const auto rhs = (one - TruncatedSeries<Rat>::z(N) * w).recip().shift_up(1).truncated(N);
    EXPECT_EQ(psi.compose(w), rhs);
  }
}

TEST(FreeRaisingSymbol, OrderZeroCoefficients) {
  const auto sym = free_raising_symbol<Rat>(1, Rat(1, 2), 8);
  EXPECT_EQ(sym.a[0], 1);  // raise(1) = P_1 = x
  EXPECT_EQ(sym.b[0], 0);
}

TEST(Series, CompInverseIsTwoSidedOnRandomSeries) {
  RatGen gen(0x5eed);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_series(gen, 8);
    f[0] = 0;
    f[1] = gen.next_nonzero();
    const auto g = f.comp_inverse();
    EXPECT_EQ(f.compose(g), TruncatedSeries<Rat>::z(8)) << "trial " << trial;
    EXPECT_EQ(g.compose(f), TruncatedSeries<Rat>::z(8)) << "trial " << trial;
  }
}

TEST(Series, ExpLogAndRecipRoundTripsOnRandomSeries) {
  RatGen gen(0xfeed);
  const auto one = TruncatedSeries<Rat>::constant(1, 8);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_series(gen, 8);
    f[0] = 0;
    EXPECT_EQ(f.exp_series().log_series(), f) << "trial " << trial;
    auto g = random_series(gen, 8);
    g[0] = gen.next_nonzero();
    EXPECT_EQ(g * g.recip(), one) << "trial " << trial;
    auto h = random_series(gen, 8);
    h[0] = 1;
    EXPECT_EQ(h.sqrt_unit() * h.sqrt_unit(), h) << "trial " << trial;
  }
}

TEST(Series, CompositionDistributesOverProducts) {
  RatGen gen(0xabcd);
  for (int trial = 0; trial < 15; ++trial) {
    const auto f = random_series(gen, 7);
    const auto g = random_series(gen, 7);
    auto inner = random_series(gen, 7);
    inner[0] = 0;
    EXPECT_EQ((f * g).compose(inner), f.compose(inner) * g.compose(inner)) << "trial " << trial;
    EXPECT_EQ((f + g).compose(inner), f.compose(inner) + g.compose(inner)) << "trial " << trial;
  }
}

TEST(GeneratingFunction, FreeFactorsThroughTheShiftedResolventKernel) {
  // G_{l,e}(x,z) = [(1 + l z + e z^2)/(1 + l z + (e+1) z^2)] (1 - x Psi_{l,e+1}(z))^{-1}
  const int N = 12;
  for (auto [l, e] : {std::pair<int, int>{0, 0}, {1, 0}, {2, 1}, {3, 2}, {1, 1}}) {
    const MeixnerParams p(Framework::Free, l, e);
    TruncatedSeries<Rat> num(N), den(N);
    num[0] = 1; num[1] = l; num[2] = e;
    den[0] = 1; den[1] = l; den[2] = Rat(e) + 1;
    const auto ratio = num / den;
    const auto psi_up = psi_free<Rat>(l, Rat(e) + 1, N);
    const auto one = TruncatedSeries<Rat>::constant(1, N);
    for (int x0 : {0, 1, -1, 2}) {
      const auto lhs = generating_function<Rat>(p, Rat(x0), N);
      const auto rhs = ratio * (one - Rat(x0) * psi_up).recip();
      EXPECT_EQ(lhs, rhs) << "(" << l << "," << e << ") x0=" << x0;
    }
  }
}

TEST(PsiInvClosedFree, MatchesLevySeriesShift) {
  // psi_inv = C(z)/z in the free case
  for (auto [l, e] : {std::pair<int, int>{0, 0}, {1, 0}, {2, 1}, {3, 2}, {1, 1}}) {
    const MeixnerParams p(Framework::Free, l, e);
    const auto shifted = cumulant_series<Rat>(p, 13).shift_down(1);
    EXPECT_EQ(shifted, psi_inv<Rat>(p, 12));
  }
}
