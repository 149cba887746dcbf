#ifndef MEIXNER_PARAMS_HPP
#define MEIXNER_PARAMS_HPP

// Parameter domain (lambda, eta, t), the five-case classification, and the
// root factorization 1 + lambda*x + eta*x^2 = (1 - alpha*x)(1 - beta*x).

#include <optional>
#include <stdexcept>
#include <string>

#include "meixner/scalar.hpp"

namespace meixner {

enum class Framework { Classical, Free };

inline const char* name(Framework fw) {
  return fw == Framework::Classical ? "classical" : "free";
}

// Basis weight: the lowering operator maps P_n to weight(fw, n) * P_{n-1}.
inline int lowering_weight(Framework fw, int n) {
  if (fw == Framework::Classical) return n;
  return n > 0 ? 1 : 0;
}

enum class MeixnerCase { Gaussian, Poisson, Gamma, Pascal, MeixnerSecondKind };

inline const char* name(MeixnerCase c) {
  switch (c) {
    case MeixnerCase::Gaussian: return "gaussian";
    case MeixnerCase::Poisson: return "poisson";
    case MeixnerCase::Gamma: return "gamma";
    case MeixnerCase::Pascal: return "pascal";
    case MeixnerCase::MeixnerSecondKind: return "meixner2";
  }
  return "?";
}

inline void require_valid(const Rat& eta, const Rat& t) {
  if (eta < 0) throw std::invalid_argument("eta must be nonnegative");
  if (t <= 0) throw std::invalid_argument("t must be positive");
}

struct MeixnerParams {
  Framework framework = Framework::Classical;
  Rat lambda = 0;
  Rat eta = 0;
  Rat t = 1;
  bool exact_inputs = true;  // false when any input arrived in decimal notation

  MeixnerParams() = default;
  MeixnerParams(Framework fw, Rat lambda_, Rat eta_, Rat t_ = Rat(1), bool exact = true)
      : framework(fw), lambda(std::move(lambda_)), eta(std::move(eta_)), t(std::move(t_)),
        exact_inputs(exact) {
    require_valid(eta, t);
  }
};

inline MeixnerCase classify(const Rat& lambda, const Rat& eta) {
  if (eta < 0) throw std::invalid_argument("eta must be nonnegative");
  if (eta == 0) return lambda == 0 ? MeixnerCase::Gaussian : MeixnerCase::Poisson;
  const Rat disc = lambda * lambda - 4 * eta;
  if (disc == 0) return MeixnerCase::Gamma;
  return disc > 0 ? MeixnerCase::Pascal : MeixnerCase::MeixnerSecondKind;
}

struct AlphaBeta {
  Cplx alpha;
  Cplx beta;
};

struct RatAlphaBeta {
  Rat alpha;
  Rat beta;
};

// Exact roots when the discriminant is a rational square.  The eta = 0,
// lambda != 0 convention forces (alpha, beta) = (-lambda, 0); otherwise
// alpha is the root with the larger real part.
inline std::optional<RatAlphaBeta> alpha_beta_exact(const Rat& lambda, const Rat& eta) {
  if (eta < 0) throw std::invalid_argument("eta must be nonnegative");
  if (eta == 0) return RatAlphaBeta{-lambda, Rat(0)};
  const Rat disc = lambda * lambda - 4 * eta;
  if (disc < 0) return std::nullopt;
  const auto root = exact_sqrt(disc);
  if (!root) return std::nullopt;
  return RatAlphaBeta{(-lambda + *root) / 2, (-lambda - *root) / 2};
}

inline AlphaBeta alpha_beta(const Rat& lambda, const Rat& eta) {
  if (auto exact = alpha_beta_exact(lambda, eta))
    return AlphaBeta{Cplx(to_double(exact->alpha), 0.0), Cplx(to_double(exact->beta), 0.0)};
  const Rat disc = lambda * lambda - 4 * eta;
  const double l = to_double(lambda);
  if (disc >= 0) {
    const double s = std::sqrt(to_double(disc));
    return AlphaBeta{Cplx((-l + s) / 2, 0.0), Cplx((-l - s) / 2, 0.0)};
  }
  const double s = std::sqrt(to_double(-disc));
  return AlphaBeta{Cplx(-l / 2, s / 2), Cplx(-l / 2, -s / 2)};
}

// Quad-precision roots for the conjugate-pair computations.
inline std::pair<CplxHP, CplxHP> alpha_beta_hp(const Rat& lambda, const Rat& eta) {
  if (eta < 0) throw std::invalid_argument("eta must be nonnegative");
  const FloatHP l = lambda.template convert_to<FloatHP>();
  if (eta == 0) return {CplxHP(-l), CplxHP(FloatHP(0))};
  const Rat disc = lambda * lambda - 4 * eta;
  if (disc >= 0) {
    const FloatHP s = sqrt(disc.template convert_to<FloatHP>());
    return {CplxHP((-l + s) / 2), CplxHP((-l - s) / 2)};
  }
  const FloatHP s = sqrt((-disc).template convert_to<FloatHP>());
  return {CplxHP(-l / 2, s / 2), CplxHP(-l / 2, -s / 2)};
}

}  // namespace meixner

#endif
