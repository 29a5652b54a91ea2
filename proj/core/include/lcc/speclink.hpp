#pragma once

#include <string>
#include <string_view>

#include "lcc/logistic.hpp"
#include "lcc/matrix.hpp"

namespace lcc {

// Link-specification carrier families. The first three contribute two carrier
// columns, the rest one.
enum class CarrierFamily {
    pregibon,
    stukel,
    prentice,
    guerrero_johnson,
    morgan,
    aranda,
};

std::size_t carrier_count(CarrierFamily family);
std::string family_name(CarrierFamily family);
// Case-insensitive; accepts the common misspelling "preigbon" for pregibon.
CarrierFamily parse_family(std::string_view name);
const std::vector<CarrierFamily>& all_families();

// Carrier columns derived from the fitted probabilities mu and linear
// predictors eta of a base logistic fit (one row per observation):
//   pregibon          w1 = 0.5 (log^2 mu - log^2(1-mu)),  w2 = -0.5 (log^2 mu + log^2(1-mu))
//   stukel            w1 = 0.5 eta^2 I(eta >= 0),         w2 = -0.5 eta^2 I(eta < 0)
//   prentice          w1 = -log(mu) / (1-mu),             w2 = -log(1-mu) / mu
//   guerrero_johnson  w1 = 0.5 eta^2
//   morgan            w1 = eta^3
//   aranda            w1 = 1 + log(1-mu) / mu
// Throws InvalidProbability unless every mu lies strictly inside (0,1).
Matrix carriers(CarrierFamily family, const Vector& mu, const Vector& eta);

struct SpecResult {
    double deviance = 0.0;  // max(0, 2 (loglik_extended - loglik_base))
    LogisticFit base_fit;
    LogisticFit extended_fit;
    bool degraded = false;  // extended fit failed or did not converge
};

// Specification deviance: fit the base logistic model, append its carrier
// columns, refit (carriers unpenalized, warm-started at the base estimate),
// and report twice the unpenalized log-likelihood gain, clamped at zero.
// A raised extended fit yields deviance 0 with the degraded flag set; errors
// from the base fit propagate.
SpecResult spec_deviance(const Matrix& z, const Vector& y, double lambda, CarrierFamily family);

}  // namespace lcc
