#include "lcc/speclink.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace lcc {

std::size_t carrier_count(CarrierFamily family) {
    switch (family) {
        case CarrierFamily::pregibon:
        case CarrierFamily::stukel:
        case CarrierFamily::prentice:
            return 2;
        default:
            return 1;
    }
}

std::string family_name(CarrierFamily family) {
    switch (family) {
        case CarrierFamily::pregibon: return "pregibon";
        case CarrierFamily::stukel: return "stukel";
        case CarrierFamily::prentice: return "prentice";
        case CarrierFamily::guerrero_johnson: return "guerrero-johnson";
        case CarrierFamily::morgan: return "morgan";
        case CarrierFamily::aranda: return "aranda";
    }
    return "?";
}

CarrierFamily parse_family(std::string_view name) {
    std::string k(name);
    std::transform(k.begin(), k.end(), k.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::erase_if(k, [](char c) { return c == '-' || c == '_' || c == ' '; });
    if (k == "pregibon" || k == "preigbon") return CarrierFamily::pregibon;
    if (k == "stukel") return CarrierFamily::stukel;
    if (k == "prentice") return CarrierFamily::prentice;
    if (k == "guerrerojohnson" || k == "gj") return CarrierFamily::guerrero_johnson;
    if (k == "morgan") return CarrierFamily::morgan;
    if (k == "aranda") return CarrierFamily::aranda;
    throw Error("unknown carrier family: " + std::string(name));
}

const std::vector<CarrierFamily>& all_families() {
    static const std::vector<CarrierFamily> families = {
        CarrierFamily::pregibon,     CarrierFamily::stukel, CarrierFamily::prentice,
        CarrierFamily::guerrero_johnson, CarrierFamily::morgan, CarrierFamily::aranda,
    };
    return families;
}

Matrix carriers(CarrierFamily family, const Vector& mu, const Vector& eta) {
    if (mu.size() != eta.size()) throw DimensionMismatch("carriers: mu/eta length mismatch");
    for (double m : mu)
        if (!(m > 0.0 && m < 1.0))
            throw InvalidProbability("carriers: fitted probability outside (0,1): " +
                                     std::to_string(m));

    const std::size_t n = mu.size();
    Matrix w(n, carrier_count(family));
    for (std::size_t i = 0; i < n; ++i) {
        const double lm = std::log(mu[i]);
        const double l1m = std::log1p(-mu[i]);
        const double e = eta[i];
        switch (family) {
            case CarrierFamily::pregibon:
                w(i, 0) = 0.5 * (lm * lm - l1m * l1m);
                w(i, 1) = -0.5 * (lm * lm + l1m * l1m);
                break;
            case CarrierFamily::stukel:
                w(i, 0) = e >= 0.0 ? 0.5 * e * e : 0.0;
                w(i, 1) = e < 0.0 ? -0.5 * e * e : 0.0;
                break;
            case CarrierFamily::prentice:
                w(i, 0) = -lm / (1.0 - mu[i]);
                w(i, 1) = -l1m / mu[i];
                break;
            case CarrierFamily::guerrero_johnson:
                w(i, 0) = 0.5 * e * e;
                break;
            case CarrierFamily::morgan:
                w(i, 0) = e * e * e;
                break;
            case CarrierFamily::aranda:
                w(i, 0) = 1.0 + l1m / mu[i];
                break;
        }
    }
    return w;
}

SpecResult spec_deviance(const Matrix& z, const Vector& y, double lambda, CarrierFamily family) {
    SpecResult result;
    result.base_fit = fit(z, y, lambda);

    Vector eta(z.rows());
    for (std::size_t i = 0; i < z.rows(); ++i)
        eta[i] = dot(z.row(i), result.base_fit.coefficients);

    const Matrix w = carriers(family, result.base_fit.fitted_probabilities, eta);
    const Matrix extended = Matrix::hcat(z, w);

    // theta keeps its ridge penalty (intercept excluded); carriers are free.
    std::vector<char> penalized(extended.cols(), 0);
    for (std::size_t j = 1; j < z.cols(); ++j) penalized[j] = 1;

    Vector start(extended.cols(), 0.0);
    std::copy(result.base_fit.coefficients.begin(), result.base_fit.coefficients.end(),
              start.begin());

    try {
        result.extended_fit = fit_from(extended, y, lambda, penalized, start);
    } catch (const Error&) {
        // Treated as "no evidence of misspecification".
        result.extended_fit = result.base_fit;
        result.degraded = true;
        return result;
    }

    result.degraded = !result.extended_fit.converged;
    result.deviance = std::max(
        0.0, 2.0 * (result.extended_fit.log_likelihood - result.base_fit.log_likelihood));
    return result;
}

}  // namespace lcc
