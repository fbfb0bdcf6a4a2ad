#include "sirnet/fading.hpp"

#include <cmath>
#include <stdexcept>

namespace sirnet {

FadingModel FadingModel::nakagami(int m) {
    if (m < 1) throw std::domain_error("FadingModel: Nakagami m must be a positive integer");
    return FadingModel{m};
}

double FadingModel::sample(Rng& rng) const {
    if (m == 1) return rng.exponential();
    return rng.gamma(static_cast<double>(m)) / m;
}

double FadingModel::ccdf(double x) const {
    if (!(x >= 0.0)) throw std::domain_error("fading ccdf: x must be >= 0");
    const double mx = m * x;
    if (m == 1) return std::exp(-mx);
    // Erlang tail: e^{-mx} sum_{k<m} (mx)^k / k!
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < m; ++k) {
        term *= mx / k;
        sum += term;
    }
    return std::exp(-mx) * sum;
}

double FadingModel::moment(double t) const {
    if (!(t > -m)) throw std::domain_error("fading moment: t must be > -m");
    if (t == 0.0) return 1.0;
    return std::exp(std::lgamma(m + t) - std::lgamma(m) - t * std::log(static_cast<double>(m)));
}

double FadingModel::laplace(double s) const {
    if (!(s >= 0.0)) throw std::domain_error("fading laplace: s must be >= 0");
    return std::pow(1.0 + s / m, -static_cast<double>(m));
}

FadingModel::SmallXLaw FadingModel::small_x_params() const {
    return {m, std::pow(static_cast<double>(m), m - 1) / std::tgamma(static_cast<double>(m))};
}

}  // namespace sirnet
