#include "sirnet/rdp.hpp"

#include <cmath>
#include <stdexcept>

#include "sirnet/quadrature.hpp"

namespace sirnet {

RelativeDistanceProcess to_rdp(const DistanceSet& d) {
    if (d.values.size() < 2) throw std::domain_error("to_rdp: need at least two points");
    RelativeDistanceProcess r;
    const double r0 = d.values.front();
    r.values.reserve(d.values.size() - 1);
    for (std::size_t i = 1; i < d.values.size(); ++i) r.values.push_back(r0 / d.values[i]);
    r.floor = d.truncation_radius > 0.0 ? r0 / d.truncation_radius : 0.0;
    return r;
}

double isr(const RelativeDistanceProcess& r, double alpha) {
    if (!(alpha > 2.0)) throw std::domain_error("isr: alpha must be > 2");
    double sum = 0.0;
    for (double y : r.values) sum += std::pow(y, alpha);
    return sum;
}

double isr(const RelativeDistanceProcess& r, double alpha, const FadingModel& fading, Rng& rng) {
    if (!(alpha > 2.0)) throw std::domain_error("isr: alpha must be > 2");
    double sum = 0.0;
    for (double y : r.values) sum += fading.sample(rng) * std::pow(y, alpha);
    return sum;
}

double pgfl_rdp_ppp(const std::function<double(double)>& f, double tol) {
    // decay gate: (1 - f(x))/x^2 must not grow as x -> 0
    double prev = -1.0;
    for (double x : {1e-2, 1e-3, 1e-4}) {
        const double c = (1.0 - f(x)) / (x * x);
        if (c < -1e-12) throw std::domain_error("pgfl_rdp_ppp: f must map into [0,1]");
        if (prev >= 0.0 && c > prev * 1.10 + 1e-9)
            throw std::domain_error("pgfl_rdp_ppp: 1-f(x) must vanish faster than x^2 near 0");
        prev = c;
    }
    const double integral =
        integrate_to_infinity([&](double y) { return y * (1.0 - f(1.0 / y)); }, 1.0, tol);
    return 1.0 / (1.0 + 2.0 * integral);
}

double poisson_approx_ps(double theta, double delta) {
    if (!(theta >= 0.0)) throw std::domain_error("poisson_approx_ps: theta must be >= 0");
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("poisson_approx_ps: delta in (0,1)");
    if (theta == 0.0) return 1.0;
    // int_0^1 theta r^a/(1+theta r^a) 2 r^-3 dr  ==  d theta/(1-d) int_0^1 dv/(1+theta v^{1/(1-d)})
    const double p = 1.0 / (1.0 - delta);
    const double J = integrate(
        [&](double v) { return 1.0 / (1.0 + theta * std::pow(v, p)); }, 0.0, 1.0, 1e-12);
    return std::exp(-delta * theta * p * J);
}

double empirical_mean_measure(std::span<const RelativeDistanceProcess> samples, double r) {
    if (samples.empty()) throw std::domain_error("empirical_mean_measure: no samples");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("empirical_mean_measure: r in (0,1)");
    std::size_t count = 0;
    for (const auto& s : samples)
        for (double v : s.values)
            if (v >= r && v < 1.0) ++count;
    return static_cast<double>(count) / static_cast<double>(samples.size());
}

double empirical_beta1(std::span<const RelativeDistanceProcess> samples, double t, double bin_width) {
    if (samples.empty()) throw std::domain_error("empirical_beta1: no samples");
    const double lo = t - 0.5 * bin_width, hi = t + 0.5 * bin_width;
    if (!(lo > 0.0 && hi < 1.0)) throw std::domain_error("empirical_beta1: bin must lie inside (0,1)");
    std::size_t count = 0;
    for (const auto& s : samples)
        for (double v : s.values)
            if (v >= lo && v < hi) ++count;
    const double density = static_cast<double>(count) /
                           (static_cast<double>(samples.size()) * bin_width);
    return density * t * t * t / 2.0;
}

double empirical_pair_correlation_rdp_ppp(std::span<const RelativeDistanceProcess> samples,
                                          double t1, double t2, double w1, double w2) {
    if (samples.empty()) throw std::domain_error("empirical_pair_correlation: no samples");
    const double lo1 = t1 - 0.5 * w1, hi1 = t1 + 0.5 * w1;
    const double lo2 = t2 - 0.5 * w2, hi2 = t2 + 0.5 * w2;
    if (!(lo1 > 0.0 && hi1 < 1.0 && lo2 > 0.0 && hi2 < 1.0))
        throw std::domain_error("empirical_pair_correlation: bins must lie inside (0,1)");
    if (!(hi1 <= lo2 || hi2 <= lo1))
        throw std::domain_error("empirical_pair_correlation: bins must be disjoint");
    double pair_sum = 0.0;
    std::size_t c1 = 0, c2 = 0;
    for (const auto& s : samples) {
        std::size_t n1 = 0, n2 = 0;
        for (double v : s.values) {
            if (v >= lo1 && v < hi1) ++n1;
            if (v >= lo2 && v < hi2) ++n2;
        }
        pair_sum += static_cast<double>(n1) * static_cast<double>(n2);
        c1 += n1;
        c2 += n2;
    }
    const double n = static_cast<double>(samples.size());
    const double rho2 = pair_sum / (n * w1 * w2);
    const double rho1a = static_cast<double>(c1) / (n * w1);
    const double rho1b = static_cast<double>(c2) / (n * w2);
    return rho2 / (rho1a * rho1b);
}

}  // namespace sirnet
