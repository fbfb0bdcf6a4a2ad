#include "sirnet/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sirnet/errors.hpp"
#include "sirnet/quadrature.hpp"
#include "sirnet/specialfn.hpp"

namespace sirnet {

namespace {

constexpr double kPi = 3.141592653589793238462643;

double to_db(double x) { return 10.0 * std::log10(x); }

void check_delta(double delta, const char* who) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error(std::string(who) + ": delta must be in (0,1)");
}

}  // namespace

GainReport make_gain_report(double g0, double g_inf, int diversity_m) {
    if (!(g0 > 0.0 && g_inf > 0.0)) throw std::domain_error("make_gain_report: gains must be > 0");
    return GainReport{g0, g_inf, to_db(g0), to_db(g_inf), diversity_m};
}

double ps_ppp_rayleigh(double theta, double delta) {
    check_delta(delta, "ps_ppp_rayleigh");
    if (!(theta >= 0.0)) throw std::domain_error("ps_ppp_rayleigh: theta must be >= 0");
    if (delta == 0.5) {
        const double st = std::sqrt(theta);
        return 1.0 / (1.0 + st * std::atan(st));
    }
    return 1.0 / gauss2f1_ps_kernel(delta, theta);
}

double misr_ppp(double alpha) {
    if (!(alpha > 2.0)) throw std::domain_error("misr_ppp: alpha must be > 2");
    return 2.0 / (alpha - 2.0);
}

double gen_misr_ppp(int n, double delta, const FadingModel& fading) {
    if (n < 1) throw std::domain_error("gen_misr_ppp: n must be >= 1");
    if (n > 32) throw std::domain_error("gen_misr_ppp: n > 32 overflows the Bell expansion");
    check_delta(delta, "gen_misr_ppp");
    // x_j = d E(h^j) / (j - d)
    std::vector<double> x(n);
    for (int j = 1; j <= n; ++j) x[j - 1] = delta * fading.moment(j) / (j - delta);
    double moment = 0.0;
    double kfact = 1.0;
    for (int k = 1; k <= n; ++k) {
        kfact *= k;
        moment += kfact * incomplete_bell(n, k, std::span<const double>(x.data(), n - k + 1));
    }
    return std::pow(moment, 1.0 / n);
}

GenMisrBounds gen_misr_bounds(int n, double delta, const FadingModel& fading) {
    if (n < 2) throw std::domain_error("gen_misr_bounds: n must be >= 2");
    check_delta(delta, "gen_misr_bounds");
    const double misr1 = delta / (1.0 - delta);
    const double ehn = fading.moment(n);
    double nfact = 1.0;
    for (int k = 2; k <= n; ++k) nfact *= k;
    GenMisrBounds b;
    b.lower = std::pow(std::pow(misr1, n) * nfact + delta * ehn / (n - delta), 1.0 / n);
    b.small_delta_asymptote = std::pow(delta * ehn / n, 1.0 / n);
    b.large_delta_asymptote = misr1 * std::pow(nfact, 1.0 / n);
    return b;
}

double misr_n_large_n_asymptote(int n, double delta) {
    if (n < 1) throw std::domain_error("misr_n_large_n_asymptote: n must be >= 1");
    if (!(delta >= 0.5 && delta < 1.0))
        throw std::domain_error("misr_n_large_n_asymptote: valid for delta >= 1/2 only");
    return n / std::exp(1.0) * delta / (1.0 - delta);
}

double g0_gain(int m, double misr_m_model, double misr_m_ppp) {
    if (m < 1) throw std::domain_error("g0_gain: m must be >= 1");
    if (!(misr_m_model > 0.0 && misr_m_ppp > 0.0))
        throw std::domain_error("g0_gain: MISR values must be > 0");
    return misr_m_ppp / misr_m_model;
}

EfirResult efir_ppp(double delta) {
    check_delta(delta, "efir_ppp");
    return EfirResult{std::pow(sincd(delta), 1.0 / delta), EfirMethod::closed_form, {}, {}};
}

EfirResult lattice_efir_bounds(double delta) {
    check_delta(delta, "lattice_efir_bounds");
    const double z = epstein_z(2.0 / delta);
    EfirResult r;
    r.method = EfirMethod::bounds;
    r.lower = std::pow(kPi * std::tgamma(1.0 + delta), 1.0 / delta) / z;
    r.upper = std::pow(kPi / sincd(delta), 1.0 / delta) / z;
    r.value = *r.lower;
    return r;
}

namespace {

// E[Q^-p] for Q ~ Gamma(k, c): c^p Gamma(k-p)/Gamma(k)
double gamma_neg_moment(int k, double c, double p) {
    if (k <= p) return std::numeric_limits<double>::infinity();
    return std::pow(c, p) * std::exp(std::lgamma(k - p) - std::lgamma(k));
}

struct GinibreTail {
    double t1;  // sum_{k>K} E[Q_k^-a]
    double t2;  // sum_{k>K} (E(h^2) E[Q_k^-2a] - E[Q_k^-a]^2)
};

GinibreTail ginibre_tail_sums(int K, double c, double a, double eh2) {
    GinibreTail t{0.0, 0.0};
    // closed form for the first-order sum
    t.t1 = std::pow(c, a) * std::exp(std::lgamma(K + 1 - a) - std::lgamma(K)) / (a - 1.0);
    double ma = gamma_neg_moment(K + 1, c, a);
    double m2a = gamma_neg_moment(K + 1, c, 2.0 * a);
    for (int k = K + 1; k < K + 200000; ++k) {
        const double term = eh2 * m2a - ma * ma;
        t.t2 += term;
        if (std::fabs(term) < 1e-4 * std::fabs(t.t2) || term < 1e-300) break;
        ma *= (k - a) / k;
        m2a *= (k - 2.0 * a) / k;
    }
    return t;
}

}  // namespace

EfirResult efir_ginibre(double delta, const FadingModel& fading, double c,
                        const GinibreEfirOptions& opts) {
    check_delta(delta, "efir_ginibre");
    if (!(c > 0.0)) throw std::domain_error("efir_ginibre: c must be > 0");
    if (opts.palm_start < 1) throw std::domain_error("efir_ginibre: palm_start must be >= 1");
    const double alpha = 2.0 / delta;
    const double a = alpha / 2.0;  // exponent on the squared moduli
    const double lambda = c / kPi;
    const double eh_delta = fading.moment(delta);
    const double eh2 = fading.moment(2.0);

    // outer-integral extent: L decays at least half as fast as the PPP transform
    const double rate = lambda * kPi * eh_delta * std::tgamma(1.0 - delta);
    const double wmax = 80.0 / (0.5 * rate);
    const double smax = std::pow(wmax, 1.0 / delta);

    int K = opts.truncation;
    if (K <= 0) {
        // residual of the second-order tail fold-in, weighted by the outer integral
        const double weight = std::exp(std::lgamma(1.0 + 3.0 / delta)) /
                              std::pow(0.5 * rate, 1.0 + 3.0 / delta) /
                              (delta * std::tgamma(delta));
        const double target = sincd(delta) / (lambda * kPi * eh_delta);  // PPP-scale E(I^-d)
        const double lead = std::pow(c, 3.0 * a) / (3.0 * a - 1.0) * weight;
        K = static_cast<int>(std::ceil(std::pow(lead / (opts.tol * target), 1.0 / (3.0 * a - 1.0))));
        K = std::max(K * 2, 64);
        if (K > 20000) throw truncation_error("efir_ginibre: tolerance needs more than 20000 factors");
    } else {
        const double resid = smax * smax * smax * std::pow(c / K, 3.0 * a) * K / (3.0 * a - 1.0);
        if (resid > opts.tol)
            throw truncation_error("efir_ginibre: truncation too small for requested tolerance");
    }

    const GinibreTail tail = ginibre_tail_sums(K, c, a, eh2);

    const auto log_laplace = [&](double s) {
        double acc = 0.0;
        for (int k = opts.palm_start; k <= K; ++k) {
            // 1 - factor_k = E[1 - L_h(s (u/c)^-a)], u ~ Gamma(k,1); integrate the
            // deficit directly to avoid cancellation for far factors
            const double lo = std::max(1e-12, k - 1.0 - 12.0 * std::sqrt(k) - 25.0);
            const double hi = k - 1.0 + 12.0 * std::sqrt(k) + 40.0;
            const double lgk = std::lgamma(static_cast<double>(k));
            const double deficit = integrate(
                [&](double u) {
                    const double x = s * std::pow(u / c, -a);
                    const double dens = std::exp((k - 1) * std::log(u) - u - lgk);
                    return dens * (1.0 - fading.laplace(x));
                },
                lo, hi, 1e-10, 96);
            acc += std::log1p(-std::min(deficit, 1.0 - 1e-300));
            if (acc < -760.0) return -760.0;  // already zero to double precision
        }
        return acc - s * tail.t1 + 0.5 * s * s * tail.t2;
    };

    // E(I^-d) = 1/(d Gamma(d)) int_0^wmax L(w^{1/d}) dw
    const double integral = integrate(
        [&](double w) { return std::exp(log_laplace(std::pow(w, 1.0 / delta))); }, 0.0, wmax,
        std::max(opts.tol, 1e-10), 640);
    const double ei = integral / (delta * std::tgamma(delta));
    EfirResult r;
    r.method = EfirMethod::product_quadrature;
    r.value = std::pow(lambda * kPi * ei * eh_delta, 1.0 / delta);
    return r;
}

double g_infinity(double efir_model, double delta) {
    check_delta(delta, "g_infinity");
    if (!(efir_model > 0.0)) throw std::domain_error("g_infinity: EFIR must be > 0");
    return efir_model / efir_ppp(delta).value;
}

double tail_asymptote(double theta, double efir, double delta) {
    check_delta(delta, "tail_asymptote");
    if (!(theta > 0.0 && efir > 0.0)) throw std::domain_error("tail_asymptote: positive inputs required");
    return std::pow(theta / efir, -delta);
}

double signal_ccdf_tail(double theta, double lambda, const FadingModel& fading, double delta) {
    check_delta(delta, "signal_ccdf_tail");
    if (!(theta > 0.0 && lambda > 0.0)) throw std::domain_error("signal_ccdf_tail: positive inputs");
    return lambda * kPi * fading.moment(delta) * std::pow(theta, -delta);
}

double signal_cdf_near_zero_ppp(double theta, double lambda, const FadingModel& fading, double alpha) {
    if (!(theta > 0.0 && lambda > 0.0)) throw std::domain_error("signal_cdf_near_zero_ppp: positive inputs");
    if (!(alpha > 2.0)) throw std::domain_error("signal_cdf_near_zero_ppp: alpha must be > 2");
    const auto law = fading.small_x_params();
    const double ma2 = law.m * alpha / 2.0;
    // a theta^m E(R^{m alpha}) with E(R^{m alpha}) = Gamma(1 + m alpha/2)/(lambda pi)^{m alpha/2}
    return law.c * std::pow(theta, law.m) * std::tgamma(1.0 + ma2) / std::pow(lambda * kPi, ma2);
}

double nakagami_ps_small_theta(double theta, int m, double delta) {
    check_delta(delta, "nakagami_ps_small_theta");
    if (m < 1) throw std::domain_error("nakagami_ps_small_theta: m must be >= 1");
    if (!(theta >= 0.0)) throw std::domain_error("nakagami_ps_small_theta: theta must be >= 0");
    const double bracket =
        std::pow(m * delta / (1.0 - delta), m) +
        delta / (m - delta) * std::exp(std::lgamma(2.0 * m) - std::lgamma(static_cast<double>(m))) /
            std::pow(static_cast<double>(m), m);
    return 1.0 - std::pow(theta, m) * bracket;
}

double misr_high_alpha_asymptote(double alpha, double beta1_at_1) {
    if (!(alpha > 2.0)) throw std::domain_error("misr_high_alpha_asymptote: alpha must be > 2");
    return 2.0 / alpha * beta1_at_1;
}

}  // namespace sirnet
