#pragma once

#include <optional>

#include "sirnet/fading.hpp"

namespace sirnet {

// Asymptotic SIR gains over the PPP reference, linear and in dB.
struct GainReport {
    double g0 = 1.0;
    double g_inf = 1.0;
    double g0_db = 0.0;
    double g_inf_db = 0.0;
    int diversity_m = 1;
};

GainReport make_gain_report(double g0, double g_inf, int diversity_m = 1);

enum class EfirMethod { closed_form, bounds, product_quadrature, monte_carlo };

struct EfirResult {
    double value = 0.0;
    EfirMethod method = EfirMethod::closed_form;
    std::optional<double> lower;
    std::optional<double> upper;
};

// p_s,PPP(theta) = 1 / 2F1(1,-d;1-d;-theta); closed form 1/(1+sqrt(t) atan sqrt(t)) at d = 1/2
double ps_ppp_rayleigh(double theta, double delta);

// MISR_PPP = 2/(alpha-2) = d/(1-d)
double misr_ppp(double alpha);

// MISR_n = (E ISR^n)^{1/n} for the PPP with arbitrary fading, via the Bell-polynomial
// expansion E(ISR^n) = sum_k k! B_{n,k}(x_1,...), x_j = d E(h^j)/(j-d).
double gen_misr_ppp(int n, double delta, const FadingModel& fading);

struct GenMisrBounds {
    double lower;                  // [(d/(1-d))^n n! + d E(h^n)/(n-d)]^{1/n}, exact at n=2
    double small_delta_asymptote;  // (d E(h^n)/n)^{1/n}
    double large_delta_asymptote;  // MISR_1 (n!)^{1/n}
};
GenMisrBounds gen_misr_bounds(int n, double delta, const FadingModel& fading);

// MISR_n ~ (n/e) MISR_1 as n -> infinity, valid for delta >= 1/2 (alpha <= 4)
double misr_n_large_n_asymptote(int n, double delta);

// G0^(m) = MISR_{m,PPP} / MISR_m
double g0_gain(int m, double misr_m_model, double misr_m_ppp);

// EFIR_PPP = (sinc d)^{1/d}, fading- and intensity-free
EfirResult efir_ppp(double delta);

// Square-lattice EFIR bounds for Rayleigh fading:
//   (pi Gamma(1+d))^{1/d} / Z(2/d)  <=  EFIR  <=  (pi / sinc d)^{1/d} / Z(2/d).
// value is set to the lower bound (the better estimate).
EfirResult lattice_efir_bounds(double delta);

struct GinibreEfirOptions {
    int truncation = 0;    // number of radial factors; 0 = choose automatically
    double tol = 1e-8;     // quadrature / truncation tolerance
    int palm_start = 2;    // first radial index under the reduced Palm measure
};

// EFIR of the Ginibre process (intensity c/pi) by the radial product representation:
// L(s) = prod_k E[L_h(s Q_k^{-alpha/2})], Q_k ~ Gamma(k, c), then the Mellin-type
// integral E(I^-d) = (1/Gamma(d)) int L(s) s^{d-1} ds. Omitted far factors are
// folded in analytically to second order.
EfirResult efir_ginibre(double delta, const FadingModel& fading, double c,
                        const GinibreEfirOptions& opts = {});

// G_inf = EFIR / EFIR_PPP
double g_infinity(double efir_model, double delta);

// p_s(theta) ~ (theta / EFIR)^-d, theta -> infinity
double tail_asymptote(double theta, double efir, double delta);

// P(S > theta) ~ lambda pi E(h^d) theta^-d, theta -> infinity (any stationary process)
double signal_ccdf_tail(double theta, double lambda, const FadingModel& fading, double delta);

// P(S < theta) ~ Gamma(1+m alpha/2)/(lambda pi)^{m alpha/2} theta^m, theta -> 0 (PPP)
double signal_cdf_near_zero_ppp(double theta, double lambda, const FadingModel& fading, double alpha);

// Small-theta upper asymptote for the PPP under Nakagami-m fading:
// 1 - theta^m [ (m d/(1-d))^m + d/(m-d) * Gamma(2m)/(Gamma(m) m^m) ]
double nakagami_ps_small_theta(double theta, int m, double delta);

// MISR ~ delta * beta_1(1) as alpha -> infinity
double misr_high_alpha_asymptote(double alpha, double beta1_at_1);

}  // namespace sirnet
