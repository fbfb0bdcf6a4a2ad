#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sirnet/fading.hpp"
#include "sirnet/pointprocess.hpp"

namespace sirnet {

// Relative distance process: ratios |x0|/|x| in (0,1] over the interferers.
// Dimensionless and scale-free; the sufficient statistic for the SIR.
// Ratios below `floor` (= r0 / truncation radius) are missing by truncation.
struct RelativeDistanceProcess {
    std::vector<double> values;
    double floor = 0.0;
};

// requires >= 2 distances
RelativeDistanceProcess to_rdp(const DistanceSet& d);

// ISR = sum_y y^alpha with unit gains, or with iid fading draws
double isr(const RelativeDistanceProcess& r, double alpha);
double isr(const RelativeDistanceProcess& r, double alpha, const FadingModel& fading, Rng& rng);

// PGFL of the PPP's RDP: G[f] = 1 / (1 + 2 int_0^1 (1-f(x)) x^-3 dx), evaluated
// through the substitution x = 1/y on (1,inf). Throws std::domain_error when
// 1-f(x) fails to vanish faster than x^2 near 0.
double pgfl_rdp_ppp(const std::function<double(double)>& f, double tol = 1e-10);

// Success probability if the RDP were an (inhomogeneous) Poisson process:
// exp(-int_0^1 theta r^a/(1+theta r^a) 2 r^-3 dr), computed by quadrature.
// Satisfies exp(1 - 1/ps_ppp) and lies strictly below the true ps for theta > 0.
double poisson_approx_ps(double theta, double delta);

// average count of values in [r, 1) per sample; PPP target r^-2 - 1
double empirical_mean_measure(std::span<const RelativeDistanceProcess> samples, double r);

// histogram estimate of beta_1(t) = rho^(1)(t) t^3 / 2; PPP target 1
double empirical_beta1(std::span<const RelativeDistanceProcess> samples, double t, double bin_width);

// plug-in pair correlation from disjoint bins at t1, t2; PPP RDP target 2
double empirical_pair_correlation_rdp_ppp(std::span<const RelativeDistanceProcess> samples,
                                          double t1, double t2, double w1, double w2);

}  // namespace sirnet
