#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sirnet/analytic.hpp"
#include "sirnet/fading.hpp"
#include "sirnet/pointprocess.hpp"
#include "sirnet/rdp.hpp"

namespace sirnet {

// Reproducible experiment description. Every sample index owns an independent
// random substream derived from (seed, index), and partial results are merged
// in fixed block order, so estimates are bit-identical for any worker count.
struct SimConfig {
    NetworkModel model = NetworkModel::ppp(1.0);
    FadingModel fading = FadingModel::rayleigh();
    double alpha = 4.0;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
    std::vector<double> theta_grid;      // linear, strictly ascending
    double truncation_eps = 1e-3;
    unsigned workers = 0;                // 0: SIRNET_WORKERS env, else hardware threads
    bool far_field_compensation = true;  // add the mean interference of the omitted far field
    int ginibre_palm_start = 2;
};

struct CcdfEstimate {
    std::vector<double> theta_grid;
    std::vector<double> p_hat;        // non-increasing (shared-sample estimation)
    std::vector<double> half_width;   // 95% CI half-width; Wilson when exceedances < 10
    std::vector<std::uint64_t> exceedances;
    std::uint64_t samples_used = 0;

    bool tail_flagged(std::size_t i) const { return exceedances[i] < 100; }
};

struct MomentEstimate {
    int n = 1;
    double mean_power_n = 0.0;  // estimate of E ISR^n
    double misr_n = 0.0;        // mean_power_n^{1/n}
    double std_err = 0.0;       // standard error of mean_power_n
};

struct MeanEstimate {
    double value = 0.0;
    double std_err = 0.0;
};

// P(SIR > theta) on the grid; all thresholds evaluated on the same SIR samples.
CcdfEstimate estimate_sir_ccdf(const SimConfig& cfg);

// sample mean of ISR^n with fresh fading each realization
MomentEstimate estimate_misr_n(const SimConfig& cfg, int n);

// EFIR = (lambda pi E![(h/I_inf)^delta])^{1/delta} from reduced-Palm samples;
// lower/upper carry the 95% CI mapped through the same transform.
EfirResult estimate_efir(const SimConfig& cfg);

// Monte Carlo E prod f(y) over RDP samples of cfg.model (PGFL cross-check)
MeanEstimate estimate_pgfl(const SimConfig& cfg, const std::function<double(double)>& f);

// theta at which p_hat crosses p, by monotone piecewise-linear interpolation in (log theta, p)
double inverse_ccdf(const CcdfEstimate& est, double p);

struct GainCurve {
    std::vector<std::pair<double, double>> points;  // (theta, G)
    std::vector<double> skipped;                    // reference thetas outside the attained range
};

// G(theta) = inverse_ccdf(target, ps_ppp(theta)) / theta over the target's grid
GainCurve gain_curve(const CcdfEstimate& target, double delta);

// shifted-ccdf approximation: ps_ppp(theta / g)
double asappp(double theta, double g, double delta);

// empirical P(h R^-alpha > theta)
double estimate_signal_tail(const SimConfig& cfg, double theta);

// empirical P(max_x SIR(x) > theta) under instantaneous-strongest association; theta > 1
double estimate_max_sir_tail(const SimConfig& cfg, double theta);

// least-squares slope of log p_hat vs log theta over the top `decades` of the grid
double tail_slope(const CcdfEstimate& est, double decades = 1.0);

// RDP realizations of cfg.model with values below `floor` dropped
std::vector<RelativeDistanceProcess> sample_rdp_batch(const SimConfig& cfg, double floor);

}  // namespace sirnet
