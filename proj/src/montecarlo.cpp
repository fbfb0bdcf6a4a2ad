#include "sirnet/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "sirnet/quadrature.hpp"

namespace sirnet {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kZ95 = 1.959963984540054;
constexpr std::uint64_t kBlockSize = 8192;

double neg_power(double d, double alpha) {
    if (alpha == 4.0) {
        const double q = 1.0 / (d * d);
        return q * q;
    }
    if (alpha == 3.0) return 1.0 / (d * d * d);
    return std::pow(d, -alpha);
}

unsigned resolve_workers(unsigned requested, std::uint64_t nblocks) {
    unsigned w = requested;
    if (w == 0) {
        if (const char* env = std::getenv("SIRNET_WORKERS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) w = static_cast<unsigned>(v);
        }
    }
    if (w == 0) {
        w = std::thread::hardware_concurrency();
        if (w == 0) w = 1;
    }
    return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(nblocks, 1)));
}

void validate_config(const SimConfig& cfg, bool needs_grid) {
    if (cfg.samples < 1) throw std::domain_error("SimConfig: samples must be >= 1");
    if (!(cfg.alpha > 2.0)) throw std::domain_error("SimConfig: alpha must be > 2");
    if (needs_grid) {
        if (cfg.theta_grid.empty()) throw std::domain_error("SimConfig: theta grid is empty");
        for (std::size_t i = 0; i < cfg.theta_grid.size(); ++i) {
            if (!(cfg.theta_grid[i] > 0.0)) throw std::domain_error("SimConfig: theta must be > 0");
            if (i > 0 && !(cfg.theta_grid[i] > cfg.theta_grid[i - 1]))
                throw std::domain_error("SimConfig: theta grid must be strictly ascending");
        }
    }
}

// Runs per_sample(i, rng, state) over all sample indices; one state per block,
// merged by the caller in block order.
template <class BlockState, class PerSample>
std::vector<BlockState> run_blocked(const SimConfig& cfg, const BlockState& proto,
                                    PerSample per_sample) {
    const std::uint64_t nblocks = (cfg.samples + kBlockSize - 1) / kBlockSize;
    std::vector<BlockState> blocks(nblocks, proto);
    std::atomic<std::uint64_t> next{0};
    const unsigned workers = resolve_workers(cfg.workers, nblocks);
    auto work = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= nblocks) return;
            BlockState& st = blocks[b];
            const std::uint64_t lo = b * kBlockSize;
            const std::uint64_t hi = std::min<std::uint64_t>(cfg.samples, lo + kBlockSize);
            for (std::uint64_t i = lo; i < hi; ++i) {
                Rng rng = Rng::substream(cfg.seed, i);
                per_sample(i, rng, st);
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return blocks;
}

struct SirSample {
    double sir;
    double r0;
};

// one typical-user SIR draw; fading is drawn in ascending-distance order
SirSample draw_sir(const SimConfig& cfg, const SampleBudget& budget, double comp, Rng& rng) {
    for (;;) {
        const DistanceSet ds = sample_distances(cfg.model, cfg.alpha, budget, rng);
        if (ds.values.size() < 2) continue;  // void disk; vanishing probability
        const double r0 = ds.values.front();
        const double h0 = cfg.fading.sample(rng);
        double interference = comp;
        for (std::size_t j = 1; j < ds.values.size(); ++j)
            interference += cfg.fading.sample(rng) * neg_power(ds.values[j], cfg.alpha);
        return {h0 * neg_power(r0, cfg.alpha) / interference, r0};
    }
}

double wilson_half_width(double p, double n) {
    const double z2 = kZ95 * kZ95;
    return kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
}

}  // namespace

CcdfEstimate estimate_sir_ccdf(const SimConfig& cfg) {
    validate_config(cfg, true);
    const SampleBudget budget = resolve_budget(cfg.model, cfg.alpha, cfg.truncation_eps);
    const double comp = cfg.far_field_compensation ? far_field_mean(cfg.model, cfg.alpha, budget) : 0.0;
    const auto& grid = cfg.theta_grid;
    const std::size_t g = grid.size();

    struct Block {
        std::vector<std::uint32_t> hist;  // hist[c]: samples exceeding exactly the c smallest thetas
    };
    auto blocks = run_blocked(cfg, Block{std::vector<std::uint32_t>(g + 1, 0)},
                              [&](std::uint64_t, Rng& rng, Block& st) {
                                  const SirSample s = draw_sir(cfg, budget, comp, rng);
                                  const std::size_t c = static_cast<std::size_t>(
                                      std::lower_bound(grid.begin(), grid.end(), s.sir) - grid.begin());
                                  ++st.hist[c];
                              });

    std::vector<std::uint64_t> hist(g + 1, 0);
    for (const auto& b : blocks)
        for (std::size_t c = 0; c <= g; ++c) hist[c] += b.hist[c];

    CcdfEstimate est;
    est.theta_grid = grid;
    est.samples_used = cfg.samples;
    est.p_hat.resize(g);
    est.half_width.resize(g);
    est.exceedances.resize(g);
    std::uint64_t exceed = 0;
    for (std::size_t i = g; i-- > 0;) {
        exceed += hist[i + 1];
        est.exceedances[i] = exceed;
        const double n = static_cast<double>(cfg.samples);
        const double p = static_cast<double>(exceed) / n;
        est.p_hat[i] = p;
        est.half_width[i] = (p * n < 10.0) ? wilson_half_width(p, n)
                                           : kZ95 * std::sqrt(p * (1.0 - p) / n);
    }
    return est;
}

MomentEstimate estimate_misr_n(const SimConfig& cfg, int n) {
    validate_config(cfg, false);
    if (n < 1) throw std::domain_error("estimate_misr_n: n must be >= 1");
    const SampleBudget budget = resolve_budget(cfg.model, cfg.alpha, cfg.truncation_eps);
    const double comp = cfg.far_field_compensation ? far_field_mean(cfg.model, cfg.alpha, budget) : 0.0;

    struct Block {
        double sum = 0.0, sum_sq = 0.0;
    };
    auto blocks = run_blocked(cfg, Block{}, [&](std::uint64_t, Rng& rng, Block& st) {
        DistanceSet ds;
        do {
            ds = sample_distances(cfg.model, cfg.alpha, budget, rng);
        } while (ds.values.size() < 2);
        const double r0 = ds.values.front();
        double interference = comp;
        for (std::size_t j = 1; j < ds.values.size(); ++j)
            interference += cfg.fading.sample(rng) * neg_power(ds.values[j], cfg.alpha);
        const double isr_value = interference * std::pow(r0, cfg.alpha);
        double v = isr_value;
        for (int k = 1; k < n; ++k) v *= isr_value;
        st.sum += v;
        st.sum_sq += v * v;
    });

    double sum = 0.0, sum_sq = 0.0;
    for (const auto& b : blocks) {
        sum += b.sum;
        sum_sq += b.sum_sq;
    }
    const double nn = static_cast<double>(cfg.samples);
    MomentEstimate est;
    est.n = n;
    est.mean_power_n = sum / nn;
    est.misr_n = std::pow(est.mean_power_n, 1.0 / n);
    est.std_err = std::sqrt(std::max(0.0, sum_sq / nn - est.mean_power_n * est.mean_power_n) / nn);
    return est;
}

EfirResult estimate_efir(const SimConfig& cfg) {
    validate_config(cfg, false);
    const double delta = 2.0 / cfg.alpha;
    const SampleBudget budget = resolve_budget(cfg.model, cfg.alpha, cfg.truncation_eps);
    const double comp = cfg.far_field_compensation ? far_field_mean(cfg.model, cfg.alpha, budget) : 0.0;

    // lattice Palm geometry is deterministic; compute the weights once
    std::vector<double> fixed_weights;
    const bool lattice = cfg.model.kind == ProcessKind::SquareLattice ||
                         cfg.model.kind == ProcessKind::TriangularLattice;
    if (lattice) {
        Rng rng(0);
        const DistanceSet ds =
            sample_palm_distances(cfg.model, cfg.alpha, budget, rng, cfg.ginibre_palm_start);
        fixed_weights.reserve(ds.values.size());
        for (double d : ds.values) fixed_weights.push_back(neg_power(d, cfg.alpha));
    }

    struct Block {
        double sum = 0.0, sum_sq = 0.0;
    };
    auto blocks = run_blocked(cfg, Block{}, [&](std::uint64_t, Rng& rng, Block& st) {
        double interference = comp;
        if (lattice) {
            for (const double w : fixed_weights) interference += cfg.fading.sample(rng) * w;
        } else {
            const DistanceSet ds =
                sample_palm_distances(cfg.model, cfg.alpha, budget, rng, cfg.ginibre_palm_start);
            for (const double d : ds.values)
                interference += cfg.fading.sample(rng) * neg_power(d, cfg.alpha);
        }
        const double h = cfg.fading.sample(rng);
        const double x = std::pow(h / interference, delta);
        st.sum += x;
        st.sum_sq += x * x;
    });

    double sum = 0.0, sum_sq = 0.0;
    for (const auto& b : blocks) {
        sum += b.sum;
        sum_sq += b.sum_sq;
    }
    const double nn = static_cast<double>(cfg.samples);
    const double mean = sum / nn;
    const double se = std::sqrt(std::max(0.0, sum_sq / nn - mean * mean) / nn);
    const double scale = cfg.model.intensity * kPi;
    EfirResult r;
    r.method = EfirMethod::monte_carlo;
    r.value = std::pow(scale * mean, 1.0 / delta);
    r.lower = std::pow(scale * std::max(mean - kZ95 * se, 1e-300), 1.0 / delta);
    r.upper = std::pow(scale * (mean + kZ95 * se), 1.0 / delta);
    return r;
}

MeanEstimate estimate_pgfl(const SimConfig& cfg, const std::function<double(double)>& f) {
    validate_config(cfg, false);
    const SampleBudget budget = resolve_budget(cfg.model, cfg.alpha, cfg.truncation_eps);

    // Far-field fold-in: values below y0 = r0/r_max are missing; for a process with
    // far-field density ~ lambda the missing log-product given r0 is
    //   -2 pi lambda r0^2 int_0^{y0} (1 - f(y)) y^-3 dy.
    // Tabulate phi(y0) = int_0^{y0} (1-f(y)) y^-3 dy on a log grid.
    const int tab_n = 160;
    const double y_top = 0.75;
    std::vector<double> phi(tab_n, 0.0);
    if (cfg.far_field_compensation) {
        double upper = 0.0, y_hi = y_top;
        for (int j = 0; j < tab_n; ++j) {
            const double y_lo = y_top * std::pow(2.0, -(j + 1) / 8.0);
            upper += integrate([&](double y) { return (1.0 - f(y)) / (y * y * y); }, y_lo, y_hi, 1e-10);
            phi[j] = upper;  // phi at y = y_lo..y_top accumulated; store integral over (y_lo, y_top]
            y_hi = y_lo;
        }
        // phi[j] = int_{y_j}^{y_top}; convert to int_0^{y}: total minus that
        const double total = upper;  // int over (y_min, y_top]; below y_min the mass is negligible
        for (int j = 0; j < tab_n; ++j) phi[j] = total - phi[j];
        // now phi[j] approximates int_0^{y_j} with y_j = y_top 2^{-(j+1)/8}
    }
    const auto phi_at = [&](double y) {
        if (!cfg.far_field_compensation || y <= 0.0) return 0.0;
        const double j = 8.0 * std::log2(y_top / y) - 1.0;
        if (j <= 0.0) {
            // y in (y_top/2^{1/8}, y_top]: extend with the first table cell
            return phi[0] + integrate([&](double t) { return (1.0 - f(t)) / (t * t * t); },
                                      y_top * std::pow(2.0, -1.0 / 8.0), std::max(y, 1e-12), 1e-8);
        }
        const int j0 = std::min(static_cast<int>(j), tab_n - 1);
        const int j1 = std::min(j0 + 1, tab_n - 1);
        const double w = j - j0;
        return phi[j0] * (1.0 - w) + phi[j1] * w;
    };

    struct Block {
        double sum = 0.0, sum_sq = 0.0;
    };
    const double lambda = cfg.model.intensity;
    auto blocks = run_blocked(cfg, Block{}, [&](std::uint64_t, Rng& rng, Block& st) {
        DistanceSet ds;
        do {
            ds = sample_distances(cfg.model, cfg.alpha, budget, rng);
        } while (ds.values.size() < 2);
        const RelativeDistanceProcess r = to_rdp(ds);
        double prod = 1.0;
        for (double y : r.values) prod *= f(y);
        const double r0 = ds.values.front();
        prod *= std::exp(-2.0 * kPi * lambda * r0 * r0 * phi_at(r.floor));
        st.sum += prod;
        st.sum_sq += prod * prod;
    });

    double sum = 0.0, sum_sq = 0.0;
    for (const auto& b : blocks) {
        sum += b.sum;
        sum_sq += b.sum_sq;
    }
    const double nn = static_cast<double>(cfg.samples);
    MeanEstimate est;
    est.value = sum / nn;
    est.std_err = std::sqrt(std::max(0.0, sum_sq / nn - est.value * est.value) / nn);
    return est;
}

double inverse_ccdf(const CcdfEstimate& est, double p) {
    const auto& ph = est.p_hat;
    if (ph.empty()) throw std::domain_error("inverse_ccdf: empty estimate");
    if (!(p > 0.0 && p < 1.0)) throw std::out_of_range("inverse_ccdf: p must be in (0,1)");
    if (p > ph.front() || p < ph.back()) throw std::out_of_range("inverse_ccdf: p outside attained range");
    for (std::size_t i = 0; i < ph.size(); ++i) {
        if (ph[i] == p) return est.theta_grid[i];
        if (ph[i] < p) {
            const double x0 = std::log(est.theta_grid[i - 1]);
            const double x1 = std::log(est.theta_grid[i]);
            return std::exp(x0 + (p - ph[i - 1]) * (x1 - x0) / (ph[i] - ph[i - 1]));
        }
    }
    return est.theta_grid.back();
}

GainCurve gain_curve(const CcdfEstimate& target, double delta) {
    GainCurve out;
    for (double theta : target.theta_grid) {
        const double p_ref = ps_ppp_rayleigh(theta, delta);
        try {
            out.points.emplace_back(theta, inverse_ccdf(target, p_ref) / theta);
        } catch (const std::out_of_range&) {
            out.skipped.push_back(theta);
        }
    }
    return out;
}

double asappp(double theta, double g, double delta) {
    if (!(g > 0.0)) throw std::domain_error("asappp: gain must be > 0");
    return ps_ppp_rayleigh(theta / g, delta);
}

double estimate_signal_tail(const SimConfig& cfg, double theta) {
    validate_config(cfg, false);
    if (!(theta > 0.0)) throw std::domain_error("estimate_signal_tail: theta must be > 0");
    struct Block {
        std::uint64_t count = 0;
    };
    auto blocks = run_blocked(cfg, Block{}, [&](std::uint64_t, Rng& rng, Block& st) {
        const double r0 = sample_nearest_distance(cfg.model, rng);
        const double h = cfg.fading.sample(rng);
        if (h * neg_power(r0, cfg.alpha) > theta) ++st.count;
    });
    std::uint64_t count = 0;
    for (const auto& b : blocks) count += b.count;
    return static_cast<double>(count) / static_cast<double>(cfg.samples);
}

double estimate_max_sir_tail(const SimConfig& cfg, double theta) {
    validate_config(cfg, false);
    if (!(theta > 1.0)) throw std::domain_error("estimate_max_sir_tail: theta must be > 1");
    const SampleBudget budget = resolve_budget(cfg.model, cfg.alpha, cfg.truncation_eps);
    const double comp = cfg.far_field_compensation ? far_field_mean(cfg.model, cfg.alpha, budget) : 0.0;

    struct Block {
        std::uint64_t count = 0;
        std::vector<double> powers;
    };
    auto blocks = run_blocked(cfg, Block{}, [&](std::uint64_t, Rng& rng, Block& st) {
        DistanceSet ds;
        do {
            ds = sample_distances(cfg.model, cfg.alpha, budget, rng);
        } while (ds.values.empty());
        st.powers.clear();
        double total = comp;
        for (const double d : ds.values) {
            const double p = cfg.fading.sample(rng) * neg_power(d, cfg.alpha);
            st.powers.push_back(p);
            total += p;
        }
        for (const double p : st.powers) {
            if (p > theta * (total - p)) {  // SIR(x) = p/(total-p) > theta
                ++st.count;
                break;
            }
        }
    });
    std::uint64_t count = 0;
    for (const auto& b : blocks) count += b.count;
    return static_cast<double>(count) / static_cast<double>(cfg.samples);
}

double tail_slope(const CcdfEstimate& est, double decades) {
    if (est.theta_grid.empty()) throw std::domain_error("tail_slope: empty estimate");
    const double theta_max = est.theta_grid.back();
    const double theta_min = theta_max * std::pow(10.0, -decades);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < est.theta_grid.size(); ++i) {
        if (est.theta_grid[i] < theta_min || est.exceedances[i] == 0) continue;
        const double x = std::log(est.theta_grid[i]);
        const double y = std::log(est.p_hat[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw std::domain_error("tail_slope: not enough usable grid points");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<RelativeDistanceProcess> sample_rdp_batch(const SimConfig& cfg, double floor) {
    validate_config(cfg, false);
    if (!(floor >= 0.0 && floor < 1.0)) throw std::domain_error("sample_rdp_batch: floor in [0,1)");
    const SampleBudget budget = resolve_budget(cfg.model, cfg.alpha, cfg.truncation_eps);
    std::vector<RelativeDistanceProcess> out(cfg.samples);

    struct Block {};
    run_blocked(cfg, Block{}, [&](std::uint64_t i, Rng& rng, Block&) {
        DistanceSet ds;
        do {
            ds = sample_distances(cfg.model, cfg.alpha, budget, rng);
        } while (ds.values.size() < 2);
        RelativeDistanceProcess r = to_rdp(ds);
        if (floor > 0.0) {
            std::erase_if(r.values, [&](double v) { return v < floor; });
            r.floor = std::max(r.floor, floor);
        }
        out[i] = std::move(r);
    });
    return out;
}

}  // namespace sirnet
