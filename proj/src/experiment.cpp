#include "sirnet/experiment.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sirnet/montecarlo.hpp"
#include "sirnet/specialfn.hpp"

namespace sirnet {

namespace {

double to_db(double x) { return 10.0 * std::log10(x); }

class Params {
public:
    explicit Params(const ExperimentSpec& spec) : spec_(spec) {}

    std::string str(const std::string& key, const std::string& fallback) const {
        auto it = spec_.params.find(key);
        return it == spec_.params.end() ? fallback : it->second;
    }
    double real(const std::string& key, double fallback) const {
        auto it = spec_.params.find(key);
        if (it == spec_.params.end()) return fallback;
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(it->second, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parameter '" + key + "': not a number");
        }
        if (pos != it->second.size()) throw std::invalid_argument("parameter '" + key + "': not a number");
        return v;
    }
    std::uint64_t integer(const std::string& key, std::uint64_t fallback) const {
        const double v = real(key, static_cast<double>(fallback));
        if (v < 0 || v != std::floor(v)) throw std::invalid_argument("parameter '" + key + "': not a non-negative integer");
        return static_cast<std::uint64_t>(v);
    }
    bool has(const std::string& key) const { return spec_.params.count(key) != 0; }

private:
    const ExperimentSpec& spec_;
};

struct Resolved {
    std::string command;
    std::string model_name;
    NetworkModel model;
    FadingModel fading;
    double alpha;
    double lambda;
    std::uint64_t samples;
    std::uint64_t seed;
    double theta_min_db, theta_max_db;
    int grid_points;
    unsigned workers;
    double eps;
    bool compensation;
    int palm_start;
    int n;
};

NetworkModel model_by_name(const std::string& name, double lambda) {
    if (name == "ppp") return NetworkModel::ppp(lambda);
    if (name == "square") return NetworkModel::square_lattice(lambda);
    if (name == "triangular") return NetworkModel::triangular_lattice(lambda);
    if (name == "ginibre") return NetworkModel::ginibre(lambda);
    throw std::invalid_argument("unknown model '" + name + "' (ppp|square|triangular|ginibre)");
}

Resolved resolve(const ExperimentSpec& spec) {
    const Params p(spec);
    Resolved r;
    r.command = spec.command;
    r.lambda = p.real("lambda", 1.0);
    r.model_name = p.str("model", "ppp");
    r.model = model_by_name(r.model_name, r.lambda);
    if (p.has("delta")) {
        const double d = p.real("delta", 0.5);
        if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
        r.alpha = 2.0 / d;
    } else {
        r.alpha = p.real("alpha", 4.0);
    }
    const std::string fading = p.str("fading", "rayleigh");
    const int m = static_cast<int>(p.integer("m", 1));
    if (fading == "rayleigh" && m == 1)
        r.fading = FadingModel::rayleigh();
    else if (fading == "nakagami" || m > 1)
        r.fading = FadingModel::nakagami(m);
    else
        throw std::invalid_argument("unknown fading '" + fading + "' (rayleigh|nakagami)");

    const bool heavy = spec.command == "efir";
    r.samples = p.integer("samples", heavy ? 100000 : 1000000);
    r.seed = p.integer("seed", 1);
    if (p.has("theta-db")) {
        const auto grid = parse_theta_grid_db(p.str("theta-db", ""));
        r.theta_min_db = to_db(grid.front());
        r.theta_max_db = to_db(grid.back());
        r.grid_points = static_cast<int>(grid.size());
    } else {
        r.theta_min_db = p.real("theta-min-db", -10.0);
        r.theta_max_db = p.real("theta-max-db", 30.0);
        r.grid_points = static_cast<int>(p.integer("grid-points", 81));
    }
    r.workers = static_cast<unsigned>(p.integer("workers", 0));
    r.eps = p.real("eps", 1e-3);
    r.compensation = p.integer("compensation", 1) != 0;
    r.palm_start = static_cast<int>(p.integer("palm-start", 2));
    r.n = static_cast<int>(p.integer("n", 1));
    return r;
}

SimConfig to_config(const Resolved& r) {
    SimConfig cfg;
    cfg.model = r.model;
    cfg.fading = r.fading;
    cfg.alpha = r.alpha;
    cfg.samples = r.samples;
    cfg.seed = r.seed;
    cfg.theta_grid = theta_grid_db(r.theta_min_db, r.theta_max_db, r.grid_points);
    cfg.truncation_eps = r.eps;
    cfg.workers = r.workers;
    cfg.far_field_compensation = r.compensation;
    cfg.ginibre_palm_start = r.palm_start;
    return cfg;
}

void stamp_metadata(ResultTable& t, const Resolved& r) {
    t.meta("command", r.command);
    t.meta("model", r.model_name);
    t.meta("alpha", r.alpha);
    t.meta("fading", r.fading.is_rayleigh() ? "rayleigh" : "nakagami");
    t.meta("m", static_cast<std::uint64_t>(r.fading.m));
    t.meta("n", static_cast<std::uint64_t>(r.n));
    t.meta("lambda", r.lambda);
    t.meta("samples", r.samples);
    t.meta("seed", r.seed);
    t.meta("theta-min-db", r.theta_min_db);
    t.meta("theta-max-db", r.theta_max_db);
    t.meta("grid-points", static_cast<std::uint64_t>(r.grid_points));
    t.meta("workers", static_cast<std::uint64_t>(r.workers));
    t.meta("eps", r.eps);
    t.meta("compensation", static_cast<std::uint64_t>(r.compensation ? 1 : 0));
    t.meta("palm-start", static_cast<std::uint64_t>(r.palm_start));
}

// PPP reference MISR_n for the configured fading
double ppp_reference_misr(const Resolved& r) {
    const double delta = 2.0 / r.alpha;
    return r.n == 1 ? misr_ppp(r.alpha) : gen_misr_ppp(r.n, delta, r.fading);
}

EfirResult best_efir(const Resolved& r, const SimConfig& cfg) {
    const double delta = 2.0 / r.alpha;
    switch (r.model.kind) {
        case ProcessKind::PPP:
            return efir_ppp(delta);
        case ProcessKind::Ginibre: {
            GinibreEfirOptions opts;
            opts.palm_start = r.palm_start;
            return efir_ginibre(delta, r.fading, r.model.ginibre_c(), opts);
        }
        default: {
            SimConfig e = cfg;
            e.samples = std::max<std::uint64_t>(cfg.samples / 10, 1000);
            e.theta_grid.clear();
            return estimate_efir(e);
        }
    }
}

ResultTable run_ps_ppp(const Resolved& r) {
    const double delta = 2.0 / r.alpha;
    ResultTable t;
    t.columns = {"theta_db", "theta", "p_s"};
    for (double theta : theta_grid_db(r.theta_min_db, r.theta_max_db, r.grid_points))
        t.add_row({to_db(theta), theta, ps_ppp_rayleigh(theta, delta)});
    return t;
}

ResultTable run_misr(const Resolved& r) {
    SimConfig cfg = to_config(r);
    cfg.theta_grid.clear();
    const MomentEstimate est = estimate_misr_n(cfg, r.n);
    const double ref = ppp_reference_misr(r);
    ResultTable t;
    t.columns = {"n", "misr_n", "mean_power_n", "std_err", "ppp_reference", "g0_db"};
    t.add_row({static_cast<double>(r.n), est.misr_n, est.mean_power_n, est.std_err, ref,
               to_db(g0_gain(r.n, est.misr_n, ref))});
    return t;
}

ResultTable run_gen_misr(const Resolved& r) {
    const double delta = 2.0 / r.alpha;
    ResultTable t;
    t.columns = {"n", "misr_n", "lower_bound", "asym_small_delta", "asym_large_delta"};
    for (int k = 1; k <= r.n; ++k) {
        const double value = gen_misr_ppp(k, delta, r.fading);
        if (k == 1) {
            t.add_row({1.0, value, value, delta * r.fading.moment(1), delta / (1.0 - delta)});
        } else {
            const GenMisrBounds b = gen_misr_bounds(k, delta, r.fading);
            t.add_row({static_cast<double>(k), value, b.lower, b.small_delta_asymptote,
                       b.large_delta_asymptote});
        }
    }
    return t;
}

ResultTable run_efir(const Resolved& r) {
    const double delta = 2.0 / r.alpha;
    SimConfig cfg = to_config(r);
    cfg.theta_grid.clear();
    const EfirResult mc = estimate_efir(cfg);

    ResultTable t;
    std::vector<double> row;
    t.columns = {"delta"};
    row.push_back(delta);
    switch (r.model.kind) {
        case ProcessKind::PPP: {
            t.columns.push_back("efir_closed_form");
            row.push_back(efir_ppp(delta).value);
            break;
        }
        case ProcessKind::SquareLattice: {
            const EfirResult b = lattice_efir_bounds(delta);
            t.columns.insert(t.columns.end(), {"bound_lower", "bound_upper"});
            row.insert(row.end(), {*b.lower, *b.upper});
            break;
        }
        case ProcessKind::TriangularLattice:
            break;
        case ProcessKind::Ginibre: {
            GinibreEfirOptions opts;
            opts.palm_start = r.palm_start;
            t.columns.push_back("efir_quadrature");
            row.push_back(efir_ginibre(delta, r.fading, r.model.ginibre_c(), opts).value);
            break;
        }
    }
    t.columns.insert(t.columns.end(), {"efir_mc", "mc_lower", "mc_upper", "g_inf", "g_inf_db"});
    const double ginf = g_infinity(mc.value, delta);
    row.insert(row.end(), {mc.value, *mc.lower, *mc.upper, ginf, to_db(ginf)});
    t.add_row(std::move(row));
    return t;
}

ResultTable run_simulate(const Resolved& r) {
    const double delta = 2.0 / r.alpha;
    const SimConfig cfg = to_config(r);
    const CcdfEstimate est = estimate_sir_ccdf(cfg);
    ResultTable t;
    const bool with_ref = r.model.kind == ProcessKind::PPP && r.fading.is_rayleigh();
    t.columns = {"theta_db", "theta", "p_hat", "half_width", "exceedances"};
    if (with_ref) t.columns.push_back("p_analytic");
    for (std::size_t i = 0; i < est.theta_grid.size(); ++i) {
        std::vector<double> row = {to_db(est.theta_grid[i]), est.theta_grid[i], est.p_hat[i],
                                   est.half_width[i], static_cast<double>(est.exceedances[i])};
        if (with_ref) row.push_back(ps_ppp_rayleigh(est.theta_grid[i], delta));
        t.add_row(std::move(row));
    }
    return t;
}

ResultTable run_gains(const Resolved& r) {
    const double delta = 2.0 / r.alpha;
    const SimConfig cfg = to_config(r);
    const CcdfEstimate est = estimate_sir_ccdf(cfg);
    const GainCurve curve = gain_curve(est, delta);

    SimConfig mcfg = cfg;
    mcfg.theta_grid.clear();
    const MomentEstimate misr = estimate_misr_n(mcfg, 1);
    const double g0 = g0_gain(1, misr.misr_n, misr_ppp(r.alpha));
    const double ginf = g_infinity(best_efir(r, cfg).value, delta);

    ResultTable t;
    t.columns = {"theta_db", "g", "g_db", "g0_db", "ginf_db"};
    for (const auto& [theta, g] : curve.points)
        t.add_row({to_db(theta), g, to_db(g), to_db(g0), to_db(ginf)});
    t.meta("skipped-grid-points", static_cast<std::uint64_t>(curve.skipped.size()));
    return t;
}

ResultTable run_asappp(const Resolved& r) {
    const double delta = 2.0 / r.alpha;
    const SimConfig cfg = to_config(r);
    const CcdfEstimate est = estimate_sir_ccdf(cfg);
    SimConfig mcfg = cfg;
    mcfg.theta_grid.clear();
    const MomentEstimate misr = estimate_misr_n(mcfg, 1);
    const double g0 = g0_gain(1, misr.misr_n, misr_ppp(r.alpha));

    ResultTable t;
    t.columns = {"theta_db", "p_sim", "p_asappp", "abs_err"};
    for (std::size_t i = 0; i < est.theta_grid.size(); ++i) {
        const double approx = asappp(est.theta_grid[i], g0, delta);
        t.add_row({to_db(est.theta_grid[i]), est.p_hat[i], approx,
                   std::fabs(approx - est.p_hat[i])});
    }
    t.meta("g0_db", to_db(g0));
    return t;
}

}  // namespace

ResultTable run(const ExperimentSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    const Resolved r = resolve(spec);
    ResultTable table;
    if (spec.command == "ps-ppp")
        table = run_ps_ppp(r);
    else if (spec.command == "misr")
        table = run_misr(r);
    else if (spec.command == "gen-misr")
        table = run_gen_misr(r);
    else if (spec.command == "efir")
        table = run_efir(r);
    else if (spec.command == "simulate")
        table = run_simulate(r);
    else if (spec.command == "gains")
        table = run_gains(r);
    else if (spec.command == "asappp")
        table = run_asappp(r);
    else
        throw std::invalid_argument("unknown command '" + spec.command + "'");

    ResultTable out;
    stamp_metadata(out, r);
    out.meta("version", kVersion);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    out.meta("wall-ms", static_cast<std::uint64_t>(ms));
    for (auto& kv : table.metadata) out.metadata.push_back(std::move(kv));
    out.columns = std::move(table.columns);
    out.rows = std::move(table.rows);
    return out;
}

ExperimentSpec spec_from_metadata(const std::vector<std::pair<std::string, std::string>>& metadata) {
    ExperimentSpec spec;
    for (const auto& [k, v] : metadata) {
        if (k == "command")
            spec.command = v;
        else if (k != "version" && k != "wall-ms" && k != "skipped-grid-points" && k != "g0_db")
            spec.params[k] = v;
    }
    if (spec.command.empty()) throw std::invalid_argument("metadata block has no command entry");
    return spec;
}

namespace {

std::string render_dat(const ResultTable& t) {
    std::ostringstream os;
    for (const auto& [k, v] : t.metadata) os << "# " << k << " = " << v << "\n";
    os << "#";
    for (const auto& c : t.columns) os << " " << c;
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << format_sig9(row[i]);
        os << "\n";
    }
    return os.str();
}

double feasible_eps(double alpha, double requested) {
    if (alpha <= 3.2) return std::max(requested, 0.05);
    if (alpha < 4.0) return std::max(requested, 0.02);
    return requested;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> figures(const ExperimentSpec& spec) {
    const Params p(spec);
    const std::uint64_t samples = p.integer("samples", 200000);
    const std::uint64_t seed = p.integer("seed", 1);
    const unsigned workers = static_cast<unsigned>(p.integer("workers", 0));

    auto base_cfg = [&](const NetworkModel& m, double alpha, double lo_db, double hi_db, int pts) {
        SimConfig cfg;
        cfg.model = m;
        cfg.alpha = alpha;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.workers = workers;
        cfg.truncation_eps = feasible_eps(alpha, 1e-3);
        cfg.theta_grid = theta_grid_db(lo_db, hi_db, pts);
        return cfg;
    };
    auto gain_levels = [&](const NetworkModel& m, double alpha) {
        SimConfig cfg = base_cfg(m, alpha, 0, 0, 1);
        cfg.theta_grid.clear();
        const MomentEstimate misr = estimate_misr_n(cfg, 1);
        SimConfig ecfg = cfg;
        ecfg.samples = std::max<std::uint64_t>(samples / 10, 1000);
        const double delta = 2.0 / alpha;
        const double efir = m.kind == ProcessKind::Ginibre
                                ? efir_ginibre(delta, cfg.fading, m.ginibre_c()).value
                                : estimate_efir(ecfg).value;
        return std::pair<double, double>{g0_gain(1, misr.misr_n, misr_ppp(alpha)),
                                         g_infinity(efir, delta)};
    };

    std::vector<std::pair<std::string, std::string>> files;

    {  // SIR ccdfs, PPP vs triangular, with the Jensen bound e^-theta (alpha = 4)
        const SimConfig cfg = base_cfg(NetworkModel::triangular_lattice(1.0), 4.0, -10, 20, 61);
        const CcdfEstimate tri = estimate_sir_ccdf(cfg);
        ResultTable t;
        t.meta("content", "SIR ccdf, alpha=4, Rayleigh: PPP analytic, triangular lattice simulated");
        t.columns = {"theta_db", "p_ppp", "p_tri", "exp_bound"};
        for (std::size_t i = 0; i < tri.theta_grid.size(); ++i) {
            const double theta = tri.theta_grid[i];
            t.add_row({to_db(theta), ps_ppp_rayleigh(theta, 0.5), tri.p_hat[i], std::exp(-theta)});
        }
        files.emplace_back("fig1_ccdf_ppp_tri.dat", render_dat(t));
    }
    {  // scaled ccdf of the square lattice with EFIR asymptote and bounds (alpha = 4)
        const SimConfig cfg = base_cfg(NetworkModel::square_lattice(1.0), 4.0, -5, 30, 71);
        const CcdfEstimate sq = estimate_sir_ccdf(cfg);
        SimConfig ecfg = cfg;
        ecfg.theta_grid.clear();
        ecfg.samples = std::max<std::uint64_t>(samples / 10, 1000);
        const double efir = estimate_efir(ecfg).value;
        const EfirResult bounds = lattice_efir_bounds(0.5);
        ResultTable t;
        t.meta("content", "theta^delta p_s for the square lattice, alpha=4, Rayleigh");
        t.columns = {"theta_db", "scaled_p", "asymptote", "bound_lower", "bound_upper"};
        for (std::size_t i = 0; i < sq.theta_grid.size(); ++i) {
            const double theta = sq.theta_grid[i];
            t.add_row({to_db(theta), std::sqrt(theta) * sq.p_hat[i], std::sqrt(efir),
                       std::sqrt(*bounds.lower), std::sqrt(*bounds.upper)});
        }
        files.emplace_back("fig4_square_scaled.dat", render_dat(t));
    }
    for (double alpha : {3.0, 4.0}) {  // gain curves for both lattices
        const double delta = 2.0 / alpha;
        const double hi_db = alpha == 3.0 ? 24.0 : 30.0;
        const SimConfig scfg = base_cfg(NetworkModel::square_lattice(1.0), alpha, -10, hi_db, 41);
        const SimConfig tcfg = base_cfg(NetworkModel::triangular_lattice(1.0), alpha, -10, hi_db, 41);
        const GainCurve gsq = gain_curve(estimate_sir_ccdf(scfg), delta);
        const GainCurve gtri = gain_curve(estimate_sir_ccdf(tcfg), delta);
        const auto [g0s, gis] = gain_levels(NetworkModel::square_lattice(1.0), alpha);
        const auto [g0t, git] = gain_levels(NetworkModel::triangular_lattice(1.0), alpha);
        ResultTable t;
        t.meta("content", "G(theta) for square and triangular lattices, Rayleigh");
        t.meta("alpha", alpha);
        t.columns = {"theta_db", "g_sq_db", "g_tri_db", "g0_sq_db", "ginf_sq_db", "g0_tri_db",
                     "ginf_tri_db"};
        const std::size_t n = std::min(gsq.points.size(), gtri.points.size());
        for (std::size_t i = 0; i < n; ++i)
            t.add_row({to_db(gsq.points[i].first), to_db(gsq.points[i].second),
                       to_db(gtri.points[i].second), to_db(g0s), to_db(gis), to_db(g0t),
                       to_db(git)});
        files.emplace_back(alpha == 3.0 ? "fig5_gains_lattices_a3.dat" : "fig5_gains_lattices_a4.dat",
                           render_dat(t));
    }
    {  // lattice gains vs alpha
        ResultTable t;
        t.meta("content", "asymptotic gains vs alpha for the lattices, Rayleigh");
        t.columns = {"alpha", "g0_sq", "ginf_sq", "g0_tri", "ginf_tri"};
        for (double alpha : {3.0, 3.5, 4.0, 4.5, 5.0}) {
            const auto [g0s, gis] = gain_levels(NetworkModel::square_lattice(1.0), alpha);
            const auto [g0t, git] = gain_levels(NetworkModel::triangular_lattice(1.0), alpha);
            t.add_row({alpha, g0s, gis, g0t, git});
        }
        files.emplace_back("fig6_gains_vs_alpha.dat", render_dat(t));
    }
    {  // Ginibre scaled ccdf with quadrature asymptote (alpha = 4)
        const SimConfig cfg = base_cfg(NetworkModel::ginibre(1.0), 4.0, -5, 30, 71);
        const CcdfEstimate gin = estimate_sir_ccdf(cfg);
        const double efir = efir_ginibre(0.5, FadingModel::rayleigh(), NetworkModel::ginibre(1.0).ginibre_c()).value;
        ResultTable t;
        t.meta("content", "theta^delta p_s for the Ginibre process, alpha=4, Rayleigh");
        t.columns = {"theta_db", "scaled_p", "asymptote"};
        for (std::size_t i = 0; i < gin.theta_grid.size(); ++i) {
            const double theta = gin.theta_grid[i];
            t.add_row({to_db(theta), std::sqrt(theta) * gin.p_hat[i], std::sqrt(efir)});
        }
        files.emplace_back("fig7_ginibre_scaled.dat", render_dat(t));
    }
    {  // Ginibre gains vs alpha
        ResultTable t;
        t.meta("content", "Ginibre asymptotic gains vs alpha, Rayleigh");
        t.columns = {"alpha", "g0", "ginf", "alpha_over_2"};
        for (double alpha : {3.0, 4.0, 5.0}) {
            const auto [g0, gi] = gain_levels(NetworkModel::ginibre(1.0), alpha);
            t.add_row({alpha, g0, gi, alpha / 2.0});
        }
        files.emplace_back("fig8_ginibre_gains.dat", render_dat(t));
    }
    {
        std::ostringstream gp;
        gp << "set terminal pngcairo size 900,600\nset grid\nset key bottom left\n"
           << "set logscale x 10\n\n"
           << "set output 'fig1.png'\nset xlabel 'theta'\nset ylabel 'P(SIR > theta)'\n"
           << "plot 'fig1_ccdf_ppp_tri.dat' using (10**($1/10)):2 with lines title 'PPP', \\\n"
           << "     '' using (10**($1/10)):3 with lines title 'triangular', \\\n"
           << "     '' using (10**($1/10)):4 with lines dt 3 title 'exp(-theta)'\n\n"
           << "set output 'fig4.png'\nset ylabel 'theta^d p_s'\n"
           << "plot 'fig4_square_scaled.dat' using (10**($1/10)):2 with lines title 'square lattice', \\\n"
           << "     '' using (10**($1/10)):3 with lines dt 2 title 'sqrt(EFIR)', \\\n"
           << "     '' using (10**($1/10)):4 with lines dt 3 title 'bounds', \\\n"
           << "     '' using (10**($1/10)):5 with lines dt 3 notitle\n\n"
           << "set output 'fig5a.png'\nset ylabel 'G (dB)'\n"
           << "plot 'fig5_gains_lattices_a3.dat' using (10**($1/10)):2 with lines title 'square', \\\n"
           << "     '' using (10**($1/10)):3 with lines title 'triangular', \\\n"
           << "     '' using (10**($1/10)):4 with lines dt 2 notitle, \\\n"
           << "     '' using (10**($1/10)):5 with lines dt 2 notitle, \\\n"
           << "     '' using (10**($1/10)):6 with lines dt 3 notitle, \\\n"
           << "     '' using (10**($1/10)):7 with lines dt 3 notitle\n\n"
           << "set output 'fig5b.png'\n"
           << "plot 'fig5_gains_lattices_a4.dat' using (10**($1/10)):2 with lines title 'square', \\\n"
           << "     '' using (10**($1/10)):3 with lines title 'triangular', \\\n"
           << "     '' using (10**($1/10)):4 with lines dt 2 notitle, \\\n"
           << "     '' using (10**($1/10)):5 with lines dt 2 notitle, \\\n"
           << "     '' using (10**($1/10)):6 with lines dt 3 notitle, \\\n"
           << "     '' using (10**($1/10)):7 with lines dt 3 notitle\n\n"
           << "unset logscale x\nset output 'fig6.png'\nset xlabel 'alpha'\nset ylabel 'gain'\n"
           << "plot 'fig6_gains_vs_alpha.dat' using 1:2 with linespoints title 'G0 square', \\\n"
           << "     '' using 1:3 with linespoints title 'Ginf square', \\\n"
           << "     '' using 1:4 with linespoints title 'G0 triangular', \\\n"
           << "     '' using 1:5 with linespoints title 'Ginf triangular'\n\n"
           << "set logscale x 10\nset output 'fig7.png'\nset xlabel 'theta'\nset ylabel 'theta^d p_s'\n"
           << "plot 'fig7_ginibre_scaled.dat' using (10**($1/10)):2 with lines title 'Ginibre', \\\n"
           << "     '' using (10**($1/10)):3 with lines dt 2 title 'sqrt(EFIR)'\n\n"
           << "unset logscale x\nset output 'fig8.png'\nset xlabel 'alpha'\nset ylabel 'gain'\n"
           << "plot 'fig8_ginibre_gains.dat' using 1:2 with linespoints title 'G0', \\\n"
           << "     '' using 1:3 with linespoints title 'Ginf', \\\n"
           << "     '' using 1:4 with lines dt 2 title 'alpha/2'\n";
        files.emplace_back("sirnet_figures.gp", gp.str());
    }
    return files;
}

}  // namespace sirnet
