#include "sirnet/pointprocess.hpp"

#include <algorithm>
#include <cmath>

#include "sirnet/specialfn.hpp"

namespace sirnet {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kGinibreCoverTail = 1e-6;  // P(Q_K < r_max^2) must stay below this

struct LatticeBasis {
    double b1x, b1y, b2x, b2y;
};

LatticeBasis lattice_basis(const NetworkModel& model) {
    if (model.kind == ProcessKind::SquareLattice) {
        const double s = 1.0 / std::sqrt(model.intensity);
        return {s, 0.0, 0.0, s};
    }
    // triangular: cell area s^2 sqrt(3)/2 = 1/lambda
    const double s = std::sqrt(2.0 / (std::sqrt(3.0) * model.intensity));
    return {s, 0.0, 0.5 * s, 0.5 * std::sqrt(3.0) * s};
}

void collect_lattice(const LatticeBasis& basis, double shift_x, double shift_y, double radius,
                     bool skip_origin, std::vector<double>& out) {
    out.clear();
    const double r2 = radius * radius;
    const int jlo = static_cast<int>(std::floor((-radius - shift_y) / basis.b2y));
    const int jhi = static_cast<int>(std::ceil((radius - shift_y) / basis.b2y));
    for (int j = jlo; j <= jhi; ++j) {
        const double y = j * basis.b2y + shift_y;
        const double xoff = j * basis.b2x + shift_x;
        const int ilo = static_cast<int>(std::floor((-radius - xoff) / basis.b1x));
        const int ihi = static_cast<int>(std::ceil((radius - xoff) / basis.b1x));
        for (int i = ilo; i <= ihi; ++i) {
            const double x = i * basis.b1x + xoff;
            const double d2 = x * x + y * y;
            if (d2 > r2) continue;
            if (skip_origin && d2 == 0.0) continue;
            out.push_back(std::sqrt(d2));
        }
    }
    std::sort(out.begin(), out.end());
}

double residual_interference(double lambda, double alpha, double radius) {
    return 2.0 * kPi * lambda * std::pow(radius, 2.0 - alpha) / (alpha - 2.0);
}

double signal_scale(double lambda, double alpha) {
    // signal power at the typical serving distance 1/(2 sqrt(lambda))
    return std::pow(2.0 * std::sqrt(lambda), alpha);
}

double ginibre_effective_radius(const NetworkModel& model, const SampleBudget& budget) {
    return std::sqrt(budget.count / model.ginibre_c());
}

}  // namespace

SampleBudget resolve_budget(const NetworkModel& model, double alpha, double eps) {
    if (!(alpha > 2.0)) throw std::domain_error("resolve_budget: alpha must be > 2");
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("resolve_budget: eps must be in (0,1)");
    SampleBudget budget;
    budget.eps = eps;
    const double lambda = model.intensity;
    budget.radius = std::pow(2.0 * kPi * lambda / (eps * (alpha - 2.0) * signal_scale(lambda, alpha)),
                             1.0 / (alpha - 2.0));
    if (model.kind == ProcessKind::Ginibre) {
        const double x = model.ginibre_c() * budget.radius * budget.radius;
        int k = static_cast<int>(std::ceil(x + 5.5 * std::sqrt(x) + 10.0));
        while (k > 1 && gamma_p(k - 1, x) < kGinibreCoverTail) --k;
        while (gamma_p(k, x) >= kGinibreCoverTail) ++k;
        budget.count = k;
    }
    return budget;
}

void validate_budget(const NetworkModel& model, double alpha, const SampleBudget& budget) {
    if (!(alpha > 2.0)) throw std::domain_error("validate_budget: alpha must be > 2");
    const double lambda = model.intensity;
    const double bound = budget.eps * signal_scale(lambda, alpha);
    if (!(budget.radius > 0.0) ||
        residual_interference(lambda, alpha, budget.radius) > bound * (1.0 + 1e-9)) {
        throw truncation_error("sampling budget too small for requested truncation eps");
    }
    if (model.kind == ProcessKind::Ginibre) {
        if (budget.count < 1 ||
            gamma_p(budget.count, model.ginibre_c() * budget.radius * budget.radius) >=
                kGinibreCoverTail * (1.0 + 1e-9)) {
            throw truncation_error("Ginibre term count does not cover the truncation radius");
        }
    }
}

double far_field_mean(const NetworkModel& model, double alpha, const SampleBudget& budget) {
    const double r = model.kind == ProcessKind::Ginibre ? ginibre_effective_radius(model, budget)
                                                        : budget.radius;
    return residual_interference(model.intensity, alpha, r);
}

DistanceSet sample_distances(const NetworkModel& model, double alpha, const SampleBudget& budget,
                             Rng& rng) {
    validate_budget(model, alpha, budget);
    DistanceSet out;
    out.truncation_radius = model.kind == ProcessKind::Ginibre
                                ? ginibre_effective_radius(model, budget)
                                : budget.radius;
    switch (model.kind) {
        case ProcessKind::PPP: {
            const double mean = model.intensity * kPi * budget.radius * budget.radius;
            const std::uint64_t n = rng.poisson(mean);
            out.values.resize(n);
            for (auto& v : out.values) v = budget.radius * std::sqrt(rng.uniform());
            std::sort(out.values.begin(), out.values.end());
            break;
        }
        case ProcessKind::SquareLattice:
        case ProcessKind::TriangularLattice: {
            const LatticeBasis basis = lattice_basis(model);
            const double u1 = rng.uniform(), u2 = rng.uniform();
            collect_lattice(basis, u1 * basis.b1x + u2 * basis.b2x, u1 * basis.b1y + u2 * basis.b2y,
                            budget.radius, false, out.values);
            break;
        }
        case ProcessKind::Ginibre: {
            const double c = model.ginibre_c();
            out.values.resize(budget.count);
            for (int k = 1; k <= budget.count; ++k)
                out.values[k - 1] = std::sqrt(rng.gamma(static_cast<double>(k)) / c);
            std::sort(out.values.begin(), out.values.end());
            break;
        }
    }
    return out;
}

DistanceSet sample_palm_distances(const NetworkModel& model, double alpha, const SampleBudget& budget,
                                  Rng& rng, int palm_start) {
    if (palm_start < 1) throw std::domain_error("sample_palm_distances: palm_start must be >= 1");
    validate_budget(model, alpha, budget);
    DistanceSet out;
    out.truncation_radius = model.kind == ProcessKind::Ginibre
                                ? ginibre_effective_radius(model, budget)
                                : budget.radius;
    switch (model.kind) {
        case ProcessKind::PPP:
            // Slivnyak: reduced Palm distribution equals the stationary one
            return sample_distances(model, alpha, budget, rng);
        case ProcessKind::SquareLattice:
        case ProcessKind::TriangularLattice: {
            const LatticeBasis basis = lattice_basis(model);
            collect_lattice(basis, 0.0, 0.0, budget.radius, true, out.values);
            break;
        }
        case ProcessKind::Ginibre: {
            const double c = model.ginibre_c();
            out.values.reserve(budget.count - palm_start + 1);
            for (int k = palm_start; k <= budget.count; ++k)
                out.values.push_back(std::sqrt(rng.gamma(static_cast<double>(k)) / c));
            std::sort(out.values.begin(), out.values.end());
            break;
        }
    }
    return out;
}

std::pair<double, DistanceSet> nearest_split(const DistanceSet& d) {
    if (d.values.empty()) throw std::domain_error("nearest_split: empty distance set");
    DistanceSet rest;
    rest.truncation_radius = d.truncation_radius;
    rest.values.assign(d.values.begin() + 1, d.values.end());
    return {d.values.front(), std::move(rest)};
}

double sample_nearest_distance(const NetworkModel& model, Rng& rng) {
    switch (model.kind) {
        case ProcessKind::PPP:
            return std::sqrt(rng.exponential() / (model.intensity * kPi));
        case ProcessKind::SquareLattice: {
            const double s = 1.0 / std::sqrt(model.intensity);
            const double u1 = rng.uniform(), u2 = rng.uniform();
            const double dx = std::min(u1, 1.0 - u1), dy = std::min(u2, 1.0 - u2);
            return s * std::hypot(dx, dy);
        }
        case ProcessKind::TriangularLattice: {
            const LatticeBasis b = lattice_basis(model);
            const double u1 = rng.uniform(), u2 = rng.uniform();
            double best = 1e300;
            for (int i = -2; i <= 1; ++i) {
                for (int j = -2; j <= 1; ++j) {
                    const double x = (i + u1) * b.b1x + (j + u2) * b.b2x;
                    const double y = (j + u2) * b.b2y;
                    best = std::min(best, x * x + y * y);
                }
            }
            return std::sqrt(best);
        }
        case ProcessKind::Ginibre: {
            const double c = model.ginibre_c();
            double best = 1e300;
            for (int k = 1; k <= 40; ++k) best = std::min(best, rng.gamma(static_cast<double>(k)));
            return std::sqrt(best / c);
        }
    }
    throw std::logic_error("sample_nearest_distance: unreachable");
}

}  // namespace sirnet
