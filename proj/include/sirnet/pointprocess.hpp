#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sirnet/errors.hpp"
#include "sirnet/rng.hpp"

namespace sirnet {

enum class ProcessKind { PPP, SquareLattice, TriangularLattice, Ginibre };

// Stationary base-station process. Lattices carry an independent uniform
// translation over one fundamental cell; the Ginibre process has c = lambda*pi.
struct NetworkModel {
    ProcessKind kind = ProcessKind::PPP;
    double intensity = 1.0;

    static NetworkModel ppp(double lambda = 1.0) { return make(ProcessKind::PPP, lambda); }
    static NetworkModel square_lattice(double lambda = 1.0) { return make(ProcessKind::SquareLattice, lambda); }
    static NetworkModel triangular_lattice(double lambda = 1.0) { return make(ProcessKind::TriangularLattice, lambda); }
    static NetworkModel ginibre(double lambda = 1.0) { return make(ProcessKind::Ginibre, lambda); }

    double ginibre_c() const { return intensity * 3.141592653589793238462643; }

private:
    static NetworkModel make(ProcessKind k, double lambda) {
        if (!(lambda > 0.0)) throw std::domain_error("NetworkModel: intensity must be > 0");
        return NetworkModel{k, lambda};
    }
};

// Distances from the origin, ascending; points beyond truncation_radius omitted.
struct DistanceSet {
    std::vector<double> values;
    double truncation_radius = 0.0;
};

// Disk radius (all models) and radial term count (Ginibre), together with the
// truncation tolerance they were sized for.
struct SampleBudget {
    double radius = 0.0;
    int count = 0;  // Ginibre only
    double eps = 1e-3;
};

// Smallest budget whose residual mean interference beyond the radius,
// 2 pi lambda r^(2-alpha)/(alpha-2), is below eps times the signal power at the
// typical serving distance, (2 sqrt(lambda))^alpha. The Ginibre count cap K is
// the smallest K with P(Q_K < r^2) < 1e-6, Q_K ~ Gamma(K, c).
SampleBudget resolve_budget(const NetworkModel& model, double alpha, double eps);

// throws truncation_error if the budget violates the bound above
void validate_budget(const NetworkModel& model, double alpha, const SampleBudget& budget);

// Mean interference power (unit-mean fading) from the omitted far field.
double far_field_mean(const NetworkModel& model, double alpha, const SampleBudget& budget);

// Typical-user view: distances from the origin to all process points within budget.
DistanceSet sample_distances(const NetworkModel& model, double alpha, const SampleBudget& budget, Rng& rng);

// Reduced-Palm view: the process conditioned on a point at the origin, that point
// removed. PPP: unchanged (Slivnyak). Lattices: the anchored lattice, no shift.
// Ginibre: radii sqrt(Q_k) with Q_k ~ Gamma(k, c) for k >= palm_start; the default
// start of 2 drops the Gamma(1, c) term of the typical-user representation.
DistanceSet sample_palm_distances(const NetworkModel& model, double alpha, const SampleBudget& budget,
                                  Rng& rng, int palm_start = 2);

// (nearest distance, remaining distances)
std::pair<double, DistanceSet> nearest_split(const DistanceSet& d);

// Nearest-point distance only (exact, no truncation); cheap path for signal-tail runs.
double sample_nearest_distance(const NetworkModel& model, Rng& rng);

}  // namespace sirnet
