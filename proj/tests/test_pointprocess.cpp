#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "sirnet/pointprocess.hpp"

using namespace sirnet;

namespace {

// two-sample Kolmogorov-Smirnov distance
double ks_distance(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                                  static_cast<double>(j) / b.size()));
    }
    return d;
}

// one-sample KS distance against a cdf
template <class Cdf>
double ks_distance_cdf(std::vector<double> a, Cdf cdf) {
    std::sort(a.begin(), a.end());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double f = cdf(a[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i) / a.size()));
        d = std::max(d, std::fabs(f - static_cast<double>(i + 1) / a.size()));
    }
    return d;
}

std::vector<double> nearest_samples(const NetworkModel& model, double alpha, double eps, int n,
                                    std::uint64_t seed, bool palm = false) {
    const SampleBudget budget = resolve_budget(model, alpha, eps);
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        const DistanceSet ds = palm ? sample_palm_distances(model, alpha, budget, rng)
                                    : sample_distances(model, alpha, budget, rng);
        out.push_back(ds.values.front());
    }
    return out;
}

}  // namespace

TEST_CASE("PPP: expected point count in the disk") {
    const auto model = NetworkModel::ppp(1.0);
    const SampleBudget budget{10.0, 0, 0.5};  // explicit radius; generous eps so it validates
    double count = 0;
    const int runs = 10000;
    for (int i = 0; i < runs; ++i) {
        Rng rng = Rng::substream(11, i);
        count += static_cast<double>(sample_distances(model, 4.0, budget, rng).values.size());
    }
    CHECK(std::fabs(count / runs - 100.0 * M_PI) < 1.0);
}

TEST_CASE("PPP: nearest distance is Rayleigh distributed") {
    const auto xs = nearest_samples(NetworkModel::ppp(1.0), 4.0, 1e-3, 100000, 5);
    const double d =
        ks_distance_cdf(xs, [](double r) { return 1.0 - std::exp(-M_PI * r * r); });
    CHECK(d < 1.63 / std::sqrt(100000.0));  // 1% KS critical value
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    CHECK(std::fabs(mean - 0.5) < 0.005);
}

TEST_CASE("PPP: Palm sampling is the stationary law (Slivnyak)") {
    const auto a = nearest_samples(NetworkModel::ppp(1.0), 4.0, 1e-3, 100000, 21, false);
    const auto b = nearest_samples(NetworkModel::ppp(1.0), 4.0, 1e-3, 100000, 22, true);
    CHECK(ks_distance(a, b) < 0.01);
}

TEST_CASE("square lattice: nearest-distance cdf is pi r^2 up to half the spacing") {
    const auto xs = nearest_samples(NetworkModel::square_lattice(1.0), 4.0, 1e-3, 100000, 9);
    for (double r : {0.2, 0.3, 0.5}) {
        const double expected = M_PI * r * r;
        const double p =
            static_cast<double>(std::count_if(xs.begin(), xs.end(), [&](double v) { return v <= r; })) /
            xs.size();
        CHECK(std::fabs(p - expected) < 3.0 * std::sqrt(expected * (1 - expected) / xs.size()) + 1e-4);
    }
}

TEST_CASE("lattice Palm views are the anchored lattices") {
    const SampleBudget budget = resolve_budget(NetworkModel::square_lattice(1.0), 4.0, 1e-3);
    Rng rng(1);
    const auto sq = sample_palm_distances(NetworkModel::square_lattice(1.0), 4.0, budget, rng);
    REQUIRE(sq.values.size() >= 4);
    for (int i = 0; i < 4; ++i) CHECK(sq.values[i] == doctest::Approx(1.0));
    CHECK(sq.values[4] == doctest::Approx(std::sqrt(2.0)));

    const auto tri = sample_palm_distances(NetworkModel::triangular_lattice(1.0), 4.0, budget, rng);
    REQUIRE(tri.values.size() >= 6);
    const double spacing = std::sqrt(2.0 / std::sqrt(3.0));
    for (int i = 0; i < 6; ++i) CHECK(tri.values[i] == doctest::Approx(spacing));
    CHECK(tri.values[6] > spacing * 1.5);
}

TEST_CASE("lattice point count inside radius r is lambda pi r^2 + O(r)") {
    for (auto kind : {ProcessKind::SquareLattice, ProcessKind::TriangularLattice}) {
        const NetworkModel model{kind, 1.0};
        for (double r : {3.0, 7.0, 14.0}) {
            const SampleBudget budget{r, 0, 0.9};
            for (int i = 0; i < 50; ++i) {
                Rng rng = Rng::substream(33, i);
                const auto ds = sample_distances(model, 4.0, budget, rng);
                CHECK(std::fabs(static_cast<double>(ds.values.size()) - M_PI * r * r) <=
                      4.0 * r + 4.0);
            }
        }
    }
}

TEST_CASE("Ginibre: squared moduli are Gamma(k, c)") {
    const auto model = NetworkModel::ginibre(1.0 / M_PI);  // c = 1
    CHECK(model.ginibre_c() == doctest::Approx(1.0));
    const SampleBudget budget = resolve_budget(model, 4.0, 1e-2);
    const double c = model.ginibre_c();
    const int k = budget.count;
    // sum_k Q_k over k <= K has mean K(K+1)/(2c) and variance K(K+1)/(2c^2)
    const int runs = 2000;
    double acc = 0.0;
    for (int i = 0; i < runs; ++i) {
        Rng rng = Rng::substream(17, i);
        const auto ds = sample_distances(model, 4.0, budget, rng);
        CHECK(static_cast<int>(ds.values.size()) == k);
        CHECK(std::is_sorted(ds.values.begin(), ds.values.end()));
        double sum_sq = 0.0;
        for (double d : ds.values) sum_sq += d * d;
        acc += sum_sq;
    }
    const double expect = k * (k + 1.0) / (2.0 * c);
    const double se = std::sqrt(k * (k + 1.0) / 2.0) / c / std::sqrt(static_cast<double>(runs));
    CHECK(std::fabs(acc / runs - expect) < 4.0 * se);
}

TEST_CASE("scale covariance: distances scale as 1/sqrt(lambda)") {
    for (auto kind : {ProcessKind::PPP, ProcessKind::SquareLattice, ProcessKind::Ginibre}) {
        const NetworkModel unit{kind, 1.0};
        const NetworkModel dense{kind, 4.0};
        auto a = nearest_samples(dense, 4.0, 1e-2, 40000, 51);
        for (auto& v : a) v *= 2.0;  // sqrt(4)
        const auto b = nearest_samples(unit, 4.0, 1e-2, 40000, 52);
        CHECK(ks_distance(a, b) < 1.63 * std::sqrt(2.0 / 40000.0));
    }
}

TEST_CASE("Ginibre repulsion: Palm nearest point is much farther than for the PPP") {
    const double lambda = 1.0;
    const double t = 0.1 / std::sqrt(lambda * M_PI);
    const auto gin = nearest_samples(NetworkModel::ginibre(lambda), 4.0, 1e-2, 1000000, 77, true);
    const auto ppp = nearest_samples(NetworkModel::ppp(lambda), 4.0, 1e-2, 1000000, 78, true);
    const auto below = [&](const std::vector<double>& v) {
        return static_cast<double>(std::count_if(v.begin(), v.end(), [&](double x) { return x < t; }));
    };
    CHECK(below(gin) < below(ppp));
    CHECK(below(gin) < 0.1 * below(ppp));
}

TEST_CASE("nearest_split") {
    DistanceSet d;
    d.values = {1.0, 2.0, 3.0};
    d.truncation_radius = 10.0;
    auto [r0, rest] = nearest_split(d);
    CHECK(r0 == 1.0);
    CHECK(rest.values == std::vector<double>{2.0, 3.0});
    d.values = {5.0};
    auto [r1, rest1] = nearest_split(d);
    CHECK(r1 == 5.0);
    CHECK(rest1.values.empty());
    d.values.clear();
    CHECK_THROWS_AS(nearest_split(d), std::domain_error);
}

TEST_CASE("budget rule and validation") {
    const auto model = NetworkModel::ppp(1.0);
    const SampleBudget budget = resolve_budget(model, 4.0, 1e-3);
    // residual 2 pi r^{2-a}/(a-2) == eps (2 sqrt(lambda))^a at the resolved radius
    CHECK(2.0 * M_PI / (budget.radius * budget.radius) / 2.0 ==
          doctest::Approx(1e-3 * 16.0).epsilon(1e-9));
    Rng rng(1);
    SampleBudget small = budget;
    small.radius *= 0.9;
    CHECK_THROWS_AS(sample_distances(model, 4.0, small, rng), truncation_error);

    const auto gin = NetworkModel::ginibre(1.0);
    SampleBudget gb = resolve_budget(gin, 4.0, 1e-3);
    gb.count /= 2;
    CHECK_THROWS_AS(sample_distances(gin, 4.0, gb, rng), truncation_error);
}

TEST_CASE("fast nearest-distance sampler agrees with the full samplers") {
    for (auto kind : {ProcessKind::PPP, ProcessKind::SquareLattice, ProcessKind::TriangularLattice,
                      ProcessKind::Ginibre}) {
        const NetworkModel model{kind, 1.0};
        const auto full = nearest_samples(model, 4.0, 1e-2, 50000, 91);
        std::vector<double> fast(50000);
        for (int i = 0; i < 50000; ++i) {
            Rng rng = Rng::substream(92, i);
            fast[i] = sample_nearest_distance(model, rng);
        }
        CHECK(ks_distance(fast, full) < 1.63 * std::sqrt(2.0 / 50000.0));
    }
}
