#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sirnet/fading.hpp"
#include "sirnet/quadrature.hpp"

using namespace sirnet;

namespace {

struct Stats {
    double mean, var, se_mean;
};

template <class F>
Stats sample_stats(F draw, int n) {
    double s = 0, s2 = 0;
    for (int i = 0; i < n; ++i) {
        const double v = draw();
        s += v;
        s2 += v * v;
    }
    const double mean = s / n;
    const double var = s2 / n - mean * mean;
    return {mean, var, std::sqrt(var / n)};
}

}  // namespace

TEST_CASE("ccdf values") {
    const auto ray = FadingModel::rayleigh();
    CHECK(ray.ccdf(0.0) == doctest::Approx(1.0));
    CHECK(ray.ccdf(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    const auto nak2 = FadingModel::nakagami(2);
    CHECK(nak2.ccdf(1.0) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(ray.ccdf(-0.1), std::domain_error);
}

TEST_CASE("moments") {
    const auto ray = FadingModel::rayleigh();
    CHECK(ray.moment(0.5) == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-12));
    CHECK(ray.moment(3.0) == doctest::Approx(6.0).epsilon(1e-12));
    for (int m : {1, 2, 5, 10}) CHECK(FadingModel::nakagami(m).moment(1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(ray.moment(-1.0), std::domain_error);
    CHECK_THROWS_AS(FadingModel::nakagami(2).moment(-2.0), std::domain_error);
}

TEST_CASE("laplace transform") {
    CHECK(FadingModel::rayleigh().laplace(1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(FadingModel::nakagami(2).laplace(2.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(FadingModel::nakagami(7).laplace(0.0) == doctest::Approx(1.0));
}

TEST_CASE("small-argument cdf parameters") {
    auto law = FadingModel::rayleigh().small_x_params();
    CHECK(law.m == 1);
    CHECK(law.c == doctest::Approx(1.0));
    law = FadingModel::nakagami(2).small_x_params();
    CHECK(law.m == 2);
    CHECK(law.c == doctest::Approx(2.0));
    law = FadingModel::nakagami(3).small_x_params();
    CHECK(law.c == doctest::Approx(4.5));
}

TEST_CASE("unit mean via integral of the ccdf") {
    for (int m : {1, 2, 4, 10}) {
        const auto model = FadingModel::nakagami(m);
        const double integral =
            integrate([&](double x) { return model.ccdf(x); }, 0.0, 60.0, 1e-10);
        CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("ccdf near zero follows 1 - c x^m") {
    const double x = 1e-3;
    for (int m : {1, 2, 3}) {
        const auto model = FadingModel::nakagami(m);
        const auto law = model.small_x_params();
        const double ratio = model.ccdf(x) / (1.0 - law.c * std::pow(x, law.m));
        CHECK(std::fabs(ratio - 1.0) < 1e-2 * m);
    }
}

TEST_CASE("sampling: empirical mean and variance") {
    Rng rng(42);
    const int n = 1000000;
    const auto ray = FadingModel::rayleigh();
    auto s = sample_stats([&] { return ray.sample(rng); }, n);
    CHECK(std::fabs(s.mean - 1.0) < 0.003);

    const auto nak2 = FadingModel::nakagami(2);
    s = sample_stats([&] { return nak2.sample(rng); }, n);
    CHECK(std::fabs(s.mean - 1.0) < 0.003);
    CHECK(std::fabs(s.var - 0.5) < 0.01);
}

TEST_CASE("sampling: small-gain probability of Nakagami(10)") {
    // P(h < 0.5) = P(10, 5) from the exact Erlang cdf
    const auto model = FadingModel::nakagami(10);
    const double p_exact = 1.0 - model.ccdf(0.5);
    Rng rng(7);
    const int n = 1000000;
    int count = 0;
    for (int i = 0; i < n; ++i)
        if (model.sample(rng) < 0.5) ++count;
    const double p_hat = static_cast<double>(count) / n;
    const double se = std::sqrt(p_exact * (1.0 - p_exact) / n);
    CHECK(std::fabs(p_hat - p_exact) < 3.0 * se);
    // and the exact deep-tail cdf value at x = 0.1 against an independent series
    double term = 1.0, sum = 0.0;  // P(Gamma(10,1) < 1) = e^-1 sum_{k>=10} 1/k!
    for (int k = 1; k <= 9; ++k) term /= k;
    for (int k = 10; k < 80; ++k) {
        term /= k;
        sum += term;
    }
    CHECK(1.0 - model.ccdf(0.1) == doctest::Approx(std::exp(-1.0) * sum).epsilon(1e-12));
}

TEST_CASE("laplace and fractional moments agree with Monte Carlo") {
    Rng rng(3);
    const int n = 400000;
    for (int m : {1, 2}) {
        const auto model = FadingModel::nakagami(m);
        for (double s : {0.1, 1.0, 10.0}) {
            auto st = sample_stats([&] { return std::exp(-s * model.sample(rng)); }, n);
            CHECK(std::fabs(st.mean - model.laplace(s)) < 3.0 * st.se_mean);
        }
        for (double t : {0.5, 2.0, 3.0}) {
            auto st = sample_stats([&] { return std::pow(model.sample(rng), t); }, n);
            CHECK(std::fabs(st.mean - model.moment(t)) < 3.0 * st.se_mean);
        }
    }
}

TEST_CASE("model construction") {
    CHECK(FadingModel::rayleigh().is_rayleigh());
    CHECK(FadingModel::nakagami(1).is_rayleigh());
    CHECK(!FadingModel::nakagami(2).is_rayleigh());
    CHECK_THROWS_AS(FadingModel::nakagami(0), std::domain_error);
}
