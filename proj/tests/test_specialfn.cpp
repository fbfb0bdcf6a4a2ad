#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "sirnet/specialfn.hpp"

using namespace sirnet;

namespace {

// Independent Bell-polynomial oracle: sum over partitions of n into k parts,
//   B_{n,k} = sum n! / (prod_i j_i! (i!)^{j_i}) * prod_i x_i^{j_i},
// enumerated recursively. Small n only.
double bell_oracle(int n, int k, const std::vector<double>& x) {
    double total = 0.0;
    // j[i-1] = multiplicity of part i
    std::vector<int> j(n, 0);
    auto fact = [](int v) {
        double f = 1;
        for (int i = 2; i <= v; ++i) f *= i;
        return f;
    };
    std::function<void(int, int, int)> rec = [&](int part, int parts_left, int weight_left) {
        if (parts_left == 0) {
            if (weight_left != 0) return;
            double term = fact(n);
            for (int i = 1; i <= n; ++i) {
                if (j[i - 1] == 0) continue;
                term *= std::pow(x[i - 1], j[i - 1]) /
                        (fact(j[i - 1]) * std::pow(fact(i), j[i - 1]));
            }
            total += term;
            return;
        }
        if (part > weight_left) return;
        for (int cnt = 0; cnt * part <= weight_left && cnt <= parts_left; ++cnt) {
            j[part - 1] = cnt;
            rec(part + 1, parts_left - cnt, weight_left - cnt * part);
            j[part - 1] = 0;
        }
    };
    rec(1, k, n);
    return total;
}

// direct square-lattice sum, truncation radius 200, plus the continuum tail
// 2 pi R^{2-x}/(x-2) of the omitted far field
double epstein_oracle(double x) {
    const int R = 200;
    double sum = 0.0;
    for (int i = -R; i <= R; ++i)
        for (int j = -R; j <= R; ++j) {
            if (i == 0 && j == 0) continue;
            const double d2 = static_cast<double>(i) * i + static_cast<double>(j) * j;
            if (d2 > static_cast<double>(R) * R) continue;
            sum += std::pow(d2, -x / 2.0);
        }
    return sum + 2.0 * M_PI * std::pow(static_cast<double>(R), 2.0 - x) / (x - 2.0);
}

}  // namespace

TEST_CASE("2F1 kernel: trivial and closed-form values") {
    CHECK(gauss2f1_ps_kernel(0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gauss2f1_ps_kernel(0.3, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // alpha = 4 closed form: 1 + sqrt(t) atan sqrt(t)
    CHECK(gauss2f1_ps_kernel(0.5, 1.0) ==
          doctest::Approx(1.0 + std::atan(1.0)).epsilon(1e-11));
    CHECK(gauss2f1_ps_kernel(0.5, 100.0) ==
          doctest::Approx(1.0 + 10.0 * std::atan(10.0)).epsilon(1e-11));
}

TEST_CASE("2F1 kernel: closed form across the full theta range at delta = 1/2") {
    for (double theta : {1e-6, 1e-3, 0.1, 0.4, 0.5, 0.7, 1.0, 1.5, 2.0, 2.1, 5.0, 30.0, 1e3, 1e6}) {
        const double st = std::sqrt(theta);
        const double expected = 1.0 + st * std::atan(st);
        CHECK(gauss2f1_ps_kernel(0.5, theta) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("2F1 kernel: >= 1 and strictly increasing in theta") {
    for (double delta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double prev = 1.0;
        for (double theta : {0.0, 0.01, 0.3, 0.6, 1.0, 3.0, 10.0, 1e2, 1e4, 1e6}) {
            const double v = gauss2f1_ps_kernel(delta, theta);
            CHECK(v >= prev);
            if (theta > 0) CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("hypergeometric identity couples kernel and auxiliary function") {
    // d t 2F1(1,1-d;2-d;-t)/(1-d) == 2F1(1,-d;1-d;-t) - 1
    for (double delta : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        for (double theta : {1e-3, 0.1, 0.49, 0.8, 1.0, 1.9, 2.5, 10.0, 1e3}) {
            const double lhs = delta * theta * gauss2f1_aux(delta, theta) / (1.0 - delta);
            const double rhs = gauss2f1_ps_kernel(delta, theta) - 1.0;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        }
    }
}

TEST_CASE("2F1 kernel: domain errors") {
    CHECK_THROWS_AS(gauss2f1_ps_kernel(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(gauss2f1_ps_kernel(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(gauss2f1_ps_kernel(0.5, -0.1), std::domain_error);
}

TEST_CASE("incomplete Bell polynomials: boundary rows") {
    const std::vector<double> x1{2.5};
    CHECK(incomplete_bell(3, 3, x1) == doctest::Approx(2.5 * 2.5 * 2.5));  // B_{n,n} = x1^n
    const std::vector<double> x3{1.5, -2.0, 7.0};
    CHECK(incomplete_bell(3, 1, x3) == doctest::Approx(7.0));  // B_{n,1} = x_n
    const std::vector<double> x2{1.5, -2.0};
    CHECK(incomplete_bell(3, 2, x2) == doctest::Approx(3.0 * 1.5 * -2.0));  // 3 x1 x2
}

TEST_CASE("incomplete Bell polynomials match the partition oracle") {
    const std::vector<double> x{1.0, 2.0, 3.0, -1.0, 0.5, 2.0, 1.0, 4.0};
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            const std::vector<double> args(x.begin(), x.begin() + (n - k + 1));
            CHECK(incomplete_bell(n, k, args) ==
                  doctest::Approx(bell_oracle(n, k, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("complete Bell sums give the Bell numbers") {
    auto bell_number = [](int n) {
        double sum = 0.0;
        for (int k = 1; k <= n; ++k)
            sum += incomplete_bell(n, k, std::vector<double>(n - k + 1, 1.0));
        return sum;
    };
    CHECK(bell_number(3) == doctest::Approx(5.0));
    CHECK(bell_number(4) == doctest::Approx(15.0));
}

TEST_CASE("incomplete Bell: argument validation") {
    CHECK_THROWS_AS(incomplete_bell(3, 2, std::vector<double>{1.0}), std::domain_error);
    CHECK_THROWS_AS(incomplete_bell(3, 4, std::vector<double>{1.0}), std::domain_error);
    CHECK_THROWS_AS(incomplete_bell(33, 1, std::vector<double>(33, 1.0)), std::domain_error);
}

TEST_CASE("Epstein zeta: product identity values") {
    // Z(4) = 4 zeta(2) beta(2), beta(2) = Catalan
    const double catalan = 0.915965594177219015;
    CHECK(epstein_z(4.0) ==
          doctest::Approx(4.0 * (M_PI * M_PI / 6.0) * catalan).epsilon(1e-10));
    // Z(8) = 4 zeta(4) beta(4)
    const double zeta4 = std::pow(M_PI, 4) / 90.0;
    const double beta4 = 0.988944551741105336;
    CHECK(epstein_z(8.0) == doctest::Approx(4.0 * zeta4 * beta4).epsilon(1e-9));
}

TEST_CASE("Epstein zeta matches the direct lattice sum") {
    for (double x : {3.0, 4.0, 6.0})
        CHECK(epstein_z(x) == doctest::Approx(epstein_oracle(x)).epsilon(1e-6));
}

TEST_CASE("Epstein zeta: limit and domain") {
    CHECK(epstein_z(60.0) == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(epstein_z(500.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK_THROWS_AS(epstein_z(2.0), std::domain_error);
    CHECK_THROWS_AS(epstein_z(1.5), std::domain_error);
}

TEST_CASE("sinc") {
    CHECK(sincd(0.5) == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
    CHECK(sincd(0.001) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(sincd(0.999) == doctest::Approx(0.0).epsilon(1e-2));
    double prev = 1.0;
    for (double d = 0.05; d < 1.0; d += 0.05) {
        const double v = sincd(d);
        CHECK(v < prev);
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        prev = v;
    }
    CHECK_THROWS_AS(sincd(0.0), std::domain_error);
    CHECK_THROWS_AS(sincd(1.0), std::domain_error);
}

TEST_CASE("zeta and beta sanity") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-12));
    CHECK(riemann_zeta(4.0) == doctest::Approx(std::pow(M_PI, 4) / 90.0).epsilon(1e-12));
    CHECK(dirichlet_beta(1.0) == doctest::Approx(M_PI / 4.0).epsilon(1e-10));
    CHECK(dirichlet_beta(3.0) == doctest::Approx(std::pow(M_PI, 3) / 32.0).epsilon(1e-12));
}

TEST_CASE("regularized incomplete gamma") {
    CHECK(gamma_p(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    // P(10,1) = e^-1 sum_{k>=10} 1/k!
    double direct = 0.0, t = 1.0;
    for (int k = 1; k <= 9; ++k) t /= k;
    for (int k = 10; k < 80; ++k) {
        t /= k;
        direct += t;
    }
    direct *= std::exp(-1.0);
    CHECK(gamma_p(10.0, 1.0) == doctest::Approx(direct).epsilon(1e-10));
    CHECK(gamma_q(10.0, 1.0) == doctest::Approx(1.0 - direct).epsilon(1e-12));
}
