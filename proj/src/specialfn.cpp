#include "sirnet/specialfn.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sirnet {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr int kMaxSeriesTerms = 4000;

void check_kernel_domain(double delta, double theta) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("2F1 kernel: delta must be in (0,1)");
    if (!(theta >= 0.0)) throw std::domain_error("2F1 kernel: theta must be >= 0");
}

// sum of a term sequence given t0 and the ratio t_{n+1}/t_n
template <class Ratio>
double sum_series(double t0, Ratio ratio) {
    double sum = t0, term = t0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        term *= ratio(n);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) return sum;
    }
    return sum;
}

}  // namespace

double sincd(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("sincd: delta must be in (0,1)");
    return std::sin(kPi * delta) / (kPi * delta);
}

double gauss2f1_ps_kernel(double delta, double theta) {
    check_kernel_domain(delta, theta);
    const double d = delta;
    if (theta < 0.5) {
        // direct series: 1 + d * sum_{n>=1} (-1)^{n+1} theta^n / (n - d)
        double sum = 1.0, term = d * theta / (1.0 - d);
        for (int n = 1; n < kMaxSeriesTerms; ++n) {
            sum += term;
            if (std::fabs(term) < 1e-17 * sum) break;
            term *= -theta * (n - d) / (n + 1 - d);
        }
        return sum;
    }
    if (theta <= 2.0) {
        // Pfaff: (1+t)^d 2F1(-d,-d;1-d; t/(1+t)); all terms past n=0 positive
        const double w = theta / (1.0 + theta);
        const double hyp = sum_series(1.0, [&](int n) {
            const double nd = n - d;
            return nd * nd / ((n + 1 - d) * (n + 1)) * w;
        });
        return std::pow(1.0 + theta, d) * hyp;
    }
    // expansion about theta = infinity:
    //   t^d / sinc d + (d/t) sum_{n>=0} (-1)^n t^-n / (n+1+d)
    const double tail = sum_series(1.0 / (1.0 + d), [&](int n) {
        return -(n + 1 + d) / (n + 2 + d) / theta;
    });
    return std::pow(theta, d) / sincd(d) + d / theta * tail;
}

double gauss2f1_aux(double delta, double theta) {
    check_kernel_domain(delta, theta);
    const double d = delta;
    if (theta < 0.5) {
        // sum_n (1-d)/(n+1-d) (-theta)^n
        return sum_series(1.0, [&](int n) { return -(n + 1 - d) / (n + 2 - d) * theta; });
    }
    if (theta <= 2.0) {
        // Pfaff: (1+t)^{d-1} 2F1(1-d,1-d;2-d; t/(1+t))
        const double w = theta / (1.0 + theta);
        const double hyp = sum_series(1.0, [&](int n) {
            const double nd = n + 1 - d;
            return nd * nd / ((n + 2 - d) * (n + 1)) * w;
        });
        return std::pow(1.0 + theta, d - 1.0) * hyp;
    }
    // Gamma(2-d)Gamma(d) t^{d-1} - (1-d)/t * sum_n (-1)^n t^-n/(n+d)
    const double tail = sum_series(1.0 / d, [&](int n) { return -(n + d) / (n + 1 + d) / theta; });
    return std::tgamma(2.0 - d) * std::tgamma(d) * std::pow(theta, d - 1.0) -
           (1.0 - d) / theta * tail;
}

double incomplete_bell(int n, int k, std::span<const double> x) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("incomplete_bell: need 1 <= k <= n");
    if (n > 32) throw std::domain_error("incomplete_bell: n > 32 not supported");
    if (static_cast<int>(x.size()) != n - k + 1)
        throw std::domain_error("incomplete_bell: need exactly n-k+1 arguments");

    static const auto binom = [] {
        std::array<std::array<double, 33>, 33> c{};
        for (int i = 0; i <= 32; ++i) {
            c[i][0] = 1.0;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0.0);
        }
        return c;
    }();

    // B[m][j] for reachable (m,j); arguments above x_{n-k+1} never enter.
    std::vector<std::vector<double>> b(n + 1, std::vector<double>(k + 1, 0.0));
    b[0][0] = 1.0;
    for (int j = 1; j <= k; ++j) {
        for (int m = j; m <= n - (k - j); ++m) {
            double acc = 0.0;
            for (int i = 1; i <= m - j + 1; ++i)
                acc += binom[m - 1][i - 1] * x[i - 1] * b[m - i][j - 1];
            b[m][j] = acc;
        }
    }
    return b[n][k];
}

namespace {

// Hurwitz zeta(s, a) for s > 1, a > 0 by Euler-Maclaurin; ~1e-14 relative.
double hurwitz_zeta(double s, double a) {
    if (s >= 40.0) {
        double sum = 0.0;
        for (int n = 0; n < 64; ++n) {
            const double t = std::pow(n + a, -s);
            sum += t;
            if (t < 1e-18 * sum) break;
        }
        return sum;
    }
    static const double bern[] = {1.0 / 6,      -1.0 / 30,     1.0 / 42,   -1.0 / 30,
                                  5.0 / 66,     -691.0 / 2730, 7.0 / 6,    -3617.0 / 510,
                                  43867.0 / 798};
    const int N = 18;
    double sum = 0.0;
    for (int n = 0; n < N; ++n) sum += std::pow(n + a, -s);
    const double na = N + a;
    sum += std::pow(na, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(na, -s);
    double poch = s;                       // (s)_{2j-1}, starts at j=1
    double napow = std::pow(na, -s - 1.0); // (N+a)^{-s-2j+1}
    double fact = 2.0;                     // (2j)!
    for (int j = 1; j <= 9; ++j) {
        sum += bern[j - 1] / fact * poch * napow;
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        napow /= na * na;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

}  // namespace

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta: s must be > 1");
    return hurwitz_zeta(s, 1.0);
}

namespace {

// zeta(s,1/4) - zeta(s,3/4) with the 1/(s-1) pole terms combined analytically,
// so the difference stays finite through s = 1; valid for all s > 0.
double hurwitz_zeta_quarter_diff(double s) {
    if (s >= 40.0) {
        double sum = 0.0;
        for (int n = 0; n < 64; ++n) {
            const double t = std::pow(n + 0.25, -s) - std::pow(n + 0.75, -s);
            sum += t;
            if (std::fabs(t) < 1e-18 * std::fabs(sum)) break;
        }
        return sum;
    }
    static const double bern[] = {1.0 / 6,      -1.0 / 30,     1.0 / 42,   -1.0 / 30,
                                  5.0 / 66,     -691.0 / 2730, 7.0 / 6,    -3617.0 / 510,
                                  43867.0 / 798};
    const int N = 18;
    const double a = N + 0.25, b = N + 0.75;
    double sum = 0.0;
    for (int n = 0; n < N; ++n) sum += std::pow(n + 0.25, -s) - std::pow(n + 0.75, -s);
    // [(a^{1-s} - b^{1-s})]/(s-1) = -e^{u ln b} expm1(u ln(a/b))/u with u = 1-s
    const double u = 1.0 - s;
    const double lab = std::log(a / b);
    sum += u == 0.0 ? -lab : -std::exp(u * std::log(b)) * std::expm1(u * lab) / u;
    sum += 0.5 * (std::pow(a, -s) - std::pow(b, -s));
    double poch = s;
    double apow = std::pow(a, -s - 1.0), bpow = std::pow(b, -s - 1.0);
    double fact = 2.0;
    for (int j = 1; j <= 9; ++j) {
        sum += bern[j - 1] / fact * poch * (apow - bpow);
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        apow /= a * a;
        bpow /= b * b;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

}  // namespace

double dirichlet_beta(double s) {
    if (!(s > 0.0)) throw std::domain_error("dirichlet_beta: s must be > 0");
    return std::pow(4.0, -s) * hurwitz_zeta_quarter_diff(s);
}

double epstein_z(double x) {
    if (!(x > 2.0)) throw std::domain_error("epstein_z: x must be > 2");
    return 4.0 * riemann_zeta(x / 2.0) * dirichlet_beta(x / 2.0);
}

namespace {

// series for P(a,x), x < a+1
double gamma_p_series(double a, double x) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), x >= a+1
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw std::domain_error("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw std::domain_error("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

}  // namespace sirnet
