#pragma once

#include <span>

namespace sirnet {

// 2F1(1,-d; 1-d; -theta), the kernel of the Poisson success probability.
// Valid for d in (0,1), theta >= 0; relative accuracy ~1e-13 up to theta = 1e6.
double gauss2f1_ps_kernel(double delta, double theta);

// 2F1(1,1-d; 2-d; -theta), evaluated independently of the kernel above so the
// identity d*t*aux/(1-d) == kernel - 1 is a real cross-check.
double gauss2f1_aux(double delta, double theta);

// Incomplete (partial) Bell polynomial B_{n,k}(x_1,...,x_{n-k+1}) by the
// binomial recurrence; n <= 32.
double incomplete_bell(int n, int k, std::span<const double> x);

// Square-lattice Epstein zeta Z(x) = sum_{v != 0} |v|^-x = 4 zeta(x/2) beta(x/2), x > 2.
double epstein_z(double x);

// sinc d = sin(pi d)/(pi d) for d in (0,1)
double sincd(double delta);

// Riemann zeta (s > 1) and Dirichlet beta (s > 0), Euler-Maclaurin accelerated.
double riemann_zeta(double s);
double dirichlet_beta(double s);

// Regularized incomplete gamma P(a,x) (lower) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

}  // namespace sirnet
