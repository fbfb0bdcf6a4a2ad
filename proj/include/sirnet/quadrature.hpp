#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sirnet {

namespace detail {

// nodes/weights of the 15-point Kronrod rule on [-1,1] (QUADPACK dqk15)
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGk15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGk15WeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kGk15Nodes[i]);
        fv[14 - i] = f(c + h * kGk15Nodes[i]);
    }
    fv[7] = f(c);
    double resk = kGk15WeightsK[7] * fv[7];
    double resg = kGk15WeightsG[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += kGk15WeightsK[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += kGk15WeightsG[i / 2] * (fv[i] + fv[14 - i]);
    }
    value = resk * h;
    error = std::fabs((resk - resg) * h);
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod 15(7): repeatedly bisect the cell carrying the
// largest error estimate until the summed error drops below rel_tol * |integral|.
template <class F>
double integrate(const F& f, double a, double b, double rel_tol = 1e-10, int max_cells = 2000) {
    struct Cell {
        double a, b, v, e;
        bool operator<(const Cell& o) const { return e < o.e; }
    };
    std::vector<Cell> heap;
    auto push = [&](double x, double y) {
        Cell c{x, y, 0.0, 0.0};
        detail::gk15(f, x, y, c.v, c.e);
        heap.push_back(c);
        std::push_heap(heap.begin(), heap.end());
        return c;
    };
    Cell first = push(a, b);
    double total_v = first.v, total_e = first.e;
    while (static_cast<int>(heap.size()) < max_cells) {
        if (total_e <= rel_tol * std::max(std::fabs(total_v), 1e-300)) break;
        if (total_e <= 1e-305) break;
        std::pop_heap(heap.begin(), heap.end());
        const Cell worst = heap.back();
        heap.pop_back();
        if (worst.b - worst.a < 1e-15 * (b - a)) {  // cannot refine further
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end());
            break;
        }
        total_v -= worst.v;
        total_e -= worst.e;
        const double mid = 0.5 * (worst.a + worst.b);
        const Cell left = push(worst.a, mid);
        const Cell right = push(mid, worst.b);
        total_v += left.v + right.v;
        total_e += left.e + right.e;
    }
    // re-sum in position order: deterministic and mildly more accurate
    std::sort(heap.begin(), heap.end(), [](const Cell& l, const Cell& r) { return l.a < r.a; });
    double sum = 0.0;
    for (const Cell& c : heap) sum += c.v;
    return sum;
}

// integral over [a, infinity) by dyadic blocks; throws if the blocks fail to decay
template <class F>
double integrate_to_infinity(const F& f, double a, double rel_tol = 1e-10) {
    double total = 0.0, lo = a, width = std::max(1.0, std::fabs(a));
    double prev_block = 0.0;
    int stall = 0;
    for (int blk = 0; blk < 70; ++blk) {
        const double hi = lo + width;
        const double part = integrate(f, lo, hi, rel_tol, 500);
        total += part;
        if (blk > 2 && std::fabs(part) <= rel_tol * std::max(std::fabs(total), 1e-300)) return total;
        if (blk > 4 && std::fabs(part) >= 0.9 * std::fabs(prev_block) && std::fabs(part) > 0) {
            if (++stall > 12) throw std::domain_error("integrate_to_infinity: integrand does not decay");
        } else {
            stall = 0;
        }
        prev_block = part;
        lo = hi;
        width *= 2.0;
    }
    throw std::domain_error("integrate_to_infinity: failed to converge");
}

}  // namespace sirnet
