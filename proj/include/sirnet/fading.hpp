#pragma once

#include "sirnet/rng.hpp"

namespace sirnet {

// Unit-mean power fading: Nakagami-m (Gamma(m, rate m) power gain); m = 1 is Rayleigh.
// Integer m only, so the ccdf is an exact Erlang tail.
struct FadingModel {
    int m = 1;

    static FadingModel rayleigh() { return FadingModel{1}; }
    static FadingModel nakagami(int m);

    bool is_rayleigh() const { return m == 1; }

    double sample(Rng& rng) const;

    // F_bar(x) = P(h > x)
    double ccdf(double x) const;

    // E(h^t) = Gamma(m+t) / (Gamma(m) m^t), t > -m
    double moment(double t) const;

    // L_h(s) = E e^{-s h} = (1 + s/m)^-m
    double laplace(double s) const;

    // F_h(x) ~ c x^m as x -> 0, with c = m^{m-1}/Gamma(m)
    struct SmallXLaw {
        int m;
        double c;
    };
    SmallXLaw small_x_params() const;
};

}  // namespace sirnet
