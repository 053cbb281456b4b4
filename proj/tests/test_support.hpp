#pragma once

#include <random>

#include "hexflip/hyperbolic.hpp"
#include "hexflip/sextuple.hpp"

namespace hexflip::testsup {

inline Point random_point(std::mt19937_64& rng, double rmax = 0.8) {
    std::uniform_real_distribution<double> ur(0.0, rmax), ua(0.0, 6.283185307179586);
    return Point(std::polar(ur(rng), ua(rng)));
}

inline Moebius random_iso(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ua(0.0, 6.283185307179586);
    Moebius rot(std::polar(1.0, ua(rng) / 2.0), cplx(0, 0));
    Moebius t = disc_translation(random_point(rng, 0.7));
    return compose(t, rot);
}

inline double max_point_distance(const Sextuple& a, const Sextuple& b) {
    double m = 0.0;
    for (int i = 1; i <= 6; ++i) m = std::max(m, distance(a.at(i), b.at(i)));
    return m;
}

}  // namespace hexflip::testsup
