#pragma once

#include "hexflip/euclidean.hpp"
#include "hexflip/sextuple.hpp"

// Exponential chart at the singular configuration: the product
// exp(xi_6) s_0 ... exp(xi_1) s_0 = -exp([i phi, F; conj F, -i phi]),
// extracted in closed form, and the Newton lift onto {F = 0, phi = 0}.

namespace hexflip {

struct MorseValue {
    cplx F;
    double phi;
};

// product exp(xi_j) s_0 over the six chart coordinates
Moebius chart_product(const EucConfig& z);

MorseValue morse_F_phi(const EucConfig& z, double chart_radius = 0.7);

// Point of the configuration attached to a chart coordinate:
// half-turn center tanh(|z|/2) e^{i arg z}.
Point chart_point_of(cplx z);

struct LiftResult {
    Sextuple config;
    EucConfig chart;   // the chart coordinates with F = 0, phi = 0
    int iterations;
    double residual;   // |F| + |phi| at the solution
};

// Newton solve in the unknowns (z5, z6) near t*v, minimal-norm updates
LiftResult lift_to_sextuple(const EucConfig& v, double t, int max_iterations = 50,
                            double target = 1e-13);

}  // namespace hexflip
