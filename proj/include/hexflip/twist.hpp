#pragma once

#include "hexflip/euclidean.hpp"
#include "hexflip/morse.hpp"
#include "hexflip/sextuple.hpp"

// Partition-curve holonomies, rotation numbers, the 2 pi-periodic twist
// flows, and the lifted trace functions with their quadratic limits.

namespace hexflip {

// holonomy s_{x3'} s_{x2'} s_{x1'} of the conjugated configuration, in the
// fixed matrix lift
Moebius holonomy(const Sextuple& z, const PartitionCurve& curve);

// rotation number: the elliptic angle in [0, 2 pi), 0 for non-elliptic
double theta(const Sextuple& z, const PartitionCurve& curve, double tol = kTolClass);

// rotate the conjugated first triple about the holonomy's fixed point
Sextuple phi_flow(const Sextuple& z, const PartitionCurve& curve, double t,
                  double tol = kTolClass);

// lifted trace function; vanishes at the singular configuration
double f_gamma(const Sextuple& z, const PartitionCurve& curve);

struct TaylorComparison {
    double limit;      // extrapolated F_gamma / t^2
    int sign;          // sign of the limit
    double q_value;    // q_gamma(v)
    double rel_error;  // | |limit| - 8 |q| | / (8 |q|)
};

// F_gamma(lift(v, t)) / t^2 against 8 q_gamma(v)
TaylorComparison taylor_f_gamma(const EucConfig& v, const PartitionCurve& curve,
                                double t1 = 1e-2, double t2 = 1e-3);

}  // namespace hexflip
