#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "hexflip/braid.hpp"
#include "hexflip/hyperbolic.hpp"

// The configuration space Sex: six disc points whose half-turns compose to
// +-identity, the leapfrog/braid action, size functionals, the line
// trichotomy, auxiliary points, and the genus-2 correspondence.

namespace hexflip {

struct Sextuple {
    std::array<Point, 6> x;  // indices 1..6 are x[0..5], cyclic

    const Point& at(int i) const { return x[(i - 1) % 6]; }          // 1-based
    Point& at(int i) { return x[(i - 1) % 6]; }
    const Point& cyc(int i) const { return x[((i - 1) % 6 + 6) % 6]; }
};

struct ValidationResult {
    bool ok;
    double residual;  // min over sign of ||product -+ Id||
    int sign;         // +1 or -1, the closer lift
};

ValidationResult validate(const Sextuple& z, double tol = kTolId);
Moebius product_of_half_turns(const Sextuple& z);
// s_{x_{i+1}} s_{x_i}
Moebius pair_product(const Sextuple& z, int i);

Sextuple leapfrog(const Sextuple& z, int i, int sign);
// L_i^{2k+r} with the even part applied as a closed-form pair translation
Sextuple leapfrog_power(const Sextuple& z, int i, long k);
Sextuple cyclic_rot(const Sextuple& z);
Sextuple half_twist(const Sextuple& z, int i);
Sextuple apply_word(const Sextuple& z, const BraidWord& w);

double size_A(const Sextuple& z);
double size_B(const Sextuple& z);
double size_F(const Sextuple& z);
double pair_length(const Sextuple& z, int i);  // a_{i,i+1} = d(x_i, x_{i+1})

enum class ConfigTag { Singular, Aligned, DegeneratePair, Tri, Par, Skh, Hex };

struct ConfigClass {
    ConfigTag tag;
    int pair_index = 0;  // for DegeneratePair: 1, 3 or 5

    bool operator==(const ConfigClass&) const = default;
};

const char* config_tag_name(ConfigTag t);

ConfigClass classify_config(const Sextuple& z, double tol = kTolClass);

enum class ComponentId { X0, Xplus2, Xminus2 };
const char* component_name(ComponentId c);

ComponentId component_of(const Sextuple& z, double tol = kTolClass);

// Auxiliary points y_1..y_6 with s_{y_{i+1}} s_{y_i} = s_{x_{i+1}} s_{x_i}
// for i = 1,3,5, plus case-dependent extras.
struct AuxPoints {
    std::array<Point, 6> y;
    ConfigTag tag;
    // TRI extras: per side i = 1,3,5 (stored at slots 0,1,2)
    std::array<Point, 3> m, u, v;
    // SKH extras
    Point skh_m;                    // crossing of H61 with the long line D34
    std::array<double, 3> b;        // b_23, b_45, b_61 (hexagon H-side lengths)
    std::array<Geodesic, 3> hline;  // H23, H45, H61

    const Point& yat(int i) const { return y[(i - 1) % 6]; }
};

AuxPoints aux_points(const Sextuple& z, double tol = kTolClass);

struct Genus2Rep {
    Moebius A1, B1, A2, B2;
};

Genus2Rep to_genus2_rep(const Sextuple& z);
Sextuple from_genus2_rep(const Genus2Rep& rep, double tol = kTolClass);

Sextuple normalize(const Sextuple& z, double tol = 1e-9);

struct SampleStats {
    int attempts = 0;
};

Sextuple sample_random(std::uint64_t seed, double spread,
                       SampleStats* stats = nullptr, int max_attempts = 1000);

Sextuple singular_config();

}  // namespace hexflip
