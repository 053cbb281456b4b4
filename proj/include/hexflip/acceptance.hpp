#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hexflip/sextuple.hpp"

// The acceptance suite: one named check per criterion, each printing a
// single pass/fail line, plus constructors for configurations of each
// trichotomy class used by the checks and the tests.

namespace hexflip {

// sextuple on a triangle: vertices doubled up as (A, B, B, C, C, A), then
// shuffled along the sides by leapfrog powers
Sextuple make_tri_config(std::uint64_t seed);
// three lines with a common ideal point, built in the half-plane and mapped in
Sextuple make_par_config(std::uint64_t seed, double scale = 1.0);
// skew right-angled hexagon: perpendicular feet of three reflection lines,
// the middle one crossed by the opposite side
Sextuple make_skh_config(std::uint64_t seed, double scale = 1.0);
// regular right-angled hexagon (HEX class, outside X0)
Sextuple make_hex_config(std::uint64_t seed, bool mirrored = false);
// four distinct collinear points with x5 = x6 off the line; ratio of the
// Euclid data d(x1,x4)/d(x1,x2) prescribed
Sextuple make_degenerate_config(double ratio, double scale = 0.5, double off = 0.3);

BraidWord random_word(std::uint64_t seed, int max_length);

namespace acceptance {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

using CheckFn = std::function<CheckResult()>;

const std::vector<std::pair<std::string, CheckFn>>& all_checks();

// runs checks whose name contains `filter` (all when empty); prints one
// line per criterion; returns the number of failures
int run_checks(const std::string& filter, std::ostream& os);

}  // namespace acceptance

}  // namespace hexflip
