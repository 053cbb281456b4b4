#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hexflip/braid.hpp"
#include "hexflip/hyperbolic.hpp"

// The Euclidean limit model: six complex numbers with alternating sum zero
// (translation gauge: mean zero), the Hermitian form h of signature (2,2),
// its quadratic form q cutting the cone of limit directions, the Euclidean
// braid action and area flows, the cohomology identification f1/f2, the
// restricted forms q_gamma, and the twist-distribution rank test.

namespace hexflip {

struct EucConfig {
    std::array<cplx, 6> p;

    const cplx& at(int i) const { return p[(i - 1) % 6]; }  // 1-based
    cplx& at(int i) { return p[(i - 1) % 6]; }
};

// alternating-sum residual -p1 + p2 - ... + p6
cplx alternating_sum(const EucConfig& v);
// subtract the mean (translation gauge); alternating sum is unchanged
EucConfig gauge_fix(const EucConfig& v);
void require_constrained(const EucConfig& v, double tol = 1e-9);

EucConfig euc_add(const EucConfig& a, const EucConfig& b);
EucConfig euc_sub(const EucConfig& a, const EucConfig& b);
EucConfig euc_scale(const EucConfig& a, cplx s);
double euc_norm(const EucConfig& a);

double area(cplx a, cplx b, cplx c);

// q by three routes (they agree on constrained configs):
double q_area_route(const EucConfig& v);      // Area(123) + Area(456)
double q_double_sum(const EucConfig& v);      // (1/4i) sum (-1)^{i+j} (...)
double q_symplectic_route(const EucConfig& v);
double q_form(const EucConfig& v);            // canonical: double-sum route

cplx h_form(const EucConfig& v, const EucConfig& w);  // Hermitian, h(v,v) = q(v)

// twisted-cocycle values on the genus-2 symplectic basis:
// u(a1) = p1 - p2, u(b1) = p3 - p2, u(a2) = p4 - p5, u(b2) = p6 - p5
struct SymplecticValues {
    cplx a1, b1, a2, b2;
};
SymplecticValues to_symplectic_values(const EucConfig& v);
EucConfig from_symplectic_values(const SymplecticValues& u);  // up to gauge

std::pair<int, int> signature_of_h();  // (n+, n-) on the 4-dim gauge slice

EucConfig euclid_leapfrog(const EucConfig& v, int i, int sign);
EucConfig euclid_apply_word(const EucConfig& v, const BraidWord& w);
EucConfig psi_flow(const EucConfig& v, double t);  // rotate triple 123 about p1-p2+p3

// f2(lambda) = (l1+l2, l2+l3, ..., l6+l1), gauge-fixed; f1 = cohomology side
using Lambda = std::array<cplx, 6>;
EucConfig f2_map(const Lambda& lambda);
cplx f1_cup(const Lambda& a, const Lambda& b);  // f1(a) . f1(b) via intersections
Lambda f2_preimage(const EucConfig& v);         // a representative, kernel modulo

// partition curves: a 3+3 split of the marked points, held as the canonical
// triple with a conjugating braid word moving it to slots (1,2,3)
struct PartitionCurve {
    std::array<int, 3> triple;  // sorted, contains the smallest element
    BraidWord conjugator;

    std::string name() const;
};

PartitionCurve make_curve(int i, int j, int k);
const std::vector<PartitionCurve>& all_curves();  // the canonical ten

// q_gamma in the period normalization of the Hermitian pairing, so that the
// trace functions satisfy F_gamma = +-8 q_gamma + o(|v|^2):
// for the standard curve, q_gamma(v) = 1/4 Im(u(a1) conj(u(b1))).
double q_gamma(const EucConfig& v, const PartitionCurve& curve);

// rank of the twist-direction span at a cone point, and with brackets added;
// reported both upstairs (in the 8-dim gauge slice) and in the S^1 quotient
struct DistributionRank {
    int rank_upstairs;
    int rank_brackets_upstairs;
    int rank_quotient;
    int rank_brackets_quotient;
};

DistributionRank distribution_rank(const EucConfig& v, double rel_threshold = 1e-8);

// sample a generic cone direction (q = 0, non-aligned), unit norm
EucConfig sample_cone_direction(std::uint64_t seed);

// minimal-residual phase alignment: min over theta of ||a - e^{i theta} b||
double phase_distance(const EucConfig& a, const EucConfig& b);

}  // namespace hexflip
