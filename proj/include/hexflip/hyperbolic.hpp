#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

// Poincare-disc primitives: points, PU(1,1) isometries in the (a,b) lift,
// geodesics, half-turns, classification, the Delta invariant and the
// commutator decomposition into three half-turns.

namespace hexflip {

using cplx = std::complex<double>;

constexpr double kTolId = 1e-9;     // identity / residual tolerance
constexpr double kTolClass = 1e-8;  // trace-band classification tolerance

struct Point {
    cplx z{0.0, 0.0};

    Point() = default;
    explicit Point(cplx c) : z(c) {}
    Point(double re, double im) : z(re, im) {}
};

bool in_disc(const Point& p);
void require_in_disc(const Point& p, const char* who);

// Unit-determinant element of the PU(1,1) lift, stored as the top row of
//   [ a  b ; conj(b)  conj(a) ],   |a|^2 - |b|^2 = 1.
// The sign of the lift is carried explicitly; `age` counts compositions
// since the last renormalization (drift control for long products).
struct Moebius {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};
    int age = 0;

    Moebius() = default;
    Moebius(cplx a_, cplx b_) : a(a_), b(b_) {}

    double det() const { return std::norm(a) - std::norm(b); }
    double trace() const { return 2.0 * a.real(); }  // a + conj(a)

    Moebius inverse() const { return Moebius(std::conj(a), -b); }
    Moebius negated() const { return Moebius(-a, -b); }

    void renormalize();
};

enum class IsoClass { Identity, Elliptic, Parabolic, Hyperbolic };

const char* iso_class_name(IsoClass c);

// Oriented geodesic, stored by its ideal endpoints (unit complex numbers),
// oriented from `u` to `v`.
struct Geodesic {
    cplx u{-1.0, 0.0};
    cplx v{1.0, 0.0};

    Geodesic() = default;
    Geodesic(cplx u_, cplx v_);

    Geodesic reversed() const { return Geodesic(v, u); }
    bool is_diameter() const { return std::abs(u + v) < 1e-12; }
};

// --- isometries -----------------------------------------------------------

Moebius identity_iso();
Moebius half_turn(const Point& p);
Moebius compose(const Moebius& m2, const Moebius& m1);  // apply m1 first
Point apply(const Moebius& m, const Point& p);
cplx apply_boundary(const Moebius& m, cplx w);

Moebius rotate_about(const Point& p, double theta);
Moebius translate_along(const Geodesic& g, double d);
Moebius disc_translation(const Point& p);  // 0 -> p along the connecting geodesic

double frobenius_distance(const Moebius& m, const Moebius& n);
// min over sign of ||m -+ n||_F, i.e. projective distance between lifts
double projective_distance(const Moebius& m, const Moebius& n);

IsoClass classify(const Moebius& m, double tol = kTolClass);

struct EllipticData {
    Point center;
    double angle;  // in (-pi, pi], orientation-signed
};
struct HyperbolicData {
    Geodesic axis;  // oriented by the translation direction
    double length;  // > 0
};

EllipticData elliptic_data(const Moebius& m, double tol = kTolClass);
HyperbolicData hyperbolic_data(const Moebius& m, double tol = kTolClass);

// --- metric and geodesics --------------------------------------------------

double distance(const Point& p, const Point& q);
Point midpoint(const Point& p, const Point& q);

Geodesic geodesic_through(const Point& p, const Point& q);
Point project_onto(const Point& p, const Geodesic& g);
Point reflect_across(const Point& p, const Geodesic& g);
double distance_to_geodesic(const Point& p, const Geodesic& g);

// Isometry mapping g to the real-axis geodesic (-1, 1), orientation kept.
Moebius to_real_axis(const Geodesic& g);

// Signed arclength coordinate along g of the projection of p.  Differences
// are genuine signed distances along g; the origin is a fixed point of g.
double axis_coordinate(const Geodesic& g, const Point& p);
Point point_at_coordinate(const Geodesic& g, double t);

struct Crossing {
    Point at;
};
struct Asymptotic {
    cplx ideal;  // shared ideal endpoint
};
struct Disjoint {
    Geodesic perpendicular;
    double gap;  // distance between the two lines
};

struct GeodesicRelation {
    enum class Kind { Crossing, Asymptotic, Disjoint } kind;
    Point at;            // Crossing
    cplx ideal{0, 0};    // Asymptotic
    Geodesic perp;       // Disjoint
    double gap = 0.0;    // Disjoint
};

GeodesicRelation geodesics_relation(const Geodesic& g1, const Geodesic& g2,
                                    double tol = kTolClass);

// Busemann function for ideal point omega, normalized to 0 at the origin.
double busemann(cplx omega, const Point& p);
// Arc length along the horocycle through p centered at omega, to the line d
// (d must end at omega): equals 2 sinh(d_hyp/2) to the matching-height point.
double horocyclic_distance(cplx omega, const Point& p, const Geodesic& d);
// The point of d on the same horocycle (centered at omega) as p.
Point horocycle_foot(cplx omega, const Point& p, const Geodesic& d);

// --- invariants ------------------------------------------------------------

// sinh(h) sinh(d(p1,p2)) = |trace(s3 s2 s1)| / 2; permutation invariant.
double delta_invariant(const Point& p1, const Point& p2, const Point& p3);

struct CommutatorPoints {
    Point x1, x2, x3;  // A = s2 s1, B = s2 s3
};

// Decompose a pair of hyperbolic isometries with crossing axes into three
// half-turn centers, so that [A,B] = B^-1 A^-1 B A = (s3 s2 s1)^2.
CommutatorPoints commutator_points(const Moebius& A, const Moebius& B,
                                   double tol = kTolClass);

// --- errors ----------------------------------------------------------------

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct classification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hexflip
