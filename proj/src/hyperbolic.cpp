#include "hexflip/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

namespace hexflip {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx unitize(cplx w) {
    double r = std::abs(w);
    if (r == 0.0) throw domain_error("unitize: zero vector has no direction");
    return w / r;
}

// Euclidean circle carrying a non-diameter geodesic: center c with
// Re(c conj(u)) = Re(c conj(v)) = 1, radius^2 = |c|^2 - 1.
struct ArcCircle {
    cplx c;
    double r;
};

ArcCircle arc_circle(const Geodesic& g) {
    cplx s = g.u + g.v;
    double n = std::norm(s);
    if (n < 1e-24) throw domain_error("arc_circle: geodesic is a diameter");
    cplx c = 2.0 * s / n;
    double r2 = std::norm(c) - 1.0;
    return {c, std::sqrt(std::max(r2, 0.0))};
}

}  // namespace

bool in_disc(const Point& p) { return std::abs(p.z) < 1.0; }

void require_in_disc(const Point& p, const char* who) {
    if (!in_disc(p))
        throw domain_error(std::string(who) + ": point outside the open disc, |z| = " +
                           std::to_string(std::abs(p.z)));
}

void Moebius::renormalize() {
    double d = det();
    if (d <= 0.0) throw domain_error("Moebius::renormalize: determinant not positive");
    double s = 1.0 / std::sqrt(d);
    a *= s;
    b *= s;
    age = 0;
}

const char* iso_class_name(IsoClass c) {
    switch (c) {
        case IsoClass::Identity: return "identity";
        case IsoClass::Elliptic: return "elliptic";
        case IsoClass::Parabolic: return "parabolic";
        case IsoClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

Geodesic::Geodesic(cplx u_, cplx v_) : u(unitize(u_)), v(unitize(v_)) {
    if (std::abs(u - v) < 1e-14)
        throw domain_error("Geodesic: coincident ideal endpoints");
}

Moebius identity_iso() { return Moebius(cplx(1, 0), cplx(0, 0)); }

Moebius half_turn(const Point& p) {
    require_in_disc(p, "half_turn");
    double n = std::norm(p.z);
    double d = 1.0 - n;
    return Moebius(cplx(0.0, (1.0 + n) / d), cplx(0.0, -2.0 / d) * p.z);
}

Moebius compose(const Moebius& m2, const Moebius& m1) {
    Moebius r(m2.a * m1.a + m2.b * std::conj(m1.b),
              m2.a * m1.b + m2.b * std::conj(m1.a));
    r.age = std::max(m2.age, m1.age) + 1;
    if (r.age >= 16) r.renormalize();
    return r;
}

Point apply(const Moebius& m, const Point& p) {
    require_in_disc(p, "apply");
    return Point((m.a * p.z + m.b) / (std::conj(m.b) * p.z + std::conj(m.a)));
}

cplx apply_boundary(const Moebius& m, cplx w) {
    return unitize((m.a * w + m.b) / (std::conj(m.b) * w + std::conj(m.a)));
}

Moebius disc_translation(const Point& p) {
    require_in_disc(p, "disc_translation");
    double s = 1.0 / std::sqrt(1.0 - std::norm(p.z));
    return Moebius(cplx(s, 0.0), s * p.z);
}

Moebius rotate_about(const Point& p, double theta) {
    Moebius rot(std::polar(1.0, theta / 2.0), cplx(0.0, 0.0));
    if (std::abs(p.z) == 0.0) return rot;
    Moebius t = disc_translation(p);
    return compose(t, compose(rot, t.inverse()));
}

Moebius translate_along(const Geodesic& g, double d) {
    double c = std::cosh(d / 2.0), s = std::sinh(d / 2.0);
    cplx den = g.v - g.u;
    return Moebius(c + s * (g.v + g.u) / den, -2.0 * s * g.u * g.v / den);
}

double frobenius_distance(const Moebius& m, const Moebius& n) {
    return std::sqrt(2.0 * (std::norm(m.a - n.a) + std::norm(m.b - n.b)));
}

double projective_distance(const Moebius& m, const Moebius& n) {
    return std::min(frobenius_distance(m, n), frobenius_distance(m, n.negated()));
}

IsoClass classify(const Moebius& m, double tol) {
    if (projective_distance(m, identity_iso()) < tol) return IsoClass::Identity;
    double t = std::abs(m.trace());
    if (t < 2.0 - tol) return IsoClass::Elliptic;
    if (t > 2.0 + tol) return IsoClass::Hyperbolic;
    return IsoClass::Parabolic;
}

EllipticData elliptic_data(const Moebius& m, double tol) {
    if (classify(m, tol) != IsoClass::Elliptic)
        throw usage_error("elliptic_data: isometry is not elliptic");
    double alpha = m.a.real(), beta = m.a.imag();
    Point center;
    if (std::abs(m.b) < 1e-300) {
        center = Point(0.0, 0.0);
    } else {
        double s = std::sqrt(std::max(1.0 - alpha * alpha, 0.0));
        // roots i(beta +- s)/conj(b); product of moduli is 1, pick the inner one
        cplx r1 = cplx(0.0, beta + s) / std::conj(m.b);
        cplx r2 = cplx(0.0, beta - s) / std::conj(m.b);
        center = Point(std::abs(r1) <= std::abs(r2) ? r1 : r2);
    }
    cplx den = std::conj(m.b) * center.z + std::conj(m.a);
    double angle = std::arg(1.0 / (den * den));
    return {center, angle};
}

HyperbolicData hyperbolic_data(const Moebius& m, double tol) {
    if (classify(m, tol) != IsoClass::Hyperbolic)
        throw usage_error("hyperbolic_data: isometry is not hyperbolic");
    double alpha = m.a.real(), beta = m.a.imag();
    double s = std::sqrt(std::max(alpha * alpha - 1.0, 0.0));
    // boundary fixed points (i beta -+ s)/conj(b)
    cplx f1 = (cplx(0.0, beta) - s) / std::conj(m.b);
    cplx f2 = (cplx(0.0, beta) + s) / std::conj(m.b);
    f1 = f1 / std::abs(f1);
    f2 = f2 / std::abs(f2);
    // attracting fixed point: |f'(z)| = |conj(b) z + conj(a)|^{-2} < 1
    double d1 = std::abs(std::conj(m.b) * f1 + std::conj(m.a));
    cplx attracting = (d1 > 1.0) ? f1 : f2;
    cplx repelling = (d1 > 1.0) ? f2 : f1;
    double length = 2.0 * std::acosh(std::abs(m.trace()) / 2.0);
    return {Geodesic(repelling, attracting), length};
}

double distance(const Point& p, const Point& q) {
    double r = std::abs((p.z - q.z) / (1.0 - std::conj(p.z) * q.z));
    r = std::min(r, 1.0 - 1e-17);
    return 2.0 * std::atanh(r);
}

Point midpoint(const Point& p, const Point& q) {
    cplx qp = (q.z - p.z) / (1.0 - std::conj(p.z) * q.z);
    double r = std::abs(qp);
    if (r == 0.0) return p;
    cplx m = (qp / r) * std::tanh(std::atanh(r) / 2.0);
    return Point((m + p.z) / (1.0 + std::conj(p.z) * m));
}

Geodesic geodesic_through(const Point& p, const Point& q) {
    require_in_disc(p, "geodesic_through");
    require_in_disc(q, "geodesic_through");
    cplx qp = (q.z - p.z) / (1.0 - std::conj(p.z) * q.z);
    if (std::abs(qp) < 1e-15)
        throw domain_error("geodesic_through: coincident points");
    cplx w = unitize(qp);
    Moebius t = disc_translation(p);
    return Geodesic(apply_boundary(t, -w), apply_boundary(t, w));
}

Point reflect_across(const Point& p, const Geodesic& g) {
    require_in_disc(p, "reflect_across");
    if (g.is_diameter()) {
        cplx w = unitize(g.v);
        return Point(w * w * std::conj(p.z));
    }
    ArcCircle ac = arc_circle(g);
    return Point(ac.c + ac.r * ac.r / std::conj(p.z - ac.c));
}

Point project_onto(const Point& p, const Geodesic& g) {
    return midpoint(p, reflect_across(p, g));
}

double distance_to_geodesic(const Point& p, const Geodesic& g) {
    return 0.5 * distance(p, reflect_across(p, g));
}

Moebius to_real_axis(const Geodesic& g) {
    if (g.is_diameter()) {
        return Moebius(std::polar(1.0, -std::arg(g.v) / 2.0), cplx(0, 0));
    }
    Point f0 = project_onto(Point(0.0, 0.0), g);
    Moebius g0 = disc_translation(f0).inverse();
    cplx w = apply_boundary(g0, g.v);
    Moebius rot(std::polar(1.0, -std::arg(w) / 2.0), cplx(0, 0));
    return compose(rot, g0);
}

double axis_coordinate(const Geodesic& g, const Point& p) {
    Moebius m = to_real_axis(g);
    cplx z = apply(m, p).z;
    double u = z.real();
    // foot of z on the real diameter: root in (-1,1) of u x^2 - (|z|^2+1) x + u
    double x;
    if (std::abs(u) < 1e-15) {
        x = 0.0;
    } else {
        double s = std::norm(z) + 1.0;
        double disc = std::sqrt(std::max(s * s - 4.0 * u * u, 0.0));
        x = (s - disc) / (2.0 * u);  // the root with |x| < 1 (roots multiply to 1)
    }
    x = std::clamp(x, -1.0 + 1e-17, 1.0 - 1e-17);
    return 2.0 * std::atanh(x);
}

Point point_at_coordinate(const Geodesic& g, double t) {
    Moebius m = to_real_axis(g);
    return apply(m.inverse(), Point(std::tanh(t / 2.0), 0.0));
}

GeodesicRelation geodesics_relation(const Geodesic& g1, const Geodesic& g2, double tol) {
    // shared ideal endpoint (as unoriented lines)
    for (cplx e1 : {g1.u, g1.v})
        for (cplx e2 : {g2.u, g2.v})
            if (std::abs(e1 - e2) < tol) {
                if (std::abs(g1.u - g2.u) < tol && std::abs(g1.v - g2.v) < tol)
                    throw domain_error("geodesics_relation: identical geodesics");
                if (std::abs(g1.u - g2.v) < tol && std::abs(g1.v - g2.u) < tol)
                    throw domain_error("geodesics_relation: identical geodesics");
                GeodesicRelation rel;
                rel.kind = GeodesicRelation::Kind::Asymptotic;
                rel.ideal = unitize(e1 + e2);
                return rel;
            }

    Moebius m = to_real_axis(g1);
    Moebius mi = m.inverse();
    cplx u2 = apply_boundary(m, g2.u);
    cplx v2 = apply_boundary(m, g2.v);

    if (u2.imag() * v2.imag() < 0.0) {
        // crossing: the arc from u2 to v2 meets the real diameter once
        GeodesicRelation rel;
        rel.kind = GeodesicRelation::Kind::Crossing;
        double x;
        if (std::abs(u2 + v2) < 1e-12) {
            x = 0.0;
        } else {
            ArcCircle ac = arc_circle(Geodesic(u2, v2));
            double s = ac.c.real();
            double disc = std::sqrt(std::max(ac.r * ac.r - ac.c.imag() * ac.c.imag(), 0.0));
            double x1 = s - disc, x2 = s + disc;
            x = (std::abs(x1) < 1.0) ? x1 : x2;
        }
        rel.at = apply(mi, Point(x, 0.0));
        return rel;
    }

    // disjoint: common perpendicular crosses the real axis at 1/Re(c')
    GeodesicRelation rel;
    rel.kind = GeodesicRelation::Kind::Disjoint;
    Geodesic perp_frame;
    if (std::abs(u2 + v2) < 1e-12) {
        // g2 is a diameter in this frame; it would cross the real axis
        throw classification_error("geodesics_relation: degenerate disjoint configuration");
    }
    ArcCircle ac = arc_circle(Geodesic(u2, v2));
    double cre = ac.c.real();
    if (std::abs(cre) < 1e-12) {
        perp_frame = Geodesic(cplx(0, -1), cplx(0, 1));
    } else {
        double cp = 1.0 / cre;
        if (std::abs(cp) <= 1.0)
            throw classification_error("geodesics_relation: tangent circles, no perpendicular");
        double phi = std::acos(1.0 / cp);
        cplx w1 = std::polar(1.0, phi), w2 = std::polar(1.0, -phi);
        perp_frame = Geodesic(w2, w1);
    }
    // feet: on real axis and on g2 (in frame), gap = distance between them
    Point foot1 = project_onto(Point(0.0, 0.0), perp_frame);
    foot1 = Point(cplx(foot1.z.real(), 0.0));  // lies on the real axis by construction
    // intersect perpendicular with g2 in frame: project any point of g2's circle
    Point foot2 = project_onto(foot1, Geodesic(u2, v2));
    rel.gap = distance(foot1, foot2);
    rel.perp = Geodesic(apply_boundary(mi, perp_frame.u), apply_boundary(mi, perp_frame.v));
    return rel;
}

double busemann(cplx omega, const Point& p) {
    // -log Poisson kernel; 0 at the origin, decreases toward omega
    double num = std::norm(omega - p.z);
    double den = 1.0 - std::norm(p.z);
    return std::log(num / den);
}

Point horocycle_foot(cplx omega, const Point& p, const Geodesic& d) {
    // d must have omega as an endpoint; Busemann is affine along d with slope +-1
    Geodesic dd = d;
    if (std::abs(dd.v - omega) > std::abs(dd.u - omega)) dd = dd.reversed();
    double target = busemann(omega, p);
    double b0 = busemann(omega, point_at_coordinate(dd, 0.0));
    double slope = busemann(omega, point_at_coordinate(dd, 1.0)) - b0;  // +-1
    return point_at_coordinate(dd, (target - b0) / slope);
}

double horocyclic_distance(cplx omega, const Point& p, const Geodesic& d) {
    Point f = horocycle_foot(omega, p, d);
    return 2.0 * std::sinh(distance(p, f) / 2.0);
}

double delta_invariant(const Point& p1, const Point& p2, const Point& p3) {
    Moebius m = compose(half_turn(p3), compose(half_turn(p2), half_turn(p1)));
    return std::abs(m.trace()) / 2.0;
}

CommutatorPoints commutator_points(const Moebius& A, const Moebius& B, double tol) {
    if (classify(A, tol) != IsoClass::Hyperbolic || classify(B, tol) != IsoClass::Hyperbolic)
        throw usage_error("commutator_points: both factors must be hyperbolic");
    HyperbolicData da = hyperbolic_data(A, tol);
    HyperbolicData db = hyperbolic_data(B, tol);

    Point x2;
    bool same_axis =
        (std::abs(da.axis.u - db.axis.u) < tol && std::abs(da.axis.v - db.axis.v) < tol) ||
        (std::abs(da.axis.u - db.axis.v) < tol && std::abs(da.axis.v - db.axis.u) < tol);
    if (same_axis) {
        x2 = project_onto(Point(0.0, 0.0), da.axis);
    } else {
        GeodesicRelation rel = geodesics_relation(da.axis, db.axis, tol);
        if (rel.kind != GeodesicRelation::Kind::Crossing)
            throw usage_error(std::string("commutator_points: axes do not cross (") +
                              (rel.kind == GeodesicRelation::Kind::Asymptotic ? "asymptotic"
                                                                              : "disjoint") +
                              ")");
        x2 = rel.at;
    }
    Point x1 = apply(translate_along(da.axis, -da.length / 2.0), x2);
    Point x3 = apply(translate_along(db.axis, -db.length / 2.0), x2);
    return {x1, x2, x3};
}

}  // namespace hexflip
