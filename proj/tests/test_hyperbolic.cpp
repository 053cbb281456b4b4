#include <doctest.h>

#include <cmath>

#include "hexflip/hyperbolic.hpp"
#include "test_support.hpp"

using namespace hexflip;
using namespace hexflip::testsup;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("half turn basics") {
    Moebius s0 = half_turn(Point(0.0, 0.0));
    CHECK(std::abs(s0.a - cplx(0, 1)) == 0.0);
    CHECK(std::abs(s0.b) == 0.0);

    // s_0 negates, s_{0.5} sends 0 to 0.8 = tanh(2 artanh 1/2)
    CHECK(std::abs(apply(s0, Point(0.3, -0.2)).z - cplx(-0.3, 0.2)) < 1e-15);
    CHECK(apply(half_turn(Point(0.5, 0.0)), Point()).z.real() == doctest::Approx(0.8).epsilon(1e-14));

    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        Point p = random_point(rng);
        Moebius s = half_turn(p);
        CHECK(std::abs(s.trace()) < 1e-14);
        CHECK(projective_distance(compose(s, s), identity_iso()) < 1e-13);
        CHECK(frobenius_distance(compose(s, s), identity_iso().negated()) < 1e-13);
        CHECK(distance(apply(s, p), p) < 1e-7);  // fixes its center
    }
}

TEST_CASE("half turn rejects points outside the disc") {
    CHECK_THROWS_AS(half_turn(Point(1.2, 0.0)), domain_error);
}

TEST_CASE("distance and isometry invariance") {
    CHECK(distance(Point(), Point(0.5, 0.0)) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(distance(Point(0.3, 0.1), Point(0.3, 0.1)) == 0.0);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        Point p = random_point(rng), q = random_point(rng);
        Moebius m = random_iso(rng);
        CHECK(std::abs(distance(apply(m, p), apply(m, q)) - distance(p, q)) < 1e-12);
    }
}

TEST_CASE("compose, classify and data extraction") {
    std::mt19937_64 rng(13);
    // rotation about the origin classifies elliptic with the right data
    Moebius rot = rotate_about(Point(), kPi / 3.0);
    CHECK(classify(rot) == IsoClass::Elliptic);
    EllipticData ed = elliptic_data(rot);
    CHECK(std::abs(ed.center.z) < 1e-15);
    CHECK(ed.angle == doctest::Approx(kPi / 3.0).epsilon(1e-12));

    CHECK(projective_distance(rotate_about(Point(), kPi), half_turn(Point())) < 1e-15);

    for (int k = 0; k < 200; ++k) {
        Point p = random_point(rng), q = random_point(rng);
        if (distance(p, q) < 0.05) continue;
        Moebius m = compose(half_turn(q), half_turn(p));
        REQUIRE(classify(m) == IsoClass::Hyperbolic);
        HyperbolicData hd = hyperbolic_data(m);
        CHECK(hd.length == doctest::Approx(2.0 * distance(p, q)).epsilon(1e-9));
        // axis passes through both points, oriented p to q
        CHECK(distance_to_geodesic(p, hd.axis) < 1e-9);
        CHECK(distance_to_geodesic(q, hd.axis) < 1e-9);
        double tp = axis_coordinate(hd.axis, p), tq = axis_coordinate(hd.axis, q);
        CHECK(tq > tp);
    }

    // trace of a translation of length 2 ln 3 is 10/3
    Geodesic realax(cplx(-1, 0), cplx(1, 0));
    Moebius t = translate_along(realax, 2.0 * std::log(3.0));
    CHECK(std::abs(t.trace()) == doctest::Approx(10.0 / 3.0).epsilon(1e-13));

    // half turns are elliptic with angle pi at the center
    Point p(0.2, -0.4);
    EllipticData hd2 = elliptic_data(half_turn(p));
    CHECK(std::abs(hd2.center.z - p.z) < 1e-12);
    CHECK(std::abs(hd2.angle) == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("composition renormalization keeps long products clean") {
    std::mt19937_64 rng(17);
    Moebius acc = identity_iso();
    for (int k = 0; k < 1000; ++k) {
        std::uniform_real_distribution<double> ua(0.0, 6.283185307179586);
        Moebius rot(std::polar(1.0, ua(rng) / 2.0), cplx(0, 0));
        Moebius t = disc_translation(random_point(rng, 0.2));
        acc = compose(compose(t, rot), acc);
    }
    CHECK(std::abs(acc.det() - 1.0) < 1e-12);
}

TEST_CASE("geodesics: projection, translation, coordinates") {
    Geodesic realax(cplx(-1, 0), cplx(1, 0));
    // project (0, h) onto the real axis: lands at 0 by symmetry
    CHECK(std::abs(project_onto(Point(0.0, 0.4), realax).z) < 1e-14);
    // translate_along moves 0 to tanh(d/2)
    for (double d : {0.3, 1.1, -0.7}) {
        Point im = apply(translate_along(realax, d), Point());
        CHECK(im.z.real() == doctest::Approx(std::tanh(d / 2.0)).epsilon(1e-13));
        CHECK(std::abs(im.z.imag()) < 1e-15);
    }
    std::mt19937_64 rng(19);
    for (int k = 0; k < 200; ++k) {
        Point p = random_point(rng), q = random_point(rng);
        if (distance(p, q) < 0.05) continue;
        Geodesic g = geodesic_through(p, q);
        CHECK(distance_to_geodesic(p, g) < 1e-10);
        CHECK(distance_to_geodesic(q, g) < 1e-10);
        CHECK(axis_coordinate(g, q) - axis_coordinate(g, p) ==
              doctest::Approx(distance(p, q)).epsilon(1e-9));
        // the projection foot minimizes distance along the line
        Point w = random_point(rng);
        Point foot = project_onto(w, g);
        double df = distance(w, foot);
        for (double dt : {-0.05, 0.05}) {
            Point other = point_at_coordinate(g, axis_coordinate(g, foot) + dt);
            CHECK(distance(w, other) >= df - 1e-12);
        }
    }
    CHECK_THROWS_AS(geodesic_through(Point(0.1, 0.1), Point(0.1, 0.1)), domain_error);
}

TEST_CASE("geodesics_relation trichotomy") {
    Geodesic realax(cplx(-1, 0), cplx(1, 0));
    Geodesic imax(cplx(0, -1), cplx(0, 1));
    GeodesicRelation r = geodesics_relation(realax, imax);
    REQUIRE(r.kind == GeodesicRelation::Kind::Crossing);
    CHECK(std::abs(r.at.z) < 1e-14);

    // the real axis against a line symmetric about the imaginary axis:
    // the common perpendicular is the imaginary axis
    double alpha = 0.7;
    Geodesic ga(std::polar(1.0, alpha), std::polar(1.0, kPi - alpha));
    GeodesicRelation rd = geodesics_relation(realax, ga);
    REQUIRE(rd.kind == GeodesicRelation::Kind::Disjoint);
    CHECK(std::abs(rd.perp.u.real()) < 1e-9);
    CHECK(std::abs(rd.perp.v.real()) < 1e-9);
    CHECK(rd.gap > 0.0);
    // the perpendicular meets both lines orthogonally, feet at distance gap
    Point f1 = project_onto(Point(), realax);
    Point fa = project_onto(f1, ga);
    CHECK(std::abs(distance(f1, fa) - rd.gap) < 1e-9);

    // shared endpoint
    Geodesic gc(std::polar(1.0, 0.3), std::polar(1.0, -2.0));
    GeodesicRelation rs = geodesics_relation(ga, gc);
    CHECK(rs.kind == GeodesicRelation::Kind::Asymptotic);

    CHECK_THROWS_AS(geodesics_relation(realax, realax), domain_error);
    CHECK_THROWS_AS(geodesics_relation(realax, realax.reversed()), domain_error);
}

TEST_CASE("delta invariant") {
    // collinear triples give 0
    CHECK(delta_invariant(Point(0.1, 0), Point(0.4, 0), Point(-0.3, 0)) < 1e-14);
    std::mt19937_64 rng(23);
    for (int k = 0; k < 300; ++k) {
        Point p1 = random_point(rng), p2 = random_point(rng), p3 = random_point(rng);
        if (distance(p1, p2) < 0.05) continue;
        double d = delta_invariant(p1, p2, p3);
        // permutation invariance
        CHECK(delta_invariant(p3, p1, p2) == doctest::Approx(d).epsilon(1e-11));
        CHECK(delta_invariant(p2, p1, p3) == doctest::Approx(d).epsilon(1e-11));
        // sinh * sinh identity
        double h = distance_to_geodesic(p3, geodesic_through(p1, p2));
        CHECK(std::abs(d - std::sinh(h) * std::sinh(distance(p1, p2))) < 1e-10);
        // classification by the invariant
        Moebius m = compose(half_turn(p3), compose(half_turn(p2), half_turn(p1)));
        if (d < 1.0 - 1e-6) CHECK(classify(m) == IsoClass::Elliptic);
        if (d > 1.0 + 1e-6) CHECK(classify(m) == IsoClass::Hyperbolic);
    }
}

TEST_CASE("commutator points") {
    Geodesic realax(cplx(-1, 0), cplx(1, 0));
    Geodesic imax(cplx(0, -1), cplx(0, 1));
    Moebius A = translate_along(realax, 1.4);
    Moebius B = translate_along(imax, 0.9);
    CommutatorPoints cp = commutator_points(A, B);
    CHECK(std::abs(cp.x2.z) < 1e-12);
    CHECK(std::abs(cp.x1.z.real() - (-std::tanh(1.4 / 4.0))) < 1e-12);

    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ulen(0.4, 2.0);
    int tested = 0;
    for (int k = 0; k < 500 && tested < 200; ++k) {
        Point p1 = random_point(rng), p2 = random_point(rng);
        Point p3 = random_point(rng), p4 = random_point(rng);
        if (distance(p1, p2) < 0.1 || distance(p3, p4) < 0.1) continue;
        Moebius A2 = translate_along(geodesic_through(p1, p2), ulen(rng));
        Moebius B2 = translate_along(geodesic_through(p3, p4), ulen(rng));
        CommutatorPoints t;
        try {
            t = commutator_points(A2, B2);
        } catch (const usage_error&) {
            continue;  // disjoint axes
        }
        ++tested;
        Moebius s1 = half_turn(t.x1), s2 = half_turn(t.x2), s3 = half_turn(t.x3);
        CHECK(projective_distance(compose(s2, s1), A2) < 1e-9);
        CHECK(projective_distance(compose(s2, s3), B2) < 1e-9);
        Moebius w = compose(s3, compose(s2, s1));
        Moebius comm = compose(B2.inverse(), compose(A2.inverse(), compose(B2, A2)));
        CHECK(projective_distance(compose(w, w), comm) < 1e-9);
    }
    CHECK(tested >= 60);

    // non-hyperbolic input is rejected
    CHECK_THROWS_AS(commutator_points(rotate_about(Point(), 1.0), A), usage_error);
}

TEST_CASE("horocycles") {
    // vertical-line analogue: foot of a point on a line sharing the ideal point
    cplx omega(1.0, 0.0);
    Geodesic d(cplx(-1, 0), omega);  // real axis toward 1
    Point p(0.3, 0.25);
    Point f = horocycle_foot(omega, p, d);
    CHECK(std::abs(busemann(omega, f) - busemann(omega, p)) < 1e-10);
    CHECK(distance_to_geodesic(f, d) < 1e-10);
    double hd = horocyclic_distance(omega, p, d);
    CHECK(hd == doctest::Approx(2.0 * std::sinh(distance(p, f) / 2.0)).epsilon(1e-10));
}
