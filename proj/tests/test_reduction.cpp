#include <doctest.h>

#include <cmath>

#include "hexflip/acceptance.hpp"
#include "hexflip/io.hpp"
#include "hexflip/reduction.hpp"
#include "test_support.hpp"

using namespace hexflip;
using namespace hexflip::testsup;

TEST_CASE("every operation is replayable from its word") {
    for (int k = 0; k < 25; ++k) {
        Sextuple tri = make_tri_config(derive_seed(101, k));
        OpResult r = op_tri(tri);
        CHECK(max_point_distance(apply_word(tri, r.word), r.z) < 1e-10);

        Sextuple par = make_par_config(derive_seed(102, k));
        r = op_par(par);
        CHECK(max_point_distance(apply_word(par, r.word), r.z) < 1e-10);

        Sextuple skh = make_skh_config(derive_seed(103, k));
        r = op_skh0(skh);
        CHECK(max_point_distance(apply_word(skh, r.word), r.z) < 1e-10);
        r = op_skh1(skh);
        CHECK(max_point_distance(apply_word(skh, r.word), r.z) < 1e-10);
    }
}

TEST_CASE("op_tri contract") {
    for (int k = 0; k < 60; ++k) {
        Sextuple z = make_tri_config(derive_seed(111, k));
        double A = size_A(z);
        OpResult r = op_tri(z);
        CHECK(size_B(r.z) == doctest::Approx(A).epsilon(1e-10));
        CHECK(size_A(r.z) <= (23.0 / 24.0) * A + 1e-9);
    }
    CHECK_THROWS_AS(op_tri(make_skh_config(7)), usage_error);
}

TEST_CASE("op_par contract and invariants") {
    for (int k = 0; k < 40; ++k) {
        Sextuple z = make_par_config(derive_seed(121, k));
        double A = size_A(z);
        double a12 = pair_length(z, 1), a34 = pair_length(z, 3), a56 = pair_length(z, 5);
        OpResult r = op_par(z);
        CHECK(size_B(r.z) == doctest::Approx(A).epsilon(1e-9));
        CHECK(size_A(r.z) <= (23.0 / 24.0) * A + 1e-9);
        // paired lengths unchanged before the final rotation: after the
        // rotation they show up as the B-pairs in order
        CHECK(pair_length(r.z, 6) == doctest::Approx(a12).epsilon(1e-9));
        CHECK(pair_length(r.z, 2) == doctest::Approx(a34).epsilon(1e-9));
        CHECK(pair_length(r.z, 4) == doctest::Approx(a56).epsilon(1e-9));
    }
}

TEST_CASE("op_skh0 invariants") {
    for (int k = 0; k < 40; ++k) {
        Sextuple z = make_skh_config(derive_seed(131, k));
        double A = size_A(z);
        OpResult r = op_skh0(z);
        CHECK(size_A(r.z) == doctest::Approx(A).epsilon(1e-11));
        // the dominant pair sits at (3,4) and x3 lies in [y3, m] or x4 in [m, y4]
        double a12 = pair_length(r.z, 1), a34 = pair_length(r.z, 3),
               a56 = pair_length(r.z, 5);
        CHECK(a34 >= a12);
        CHECK(a34 >= a56);
        AuxPoints aux = aux_points(r.z);
        Geodesic d34 = geodesic_through(r.z.at(3), r.z.at(4));
        double t3 = axis_coordinate(d34, r.z.at(3));
        double t4 = axis_coordinate(d34, r.z.at(4));
        double ty3 = axis_coordinate(d34, aux.yat(3));
        double ty4 = axis_coordinate(d34, aux.yat(4));
        double tm = axis_coordinate(d34, aux.skh_m);
        bool x3_in = t3 >= ty3 - 1e-9 && t3 <= tm + 1e-9;
        bool x4_in = t4 >= tm - 1e-9 && t4 <= ty4 + 1e-9;
        CHECK((x3_in || x4_in));
        // after minimization d(x1, y1) <= a12 / 2
        CHECK(distance(r.z.at(1), aux.yat(1)) <= a12 / 2.0 + 1e-9);
        CHECK(distance(r.z.at(5), aux.yat(5)) <= a56 / 2.0 + 1e-9);
    }
}

TEST_CASE("op_skh1 decreases the dominant length") {
    for (int k = 0; k < 40; ++k) {
        Sextuple z = make_skh_config(derive_seed(141, k));
        OpResult s0 = op_skh0(z);
        double a12 = pair_length(s0.z, 1), a34 = pair_length(s0.z, 3),
               a56 = pair_length(s0.z, 5);
        OpResult r = op_skh1(z);
        double a12p = pair_length(r.z, 1), a34p = pair_length(r.z, 3),
               a56p = pair_length(r.z, 5);
        CHECK(std::abs(a12p - a12) < 1e-10);
        CHECK(std::abs(a56p - a56) < 1e-10);
        double bound = 2.0 * std::pow(std::sinh(std::min(a12, a56)), 2) /
                       std::pow(std::cosh(a34), 2);
        CHECK(std::cosh(a34) - std::cosh(a34p) >= bound - 1e-9);
        CHECK(size_A(r.z) < size_A(z));
    }
}

TEST_CASE("op_skh2 targets a quarter turn") {
    int applied = 0;
    for (int k = 0; k < 60 && applied < 20; ++k) {
        Sextuple z = make_skh_config(derive_seed(151, k), 0.05);
        try {
            OpResult r = op_skh2(z);
            CHECK(size_A(r.z) <= size_A(z) + 1e-9);
            ++applied;
        } catch (const skh2_unavailable&) {
        }
    }
    CHECK(applied >= 10);
}

TEST_CASE("degenerate euclid path") {
    double golden = 0.5 * (1.0 + std::sqrt(5.0));
    Sextuple zg = make_degenerate_config(golden);
    REQUIRE(validate(zg).ok);
    REQUIRE(classify_config(zg).tag == ConfigTag::DegeneratePair);
    EuclidOutcome eg = op_degenerate_euclid(zg, 1e-3);
    CHECK(!eg.pinched);
    CHECK(eg.euclid_steps <= 40);
    CHECK(max_point_distance(apply_word(zg, eg.word), eg.z) < 1e-9);

    // one golden step maps (d1, d2) to (d1, d2 - d1)
    Sextuple z1 = make_degenerate_config(1.7);
    Geodesic axis = geodesic_through(z1.at(1), z1.at(2));
    double d2 = std::abs(axis_coordinate(axis, z1.at(4)) - axis_coordinate(axis, z1.at(1)));
    double d1 = std::abs(axis_coordinate(axis, z1.at(2)) - axis_coordinate(axis, z1.at(1)));
    Sextuple stepped = leapfrog(z1, 3, 1);  // forward L3 pulls x4 back by d1 here
    double d2p =
        std::abs(axis_coordinate(axis, stepped.at(4)) - axis_coordinate(axis, stepped.at(1)));
    bool fwd_ok = std::abs(d2p - (d2 - d1)) < 1e-10;
    Sextuple stepped2 = leapfrog(z1, 3, -1);
    double d2q = std::abs(axis_coordinate(axis, stepped2.at(4)) -
                          axis_coordinate(axis, stepped2.at(1)));
    bool inv_ok = std::abs(d2q - (d2 - d1)) < 1e-10;
    CHECK((fwd_ok || inv_ok));

    // exactly rational ratio is certified pinched
    EuclidOutcome e2 = op_degenerate_euclid(make_degenerate_config(2.0), 1e-3);
    CHECK(e2.pinched);
    // the certificate generators are the two pair products over x1
    CHECK(projective_distance(e2.cert.gen1,
                              compose(half_turn(e2.z.at(3)), half_turn(e2.z.at(1)))) < 1e-12);
}

TEST_CASE("reduce: verdicts") {
    ReduceResult rs = reduce(singular_config());
    CHECK(rs.verdict.tag == Verdict::Tag::Singular);
    CHECK(rs.trace.empty());

    // a batch of sampled configurations all reduce
    ReduceParams params;
    params.eps = 1e-3;
    for (int k = 0; k < 25; ++k) {
        Sextuple z = sample_random(derive_seed(161, k), 1.0);
        ReduceResult rr = reduce(z, params);
        REQUIRE(rr.verdict.tag == Verdict::Tag::Reduced);
        CHECK(size_A(rr.final_config) + size_B(rr.final_config) <= 2e-3);
        // the trace replays end to end
        Sextuple cur = z;
        for (const auto& row : rr.trace) cur = apply_word(cur, row.word);
        CHECK(max_point_distance(cur, rr.final_config) < 1e-9);
        // deterministic
        ReduceResult rr2 = reduce(z, params);
        CHECK(rr2.trace.size() == rr.trace.size());
        CHECK(max_point_distance(rr2.final_config, rr.final_config) == 0.0);
    }

    // pinched input: certificate with the documented generators
    std::mt19937_64 rng(3);
    Sextuple pinched = make_degenerate_config(1.5);
    ReduceResult rp = reduce(pinched, params);
    CHECK(rp.verdict.tag == Verdict::Tag::Pinched);
}

TEST_CASE("reduce handles TRI PAR SKH inputs") {
    ReduceParams params;
    params.eps = 1e-3;
    for (int k = 0; k < 8; ++k) {
        CHECK(reduce(make_tri_config(derive_seed(171, k)), params).verdict.tag ==
              Verdict::Tag::Reduced);
        CHECK(reduce(make_par_config(derive_seed(172, k)), params).verdict.tag ==
              Verdict::Tag::Reduced);
        CHECK(reduce(make_skh_config(derive_seed(173, k)), params).verdict.tag ==
              Verdict::Tag::Reduced);
    }
    // HEX cannot reduce: it is not in the X0 component
    ReduceResult rh = reduce(make_hex_config(5), params);
    CHECK(rh.verdict.tag == Verdict::Tag::Stalled);
}

TEST_CASE("aligned configurations reduce") {
    double ts[6] = {0.0, 0.4, 1.0, 0.7, 0.2, 0.1};
    Sextuple al;
    for (int i = 0; i < 6; ++i) al.x[i] = Point(std::tanh(ts[i] / 2.0), 0.0);
    REQUIRE(validate(al).ok);
    ReduceParams params;
    params.eps = 1e-3;
    ReduceResult rr = reduce(al, params);
    CHECK((rr.verdict.tag == Verdict::Tag::Reduced ||
           rr.verdict.tag == Verdict::Tag::Pinched));
}

TEST_CASE("discreteness report") {
    ReduceParams params;
    DiscretenessReport r1 = discreteness_report(sample_random(7, 1.0));
    CHECK(r1.kind == DiscretenessReport::Kind::NonDiscrete);

    DiscretenessReport r2 = discreteness_report(make_degenerate_config(2.0));
    CHECK(r2.kind == DiscretenessReport::Kind::InconclusivePinched);

    DiscretenessReport r3 = discreteness_report(singular_config());
    CHECK(r3.kind == DiscretenessReport::Kind::Elementary);

    double ts[6] = {0.0, 0.4, 1.0, 0.7, 0.2, 0.1};
    Sextuple al;
    for (int i = 0; i < 6; ++i) al.x[i] = Point(std::tanh(ts[i] / 2.0), 0.0);
    DiscretenessReport r4 = discreteness_report(al);
    CHECK(r4.kind == DiscretenessReport::Kind::Elementary);
}
