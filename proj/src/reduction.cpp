#include "hexflip/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hexflip {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Builder {
    Sextuple z;
    BraidWord word;

    explicit Builder(const Sextuple& z0) : z(z0) {}

    void letter(int i, int sign) {
        word.push(i, sign);
        z = leapfrog(z, i, sign);
    }
    void power(int i, long k) {
        if (k == 0) return;
        word.push(i, k > 0 ? 1 : -1, static_cast<int>(std::labs(k)));
        z = leapfrog_power(z, i, k);
    }
    void rot() {
        word.append(cyclic_rot_word());
        z = cyclic_rot(z);
    }
    void twist(int i, long n = 1) {
        for (long r = 0; r < n; ++r) word.append(half_twist_word(i));
        // f = s_{x_{i+2}} s_{x_{i+1}} s_{x_i} is the same isometry at each
        // repetition, so the n-fold twist applies f^n to the triple
        Moebius f = compose(half_turn(z.cyc(i + 2)),
                            compose(half_turn(z.cyc(i + 1)), half_turn(z.cyc(i))));
        Moebius fn = identity_iso();
        IsoClass c = classify(f);
        if (c == IsoClass::Elliptic && n > 4) {
            EllipticData ed = elliptic_data(f);
            fn = rotate_about(ed.center, std::remainder(ed.angle * static_cast<double>(n),
                                                        2.0 * kPi));
        } else {
            for (long r = 0; r < n; ++r) fn = compose(f, fn);
        }
        Sextuple r = z;
        for (int k = 0; k < 3; ++k) {
            int slot = (i - 1 + k) % 6 + 1;
            r.at(slot) = apply(fn, z.at(slot));
        }
        z = r;
    }
    OpResult take() && { return {z, std::move(word)}; }
};

// even number of cyclic rotations placing the largest of a12, a34, a56 at (3,4)
void rotate_max_to_34(Builder& b) {
    double a12 = pair_length(b.z, 1), a34 = pair_length(b.z, 3), a56 = pair_length(b.z, 5);
    int rots;
    if (a34 >= a12 && a34 >= a56) rots = 0;
    else if (a56 >= a12) rots = 2;  // a56 -> slot 34
    else rots = 4;                  // a12 -> slot 34
    for (int r = 0; r < rots; ++r) b.rot();
}

// even rotations placing the largest at (1,2) (used by op_tri)
void rotate_max_to_12(Builder& b) {
    double a12 = pair_length(b.z, 1), a34 = pair_length(b.z, 3), a56 = pair_length(b.z, 5);
    int rots;
    if (a12 >= a34 && a12 >= a56) rots = 0;
    else if (a34 >= a56) rots = 2;
    else rots = 4;
    for (int r = 0; r < rots; ++r) b.rot();
}

// L_i power minimizing d(x_i, target) where target lies on the pair line
void minimize_to(Builder& b, int i, const Point& target) {
    double a = pair_length(b.z, i);
    if (a < 1e-300) return;
    Geodesic d = geodesic_through(b.z.cyc(i), b.z.cyc(i + 1));
    double ti = axis_coordinate(d, b.z.cyc(i));
    double tt = axis_coordinate(d, target);
    long k = std::lround((tt - ti) / a);
    b.power(i, k);
}

}  // namespace

const char* verdict_name(Verdict::Tag t) {
    switch (t) {
        case Verdict::Tag::Reduced: return "reduced";
        case Verdict::Tag::Pinched: return "pinched";
        case Verdict::Tag::Singular: return "singular";
        case Verdict::Tag::Stalled: return "stalled";
    }
    return "?";
}

const char* discreteness_kind_name(DiscretenessReport::Kind k) {
    switch (k) {
        case DiscretenessReport::Kind::NonDiscrete: return "non-discrete";
        case DiscretenessReport::Kind::InconclusivePinched: return "inconclusive-pinched";
        case DiscretenessReport::Kind::Elementary: return "elementary";
        case DiscretenessReport::Kind::Undetermined: return "undetermined";
    }
    return "?";
}

OpResult op_rot(const Sextuple& z) {
    Builder b(z);
    b.rot();
    return std::move(b).take();
}

OpResult op_tri(const Sextuple& z, double tol) {
    if (classify_config(z, tol).tag != ConfigTag::Tri)
        throw usage_error("op_tri: configuration is not in case TRI");
    Builder b(z);
    rotate_max_to_12(b);
    AuxPoints aux = aux_points(b.z, tol);
    minimize_to(b, 1, aux.yat(1));
    minimize_to(b, 3, aux.yat(3));
    minimize_to(b, 5, aux.yat(5));
    // one extra L1 step if it strictly helps B
    double b0 = size_B(b.z);
    double bp = size_B(leapfrog(b.z, 1, 1));
    double bm = size_B(leapfrog(b.z, 1, -1));
    if (bp < b0 && bp <= bm) b.letter(1, 1);
    else if (bm < b0) b.letter(1, -1);
    b.rot();
    return std::move(b).take();
}

OpResult op_par(const Sextuple& z, double tol) {
    if (classify_config(z, tol).tag != ConfigTag::Par)
        throw usage_error("op_par: configuration is not in case PAR");
    Builder b(z);
    double A = size_A(b.z);

    // common ideal point
    Geodesic d12 = geodesic_through(b.z.at(1), b.z.at(2));
    Geodesic d34 = geodesic_through(b.z.at(3), b.z.at(4));
    Geodesic d56 = geodesic_through(b.z.at(5), b.z.at(6));
    GeodesicRelation rel = geodesics_relation(d12, d34, std::sqrt(tol));
    if (rel.kind != GeodesicRelation::Kind::Asymptotic)
        throw classification_error("op_par: no asymptotic pair found");
    cplx omega = rel.ideal;

    // push the (3,4) pair toward omega until horocyclic distances < A/12
    double a34 = pair_length(b.z, 3);
    int toward = busemann(omega, b.z.at(4)) < busemann(omega, b.z.at(3)) ? 1 : -1;
    auto max_horo = [&](const Sextuple& s) {
        double h = 0.0;
        for (int i : {3, 4})
            for (const Geodesic* g : {&d12, &d56})
                h = std::max(h, horocyclic_distance(omega, s.at(i), *g));
        return h;
    };
    double h0 = max_horo(b.z);
    double target = A / 12.0;
    if (h0 >= target) {
        long k = static_cast<long>(std::ceil(std::log(h0 / target) / a34)) + 1;
        b.power(3, toward * k);
        while (max_horo(b.z) >= target) b.power(3, toward);
    }

    // re-derive y1 and y5 for the pushed configuration, then minimize
    Sextuple cur = b.z;
    Point y2 = horocycle_foot(omega, cur.at(3), d12);
    double t1 = axis_coordinate(d12, cur.at(1)), t2 = axis_coordinate(d12, cur.at(2));
    Point y1 = point_at_coordinate(d12, axis_coordinate(d12, y2) - (t2 - t1));
    minimize_to(b, 1, y1);
    Point y5 = horocycle_foot(omega, cur.at(4), d56);
    minimize_to(b, 5, y5);
    b.rot();
    return std::move(b).take();
}

OpResult op_skh0(const Sextuple& z, double tol) {
    if (classify_config(z, tol).tag != ConfigTag::Skh)
        throw usage_error("op_skh0: configuration is not in case SKH");
    Builder b(z);
    rotate_max_to_34(b);
    AuxPoints aux = aux_points(b.z, tol);
    minimize_to(b, 1, aux.yat(1));
    minimize_to(b, 5, aux.yat(5));
    // L3 power putting x3 in [y3, m] or x4 in [m, y4]
    double a34 = pair_length(b.z, 3);
    Geodesic d34 = geodesic_through(b.z.at(3), b.z.at(4));
    double t3 = axis_coordinate(d34, b.z.at(3));
    double tm = axis_coordinate(d34, aux.skh_m);
    long k = static_cast<long>(std::floor((tm - t3) / a34));
    b.power(3, k);
    return std::move(b).take();
}

OpResult op_skh1(const Sextuple& z, double tol) {
    Builder b(z);
    OpResult s0 = op_skh0(b.z, tol);
    b.word.append(s0.word);
    b.z = s0.z;
    b.twist(1);
    return std::move(b).take();
}

namespace {

double circ_dist(double a, double b) {
    return std::abs(std::remainder(a - b, 2.0 * kPi));
}

long pick_twist_power(double angle, long n_max) {
    long best_n = 1;
    double best = 1e300;
    for (long n = 1; n <= n_max; ++n) {
        double v = std::min(circ_dist(n * angle, kPi / 2.0), circ_dist(n * angle, -kPi / 2.0));
        if (v < best) best = v, best_n = n;
    }
    return best_n;
}

}  // namespace

OpResult op_skh2(const Sextuple& z, double tol) {
    Builder b(z);
    OpResult s0 = op_skh0(b.z, tol);
    b.word.append(s0.word);
    b.z = s0.z;

    Moebius hol = compose(half_turn(b.z.at(3)),
                          compose(half_turn(b.z.at(2)), half_turn(b.z.at(1))));
    if (classify(hol, tol) != IsoClass::Elliptic)
        throw skh2_unavailable("op_skh2: rotation holonomy is not elliptic");
    double angle = elliptic_data(hol, tol).angle;
    long n_max = static_cast<long>(std::ceil(2.0 * kPi / std::max(kPi - std::abs(angle), 1e-9))) + 8;
    n_max = std::min(n_max, 100000L);
    long n = pick_twist_power(angle, n_max);

    double a_before = size_A(b.z);
    b.twist(1, n);
    if (size_A(b.z) > a_before + 1e-9)
        throw skh2_unavailable("op_skh2: chosen power increases A");
    return std::move(b).take();
}

OpResult op_aligned(const Sextuple& z, double tol) {
    ConfigClass c = classify_config(z, tol);
    if (c.tag != ConfigTag::Aligned)
        throw usage_error("op_aligned: configuration is not aligned");
    Builder b(z);

    // place the largest paired length at (3,4); signed lengths sum to zero
    // along the line, so the largest equals the sum of the other two
    rotate_max_to_34(b);

    Geodesic axis = geodesic_through(b.z.at(1), b.z.at(2));
    auto t = [&](int i) { return axis_coordinate(axis, b.z.at(i)); };

    // L1 power: bring x1 near x3 shifted one step back; L5 power: x5 near x4
    double d12 = t(2) - t(1);
    if (std::abs(d12) > 1e-300) {
        long k = std::lround(((t(3) - d12) - t(1)) / d12);
        b.power(1, k);
    }
    double d56 = t(6) - t(5);
    if (std::abs(d56) > 1e-300) {
        long k = std::lround((t(4) - t(5)) / d56);
        b.power(5, k);
    }
    b.rot();
    return std::move(b).take();
}

EuclidOutcome op_degenerate_euclid(const Sextuple& z0, double eps, const ReduceParams& params) {
    EuclidOutcome out;
    Builder b(z0);
    double tol = params.tol;

    // canonicalize the degenerate pair to (5,6)
    {
        int pi = 0;
        double bestd = 1e300;
        for (int i = 1; i <= 6; ++i) {
            double d = pair_length(b.z, i);
            if (d < bestd) bestd = d, pi = i;
        }
        int rots = ((pi - 5) % 6 + 6) % 6;
        for (int r = 0; r < rots; ++r) b.rot();
    }
    if (pair_length(b.z, 5) > std::sqrt(tol))
        throw usage_error("op_degenerate_euclid: no degenerate pair");

    auto certificate = [&](const std::string& why) {
        out.pinched = true;
        out.cert.gen1 = compose(half_turn(b.z.at(3)), half_turn(b.z.at(1)));
        out.cert.gen2 = compose(half_turn(b.z.at(5)), half_turn(b.z.at(1)));
        out.cert.reason = why;
        out.word = b.word;
        out.z = b.z;
        return out;
    };

    // x1..x4 collinear and pairwise distinct, or the orbit is pinched
    {
        double dmin = 1e300;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) dmin = std::min(dmin, distance(b.z.at(i), b.z.at(j)));
        if (dmin < tol) return certificate("coincident points on the line");
    }
    Geodesic axis = geodesic_through(b.z.at(1), b.z.at(2));
    for (int i = 3; i <= 4; ++i)
        if (distance_to_geodesic(b.z.at(i), axis) > std::sqrt(tol))
            throw usage_error("op_degenerate_euclid: x1..x4 are not collinear");

    auto coord = [&](int i) { return axis_coordinate(axis, b.z.at(i)); };

    // subtractive Euclid on (delta1, delta2) = (d(x1,x2), d(x1,x4));
    // each step shrinks the larger by the smaller, so only the
    // commensurable endpoint (equal deltas) and the step cap can stop it
    for (long step = 0; step < params.euclid_cap; ++step) {
        double d1 = std::abs(coord(2) - coord(1));
        double d2 = std::abs(coord(4) - coord(1));
        double mn = std::min(d1, d2);
        if (mn < eps) break;
        if (std::abs(d1 - d2) < params.euclid_stall * (d1 + d2))
            return certificate("commensurable lengths: delta1 = delta2");
        ++out.euclid_steps;
        if (d2 > d1) {
            // move x4 a step of d1 toward x1 via L3 (forward or inverse)
            double t1 = coord(1), t3 = coord(3), t4 = coord(4);
            double fwd = std::abs(2 * t4 - t3 - t1);   // L3: x4 -> 2 x4 - x3
            double inv = std::abs(t3 - t1);            // L3^-1: x4 -> x3
            b.letter(3, fwd <= inv ? 1 : -1);
        } else {
            double t1 = coord(1), t2 = coord(2), t3 = coord(3);
            double fwd = std::abs(t3 - t1);            // L2: x2 -> x3
            double inv = std::abs(2 * t2 - t3 - t1);   // L2^-1: x2 -> 2 x2 - x3
            b.letter(2, fwd <= inv ? 1 : -1);
        }
    }
    if (std::min(std::abs(coord(2) - coord(1)), std::abs(coord(4) - coord(1))) >= eps)
        return certificate("euclid step cap exceeded");

    // push all four points toward the projection of x5 on the line
    Point proj = project_onto(b.z.at(5), axis);
    minimize_to(b, 1, proj);
    minimize_to(b, 3, proj);

    if (distance_to_geodesic(b.z.at(5), axis) > tol) {
        // rotate the (6,1,2) triple so the pair lines start crossing
        Moebius g = compose(half_turn(b.z.at(2)),
                            compose(half_turn(b.z.at(1)), half_turn(b.z.at(6))));
        if (classify(g, tol) == IsoClass::Elliptic) {
            double angle = elliptic_data(g, tol).angle;
            long n_max = static_cast<long>(
                             std::ceil(2.0 * kPi / std::max(kPi - std::abs(angle), 1e-9))) + 8;
            n_max = std::min(n_max, 100000L);
            b.twist(6, pick_twist_power(angle, n_max));
        }
    }

    out.pinched = false;
    out.word = b.word;
    out.z = b.z;
    out.result = std::move(b).take();
    return out;
}

namespace {

ConfigClass classify_or_par(const Sextuple& z, double tol) {
    // near a transition the cross-checks may disagree; fall back to the
    // additive boundary case, which both neighbouring strategies handle
    try {
        return classify_config(z, tol);
    } catch (const classification_error&) {
        return {ConfigTag::Par, 0};
    }
}

}  // namespace

ReduceResult reduce(const Sextuple& z0, const ReduceParams& params) {
    ReduceResult res;
    res.final_config = z0;
    if (classify_or_par(z0, params.tol).tag == ConfigTag::Singular) {
        res.verdict = {Verdict::Tag::Singular, params.eps, {}, {}, "singular input"};
        return res;
    }

    Sextuple z = z0;
    double best_size = size_A(z) + size_B(z);
    long since_progress = 0;

    for (long step = 0; step < params.max_steps; ++step) {
        double A = size_A(z), B = size_B(z);
        if (A + B <= 2.0 * params.eps) {
            res.verdict = {Verdict::Tag::Reduced, params.eps, {}, {}, ""};
            res.final_config = z;
            return res;
        }
        if (A + B < best_size - 1e-14 - 1e-12 * best_size) {
            best_size = A + B;
            since_progress = 0;
        } else if (++since_progress > 2000) {
            res.verdict = {Verdict::Tag::Stalled, params.eps, {}, {},
                           "no progress over 2000 steps"};
            res.final_config = z;
            return res;
        }

        ConfigClass c = classify_or_par(z, params.tol);
        OpResult r;
        std::string opname;
        try {
            switch (c.tag) {
                case ConfigTag::Singular: {
                    res.verdict = {Verdict::Tag::Reduced, params.eps, {}, {}, ""};
                    res.final_config = z;
                    return res;
                }
                case ConfigTag::Hex: {
                    res.verdict = {Verdict::Tag::Stalled, params.eps, {}, {},
                                   "HEX configuration: not in the X0 component"};
                    res.final_config = z;
                    return res;
                }
                case ConfigTag::DegeneratePair: {
                    EuclidOutcome eo = op_degenerate_euclid(z, params.eps, params);
                    if (eo.pinched) {
                        ReductionStep row{"euclid", eo.word, size_A(eo.z), size_B(eo.z),
                                          size_F(eo.z), c};
                        res.trace.push_back(std::move(row));
                        res.verdict = {Verdict::Tag::Pinched, params.eps, eo.cert.gen1,
                                       eo.cert.gen2, eo.cert.reason};
                        res.final_config = eo.z;
                        return res;
                    }
                    r = eo.result;
                    opname = "euclid";
                    break;
                }
                case ConfigTag::Aligned: {
                    r = op_aligned(z, params.tol);
                    opname = "aligned";
                    break;
                }
                case ConfigTag::Tri: {
                    r = op_tri(z, params.tol);
                    opname = "tri";
                    break;
                }
                case ConfigTag::Par: {
                    r = op_par(z, params.tol);
                    opname = "par";
                    break;
                }
                case ConfigTag::Skh: {
                    AuxPoints aux = aux_points(z, params.tol);
                    double minb = std::min({aux.b[0], aux.b[1], aux.b[2]});
                    bool phase3 = (A <= params.eps) && (minb <= params.eps);
                    if (!phase3) {
                        r = op_skh1(z, params.tol);
                        opname = "skh1";
                    } else {
                        OpResult cand1 = op_skh1(z, params.tol);
                        opname = "skh1";
                        r = cand1;
                        try {
                            OpResult cand2 = op_skh2(z, params.tol);
                            if (classify_or_par(cand2.z, params.tol).tag == ConfigTag::Skh) {
                                OpResult after = op_skh0(cand2.z, params.tol);
                                cand2.word.append(after.word);
                                cand2.z = after.z;
                            }
                            if (size_B(cand2.z) < size_B(cand1.z)) {
                                r = cand2;
                                opname = "skh2";
                            }
                        } catch (const skh2_unavailable&) {
                        }
                    }
                    break;
                }
            }
        } catch (const std::exception& e) {
            res.verdict = {Verdict::Tag::Stalled, params.eps, {}, {},
                           std::string("operation failed: ") + e.what()};
            res.final_config = z;
            return res;
        }

        z = r.z;
        res.trace.push_back({opname, r.word, size_A(z), size_B(z), size_F(z), c});
    }

    res.verdict = {Verdict::Tag::Stalled, params.eps, {}, {}, "step budget exhausted"};
    res.final_config = z;
    return res;
}

DiscretenessReport discreteness_report(const Sextuple& z, double eps,
                                       const ReduceParams& params0) {
    DiscretenessReport rep;
    ConfigClass c = classify_or_par(z, params0.tol);
    if (c.tag == ConfigTag::Singular) {
        rep.kind = DiscretenessReport::Kind::Elementary;
        rep.detail = "singular configuration";
        rep.verdict = {Verdict::Tag::Singular, eps, {}, {}, ""};
        return rep;
    }
    if (c.tag == ConfigTag::Aligned) {
        rep.kind = DiscretenessReport::Kind::Elementary;
        rep.detail = "aligned configuration preserves a line";
        rep.verdict = {Verdict::Tag::Stalled, eps, {}, {}, "elementary input"};
        return rep;
    }
    ReduceParams params = params0;
    params.eps = eps;
    ReduceResult rr = reduce(z, params);
    rep.verdict = rr.verdict;
    switch (rr.verdict.tag) {
        case Verdict::Tag::Reduced:
            rep.kind = DiscretenessReport::Kind::NonDiscrete;
            rep.detail =
                "size reduced to A+B <= 2 eps: arbitrarily short noncommuting elements "
                "contradict discreteness (Margulis)";
            break;
        case Verdict::Tag::Pinched:
            rep.kind = DiscretenessReport::Kind::InconclusivePinched;
            rep.gen1 = rr.verdict.gen1;
            rep.gen2 = rr.verdict.gen2;
            rep.detail = "pinched orbit: run Gilman-Maskit on the certificate generators";
            break;
        case Verdict::Tag::Singular:
            rep.kind = DiscretenessReport::Kind::Elementary;
            rep.detail = "singular configuration";
            break;
        case Verdict::Tag::Stalled:
            rep.kind = DiscretenessReport::Kind::Undetermined;
            rep.detail = rr.verdict.reason;
            break;
    }
    return rep;
}

}  // namespace hexflip
