#include "hexflip/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "hexflip/euclidean.hpp"
#include "hexflip/io.hpp"
#include "hexflip/lagrangian.hpp"
#include "hexflip/morse.hpp"
#include "hexflip/reduction.hpp"
#include "hexflip/twist.hpp"

namespace hexflip {

namespace {

constexpr double kPi = 3.14159265358979323846;

double urand(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

cplx half_plane_to_disc(cplx w) { return (w - cplx(0, 1)) / (w + cplx(0, 1)); }

// perpendicular to the real-axis geodesic at the interior point (x0, 0)
Geodesic perp_at_real(double x0) {
    if (std::abs(x0) < 1e-14) return Geodesic(cplx(0, -1), cplx(0, 1));
    double c = (1.0 + x0 * x0) / (2.0 * x0);
    double phi = std::acos(std::clamp(1.0 / c, -1.0, 1.0));
    return Geodesic(std::polar(1.0, -phi), std::polar(1.0, phi));
}

Geodesic line_through_direction(const Point& p, double angle) {
    Moebius t = disc_translation(p);
    return Geodesic(apply_boundary(t, -std::polar(1.0, angle)),
                    apply_boundary(t, std::polar(1.0, angle)));
}

}  // namespace

Sextuple make_tri_config(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Point A(std::polar(urand(rng, 0.1, 0.6), urand(rng, 0, 2 * kPi)));
        Point B(std::polar(urand(rng, 0.1, 0.6), urand(rng, 0, 2 * kPi)));
        Point C(std::polar(urand(rng, 0.1, 0.6), urand(rng, 0, 2 * kPi)));
        if (distance(A, B) < 0.15 || distance(B, C) < 0.15 || distance(C, A) < 0.15)
            continue;
        if (delta_invariant(A, B, C) < 0.02) continue;  // nearly collinear
        Sextuple z;
        z.at(1) = A;
        z.at(2) = B;
        z.at(3) = B;
        z.at(4) = C;
        z.at(5) = C;
        z.at(6) = A;
        // shuffle along the sides; class and side lines are preserved
        for (int i : {1, 3, 5}) {
            long k = static_cast<long>(rng() % 5) - 2;
            z = leapfrog_power(z, i, k);
        }
        if (!validate(z).ok) continue;
        try {
            if (classify_config(z).tag == ConfigTag::Tri) return z;
        } catch (const classification_error&) {
        }
    }
    throw domain_error("make_tri_config: rejection cap exceeded");
}

Sextuple make_par_config(std::uint64_t seed, double scale) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        double la = scale * urand(rng, 0.2, 0.7);
        double lc = scale * urand(rng, 0.2, 0.7);
        double lb = la + lc;  // middle length is the sum
        double m1 = std::exp(-2.0 * la), m2 = std::exp(2.0 * lb), m3 = std::exp(-2.0 * lc);
        double u1 = urand(rng, -1.5, -0.3), u2 = urand(rng, -0.2, 0.2);
        double u3 = -(m3 * m2 * u1 * (1.0 - m1) + m3 * u2 * (1.0 - m2)) / (1.0 - m3);
        double h1 = urand(rng, 0.8, 1.6), h2 = urand(rng, 0.8, 1.6), h3 = urand(rng, 0.8, 1.6);
        // pairs on the three vertical lines, translation directions (-, +, -)
        cplx w1(u1, h1), w2(u1, h1 * std::exp(-la));
        cplx w3(u2, h2), w4(u2, h2 * std::exp(lb));
        cplx w5(u3, h3), w6(u3, h3 * std::exp(-lc));
        Sextuple z;
        z.at(1) = Point(half_plane_to_disc(w1));
        z.at(2) = Point(half_plane_to_disc(w2));
        z.at(3) = Point(half_plane_to_disc(w3));
        z.at(4) = Point(half_plane_to_disc(w4));
        z.at(5) = Point(half_plane_to_disc(w5));
        z.at(6) = Point(half_plane_to_disc(w6));
        if (!validate(z).ok) continue;
        try {
            if (classify_config(z).tag == ConfigTag::Par) return z;
        } catch (const classification_error&) {
        }
    }
    throw domain_error("make_par_config: rejection cap exceeded");
}

Sextuple make_skh_config(std::uint64_t seed, double scale) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 500; ++attempt) {
        double r3 = std::tanh(scale * urand(rng, 0.4, 1.0) / 2.0);
        double r4 = std::tanh(scale * urand(rng, 0.4, 1.0) / 2.0);
        Geodesic h23 = perp_at_real(-r3);
        Geodesic h45 = perp_at_real(r4);
        double xm = urand(rng, -0.5 * r3, 0.5 * r4);
        double alpha = urand(rng, 0.25, 1.25) * std::min(1.0, scale) *
                       (rng() % 2 ? 1.0 : -1.0);
        Geodesic h61 = line_through_direction(Point(xm, 0.0), alpha);
        try {
            GeodesicRelation ra = geodesics_relation(h61, h23);
            GeodesicRelation rb = geodesics_relation(h61, h45);
            if (ra.kind != GeodesicRelation::Kind::Disjoint ||
                rb.kind != GeodesicRelation::Kind::Disjoint)
                continue;
            Geodesic d12 = ra.perp;  // common perpendicular of H61 and H23
            Geodesic d56 = rb.perp;
            Geodesic d34(cplx(-1, 0), cplx(1, 0));
            Sextuple z;
            z.at(1) = project_onto(project_onto(Point(), h61), d12);
            z.at(2) = project_onto(project_onto(Point(), h23), d12);
            z.at(3) = Point(-r3, 0.0);
            z.at(4) = Point(r4, 0.0);
            z.at(5) = project_onto(project_onto(Point(), h45), d56);
            z.at(6) = project_onto(z.at(1), d56);
            // half-turn product may close up as the inverse order; fix by swap
            if (!validate(z).ok) {
                std::swap(z.at(1), z.at(2));
                std::swap(z.at(3), z.at(4));
                std::swap(z.at(5), z.at(6));
            }
            if (!validate(z).ok) continue;
            for (int i : {1, 3, 5}) {
                long k = static_cast<long>(rng() % 3) - 1;
                z = leapfrog_power(z, i, k);
            }
            if (!validate(z).ok) continue;
            if (classify_config(z).tag == ConfigTag::Skh) return z;
        } catch (const std::exception&) {
            continue;
        }
    }
    throw domain_error("make_skh_config: rejection cap exceeded");
}

Sextuple make_hex_config(std::uint64_t seed, bool mirrored) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 500; ++attempt) {
        // three reflection lines around the origin, pairwise disjoint
        double gamma = urand(rng, 0.35, 0.95);
        std::array<Geodesic, 3> h;
        for (int k = 0; k < 3; ++k) {
            double base = 2.0 * kPi * k / 3.0 + urand(rng, -0.1, 0.1);
            double g = gamma * urand(rng, 0.85, 1.15);
            if (g > 1.0) g = 0.95;
            h[k] = Geodesic(std::polar(1.0, base - g), std::polar(1.0, base + g));
        }
        try {
            GeodesicRelation r01 = geodesics_relation(h[0], h[1]);
            GeodesicRelation r12 = geodesics_relation(h[1], h[2]);
            GeodesicRelation r20 = geodesics_relation(h[2], h[0]);
            using K = GeodesicRelation::Kind;
            if (r01.kind != K::Disjoint || r12.kind != K::Disjoint || r20.kind != K::Disjoint)
                continue;
            // sides: D12 = perp(h0, h1), D34 = perp(h1, h2), D56 = perp(h2, h0)
            Geodesic d12 = r01.perp, d34 = r12.perp, d56 = r20.perp;
            Sextuple z;
            z.at(1) = project_onto(project_onto(Point(), h[0]), d12);
            z.at(2) = project_onto(project_onto(Point(), h[1]), d12);
            z.at(3) = project_onto(z.at(2), d34);
            z.at(4) = project_onto(project_onto(Point(), h[2]), d34);
            z.at(5) = project_onto(z.at(4), d56);
            z.at(6) = project_onto(z.at(1), d56);
            if (!validate(z).ok) {
                std::swap(z.at(1), z.at(2));
                std::swap(z.at(3), z.at(4));
                std::swap(z.at(5), z.at(6));
            }
            if (!validate(z).ok) continue;
            if (classify_config(z).tag != ConfigTag::Hex) continue;
            if (mirrored)
                for (int i = 1; i <= 6; ++i) z.at(i) = Point(std::conj(z.at(i).z));
            return z;
        } catch (const std::exception&) {
            continue;
        }
    }
    throw domain_error("make_hex_config: rejection cap exceeded");
}

Sextuple make_degenerate_config(double ratio, double scale, double off) {
    Sextuple z;
    auto on_axis = [](double t) { return Point(std::tanh(t / 2.0), 0.0); };
    double d1 = scale * 0.5;
    z.at(1) = on_axis(0.0);
    z.at(2) = on_axis(d1);
    z.at(4) = on_axis(ratio * d1);
    z.at(3) = on_axis(ratio * d1 + d1);
    z.at(5) = Point(0.0, off);
    z.at(6) = z.at(5);
    return z;
}

BraidWord random_word(std::uint64_t seed, int max_length) {
    std::mt19937_64 rng(seed);
    int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_length));
    BraidWord w;
    for (int k = 0; k < len; ++k)
        w.push(1 + static_cast<int>(rng() % 6), rng() % 2 ? 1 : -1);
    return w;
}

namespace acceptance {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

constexpr std::uint64_t kMaster = 0x9A3C5E1B2D4F6071ull;

// 1. relation preservation under random braid words
CheckResult check_relation_preservation() {
    Timer tm;
    const int n = 100000;
    double worst_res = 0.0, worst_pair = 0.0;
    for (int k = 0; k < n; ++k) {
        Sextuple z = sample_random(derive_seed(kMaster, k), 1.0);
        BraidWord w = random_word(derive_seed(kMaster ^ 0xABCD, k), 64);
        int i = 1 + static_cast<int>(derive_seed(kMaster ^ 0x77, k) % 6);
        Moebius before = pair_product(z, i);
        Sextuple zi = leapfrog(z, i, 1);
        worst_pair = std::max(worst_pair, projective_distance(before, pair_product(zi, i)));
        Sextuple zw = apply_word(z, w);
        worst_res = std::max(worst_res, validate(zw).residual);
    }
    double secs = tm.elapsed();
    bool pass = worst_res < 1e-8 && worst_pair < 1e-10 && secs < 60.0;
    return {"relation_preservation", pass,
            "worst residual " + fmt(worst_res) + ", worst pair drift " + fmt(worst_pair) +
                ", " + fmt(secs) + " s",
            secs};
}

// 2. Lemma 3.2 contraction for (Tri) and (Par)
CheckResult check_lemma_3_2() {
    Timer tm;
    double worst_eq = 0.0, worst_contract = -1e300, par_margin = 0.0;
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
        Sextuple z = make_tri_config(derive_seed(kMaster ^ 0x32, k));
        double A = size_A(z);
        OpResult r = op_tri(z);
        double Ap = size_A(r.z), Bp = size_B(r.z);
        worst_eq = std::max(worst_eq, std::abs(Bp - A));
        worst_contract = std::max(worst_contract, Ap - (23.0 / 24.0) * A);
        if (std::abs(Bp - A) > 1e-9 || Ap > (23.0 / 24.0) * A + 1e-9) ++bad;
    }
    for (int k = 0; k < 200; ++k) {
        Sextuple z = make_par_config(derive_seed(kMaster ^ 0x33, k));
        double A = size_A(z);
        OpResult r = op_par(z);
        double Ap = size_A(r.z), Bp = size_B(r.z);
        worst_eq = std::max(worst_eq, std::abs(Bp - A));
        worst_contract = std::max(worst_contract, Ap - (23.0 / 24.0) * A);
        par_margin = std::max(par_margin, Ap / A);
        if (std::abs(Bp - A) > 1e-9 || Ap > (23.0 / 24.0) * A + 1e-9) ++bad;
    }
    double secs = tm.elapsed();
    bool pass = bad == 0;
    return {"lemma_3_2_contraction", pass,
            "worst |B'-A| " + fmt(worst_eq) + ", worst A'-(23/24)A " + fmt(worst_contract) +
                ", PAR margin " + fmt(par_margin) + " (proof bound 5/6)",
            secs};
}

// 3. Lemma 3.3: the (Skh1) decrement and drift bounds
CheckResult check_lemma_3_3() {
    Timer tm;
    int bad = 0;
    double worst_drift = 0.0, worst_gap = 1e300, worst_gate = -1e300;
    int gated = 0;
    for (int k = 0; k < 500; ++k) {
        double scale = (k % 5 == 4) ? 0.05 : 1.0;  // include small-A samples
        Sextuple z = make_skh_config(derive_seed(kMaster ^ 0x34, k), scale);
        OpResult s0 = op_skh0(z);
        double a12 = pair_length(s0.z, 1), a34 = pair_length(s0.z, 3),
               a56 = pair_length(s0.z, 5);
        double A = a12 + a34 + a56;
        double B = size_B(s0.z);
        AuxPoints aux = aux_points(s0.z);
        Sextuple zt = half_twist(s0.z, 1);
        double a12p = pair_length(zt, 1), a34p = pair_length(zt, 3),
               a56p = pair_length(zt, 5);
        double drift = std::max(std::abs(a12p - a12), std::abs(a56p - a56));
        worst_drift = std::max(worst_drift, drift);
        double decrement = std::cosh(a34) - std::cosh(a34p);
        double bound = 2.0 * std::pow(std::sinh(std::min(a12, a56)), 2) /
                       std::pow(std::cosh(a34), 2);
        worst_gap = std::min(worst_gap, decrement - bound);
        if (drift > 1e-10 || decrement < bound - 1e-9) ++bad;
        if (A < 0.05) {
            ++gated;
            double lhs = size_B(zt);
            double rhs = B + 4.0 * A - std::min({1.0, aux.b[0], aux.b[1]}) + 1e-6;
            worst_gate = std::max(worst_gate, lhs - rhs);
            if (lhs > rhs) ++bad;
        }
    }
    double secs = tm.elapsed();
    return {"lemma_3_3_skh1", bad == 0,
            "worst drift " + fmt(worst_drift) + ", min decrement-bound " + fmt(worst_gap) +
                ", gated samples " + std::to_string(gated) + ", worst gate slack " +
                fmt(worst_gate),
            secs};
}

// 4. Theorem 1.1 at desk scale
CheckResult check_theorem_1_1() {
    Timer tm;
    int reduced = 0, total = 0;
    double worst_final = 0.0;
    std::string first_fail;
    for (int k = 0; total < 1000 && k < 4000; ++k) {
        Sextuple z = sample_random(derive_seed(kMaster ^ 0x41, k), 1.0);
        if (size_A(z) + size_B(z) > 10.0) continue;
        ++total;
        ReduceParams params;
        params.eps = 1e-3;
        params.max_steps = 100000;
        ReduceResult rr = reduce(z, params);
        if (rr.verdict.tag == Verdict::Tag::Reduced) {
            ++reduced;
            Sextuple n = normalize(rr.final_config);
            double m = 0.0;
            for (int i = 1; i <= 6; ++i) m = std::max(m, std::abs(n.at(i).z));
            worst_final = std::max(worst_final, m);
        } else if (first_fail.empty()) {
            first_fail = std::string(verdict_name(rr.verdict.tag)) + ": " + rr.verdict.reason;
        }
    }
    double secs = tm.elapsed();
    bool pass = reduced == total && total == 1000 && worst_final <= 2e-3 && secs < 600.0;
    return {"theorem_1_1_reduction", pass,
            std::to_string(reduced) + "/" + std::to_string(total) + " reduced, worst final " +
                fmt(worst_final) + ", " + fmt(secs) + " s" +
                (first_fail.empty() ? "" : ", first failure " + first_fail),
            secs};
}

// 5. the degenerate Euclid path
CheckResult check_euclid_degenerate() {
    Timer tm;
    double golden = 0.5 * (1.0 + std::sqrt(5.0));
    Sextuple zg = make_degenerate_config(golden);
    EuclidOutcome eg = op_degenerate_euclid(zg, 1e-3);
    bool golden_ok = !eg.pinched && eg.euclid_steps <= 40;
    Sextuple z2 = make_degenerate_config(2.0);
    EuclidOutcome e2 = op_degenerate_euclid(z2, 1e-3);
    bool ratio2_ok = e2.pinched;
    double secs = tm.elapsed();
    return {"euclid_degenerate", golden_ok && ratio2_ok,
            "golden steps " + std::to_string(eg.euclid_steps) +
                (eg.pinched ? " (pinched!)" : "") + ", ratio-2 " +
                (e2.pinched ? "pinched" : "NOT pinched"),
            secs};
}

// 6. q and h consistency, signature
CheckResult check_q_h_consistency() {
    Timer tm;
    double worst = 0.0;
    std::mt19937_64 rng(kMaster ^ 0x66);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 10000; ++k) {
        Lambda l;
        for (auto& c : l) c = cplx(gauss(rng), gauss(rng));
        EucConfig v = f2_map(l);
        v = euc_scale(v, 1.0 / euc_norm(v));
        double q1 = q_area_route(v), q2 = q_double_sum(v), q3 = q_symplectic_route(v);
        worst = std::max({worst, std::abs(q1 - q2), std::abs(q2 - q3)});
        // h(v,v) = q(v), real
        cplx hv = h_form(v, v);
        worst = std::max({worst, std::abs(hv.real() - q2), std::abs(hv.imag())});
    }
    auto sig = signature_of_h();
    double secs = tm.elapsed();
    bool pass = worst < 1e-12 && sig.first == 2 && sig.second == 2;
    return {"q_h_consistency", pass,
            "worst route gap " + fmt(worst) + ", signature (" + std::to_string(sig.first) +
                "," + std::to_string(sig.second) + ")",
            secs};
}

// 7. cohomology identities
CheckResult check_cohomology() {
    Timer tm;
    double worst = 0.0;
    std::mt19937_64 rng(kMaster ^ 0x77);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 10000; ++k) {
        Lambda l;
        double n = 0.0;
        for (auto& c : l) {
            c = cplx(gauss(rng), gauss(rng));
            n += std::norm(c);
        }
        n = std::sqrt(n);
        for (auto& c : l) c /= n;
        double target = 0.0;
        for (int i = 0; i < 6; ++i) target += std::imag(l[i] * std::conj(l[(i + 1) % 6]));
        worst = std::max(worst, std::abs(q_form(f2_map(l)) + 0.5 * target));
        Lambda lbar;
        for (int i = 0; i < 6; ++i) lbar[i] = std::conj(l[i]);
        cplx cup = f1_cup(l, lbar);
        worst = std::max(worst, std::abs(cup - cplx(0.0, -2.0) * target));
    }
    // kernel generators map to gauge zero
    Lambda odd{}, even{};
    for (int i = 0; i < 6; i += 2) odd[i] = 1.0;
    for (int i = 1; i < 6; i += 2) even[i] = 1.0;
    double kz = std::max(euc_norm(f2_map(odd)), euc_norm(f2_map(even)));
    double secs = tm.elapsed();
    bool pass = worst < 1e-12 && kz < 1e-14;
    return {"cohomology_identities", pass,
            "worst identity gap " + fmt(worst) + ", kernel image norm " + fmt(kz), secs};
}

// 8. Lagrangian criterion, round trip, equivariance
CheckResult check_lagrangian() {
    Timer tm;
    double worst_iso = 0.0, worst_q = 0.0, worst_rt = 0.0, worst_eq = 0.0;
    std::mt19937_64 rng(kMaster ^ 0x88);
    const auto& gens = sp_generators();
    for (int k = 0; k < 10000; ++k) {
        EucConfig v = sample_cone_direction(derive_seed(kMaster ^ 0x88, k));
        LagrangianPoint lp = lagrangian_map(v);
        worst_iso = std::max(worst_iso,
                             std::abs(symplectic_pairing(lp.basis[0], lp.basis[1])));
        EucConfig v2 = lagrangian_inverse(lp);
        worst_rt = std::max(worst_rt, phase_distance(v, v2));
        // reverse direction: a random point of T*+L must map into the cone
        if (k < 2000) {
            LagrangianPoint rnd = lp;
            double a = urand(rng, 0.5, 2.0), d = urand(rng, 0.5, 2.0),
                   b = urand(rng, -0.4, 0.4) * std::sqrt(a * d);
            rnd.gram = {a, b, d};
            EucConfig w = lagrangian_inverse(rnd);
            worst_q = std::max(worst_q, std::abs(q_form(w)));
        }
        if (k < 500) {
            const Sp4& g = gens[k % gens.size()];
            EucConfig gv = sp_act_config(g, v);
            EucConfig via_lag = lagrangian_inverse(sp_act(g, lagrangian_map(v)));
            worst_eq = std::max(worst_eq, phase_distance(gauge_fix(gv), via_lag));
        }
    }
    double secs = tm.elapsed();
    bool pass = worst_iso < 1e-10 && worst_q < 1e-10 && worst_rt < 1e-10 && worst_eq < 1e-9;
    return {"lagrangian_criterion", pass,
            "isotropy " + fmt(worst_iso) + ", q(inverse) " + fmt(worst_q) + ", roundtrip " +
                fmt(worst_rt) + ", equivariance " + fmt(worst_eq),
            secs};
}

// 9. Morse expansions of F and phi
CheckResult check_morse_expansions() {
    Timer tm;
    std::mt19937_64 rng(kMaster ^ 0x99);
    std::normal_distribution<double> gauss;
    double worst_sf = 1e300, worst_sp = 1e300;
    for (int k = 0; k < 100; ++k) {
        EucConfig z;
        double n = 0.0;
        for (int i = 1; i <= 6; ++i) {
            z.at(i) = cplx(gauss(rng), gauss(rng));
            n += std::norm(z.at(i));
        }
        for (int i = 1; i <= 6; ++i) z.at(i) /= std::sqrt(n);
        cplx lin = 0.0;
        for (int i = 1; i <= 6; ++i) lin += ((i % 2) ? -1.0 : 1.0) * z.at(i);
        double q = q_double_sum(z);
        std::array<double, 3> ts{1e-2, 1e-3, 1e-4}, rf{}, rp{};
        for (int j = 0; j < 3; ++j) {
            MorseValue mv = morse_F_phi(euc_scale(z, ts[j]));
            rf[j] = std::abs(mv.F - ts[j] * lin);
            rp[j] = std::abs(mv.phi + 2.0 * ts[j] * ts[j] * q);
        }
        // least-squares log-log slope over the three points
        auto slope = [&](const std::array<double, 3>& r) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (int j = 0; j < 3; ++j) {
                double x = std::log(ts[j]), y = std::log(std::max(r[j], 1e-18));
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            return (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
        };
        worst_sf = std::min(worst_sf, slope(rf));
        worst_sp = std::min(worst_sp, slope(rp));
    }
    double secs = tm.elapsed();
    bool pass = worst_sf >= 2.0 - 0.2 && worst_sp >= 3.0 - 0.2;
    return {"morse_expansions", pass,
            "min F-slope " + fmt(worst_sf) + " (need >= 1.8), min phi-slope " + fmt(worst_sp) +
                " (need >= 2.8)",
            secs};
}

// 10. the trace-function quadratic limit
CheckResult check_prop_5_1() {
    Timer tm;
    const auto& curves = all_curves();
    std::array<int, 10> signs{};
    double worst_rel = 0.0;
    int used = 0;
    for (int k = 0; used < 50 && k < 500; ++k) {
        EucConfig v = sample_cone_direction(derive_seed(kMaster ^ 0xAA, k));
        double minq = 1e300;
        for (const auto& c : curves) minq = std::min(minq, std::abs(q_gamma(v, c)));
        if (minq < 0.01) continue;  // quadratic term too weak for a 5% check
        ++used;
        LiftResult lift = lift_to_sextuple(v, 1e-3);
        for (size_t ci = 0; ci < curves.size(); ++ci) {
            double fg = f_gamma(lift.config, curves[ci]) / 1e-6;
            double q = q_gamma(v, curves[ci]);
            double rel = std::abs(std::abs(fg) - 8.0 * std::abs(q)) / (8.0 * std::abs(q));
            worst_rel = std::max(worst_rel, rel);
            int s = (fg / q) > 0 ? 1 : -1;
            if (signs[ci] == 0) signs[ci] = s;
            else if (signs[ci] != s) signs[ci] = 99;  // inconsistent
        }
    }
    bool sign_ok = true;
    std::string signstr;
    for (int s : signs) {
        sign_ok = sign_ok && (s == 1 || s == -1);
        signstr += (s == 1 ? "+" : s == -1 ? "-" : "?");
    }
    double secs = tm.elapsed();
    bool pass = used == 50 && worst_rel < 0.05 && sign_ok;
    return {"prop_5_1_trace_limit", pass,
            "samples " + std::to_string(used) + ", worst rel err " + fmt(worst_rel) +
                ", signs per curve " + signstr,
            secs};
}

// 11. distribution ranks
CheckResult check_distribution_ranks() {
    Timer tm;
    int bad = 0;
    DistributionRank last{};
    for (int k = 0; k < 100; ++k) {
        EucConfig v = sample_cone_direction(derive_seed(kMaster ^ 0xBB, k));
        DistributionRank dr = distribution_rank(v);
        last = dr;
        if (dr.rank_upstairs != 5 || dr.rank_brackets_upstairs != 7 ||
            dr.rank_quotient != 4 || dr.rank_brackets_quotient != 6)
            ++bad;
    }
    double secs = tm.elapsed();
    return {"distribution_ranks", bad == 0,
            "bad points " + std::to_string(bad) + ", last ranks (" +
                std::to_string(last.rank_upstairs) + "," +
                std::to_string(last.rank_brackets_upstairs) + ") upstairs / (" +
                std::to_string(last.rank_quotient) + "," +
                std::to_string(last.rank_brackets_quotient) + ") quotient",
            secs};
}

// 12. the Lagrangian map is symplectic with constant 1/2
CheckResult check_lambda_symplectic() {
    Timer tm;
    auto ratio_at = [](const LagrangianChart& chart, const std::array<double, 3>& p,
                       const std::array<double, 3>& q) {
        auto M = pullback_omega(chart, p, q);
        return form_ratio(M, omega_L_matrix());
    };
    auto [r0, dev0] = ratio_at(standard_chart(), {0, 0, 0}, {1, 0, 1});
    bool pass = std::abs(r0 - 0.5) < 1e-6 && dev0 < 1e-6;
    double worst = std::abs(r0 - 0.5);
    std::mt19937_64 rng(kMaster ^ 0xCC);
    const auto& gens = sp_generators();
    for (int k = 0; k < 20; ++k) {
        // random chart: push the frame by a word in the generators
        LagrangianChart chart = standard_chart();
        Sp4 g{};
        for (int i = 0; i < 4; ++i) g[i][i] = 1.0;
        for (int w = 0; w < 3; ++w) {
            const Sp4& gg = gens[rng() % gens.size()];
            Sp4 ng{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l) ng[i][j] += gg[i][l] * g[l][j];
            g = ng;
        }
        chart = transported_chart(g);
        std::array<double, 3> p{urand(rng, -0.2, 0.2), urand(rng, -0.2, 0.2),
                                urand(rng, -0.2, 0.2)};
        double a = urand(rng, 0.7, 1.4), d = urand(rng, 0.7, 1.4);
        std::array<double, 3> q{a, urand(rng, -0.3, 0.3) * std::sqrt(a * d), d};
        auto [r, dev] = ratio_at(chart, p, q);
        worst = std::max(worst, std::abs(r - 0.5));
        if (std::abs(r - 0.5) > 1e-4 || dev > 1e-3) pass = false;
    }
    double secs = tm.elapsed();
    return {"lambda_symplectic_half", pass,
            "chart ratio " + fmt(r0) + " (dev " + fmt(dev0) + "), worst |ratio-1/2| " +
                fmt(worst),
            secs};
}

// 13. twist flows: periodicity and the half-twist time
CheckResult check_twist_flows() {
    Timer tm;
    const auto& curves = all_curves();
    double worst_per = 0.0, worst_ht = 0.0, worst_res = 0.0;
    for (int k = 0; k < 200; ++k) {
        EucConfig v = sample_cone_direction(derive_seed(kMaster ^ 0xDD, k));
        LiftResult lift = lift_to_sextuple(v, 0.05);
        Sextuple z = lift.config;
        const PartitionCurve& c = curves[k % curves.size()];
        Sextuple zp = phi_flow(z, c, 2.0 * kPi);
        double dp = 0.0;
        for (int i = 1; i <= 6; ++i) dp = std::max(dp, distance(zp.at(i), z.at(i)));
        worst_per = std::max(worst_per, dp);
        double th = theta(z, c);
        Sextuple zh = phi_flow(z, c, th);
        // the half twist around the conjugated first triple, conjugated back
        Sextuple w = apply_word(z, c.conjugator);
        Sextuple ht = apply_word(half_twist(w, 1), c.conjugator.inverse());
        double dh = 0.0;
        for (int i = 1; i <= 6; ++i) dh = std::max(dh, distance(zh.at(i), ht.at(i)));
        worst_ht = std::max(worst_ht, dh);
        worst_res = std::max(worst_res, validate(zp).residual);
    }
    double secs = tm.elapsed();
    bool pass = worst_per < 1e-9 && worst_ht < 1e-9 && worst_res < 1e-9;
    return {"twist_flows", pass,
            "periodicity " + fmt(worst_per) + ", half-twist gap " + fmt(worst_ht) +
                ", validate residual " + fmt(worst_res),
            secs};
}

}  // namespace

const std::vector<std::pair<std::string, CheckFn>>& all_checks() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"relation_preservation", check_relation_preservation},
        {"lemma_3_2_contraction", check_lemma_3_2},
        {"lemma_3_3_skh1", check_lemma_3_3},
        {"theorem_1_1_reduction", check_theorem_1_1},
        {"euclid_degenerate", check_euclid_degenerate},
        {"q_h_consistency", check_q_h_consistency},
        {"cohomology_identities", check_cohomology},
        {"lagrangian_criterion", check_lagrangian},
        {"morse_expansions", check_morse_expansions},
        {"prop_5_1_trace_limit", check_prop_5_1},
        {"distribution_ranks", check_distribution_ranks},
        {"lambda_symplectic_half", check_lambda_symplectic},
        {"twist_flows", check_twist_flows},
    };
    return checks;
}

int run_checks(const std::string& filter, std::ostream& os) {
    int failures = 0;
    for (const auto& [name, fn] : all_checks()) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        CheckResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {name, false, std::string("exception: ") + e.what(), 0.0};
        }
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail << ")\n";
        if (!r.pass) ++failures;
    }
    return failures;
}

}  // namespace acceptance

}  // namespace hexflip
