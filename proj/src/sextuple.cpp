#include "hexflip/sextuple.hpp"

#include <cmath>
#include <random>

namespace hexflip {

namespace {

int wrap6(int i) { return ((i - 1) % 6 + 6) % 6 + 1; }

}  // namespace

Moebius product_of_half_turns(const Sextuple& z) {
    Moebius p = identity_iso();
    for (int i = 1; i <= 6; ++i) p = compose(half_turn(z.at(i)), p);
    return p;
}

Moebius pair_product(const Sextuple& z, int i) {
    return compose(half_turn(z.cyc(i + 1)), half_turn(z.cyc(i)));
}

ValidationResult validate(const Sextuple& z, double tol) {
    Moebius p = product_of_half_turns(z);
    double dplus = frobenius_distance(p, identity_iso());
    double dminus = frobenius_distance(p, identity_iso().negated());
    double r = std::min(dplus, dminus);
    return {r < tol, r, dplus <= dminus ? 1 : -1};
}

Sextuple leapfrog(const Sextuple& z, int i, int sign) {
    if (i < 1 || i > 6) throw usage_error("leapfrog: index must be in 1..6");
    if (sign != 1 && sign != -1) throw usage_error("leapfrog: sign must be +-1");
    Sextuple r = z;
    int j = wrap6(i + 1);
    if (sign == 1) {
        r.at(i) = z.at(j);
        r.at(j) = apply(half_turn(z.at(j)), z.at(i));
    } else {
        r.at(i) = apply(half_turn(z.at(i)), z.at(j));
        r.at(j) = z.at(i);
    }
    return r;
}

Sextuple leapfrog_power(const Sextuple& z, int i, long k) {
    if (k == 0) return z;
    long two_k = (k >= 0 ? k / 2 : -((-k) / 2));
    int rem = static_cast<int>(k - 2 * two_k);  // -1, 0 or +1
    Sextuple r = z;
    int j = wrap6(i + 1);
    if (two_k != 0) {
        double a = distance(z.at(i), z.at(j));
        if (a < 1e-300) throw domain_error("leapfrog_power: coincident pair has no axis");
        Geodesic d = geodesic_through(z.at(i), z.at(j));
        Moebius t = translate_along(d, 2.0 * a * static_cast<double>(two_k));
        r.at(i) = apply(t, z.at(i));
        r.at(j) = apply(t, z.at(j));
    }
    if (rem != 0) r = leapfrog(r, i, rem);
    return r;
}

Sextuple cyclic_rot(const Sextuple& z) {
    Sextuple r;
    for (int i = 1; i <= 6; ++i) r.at(i) = z.cyc(i + 1);
    return r;
}

Sextuple half_twist(const Sextuple& z, int i) {
    if (i < 1 || i > 6) throw usage_error("half_twist: index must be in 1..6");
    Moebius f = compose(half_turn(z.cyc(i + 2)),
                        compose(half_turn(z.cyc(i + 1)), half_turn(z.cyc(i))));
    Sextuple r = z;
    for (int k = 0; k < 3; ++k) r.at(wrap6(i + k)) = apply(f, z.cyc(i + k));
    return r;
}

Sextuple apply_word(const Sextuple& z, const BraidWord& w) {
    Sextuple r = z;
    for (const auto& l : w.letters) r = leapfrog(r, l.index, l.sign);
    return r;
}

double pair_length(const Sextuple& z, int i) { return distance(z.cyc(i), z.cyc(i + 1)); }

double size_A(const Sextuple& z) {
    return pair_length(z, 1) + pair_length(z, 3) + pair_length(z, 5);
}

double size_B(const Sextuple& z) {
    return pair_length(z, 2) + pair_length(z, 4) + pair_length(z, 6);
}

double size_F(const Sextuple& z) {
    double f = 1.0;
    for (int i = 1; i <= 6; ++i) f *= std::cosh(pair_length(z, i));
    return f;
}

const char* config_tag_name(ConfigTag t) {
    switch (t) {
        case ConfigTag::Singular: return "singular";
        case ConfigTag::Aligned: return "aligned";
        case ConfigTag::DegeneratePair: return "degenerate_pair";
        case ConfigTag::Tri: return "TRI";
        case ConfigTag::Par: return "PAR";
        case ConfigTag::Skh: return "SKH";
        case ConfigTag::Hex: return "HEX";
    }
    return "?";
}

const char* component_name(ComponentId c) {
    switch (c) {
        case ComponentId::X0: return "X0";
        case ComponentId::Xplus2: return "X+2";
        case ComponentId::Xminus2: return "X-2";
    }
    return "?";
}

namespace {

struct Lines {
    Geodesic d12, d34, d56;
};

Lines pair_lines(const Sextuple& z) {
    return {geodesic_through(z.at(1), z.at(2)), geodesic_through(z.at(3), z.at(4)),
            geodesic_through(z.at(5), z.at(6))};
}

bool all_near(const Sextuple& z, const Point& p, double tol) {
    for (int i = 1; i <= 6; ++i)
        if (distance(z.at(i), p) > tol) return false;
    return true;
}

std::optional<Geodesic> common_line(const Sextuple& z, double tol) {
    // geodesic through the two most distant points, if every point lies on it
    int bi = 1, bj = 2;
    double best = -1.0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            double d = distance(z.at(i), z.at(j));
            if (d > best) best = d, bi = i, bj = j;
        }
    if (best < tol) return std::nullopt;
    Geodesic g = geodesic_through(z.at(bi), z.at(bj));
    for (int i = 1; i <= 6; ++i)
        if (distance_to_geodesic(z.at(i), g) > tol) return std::nullopt;
    return g;
}

// Does the common perpendicular of the two short sides cross the long line?
// Crossing = the skew case of the right-angled hexagon.
bool skew_hexagon(const Geodesic& dlong, const Geodesic& da, const Geodesic& db,
                  double tol) {
    GeodesicRelation h = geodesics_relation(da, db, tol);
    if (h.kind != GeodesicRelation::Kind::Disjoint)
        throw classification_error("skew test: short lines have no common perpendicular");
    GeodesicRelation r = geodesics_relation(h.perp, dlong, tol);
    return r.kind == GeodesicRelation::Kind::Crossing;
}

}  // namespace

ConfigClass classify_config(const Sextuple& z, double tol) {
    if (all_near(z, z.at(1), tol)) return {ConfigTag::Singular, 0};
    for (int i : {1, 3, 5})
        if (pair_length(z, i) < tol) return {ConfigTag::DegeneratePair, i};
    if (common_line(z, tol)) return {ConfigTag::Aligned, 0};

    Lines ln = pair_lines(z);
    GeodesicRelation r1 = geodesics_relation(ln.d12, ln.d34, tol);
    GeodesicRelation r2 = geodesics_relation(ln.d34, ln.d56, tol);
    GeodesicRelation r3 = geodesics_relation(ln.d56, ln.d12, tol);
    using K = GeodesicRelation::Kind;

    int crossings = (r1.kind == K::Crossing) + (r2.kind == K::Crossing) +
                    (r3.kind == K::Crossing);
    int asymptotics = (r1.kind == K::Asymptotic) + (r2.kind == K::Asymptotic) +
                      (r3.kind == K::Asymptotic);

    double a12 = pair_length(z, 1), a34 = pair_length(z, 3), a56 = pair_length(z, 5);
    double A = a12 + a34 + a56;
    double amax = std::max({a12, a34, a56});
    double additivity = std::abs(2.0 * amax - A);  // |max - sum of others|

    if (asymptotics > 0) {
        // PAR needs the length additivity cross-check to agree
        if (additivity > tol * (1.0 + A))
            throw classification_error(
                "classify_config: asymptotic lines but additivity fails; candidates PAR vs " +
                std::string(crossings ? "TRI" : "SKH/HEX"));
        return {ConfigTag::Par, 0};
    }
    if (crossings == 3) return {ConfigTag::Tri, 0};
    if (crossings == 0) {
        // all pairwise disjoint: skew test on the longest line decides SKH vs HEX
        const Geodesic* dl;
        const Geodesic *da, *db;
        if (amax == a12) dl = &ln.d12, da = &ln.d34, db = &ln.d56;
        else if (amax == a34) dl = &ln.d34, da = &ln.d56, db = &ln.d12;
        else dl = &ln.d56, da = &ln.d12, db = &ln.d34;
        bool skew = skew_hexagon(*dl, *da, *db, tol);
        bool dominant = amax > A - amax;
        if (skew && !dominant)
            throw classification_error(
                "classify_config: skew hexagon but max length is not dominant; "
                "candidates SKH vs HEX");
        return skew ? ConfigClass{ConfigTag::Skh, 0} : ConfigClass{ConfigTag::Hex, 0};
    }
    // mixed crossings: near a TRI/SKH transition through PAR; pick by additivity
    if (additivity < tol * (1.0 + A)) return {ConfigTag::Par, 0};
    throw classification_error("classify_config: inconsistent line relations; candidates TRI vs SKH");
}

namespace {

// hexagon feet for the disjoint cases (SKH and HEX)
struct HexFeet {
    std::array<Point, 6> y;        // y1..y6
    std::array<Geodesic, 3> h;     // H23, H45, H61
};

HexFeet hexagon_feet(const Lines& ln, double tol) {
    GeodesicRelation h23 = geodesics_relation(ln.d12, ln.d34, tol);
    GeodesicRelation h45 = geodesics_relation(ln.d34, ln.d56, tol);
    GeodesicRelation h61 = geodesics_relation(ln.d56, ln.d12, tol);
    if (h23.kind != GeodesicRelation::Kind::Disjoint ||
        h45.kind != GeodesicRelation::Kind::Disjoint ||
        h61.kind != GeodesicRelation::Kind::Disjoint)
        throw classification_error("hexagon_feet: lines are not pairwise disjoint");
    HexFeet f;
    f.h = {h23.perp, h45.perp, h61.perp};
    f.y[0] = project_onto(project_onto(Point(), h61.perp), ln.d12);  // y1 = H61 ^ D12
    f.y[1] = project_onto(project_onto(Point(), h23.perp), ln.d12);  // y2 = H23 ^ D12
    f.y[2] = project_onto(f.y[1], ln.d34);                           // y3 = H23 ^ D34
    f.y[3] = project_onto(project_onto(Point(), h45.perp), ln.d34);  // y4 = H45 ^ D34
    f.y[4] = project_onto(f.y[3], ln.d56);                           // y5 = H45 ^ D56
    f.y[5] = project_onto(f.y[0], ln.d56);                           // y6 = H61 ^ D56
    return f;
}

double polygon_orientation(const std::array<Point, 6>& y) {
    double s = 0.0;
    for (int k = 0; k < 6; ++k) {
        cplx p = y[k].z, q = y[(k + 1) % 6].z;
        s += p.real() * q.imag() - p.imag() * q.real();
    }
    return s;
}

}  // namespace

ComponentId component_of(const Sextuple& z, double tol) {
    ConfigClass c = classify_config(z, tol);
    if (c.tag != ConfigTag::Hex) return ComponentId::X0;
    HexFeet f = hexagon_feet(pair_lines(z), tol);
    return polygon_orientation(f.y) > 0.0 ? ComponentId::Xplus2 : ComponentId::Xminus2;
}

AuxPoints aux_points(const Sextuple& z, double tol) {
    ConfigClass c = classify_config(z, tol);
    AuxPoints out;
    out.tag = c.tag;
    Lines ln = pair_lines(z);

    if (c.tag == ConfigTag::Tri) {
        GeodesicRelation rAB = geodesics_relation(ln.d12, ln.d34, tol);
        GeodesicRelation rBC = geodesics_relation(ln.d34, ln.d56, tol);
        GeodesicRelation rCA = geodesics_relation(ln.d56, ln.d12, tol);
        Point B = rAB.at, C = rBC.at, A = rCA.at;  // y2=y3=B, y4=y5=C, y6=y1=A
        out.y = {A, B, B, C, C, A};
        for (int k = 0; k < 3; ++k) {
            int i = 2 * k + 1;
            const Point &yi = out.yat(i), &yj = out.yat(i + 1);
            double a = pair_length(z, i);
            Geodesic d = geodesic_through(yi, yj);  // oriented y_i -> y_{i+1}
            out.m[k] = midpoint(yi, yj);
            out.u[k] = apply(translate_along(d, -a / 2.0), yi);
            out.v[k] = apply(translate_along(d, a / 2.0), yj);
        }
        return out;
    }

    if (c.tag == ConfigTag::Par) {
        // common ideal point: mean of the nearly-coincident endpoints
        GeodesicRelation r = geodesics_relation(ln.d12, ln.d34, tol);
        if (r.kind != GeodesicRelation::Kind::Asymptotic)
            throw classification_error("aux_points: PAR without asymptotic pair");
        cplx omega = r.ideal;
        // y3 = x3, y4 = x4; y2 on D12 at x3's horocycle, y5 on D56 at x4's
        out.y[2] = z.at(3);
        out.y[3] = z.at(4);
        out.y[1] = horocycle_foot(omega, z.at(3), ln.d12);
        out.y[4] = horocycle_foot(omega, z.at(4), ln.d56);
        // spacing a12 along D12 against the translation direction x1 -> x2
        double t1 = axis_coordinate(ln.d12, z.at(1));
        double t2 = axis_coordinate(ln.d12, z.at(2));
        double ty2 = axis_coordinate(ln.d12, out.y[1]);
        out.y[0] = point_at_coordinate(ln.d12, ty2 - (t2 - t1));
        double t5 = axis_coordinate(ln.d56, z.at(5));
        double t6 = axis_coordinate(ln.d56, z.at(6));
        double ty5 = axis_coordinate(ln.d56, out.y[4]);
        out.y[5] = point_at_coordinate(ln.d56, ty5 + (t6 - t5));
        return out;
    }

    if (c.tag == ConfigTag::Skh) {
        HexFeet f = hexagon_feet(ln, tol);
        out.y = f.y;
        out.hline = f.h;
        out.b = {distance(f.y[1], f.y[2]), distance(f.y[3], f.y[4]),
                 distance(f.y[5], f.y[0])};
        // m: crossing of the H-line opposite the longest side with that side's line
        double a12 = pair_length(z, 1), a34 = pair_length(z, 3), a56 = pair_length(z, 5);
        double amax = std::max({a12, a34, a56});
        const Geodesic* dl = (amax == a12) ? &ln.d12 : (amax == a34) ? &ln.d34 : &ln.d56;
        const Geodesic* hopp = (amax == a12) ? &f.h[1] : (amax == a34) ? &f.h[2] : &f.h[0];
        GeodesicRelation r = geodesics_relation(*hopp, *dl, tol);
        if (r.kind == GeodesicRelation::Kind::Crossing) out.skh_m = r.at;
        else throw classification_error("aux_points: SKH without skew crossing");
        return out;
    }

    throw usage_error("aux_points: class must be TRI, PAR or SKH");
}

Genus2Rep to_genus2_rep(const Sextuple& z) {
    Moebius s1 = half_turn(z.at(1)), s2 = half_turn(z.at(2)), s3 = half_turn(z.at(3));
    Moebius s4 = half_turn(z.at(4)), s5 = half_turn(z.at(5)), s6 = half_turn(z.at(6));
    return {compose(s2, s1), compose(s2, s3), compose(s5, s4), compose(s5, s6)};
}

Sextuple from_genus2_rep(const Genus2Rep& rep, double tol) {
    // trace of [A,B] must be in (-inf, 2]; commuting pair is rejected upstream
    CommutatorPoints t1 = commutator_points(rep.A1, rep.B1, tol);
    CommutatorPoints t2 = commutator_points(rep.A2, rep.B2, tol);
    Sextuple z;
    z.at(1) = t1.x1;
    z.at(2) = t1.x2;
    z.at(3) = t1.x3;
    z.at(4) = t2.x1;
    z.at(5) = t2.x2;
    z.at(6) = t2.x3;
    return z;
}

Sextuple normalize(const Sextuple& z, double tol) {
    int bi = 0, bj = 0;
    for (int i = 1; i <= 6 && !bi; ++i)
        for (int j = i + 1; j <= 6; ++j)
            if (distance(z.at(i), z.at(j)) > tol) {
                bi = i;
                bj = j;
                break;
            }
    if (!bi) return singular_config();
    Moebius t = disc_translation(z.at(bi)).inverse();
    cplx w = apply(t, z.at(bj)).z;
    Moebius g = compose(Moebius(std::polar(1.0, -std::arg(w) / 2.0), cplx(0, 0)), t);
    Sextuple r;
    for (int i = 1; i <= 6; ++i) r.at(i) = apply(g, z.at(i));
    return r;
}

Sextuple singular_config() { return Sextuple{}; }

Sextuple sample_random(std::uint64_t seed, double spread, SampleStats* stats,
                       int max_attempts) {
    if (spread <= 0.0) throw usage_error("sample_random: spread must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Sextuple z;
        for (int i = 1; i <= 4; ++i) {
            // area-uniform in the hyperbolic ball of radius `spread`
            double rh = std::acosh(1.0 + unif(rng) * (std::cosh(spread) - 1.0));
            double th = 2.0 * 3.14159265358979323846 * unif(rng);
            z.at(i) = Point(std::polar(std::tanh(rh / 2.0), th));
        }
        Moebius p = identity_iso();
        for (int i = 1; i <= 4; ++i) p = compose(half_turn(z.at(i)), p);
        Moebius g = p.inverse();
        if (classify(g) != IsoClass::Hyperbolic) continue;
        HyperbolicData hd = hyperbolic_data(g);
        Point x5 = project_onto(Point(), hd.axis);
        Point x6 = apply(translate_along(hd.axis, hd.length / 2.0), x5);
        z.at(5) = x5;
        z.at(6) = x6;
        if (stats) stats->attempts = attempt;
        ValidationResult v = validate(z);
        if (!v.ok) continue;
        return z;
    }
    throw domain_error("sample_random: rejection cap exceeded; increase spread or attempts");
}

}  // namespace hexflip
