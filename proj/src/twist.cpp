#include "hexflip/twist.hpp"

#include <cmath>

namespace hexflip {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

Moebius holonomy(const Sextuple& z, const PartitionCurve& curve) {
    Sextuple w = apply_word(z, curve.conjugator);
    return compose(half_turn(w.at(3)), compose(half_turn(w.at(2)), half_turn(w.at(1))));
}

double theta(const Sextuple& z, const PartitionCurve& curve, double tol) {
    Moebius h = holonomy(z, curve);
    if (classify(h, tol) != IsoClass::Elliptic) return 0.0;
    double a = elliptic_data(h, tol).angle;
    return a < 0.0 ? a + 2.0 * kPi : a;
}

Sextuple phi_flow(const Sextuple& z, const PartitionCurve& curve, double t, double tol) {
    Sextuple w = apply_word(z, curve.conjugator);
    Moebius h = compose(half_turn(w.at(3)), compose(half_turn(w.at(2)), half_turn(w.at(1))));
    if (classify(h, tol) != IsoClass::Elliptic)
        throw usage_error("phi_flow: holonomy is not elliptic, flow undefined");
    Point y = elliptic_data(h, tol).center;
    Moebius rot = rotate_about(y, std::remainder(t, 2.0 * kPi));
    for (int i = 1; i <= 3; ++i) w.at(i) = apply(rot, w.at(i));
    return apply_word(w, curve.conjugator.inverse());
}

double f_gamma(const Sextuple& z, const PartitionCurve& curve) {
    return holonomy(z, curve).trace();
}

TaylorComparison taylor_f_gamma(const EucConfig& v, const PartitionCurve& curve,
                                double t1, double t2) {
    double q = q_gamma(v, curve);
    auto value = [&](double t) {
        LiftResult lift = lift_to_sextuple(v, t);
        return f_gamma(lift.config, curve) / (t * t);
    };
    double v1 = value(t1), v2 = value(t2);
    // one Richardson step assuming an O(t) error term
    double limit = (t1 * v2 - t2 * v1) / (t1 - t2);
    TaylorComparison out;
    out.limit = limit;
    out.sign = limit >= 0.0 ? 1 : -1;
    out.q_value = q;
    double ref = 8.0 * std::abs(q);
    out.rel_error = ref > 0.0 ? std::abs(std::abs(limit) - ref) / ref : std::abs(limit);
    return out;
}

}  // namespace hexflip
