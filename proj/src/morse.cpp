#include "hexflip/morse.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hexflip {

namespace {

constexpr double kPi = 3.14159265358979323846;

// exp of [0, z; conj z, 0] times s_0, as a PU(1,1) lift
Moebius exp_xi_s0(cplx z) {
    double r = std::abs(z);
    double ch = std::cosh(r);
    double sh = (r < 1e-30) ? 1.0 : std::sinh(r) / r;
    Moebius e(cplx(ch, 0.0), sh * z);
    return compose(e, Moebius(cplx(0.0, 1.0), cplx(0.0, 0.0)));
}

}  // namespace

Moebius chart_product(const EucConfig& z) {
    Moebius p = identity_iso();
    for (int i = 1; i <= 6; ++i) p = compose(exp_xi_s0(z.at(i)), p);
    return p;
}

MorseValue morse_F_phi(const EucConfig& z, double chart_radius) {
    for (int i = 1; i <= 6; ++i)
        if (std::abs(z.at(i)) > chart_radius)
            throw domain_error("morse_F_phi: coordinate outside the chart radius");
    Moebius m = chart_product(z).negated();  // -product = exp(X)
    // X = [i phi, F; conj F, -i phi], X^2 = (|F|^2 - phi^2) Id =: D
    // exp X = cosh(sqrt D) Id + sinh(sqrt D)/sqrt D * X
    double c = m.a.real();  // cosh(sqrt D)
    double D, s;            // s = sinh(sqrt D)/sqrt D, real and positive on the chart
    if (c >= 1.0) {
        double w = std::acosh(c);
        D = w * w;
        s = (w < 1e-12) ? 1.0 : std::sinh(w) / w;
    } else {
        if (c <= -1.0 + 1e-12)
            throw domain_error("morse_F_phi: product outside the exponential chart");
        double w = std::acos(c);
        D = -w * w;
        s = (w < 1e-12) ? 1.0 : std::sin(w) / w;
    }
    if (std::abs(s) < 1e-12)
        throw domain_error("morse_F_phi: degenerate chart value");
    MorseValue out;
    out.phi = m.a.imag() / s;
    out.F = m.b / s;
    (void)D;
    return out;
}

Point chart_point_of(cplx z) {
    double r = std::abs(z);
    if (r < 1e-300) return Point(0.0, 0.0);
    return Point(std::tanh(r / 2.0) * (z / r));
}

LiftResult lift_to_sextuple(const EucConfig& v, double t, int max_iterations,
                            double target) {
    if (t <= 0.0) throw usage_error("lift_to_sextuple: t must be positive");
    if (euc_norm(v) < 1e-12) throw usage_error("lift_to_sextuple: zero direction");

    EucConfig z = euc_scale(v, t);
    auto resid = [&](const EucConfig& w) {
        MorseValue mv = morse_F_phi(w);
        Eigen::Vector3d r(mv.F.real(), mv.F.imag(), mv.phi);
        return r;
    };

    LiftResult out;
    out.iterations = 0;
    Eigen::Vector3d r = resid(z);
    double fd = std::max(1e-9 * t, 1e-12);
    while (r.norm() > target && out.iterations < max_iterations) {
        // Jacobian in the four real unknowns (Re z5, Im z5, Re z6, Im z6)
        Eigen::Matrix<double, 3, 4> J;
        for (int k = 0; k < 4; ++k) {
            EucConfig zp = z, zm = z;
            int slot = 5 + k / 2;
            cplx dz = (k % 2 == 0) ? cplx(fd, 0.0) : cplx(0.0, fd);
            zp.at(slot) += dz;
            zm.at(slot) -= dz;
            J.col(k) = (resid(zp) - resid(zm)) / (2.0 * fd);
        }
        // minimal-norm update solving J du = -r
        Eigen::Matrix3d JJt = J * J.transpose();
        Eigen::Vector3d y = JJt.ldlt().solve(-r);
        Eigen::Vector4d du = J.transpose() * y;
        z.at(5) += cplx(du(0), du(1));
        z.at(6) += cplx(du(2), du(3));
        r = resid(z);
        ++out.iterations;
    }
    out.residual = std::abs(cplx(r(0), r(1))) + std::abs(r(2));
    if (r.norm() > target * 10.0 && out.iterations >= max_iterations)
        throw domain_error("lift_to_sextuple: Newton did not converge, residual " +
                           std::to_string(out.residual));
    out.chart = z;
    for (int i = 1; i <= 6; ++i) out.config.at(i) = chart_point_of(z.at(i));
    return out;
}

}  // namespace hexflip
