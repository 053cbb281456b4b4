#include "hexflip/lagrangian.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hexflip {

namespace {

// basis order (a1, b1, a2, b2); om(a1,b1) = om(a2,b2) = 1
constexpr int kA1 = 0, kB1 = 1, kA2 = 2, kB2 = 3;

Eigen::Matrix4d omega4() {
    Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
    J(kA1, kB1) = 1.0;
    J(kB1, kA1) = -1.0;
    J(kA2, kB2) = 1.0;
    J(kB2, kA2) = -1.0;
    return J;
}

Eigen::Vector4d to_eigen(const Vec4& x) { return Eigen::Vector4d(x[0], x[1], x[2], x[3]); }
Vec4 from_eigen(const Eigen::Vector4d& x) { return {x(0), x(1), x(2), x(3)}; }

}  // namespace

double symplectic_pairing(const Vec4& x, const Vec4& y) {
    return x[kA1] * y[kB1] - x[kB1] * y[kA1] + x[kA2] * y[kB2] - x[kB2] * y[kA2];
}

cplx evaluate_u(const SymplecticValues& u, const Vec4& x) {
    return u.a1 * x[kA1] + u.b1 * x[kB1] + u.a2 * x[kA2] + u.b2 * x[kB2];
}

namespace {

// symplectic duals h1, h2 of a basis (f1, f2) of a Lagrangian plane:
// om(f_i, h_j) = delta_ij
std::array<Vec4, 2> symplectic_duals(const std::array<Vec4, 2>& f) {
    Eigen::Matrix4d J = omega4();
    Eigen::Matrix<double, 2, 4> M;
    M.row(0) = (J.transpose() * to_eigen(f[0])).transpose();  // om(f1, x) = f1^T J x
    M.row(1) = (J.transpose() * to_eigen(f[1])).transpose();
    // solve M h = e_i with minimal norm
    Eigen::Matrix<double, 4, 2> H =
        M.completeOrthogonalDecomposition().pseudoInverse() * Eigen::Matrix2d::Identity();
    return {from_eigen(H.col(0)), from_eigen(H.col(1))};
}

}  // namespace

LagrangianPoint lagrangian_map(const EucConfig& v0, double tol) {
    EucConfig v = gauge_fix(v0);
    SymplecticValues u = to_symplectic_values(v);

    // u as a real 2x4 matrix
    Eigen::Matrix<double, 2, 4> U;
    for (int c = 0; c < 4; ++c) {
        Vec4 e{};
        e[c] = 1.0;
        cplx val = evaluate_u(u, e);
        U(0, c) = val.real();
        U(1, c) = val.imag();
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(U, Eigen::ComputeFullV);
    double smax = svd.singularValues()(0);
    if (svd.singularValues()(1) < 1e-9 * smax)
        throw usage_error("lagrangian_map: aligned configuration, u has rank <= 1");

    std::array<Vec4, 2> f = {from_eigen(svd.matrixV().col(2)),
                             from_eigen(svd.matrixV().col(3))};
    // kernel must be isotropic, i.e. q(v) = 0
    if (std::abs(symplectic_pairing(f[0], f[1])) > std::sqrt(tol))
        throw usage_error("lagrangian_map: kernel is not Lagrangian (q != 0)");

    // orientation-adapt: the duals' images under u must be positively oriented,
    // so the Cholesky-based inverse lands in the same phase class
    std::array<Vec4, 2> h = symplectic_duals(f);
    cplx v1 = evaluate_u(u, h[0]), v2 = evaluate_u(u, h[1]);
    if (std::imag(std::conj(v1) * v2) < 0.0) {
        std::swap(f[0], f[1]);
        h = symplectic_duals(f);
        v1 = evaluate_u(u, h[0]);
        v2 = evaluate_u(u, h[1]);
    }

    LagrangianPoint lp;
    lp.basis = f;
    lp.gram = {std::real(v1 * std::conj(v1)), std::real(v1 * std::conj(v2)),
               std::real(v2 * std::conj(v2))};
    return lp;
}

EucConfig lagrangian_inverse(const LagrangianPoint& lp) {
    double g11 = lp.gram[0], g12 = lp.gram[1], g22 = lp.gram[2];
    if (g11 <= 0.0 || g11 * g22 - g12 * g12 <= 0.0)
        throw usage_error("lagrangian_inverse: Gram matrix is not positive definite");
    // Cholesky rows as complex numbers: v1 = sqrt(g11), v2 = g12/sqrt(g11) + i ...
    double l11 = std::sqrt(g11);
    double l21 = g12 / l11;
    double l22 = std::sqrt(g22 - l21 * l21);
    cplx v1(l11, 0.0), v2(l21, l22);

    std::array<Vec4, 2> h = symplectic_duals(lp.basis);
    // u vanishes on L and sends h1, h2 to v1, v2: assemble on the full basis
    Eigen::Matrix4d Bcols;
    Bcols.col(0) = to_eigen(lp.basis[0]);
    Bcols.col(1) = to_eigen(lp.basis[1]);
    Bcols.col(2) = to_eigen(h[0]);
    Bcols.col(3) = to_eigen(h[1]);
    Eigen::Matrix<cplx, 1, 4> vals;
    vals << cplx(0, 0), cplx(0, 0), v1, v2;
    Eigen::Matrix4d Binv = Bcols.inverse();
    SymplecticValues u;
    cplx out[4];
    for (int c = 0; c < 4; ++c) {
        cplx acc = 0.0;
        for (int r = 0; r < 4; ++r) acc += vals(r) * Binv(r, c);
        out[c] = acc;
    }
    u.a1 = out[kA1];
    u.b1 = out[kB1];
    u.a2 = out[kA2];
    u.b2 = out[kB2];

    EucConfig v = from_symplectic_values(u);
    // phase gauge: first nonzero symplectic value on the positive real axis
    for (cplx w : {u.a1, u.b1, u.a2, u.b2}) {
        if (std::abs(w) > 1e-12) {
            v = euc_scale(v, std::conj(w) / std::abs(w));
            break;
        }
    }
    return gauge_fix(v);
}

bool is_symplectic(const Sp4& g, double tol) {
    Eigen::Matrix4d G;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = g[i][j];
    Eigen::Matrix4d J = omega4();
    return (G.transpose() * J * G - J).cwiseAbs().maxCoeff() < tol;
}

LagrangianPoint sp_act(const Sp4& g, const LagrangianPoint& lp) {
    LagrangianPoint out = lp;
    for (int k = 0; k < 2; ++k) {
        Vec4 r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i] += g[i][j] * lp.basis[k][j];
        out.basis[k] = r;
    }
    return out;  // Gram matrix transported with the basis
}

EucConfig sp_act_config(const Sp4& g, const EucConfig& v, double tol) {
    // u -> u o g^{-1}
    SymplecticValues u = to_symplectic_values(gauge_fix(v));
    Eigen::Matrix4d G;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = g[i][j];
    Eigen::Matrix4d Gi = G.inverse();
    SymplecticValues r;
    cplx vals[4] = {u.a1, u.b1, u.a2, u.b2};
    cplx out[4];
    for (int c = 0; c < 4; ++c) {
        cplx acc = 0.0;
        for (int rr = 0; rr < 4; ++rr) acc += vals[rr] * Gi(rr, c);
        out[c] = acc;
    }
    (void)tol;
    return from_symplectic_values({out[0], out[1], out[2], out[3]});
}

const std::vector<Sp4>& sp_generators() {
    static const std::vector<Sp4> gens = [] {
        auto id = [] {
            Sp4 g{};
            for (int i = 0; i < 4; ++i) g[i][i] = 1.0;
            return g;
        };
        std::vector<Sp4> gs;
        // shear b1 -> b1 + a1
        Sp4 g1 = id();
        g1[kA1][kB1] = 1.0;
        gs.push_back(g1);
        // rotation in the (a1, b1) plane
        Sp4 g2 = id();
        g2[kA1][kA1] = 0.0;
        g2[kA1][kB1] = -1.0;
        g2[kB1][kA1] = 1.0;
        g2[kB1][kB1] = 0.0;
        gs.push_back(g2);
        // swap the two symplectic planes
        Sp4 g3{};
        g3[kA1][kA2] = 1.0;
        g3[kB1][kB2] = 1.0;
        g3[kA2][kA1] = 1.0;
        g3[kB2][kB1] = 1.0;
        gs.push_back(g3);
        // mixing shear: a1 -> a1 + b2, a2 -> a2 + b1
        Sp4 g4 = id();
        g4[kA1][kB2] = 1.0;
        g4[kA2][kB1] = 1.0;
        gs.push_back(g4);
        return gs;
    }();
    return gens;
}

double im_h(const EucConfig& w1, const EucConfig& w2) { return std::imag(h_form(w1, w2)); }

double omega_V(const EucConfig& v, const EucConfig& w) {
    SymplecticValues uv = to_symplectic_values(gauge_fix(v));
    SymplecticValues uw = to_symplectic_values(gauge_fix(w));
    auto ip = [](cplx x, cplx y) { return std::real(x * std::conj(y)); };
    return -ip(uv.a1, uw.b1) + ip(uw.a1, uv.b1) - ip(uv.a2, uw.b2) + ip(uw.a2, uv.b2);
}

double omega_V_det_pairing(const EucConfig& v, const EucConfig& w) {
    SymplecticValues uv = to_symplectic_values(gauge_fix(v));
    SymplecticValues uw = to_symplectic_values(gauge_fix(w));
    auto dp = [](cplx x, cplx y) { return std::imag(std::conj(x) * y); };
    return -dp(uv.a1, uw.b1) + dp(uw.a1, uv.b1) - dp(uv.a2, uw.b2) + dp(uw.a2, uv.b2);
}

LagrangianChart standard_chart() {
    LagrangianChart c;
    c.frame[0] = Vec4{1, 0, 0, 0};  // a1
    c.frame[1] = Vec4{0, 0, 1, 0};  // a2
    c.frame[2] = Vec4{0, 1, 0, 0};  // b1 = dual of a1
    c.frame[3] = Vec4{0, 0, 0, 1};  // b2
    return c;
}

LagrangianChart transported_chart(const Sp4& g) {
    LagrangianChart base = standard_chart();
    LagrangianChart out;
    for (int k = 0; k < 4; ++k) {
        Vec4 r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i] += g[i][j] * base.frame[k][j];
        out.frame[k] = r;
    }
    return out;
}

LagrangianPoint chart_point(const LagrangianChart& chart, const std::array<double, 3>& p,
                            const std::array<double, 3>& q) {
    const Vec4 &f1 = chart.frame[0], &f2 = chart.frame[1];
    const Vec4 &h1 = chart.frame[2], &h2 = chart.frame[3];
    LagrangianPoint lp;
    for (int i = 0; i < 4; ++i) {
        lp.basis[0][i] = f1[i] + p[0] * h1[i] + p[1] * h2[i];
        lp.basis[1][i] = f2[i] + p[1] * h1[i] + p[2] * h2[i];
    }
    lp.gram = q;
    return lp;
}

std::array<std::array<double, 6>, 6> pullback_omega(const LagrangianChart& chart,
                                                    const std::array<double, 3>& p,
                                                    const std::array<double, 3>& q,
                                                    double step) {
    auto eval = [&](const std::array<double, 6>& c) {
        return lagrangian_inverse(
            chart_point(chart, {c[0], c[1], c[2]}, {c[3], c[4], c[5]}));
    };
    std::array<double, 6> base{p[0], p[1], p[2], q[0], q[1], q[2]};
    std::array<EucConfig, 6> deriv;
    for (int k = 0; k < 6; ++k) {
        auto cp = base, cm = base;
        cp[k] += step;
        cm[k] -= step;
        deriv[k] = euc_scale(euc_sub(eval(cp), eval(cm)), 1.0 / (2.0 * step));
    }
    std::array<std::array<double, 6>, 6> M{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) M[i][j] = omega_V(deriv[i], deriv[j]);
    return M;
}

std::array<std::array<double, 6>, 6> omega_L_matrix() {
    std::array<std::array<double, 6>, 6> M{};
    M[0][3] = 1.0;
    M[3][0] = -1.0;
    M[1][4] = 2.0;
    M[4][1] = -2.0;
    M[2][5] = 1.0;
    M[5][2] = -1.0;
    return M;
}

std::pair<double, double> form_ratio(const std::array<std::array<double, 6>, 6>& num,
                                     const std::array<std::array<double, 6>, 6>& den) {
    double dot = 0.0, nn = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            dot += num[i][j] * den[i][j];
            nn += den[i][j] * den[i][j];
        }
    double ratio = dot / nn;
    double dev = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            dev = std::max(dev, std::abs(num[i][j] - ratio * den[i][j]));
    return {ratio, dev};
}

}  // namespace hexflip
