#pragma once

#include <array>

#include "hexflip/euclidean.hpp"

// Identification of non-aligned cone configurations with pairs
// (Lagrangian plane L in R^4, positive form g on L*): L = ker u and
// g = Gram of the induced map on the symplectic duals of the stored basis.

namespace hexflip {

using Vec4 = std::array<double, 4>;  // coordinates in the basis (a1, b1, a2, b2)

double symplectic_pairing(const Vec4& x, const Vec4& y);  // om(a_k, b_k) = 1

struct LagrangianPoint {
    std::array<Vec4, 2> basis;        // basis (f1, f2) of L, orientation-adapted
    std::array<double, 3> gram;       // g11, g12, g22 on the dual basis
};

// evaluate the real-linear map u (from symplectic values) on a 4-vector
cplx evaluate_u(const SymplecticValues& u, const Vec4& x);

LagrangianPoint lagrangian_map(const EucConfig& v, double tol = 1e-9);
EucConfig lagrangian_inverse(const LagrangianPoint& lp);

// symplectic 4x4 matrices act on configurations through u -> u o g^{-1}
using Sp4 = std::array<std::array<double, 4>, 4>;

bool is_symplectic(const Sp4& g, double tol = 1e-9);
LagrangianPoint sp_act(const Sp4& g, const LagrangianPoint& lp);
EucConfig sp_act_config(const Sp4& g, const EucConfig& v, double tol = 1e-9);
const std::vector<Sp4>& sp_generators();

// Im h(w1, w2); well defined modulo R iv on the tangency slice Re h(v,w) = 0
double im_h(const EucConfig& w1, const EucConfig& w2);

// the coordinate symplectic expression on V evaluated through the
// symplectic values, with the real inner product <x,y> = Re(x conj(y)):
// -<v(a1),w(b1)> + <w(a1),v(b1)> - <v(a2),w(b2)> + <w(a2),v(b2)>
double omega_V(const EucConfig& v, const EucConfig& w);
// same expression under the determinant pairing <x,y> = Im(conj(x) y)
double omega_V_det_pairing(const EucConfig& v, const EucConfig& w);

// chart of the paper around (L_p, g_q): a symplectic frame (f1, f2, h1, h2)
// with L = span(f1 + p1 h1 + p2 h2, f2 + p2 h1 + p3 h2) and Gram matrix
// (q1 q2; q2 q3) on the adapted duals
struct LagrangianChart {
    std::array<Vec4, 4> frame;  // f1, f2, h1, h2 with om(f_i, h_j) = delta_ij
};

LagrangianChart standard_chart();                 // f = (a1, a2), h = (b1, b2)
LagrangianChart transported_chart(const Sp4& g);  // frame pushed by g

LagrangianPoint chart_point(const LagrangianChart& chart, const std::array<double, 3>& p,
                            const std::array<double, 3>& q);

// finite-difference pullback of omega_V through the chart at (p, q); returns
// the 6x6 matrix in coordinates (p1, p2, p3, q1, q2, q3)
std::array<std::array<double, 6>, 6> pullback_omega(const LagrangianChart& chart,
                                                    const std::array<double, 3>& p,
                                                    const std::array<double, 3>& q,
                                                    double step = 1e-4);

// omega_L = Tr(dg_p ^ dg_q) = dp1^dq1 + 2 dp2^dq2 + dp3^dq3 in these charts
std::array<std::array<double, 6>, 6> omega_L_matrix();

// least-squares proportionality factor and max deviation between two forms
std::pair<double, double> form_ratio(const std::array<std::array<double, 6>, 6>& num,
                                     const std::array<std::array<double, 6>, 6>& den);

}  // namespace hexflip
