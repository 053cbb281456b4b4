#include "hexflip/euclidean.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <sstream>

namespace hexflip {

namespace {

int wrap6(int i) { return ((i - 1) % 6 + 6) % 6 + 1; }

}  // namespace

cplx alternating_sum(const EucConfig& v) {
    cplx s = 0.0;
    for (int i = 1; i <= 6; ++i) s += (i % 2 ? -1.0 : 1.0) * v.at(i);
    return s;
}

EucConfig gauge_fix(const EucConfig& v) {
    cplx m = 0.0;
    for (int i = 1; i <= 6; ++i) m += v.at(i);
    m /= 6.0;
    EucConfig r;
    for (int i = 1; i <= 6; ++i) r.at(i) = v.at(i) - m;
    return r;
}

void require_constrained(const EucConfig& v, double tol) {
    double scale = 1.0;
    for (int i = 1; i <= 6; ++i) scale = std::max(scale, std::abs(v.at(i)));
    if (std::abs(alternating_sum(v)) > tol * scale)
        throw domain_error("EucConfig: alternating sum constraint violated");
}

EucConfig euc_add(const EucConfig& a, const EucConfig& b) {
    EucConfig r;
    for (int i = 1; i <= 6; ++i) r.at(i) = a.at(i) + b.at(i);
    return r;
}
EucConfig euc_sub(const EucConfig& a, const EucConfig& b) {
    EucConfig r;
    for (int i = 1; i <= 6; ++i) r.at(i) = a.at(i) - b.at(i);
    return r;
}
EucConfig euc_scale(const EucConfig& a, cplx s) {
    EucConfig r;
    for (int i = 1; i <= 6; ++i) r.at(i) = s * a.at(i);
    return r;
}
double euc_norm(const EucConfig& a) {
    double n = 0.0;
    for (int i = 1; i <= 6; ++i) n += std::norm(a.at(i));
    return std::sqrt(n);
}

double area(cplx a, cplx b, cplx c) {
    return 0.5 * std::imag(std::conj(b - a) * (c - a));
}

double q_area_route(const EucConfig& v) {
    require_constrained(v);
    return area(v.at(1), v.at(2), v.at(3)) + area(v.at(4), v.at(5), v.at(6));
}

double q_double_sum(const EucConfig& v) {
    double s = 0.0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            s += ((i + j) % 2 ? -1.0 : 1.0) * std::imag(v.at(i) * std::conj(v.at(j)));
    return 0.5 * s;
}

SymplecticValues to_symplectic_values(const EucConfig& v) {
    return {v.at(1) - v.at(2), v.at(3) - v.at(2), v.at(4) - v.at(5), v.at(6) - v.at(5)};
}

EucConfig from_symplectic_values(const SymplecticValues& u) {
    EucConfig r;
    r.at(2) = 0.0;
    r.at(1) = u.a1;
    r.at(3) = u.b1;
    cplx z5 = (u.a1 + u.b1) - (u.a2 + u.b2);
    r.at(5) = z5;
    r.at(4) = u.a2 + z5;
    r.at(6) = u.b2 + z5;
    return gauge_fix(r);
}

double q_symplectic_route(const EucConfig& v) {
    SymplecticValues u = to_symplectic_values(v);
    return 0.5 * (std::imag(u.a1 * std::conj(u.b1)) + std::imag(u.a2 * std::conj(u.b2)));
}

double q_form(const EucConfig& v) { return q_double_sum(v); }

cplx h_form(const EucConfig& v, const EucConfig& w) {
    // Hermitian polarization of q: linear in v, antilinear in w, h(v,v) = q(v)
    double qv = q_double_sum(v), qw = q_double_sum(w);
    double re = 0.5 * (q_double_sum(euc_add(v, w)) - qv - qw);
    double im = 0.5 * (q_double_sum(euc_add(v, euc_scale(w, cplx(0, 1)))) - qv - qw);
    return cplx(re, im);
}

namespace {

// orthonormal-ish basis of the gauge slice {alt sum 0, mean 0}, complex dim 4
const std::array<EucConfig, 4>& slice_basis() {
    static const std::array<EucConfig, 4> basis = [] {
        std::array<EucConfig, 4> b;
        // f2 images of the first four standard lambda directions are
        // independent modulo the kernel
        for (int k = 0; k < 4; ++k) {
            Lambda l{};
            l[k] = 1.0;
            b[k] = f2_map(l);
        }
        // Gram-Schmidt over C for numeric comfort
        for (int k = 0; k < 4; ++k) {
            for (int j = 0; j < k; ++j) {
                cplx proj = 0.0;
                for (int i = 1; i <= 6; ++i) proj += b[k].at(i) * std::conj(b[j].at(i));
                b[k] = euc_sub(b[k], euc_scale(b[j], proj));
            }
            b[k] = euc_scale(b[k], 1.0 / euc_norm(b[k]));
        }
        return b;
    }();
    return basis;
}

}  // namespace

std::pair<int, int> signature_of_h() {
    const auto& basis = slice_basis();
    Eigen::Matrix4cd H;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) H(i, j) = h_form(basis[i], basis[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(H);
    int np = 0, nm = 0;
    double scale = es.eigenvalues().cwiseAbs().maxCoeff();
    for (int i = 0; i < 4; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev > 1e-9 * scale) ++np;
        else if (ev < -1e-9 * scale) ++nm;
        else throw domain_error("signature_of_h: near-zero eigenvalue, h should be nondegenerate");
    }
    return {np, nm};
}

EucConfig euclid_leapfrog(const EucConfig& v, int i, int sign) {
    if (i < 1 || i > 6) throw usage_error("euclid_leapfrog: index must be in 1..6");
    EucConfig r = v;
    int j = wrap6(i + 1);
    if (sign == 1) {
        r.at(i) = v.at(j);
        r.at(j) = 2.0 * v.at(j) - v.at(i);
    } else if (sign == -1) {
        r.at(i) = 2.0 * v.at(i) - v.at(j);
        r.at(j) = v.at(i);
    } else {
        throw usage_error("euclid_leapfrog: sign must be +-1");
    }
    return gauge_fix(r);
}

EucConfig euclid_apply_word(const EucConfig& v, const BraidWord& w) {
    EucConfig r = v;
    for (const auto& l : w.letters) r = euclid_leapfrog(r, l.index, l.sign);
    return r;
}

EucConfig psi_flow(const EucConfig& v, double t) {
    cplx c = v.at(1) - v.at(2) + v.at(3);
    cplx rot = std::polar(1.0, t);
    EucConfig r = v;
    for (int i = 1; i <= 3; ++i) r.at(i) = c + rot * (v.at(i) - c);
    return gauge_fix(r);
}

EucConfig f2_map(const Lambda& lambda) {
    EucConfig r;
    for (int i = 1; i <= 6; ++i) r.at(i) = lambda[i - 1] + lambda[i % 6];
    return gauge_fix(r);
}

cplx f1_cup(const Lambda& a, const Lambda& b) {
    // gamma_i . gamma_{i+1} = -1, gamma_i . gamma_{i-1} = +1, cyclic
    cplx s = 0.0;
    for (int i = 0; i < 6; ++i) {
        s += a[i] * b[(i + 1) % 6] * (-1.0);
        s += a[i] * b[(i + 5) % 6] * (+1.0);
    }
    return s;
}

Lambda f2_preimage(const EucConfig& v) {
    // solve l_i + l_{i+1} = v_i + c with l_1 = 0; c fixed by consistency
    require_constrained(v);
    Lambda l{};
    // alternating partial sums; the cyclic closure holds by the constraint
    l[0] = 0.0;
    for (int i = 1; i < 6; ++i) l[i] = v.at(i) - l[i - 1];
    return l;
}

std::string PartitionCurve::name() const {
    std::ostringstream os;
    os << "tri:" << triple[0] << "," << triple[1] << "," << triple[2];
    return os.str();
}

PartitionCurve make_curve(int i, int j, int k) {
    std::array<int, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[2] > 6 || t[0] == t[1] || t[1] == t[2])
        throw usage_error("make_curve: indices must be three distinct values in 1..6");
    // canonical side of the partition: the one containing 1
    if (t[0] != 1) {
        std::array<int, 3> comp;
        int c = 0;
        for (int m = 1; m <= 6; ++m)
            if (m != t[0] && m != t[1] && m != t[2]) comp[c++] = m;
        t = comp;
    }
    PartitionCurve pc;
    pc.triple = t;
    // positive word moving t to slots (1,2,3): bubble b down to 2, then c to 3
    int b = t[1], c = t[2];
    for (int s = b - 1; s >= 2; --s) pc.conjugator.push(s, 1);
    for (int s = c - 1; s >= 3; --s) pc.conjugator.push(s, 1);
    return pc;
}

const std::vector<PartitionCurve>& all_curves() {
    static const std::vector<PartitionCurve> curves = [] {
        std::vector<PartitionCurve> cs;
        for (int j = 2; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k) cs.push_back(make_curve(1, j, k));
        return cs;
    }();
    return curves;
}

double q_gamma(const EucConfig& v, const PartitionCurve& curve) {
    EucConfig w = euclid_apply_word(v, curve.conjugator);
    // restricted pairing over the first triple, in the period normalization
    double s = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            s += ((i + j) % 2 ? -1.0 : 1.0) * std::imag(w.at(i) * std::conj(w.at(j)));
    return 0.25 * s;
}

namespace {

// real-8 coordinates on the gauge slice via the fixed complex basis
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

Vec8 to_coords(const EucConfig& v) {
    const auto& basis = slice_basis();
    Vec8 x;
    for (int k = 0; k < 4; ++k) {
        cplx c = 0.0;
        for (int i = 1; i <= 6; ++i) c += v.at(i) * std::conj(basis[k].at(i));
        x(2 * k) = c.real();
        x(2 * k + 1) = c.imag();
    }
    return x;
}

// Gram matrices of Im h (symplectic form) and of the quadratic form q_gamma
Mat8 omega_matrix() {
    Mat8 om;
    const auto& basis = slice_basis();
    std::array<EucConfig, 8> real_basis;
    for (int k = 0; k < 4; ++k) {
        real_basis[2 * k] = basis[k];
        real_basis[2 * k + 1] = euc_scale(basis[k], cplx(0.0, 1.0));
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            om(i, j) = std::imag(h_form(real_basis[i], real_basis[j]));
    return om;
}

Mat8 qgamma_hessian(const PartitionCurve& curve) {
    // q_gamma is quadratic: recover its symmetric Gram by polarization
    const auto& basis = slice_basis();
    std::array<EucConfig, 8> rb;
    for (int k = 0; k < 4; ++k) {
        rb[2 * k] = basis[k];
        rb[2 * k + 1] = euc_scale(basis[k], cplx(0.0, 1.0));
    }
    Mat8 G;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            double qpp = q_gamma(euc_add(rb[i], rb[j]), curve);
            double qi = q_gamma(rb[i], curve);
            double qj = q_gamma(rb[j], curve);
            G(i, j) = 0.5 * (qpp - qi - qj) * 2.0;  // B(x,y) with q(x) = B(x,x)/2
        }
    return G;
}

int numeric_rank(const Eigen::MatrixXd& M, double rel) {
    if (M.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    if (smax == 0.0) return 0;
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > rel * smax) ++r;
    return r;
}

}  // namespace

DistributionRank distribution_rank(const EucConfig& v0, double rel_threshold) {
    EucConfig v = gauge_fix(v0);
    require_constrained(v);
    if (std::abs(q_form(v)) > 1e-6 * euc_norm(v) * euc_norm(v))
        throw usage_error("distribution_rank: configuration is not on the cone");

    Mat8 om = omega_matrix();
    Eigen::PartialPivLU<Mat8> lu(om);
    const auto& curves = all_curves();

    std::vector<Mat8> fields;  // linear field matrices Y = om^{-1} G
    fields.reserve(curves.size());
    for (const auto& c : curves) fields.push_back(lu.solve(qgamma_hessian(c)));

    Vec8 x = to_coords(v);
    Eigen::MatrixXd span(8, static_cast<int>(fields.size()));
    for (size_t k = 0; k < fields.size(); ++k) span.col(static_cast<int>(k)) = fields[k] * x;

    // brackets of linear fields are linear: [X, Y] = (YX - XY) as matrices
    std::vector<Vec8> bracket_vecs;
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = i + 1; j < fields.size(); ++j) {
            Mat8 br = fields[j] * fields[i] - fields[i] * fields[j];
            bracket_vecs.push_back(br * x);
        }
    Eigen::MatrixXd aug(8, span.cols() + static_cast<int>(bracket_vecs.size()));
    aug.leftCols(span.cols()) = span;
    for (size_t k = 0; k < bracket_vecs.size(); ++k)
        aug.col(span.cols() + static_cast<int>(k)) = bracket_vecs[k];

    DistributionRank out;
    out.rank_upstairs = numeric_rank(span, rel_threshold);
    out.rank_brackets_upstairs = numeric_rank(aug, rel_threshold);

    // quotient by the S^1 direction iv: append it and subtract one
    Vec8 iv = to_coords(euc_scale(v, cplx(0.0, 1.0)));
    Eigen::MatrixXd spanq(8, span.cols() + 1);
    spanq << span, iv;
    Eigen::MatrixXd augq(8, aug.cols() + 1);
    augq << aug, iv;
    out.rank_quotient = numeric_rank(spanq, rel_threshold) - 1;
    out.rank_brackets_quotient = numeric_rank(augq, rel_threshold) - 1;
    return out;
}

EucConfig sample_cone_direction(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 256; ++attempt) {
        Lambda l1{}, l2{};
        for (int k = 0; k < 6; ++k) {
            l1[k] = cplx(gauss(rng), gauss(rng));
            l2[k] = cplx(gauss(rng), gauss(rng));
        }
        EucConfig w1 = f2_map(l1), w2 = f2_map(l2);
        // solve q(w1 + s w2) = 0 for real s
        double a = q_form(w2);
        double b = 2.0 * std::real(h_form(w1, w2));
        double c = q_form(w1);
        double disc = b * b - 4.0 * a * c;
        if (disc < 0.0 || std::abs(a) < 1e-12) continue;
        double s = (-b + std::sqrt(disc)) / (2.0 * a);
        EucConfig v = gauge_fix(euc_add(w1, euc_scale(w2, s)));
        double n = euc_norm(v);
        if (n < 1e-6) continue;
        v = euc_scale(v, 1.0 / n);
        // non-aligned: the symplectic-value map must have real rank 2
        SymplecticValues u = to_symplectic_values(v);
        double r2 = std::abs(std::imag(std::conj(u.a1) * u.b1)) +
                    std::abs(std::imag(std::conj(u.a1) * u.a2)) +
                    std::abs(std::imag(std::conj(u.b1) * u.b2)) +
                    std::abs(std::imag(std::conj(u.a2) * u.b2));
        if (r2 < 1e-3) continue;
        if (std::abs(q_form(v)) > 1e-10) continue;
        return v;
    }
    throw domain_error("sample_cone_direction: rejection cap exceeded");
}

double phase_distance(const EucConfig& a, const EucConfig& b) {
    cplx corr = 0.0;
    for (int i = 1; i <= 6; ++i) corr += a.at(i) * std::conj(b.at(i));
    double best = 1e300;
    if (std::abs(corr) < 1e-300) {
        best = euc_norm(euc_sub(a, b));
    } else {
        cplx ph = corr / std::abs(corr);
        best = euc_norm(euc_sub(a, euc_scale(b, ph)));
    }
    return best;
}

}  // namespace hexflip
