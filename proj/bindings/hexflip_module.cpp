#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hexflip/acceptance.hpp"
#include "hexflip/euclidean.hpp"
#include "hexflip/io.hpp"
#include "hexflip/lagrangian.hpp"
#include "hexflip/morse.hpp"
#include "hexflip/reduction.hpp"
#include "hexflip/twist.hpp"

namespace py = pybind11;
using namespace hexflip;

namespace {

Sextuple sextuple_from_list(const std::vector<cplx>& pts) {
    if (pts.size() != 6) throw usage_error("a sextuple needs exactly six points");
    Sextuple z;
    for (int i = 0; i < 6; ++i) {
        z.x[i] = Point(pts[i]);
        require_in_disc(z.x[i], "sextuple");
    }
    return z;
}

std::vector<cplx> sextuple_to_list(const Sextuple& z) {
    std::vector<cplx> out(6);
    for (int i = 0; i < 6; ++i) out[i] = z.x[i].z;
    return out;
}

EucConfig euc_from_list(const std::vector<cplx>& pts) {
    if (pts.size() != 6) throw usage_error("a Euclidean configuration needs six points");
    EucConfig v;
    for (int i = 0; i < 6; ++i) v.p[i] = pts[i];
    return v;
}

std::vector<cplx> euc_to_list(const EucConfig& v) {
    return std::vector<cplx>(v.p.begin(), v.p.end());
}

BraidWord word_from_list(const std::vector<int>& letters) {
    BraidWord w;
    for (int v : letters) {
        if (v == 0 || v > 6 || v < -6) throw usage_error("braid letters are +-1..6");
        w.push(std::abs(v), v > 0 ? 1 : -1);
    }
    return w;
}

}  // namespace

PYBIND11_MODULE(_hexflip, m) {
    m.doc() = "sextuples of half-turns in the hyperbolic plane: braid moves, "
              "size reduction, and the Euclidean limit model";

    // --- hyperbolic configurations -----------------------------------------
    m.def("validate", [](const std::vector<cplx>& pts, double tol) {
        ValidationResult v = validate(sextuple_from_list(pts), tol);
        return py::make_tuple(v.ok, v.residual, v.sign);
    },
          py::arg("points"), py::arg("tol") = kTolId,
          "residual of the defining relation; returns (ok, residual, sign)");

    m.def("leapfrog", [](const std::vector<cplx>& pts, int i, int sign) {
        return sextuple_to_list(leapfrog(sextuple_from_list(pts), i, sign));
    }, py::arg("points"), py::arg("i"), py::arg("sign") = 1);

    m.def("apply_word", [](const std::vector<cplx>& pts, const std::vector<int>& w) {
        return sextuple_to_list(apply_word(sextuple_from_list(pts), word_from_list(w)));
    });

    m.def("cyclic_rot", [](const std::vector<cplx>& pts) {
        return sextuple_to_list(cyclic_rot(sextuple_from_list(pts)));
    });

    m.def("half_twist", [](const std::vector<cplx>& pts, int i) {
        return sextuple_to_list(half_twist(sextuple_from_list(pts), i));
    });

    m.def("sizes", [](const std::vector<cplx>& pts) {
        Sextuple z = sextuple_from_list(pts);
        return py::make_tuple(size_A(z), size_B(z), size_F(z));
    }, "the size functionals (A, B, F)");

    m.def("classify_config", [](const std::vector<cplx>& pts, double tol) {
        ConfigClass c = classify_config(sextuple_from_list(pts), tol);
        return std::string(config_tag_name(c.tag));
    }, py::arg("points"), py::arg("tol") = kTolClass);

    m.def("component_of", [](const std::vector<cplx>& pts) {
        return std::string(component_name(component_of(sextuple_from_list(pts))));
    });

    m.def("normalize", [](const std::vector<cplx>& pts) {
        return sextuple_to_list(normalize(sextuple_from_list(pts)));
    });

    m.def("sample_random", [](std::uint64_t seed, double spread) {
        return sextuple_to_list(sample_random(seed, spread));
    }, py::arg("seed"), py::arg("spread") = 1.0);

    m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("index"));

    // --- reduction ----------------------------------------------------------
    m.def("reduce", [](const std::vector<cplx>& pts, double eps, long max_steps) {
        ReduceParams params;
        params.eps = eps;
        params.max_steps = max_steps;
        ReduceResult rr = reduce(sextuple_from_list(pts), params);
        py::list trace;
        for (const auto& s : rr.trace)
            trace.append(py::make_tuple(s.op, s.word.to_string(), s.A, s.B, s.F,
                                        config_tag_name(s.cls.tag)));
        return py::make_tuple(std::string(verdict_name(rr.verdict.tag)),
                              sextuple_to_list(rr.final_config), trace,
                              rr.verdict.reason);
    }, py::arg("points"), py::arg("eps") = 1e-3, py::arg("max_steps") = 100000,
       "run the size-reduction driver; returns (verdict, final, trace, reason)");

    m.def("discreteness_report", [](const std::vector<cplx>& pts, double eps) {
        DiscretenessReport r = discreteness_report(sextuple_from_list(pts), eps);
        return py::make_tuple(std::string(discreteness_kind_name(r.kind)), r.detail);
    }, py::arg("points"), py::arg("eps") = 1e-3);

    // --- Euclidean model ------------------------------------------------------
    m.def("q_routes", [](const std::vector<cplx>& pts) {
        EucConfig v = euc_from_list(pts);
        return py::make_tuple(q_area_route(v), q_double_sum(v), q_symplectic_route(v));
    }, "the three evaluation routes of the quadratic form q");

    m.def("signature_of_h", [] {
        auto s = signature_of_h();
        return py::make_tuple(s.first, s.second);
    });

    m.def("euclid_leapfrog", [](const std::vector<cplx>& pts, int i, int sign) {
        return euc_to_list(euclid_leapfrog(euc_from_list(pts), i, sign));
    }, py::arg("points"), py::arg("i"), py::arg("sign") = 1);

    m.def("psi_flow", [](const std::vector<cplx>& pts, double t) {
        return euc_to_list(psi_flow(euc_from_list(pts), t));
    });

    m.def("sample_cone_direction", [](std::uint64_t seed) {
        return euc_to_list(sample_cone_direction(seed));
    });

    m.def("q_gamma", [](const std::vector<cplx>& pts, int i, int j, int k) {
        return q_gamma(euc_from_list(pts), make_curve(i, j, k));
    });

    m.def("lagrangian_map", [](const std::vector<cplx>& pts) {
        LagrangianPoint lp = lagrangian_map(euc_from_list(pts));
        py::list basis;
        for (const auto& f : lp.basis) basis.append(std::vector<double>(f.begin(), f.end()));
        return py::make_tuple(basis, std::vector<double>(lp.gram.begin(), lp.gram.end()));
    }, "kernel Lagrangian and Gram data; returns (basis, [g11, g12, g22])");

    m.def("lagrangian_inverse",
          [](const std::vector<std::vector<double>>& basis, const std::vector<double>& gram) {
              if (basis.size() != 2 || basis[0].size() != 4 || basis[1].size() != 4 ||
                  gram.size() != 3)
                  throw usage_error("expected two 4-vectors and [g11, g12, g22]");
              LagrangianPoint lp;
              for (int k = 0; k < 2; ++k)
                  for (int i = 0; i < 4; ++i) lp.basis[k][i] = basis[k][i];
              lp.gram = {gram[0], gram[1], gram[2]};
              return euc_to_list(lagrangian_inverse(lp));
          });

    m.def("morse_F_phi", [](const std::vector<cplx>& pts) {
        MorseValue mv = morse_F_phi(euc_from_list(pts));
        return py::make_tuple(mv.F, mv.phi);
    });

    m.def("lift_to_sextuple", [](const std::vector<cplx>& pts, double t) {
        LiftResult lift = lift_to_sextuple(euc_from_list(pts), t);
        return sextuple_to_list(lift.config);
    }, py::arg("points"), py::arg("t") = 1e-3);

    m.def("distribution_rank", [](const std::vector<cplx>& pts) {
        DistributionRank dr = distribution_rank(euc_from_list(pts));
        return py::make_tuple(dr.rank_upstairs, dr.rank_brackets_upstairs,
                              dr.rank_quotient, dr.rank_brackets_quotient);
    });

    // --- twist flows ---------------------------------------------------------
    m.def("theta", [](const std::vector<cplx>& pts, int i, int j, int k) {
        return theta(sextuple_from_list(pts), make_curve(i, j, k));
    });

    m.def("phi_flow", [](const std::vector<cplx>& pts, int i, int j, int k, double t) {
        return sextuple_to_list(phi_flow(sextuple_from_list(pts), make_curve(i, j, k), t));
    });

    m.def("f_gamma", [](const std::vector<cplx>& pts, int i, int j, int k) {
        return f_gamma(sextuple_from_list(pts), make_curve(i, j, k));
    });

    m.def("taylor_f_gamma", [](const std::vector<cplx>& pts, int i, int j, int k) {
        TaylorComparison tc = taylor_f_gamma(euc_from_list(pts), make_curve(i, j, k));
        return py::make_tuple(tc.limit, tc.sign, tc.q_value, tc.rel_error);
    });

    // --- io -------------------------------------------------------------------
    m.def("sextuple_to_json", [](const std::vector<cplx>& pts) {
        return sextuple_to_json(sextuple_from_list(pts));
    });
    m.def("sextuple_from_json", [](const std::string& text) {
        return sextuple_to_list(sextuple_from_json(text));
    });

    m.attr("__version__") = "0.1.0";
}
