// Batch front end: sampling, reduction with traces, classification, orbit
// walks, twist flows, Euclidean-model checks, and the acceptance suite.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "hexflip/acceptance.hpp"
#include "hexflip/euclidean.hpp"
#include "hexflip/io.hpp"
#include "hexflip/lagrangian.hpp"
#include "hexflip/morse.hpp"
#include "hexflip/reduction.hpp"
#include "hexflip/twist.hpp"

#include <json.hpp>

using namespace hexflip;
using nlohmann::json;

namespace {

double env_tol(double fallback) {
    if (const char* s = std::getenv("HEXFLIP_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0.0) return v;
    }
    return fallback;
}

PartitionCurve parse_curve(const std::string& text) {
    // "tri:i,j,k"
    if (text.rfind("tri:", 0) != 0)
        throw usage_error("curve literal must look like tri:1,2,3");
    int i, j, k;
    if (std::sscanf(text.c_str() + 4, "%d,%d,%d", &i, &j, &k) != 3)
        throw usage_error("curve literal must look like tri:1,2,3");
    return make_curve(i, j, k);
}

Sextuple load_sextuple(const std::string& path) { return sextuple_from_json(read_file(path)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sextuple configurations in the hyperbolic plane: braid moves, "
                 "size reduction, and the Euclidean limit model"};
    app.require_subcommand(1);
    double tol = env_tol(kTolClass);

    // --- sample ---
    auto* sample = app.add_subcommand("sample", "draw valid configurations");
    int sample_n = 1;
    std::uint64_t sample_seed = 1;
    double sample_spread = 1.0;
    std::string sample_out;
    sample->add_option("--n", sample_n, "number of configurations");
    sample->add_option("--seed", sample_seed, "master seed");
    sample->add_option("--spread", sample_spread, "hyperbolic ball radius");
    sample->add_option("--out", sample_out, "output path (JSON lines; default stdout)");
    sample->callback([&] {
        std::ostringstream os;
        for (int k = 0; k < sample_n; ++k) {
            Sextuple z = sample_random(derive_seed(sample_seed, k), sample_spread);
            os << sextuple_to_json(z) << "\n";
        }
        if (sample_out.empty()) std::cout << os.str();
        else write_file_atomic(sample_out, os.str());
    });

    // --- reduce ---
    auto* red = app.add_subcommand("reduce", "run the size-reduction driver");
    std::string red_in, red_trace, red_verdict, red_svg;
    double red_eps = 1e-3;
    long red_max_steps = 100000;
    red->add_option("--in", red_in, "input configuration JSON")->required();
    red->add_option("--eps", red_eps, "target size");
    red->add_option("--max-steps", red_max_steps, "step budget");
    red->add_option("--trace", red_trace, "write the step trace CSV here");
    red->add_option("--verdict", red_verdict, "write the verdict JSON here");
    red->add_option("--svg", red_svg, "write a final-state disc snapshot here");
    red->callback([&] {
        Sextuple z = load_sextuple(red_in);
        ReduceParams params;
        params.eps = red_eps;
        params.max_steps = red_max_steps;
        params.tol = tol;
        ReduceResult rr = reduce(z, params);
        std::string verdict = verdict_to_json(rr.verdict);
        if (!red_trace.empty()) write_file_atomic(red_trace, trace_to_csv(rr.trace));
        if (!red_verdict.empty()) write_file_atomic(red_verdict, verdict);
        if (!red_svg.empty()) write_file_atomic(red_svg, disc_svg(rr.final_config));
        std::cout << verdict << "\n";
        if (rr.verdict.tag == Verdict::Tag::Stalled) std::exit(2);
    });

    // --- classify ---
    auto* cls = app.add_subcommand("classify", "trichotomy class, sizes and component");
    std::string cls_in;
    cls->add_option("--in", cls_in, "input configuration JSON")->required();
    cls->callback([&] {
        Sextuple z = load_sextuple(cls_in);
        ValidationResult v = validate(z, std::max(tol, kTolId));
        json j;
        j["valid"] = v.ok;
        j["residual"] = v.residual;
        j["sign"] = v.sign;
        j["A"] = size_A(z);
        j["B"] = size_B(z);
        j["F"] = size_F(z);
        ConfigClass c = classify_config(z, tol);
        j["class"] = config_tag_name(c.tag);
        if (c.tag == ConfigTag::DegeneratePair) j["pair"] = c.pair_index;
        j["component"] = component_name(component_of(z, tol));
        std::cout << j.dump() << "\n";
    });

    // --- orbit ---
    auto* orb = app.add_subcommand("orbit", "random walk statistics over braid words");
    std::string orb_in, orb_stats;
    long orb_steps = 1000;
    std::uint64_t orb_seed = 1;
    orb->add_option("--in", orb_in, "input configuration JSON")->required();
    orb->add_option("--steps", orb_steps, "walk length");
    orb->add_option("--seed", orb_seed, "walk seed");
    orb->add_option("--stats", orb_stats, "write stats JSON here");
    orb->callback([&] {
        Sextuple z = load_sextuple(orb_in);
        std::mt19937_64 rng(orb_seed);
        double best = size_A(z) + size_B(z);
        json samples = json::array();
        Sextuple cur = z;
        for (long k = 0; k < orb_steps; ++k) {
            int i = 1 + static_cast<int>(rng() % 6);
            int sign = rng() % 2 ? 1 : -1;
            cur = leapfrog(cur, i, sign);
            best = std::min(best, size_A(cur) + size_B(cur));
            if ((k + 1) % std::max(1L, orb_steps / 16) == 0)
                samples.push_back({{"step", k + 1}, {"min_size", best}});
        }
        json j{{"steps", orb_steps},
               {"min_size", best},
               {"final_residual", validate(cur).residual},
               {"progress", samples}};
        if (!orb_stats.empty()) write_file_atomic(orb_stats, j.dump());
        std::cout << j.dump() << "\n";
    });

    // --- flow ---
    auto* flow = app.add_subcommand("flow", "apply a twist flow");
    std::string flow_in, flow_curve = "tri:1,2,3", flow_out;
    double flow_t = 0.0;
    flow->add_option("--in", flow_in, "input configuration JSON")->required();
    flow->add_option("--curve", flow_curve, "partition curve, e.g. tri:1,2,3");
    flow->add_option("--t", flow_t, "flow time")->required();
    flow->add_option("--out", flow_out, "output path (default stdout)");
    flow->callback([&] {
        Sextuple z = load_sextuple(flow_in);
        PartitionCurve curve = parse_curve(flow_curve);
        Sextuple r = phi_flow(z, curve, flow_t, tol);
        std::string out = sextuple_to_json(r) + "\n";
        if (flow_out.empty()) std::cout << out;
        else write_file_atomic(flow_out, out);
    });

    // --- euclid ---
    auto* euc = app.add_subcommand("euclid", "Euclidean limit model utilities");
    std::string euc_mode, euc_in, euc_curve = "tri:1,2,3";
    double euc_t = 1e-3;
    std::uint64_t euc_seed = 1;
    euc->add_option("--mode", euc_mode, "q | signature | rank | lift | taylor")->required();
    euc->add_option("--in", euc_in, "input Euclidean configuration JSON");
    euc->add_option("--curve", euc_curve, "partition curve for taylor mode");
    euc->add_option("--t", euc_t, "lift scale");
    euc->add_option("--seed", euc_seed, "seed for sampled directions");
    euc->callback([&] {
        json j;
        auto input = [&]() {
            if (!euc_in.empty()) return euc_from_json(read_file(euc_in));
            return sample_cone_direction(euc_seed);
        };
        if (euc_mode == "q") {
            EucConfig v = input();
            j["q_area"] = q_area_route(v);
            j["q_double_sum"] = q_double_sum(v);
            j["q_symplectic"] = q_symplectic_route(v);
        } else if (euc_mode == "signature") {
            auto sig = signature_of_h();
            j["signature"] = {sig.first, sig.second};
        } else if (euc_mode == "rank") {
            DistributionRank dr = distribution_rank(input());
            j["rank_upstairs"] = dr.rank_upstairs;
            j["rank_brackets_upstairs"] = dr.rank_brackets_upstairs;
            j["rank_quotient"] = dr.rank_quotient;
            j["rank_brackets_quotient"] = dr.rank_brackets_quotient;
        } else if (euc_mode == "lift") {
            LiftResult lift = lift_to_sextuple(input(), euc_t);
            j["config"] = json::parse(sextuple_to_json(lift.config));
            j["iterations"] = lift.iterations;
            j["residual"] = validate(lift.config).residual;
        } else if (euc_mode == "taylor") {
            TaylorComparison tc = taylor_f_gamma(input(), parse_curve(euc_curve));
            j["limit"] = tc.limit;
            j["sign"] = tc.sign;
            j["q_gamma"] = tc.q_value;
            j["rel_error"] = tc.rel_error;
        } else {
            throw usage_error("unknown euclid mode: " + euc_mode);
        }
        std::cout << j.dump() << "\n";
    });

    // --- check ---
    auto* chk = app.add_subcommand("check", "run the acceptance suite");
    std::string chk_filter;
    chk->add_option("--filter", chk_filter, "run only checks whose name contains this");
    chk->callback([&] {
        int failures = acceptance::run_checks(chk_filter, std::cout);
        if (failures) std::exit(1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    }
    return 0;
}
