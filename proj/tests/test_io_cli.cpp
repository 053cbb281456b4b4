#include <doctest.h>

#include <set>

#include "hexflip/acceptance.hpp"
#include "hexflip/io.hpp"
#include "hexflip/lagrangian.hpp"
#include "hexflip/reduction.hpp"
#include "test_support.hpp"

using namespace hexflip;
using namespace hexflip::testsup;

TEST_CASE("sextuple json round trip is bit exact") {
    for (int k = 0; k < 20; ++k) {
        Sextuple z = sample_random(derive_seed(401, k), 1.0);
        Sextuple w = sextuple_from_json(sextuple_to_json(z));
        for (int i = 1; i <= 6; ++i) CHECK(w.at(i).z == z.at(i).z);
    }
    CHECK_THROWS(sextuple_from_json("{\"model\":\"euclidean\",\"points\":[]}"));
    CHECK_THROWS(sextuple_from_json("{\"model\":\"poincare_disc\",\"points\":[[2,0],[0,0],[0,0],[0,0],[0,0],[0,0]]}"));
}

TEST_CASE("trace csv schema") {
    Sextuple z = sample_random(5, 1.0);
    ReduceParams params;
    params.eps = 1e-2;
    ReduceResult rr = reduce(z, params);
    std::string csv = trace_to_csv(rr.trace);
    CHECK(csv.rfind("step,op,word_length,A,B,F,class\n", 0) == 0);
    // one line per step plus the header
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == rr.trace.size() + 1);
}

TEST_CASE("verdict json") {
    Verdict v{Verdict::Tag::Reduced, 1e-3, {}, {}, ""};
    std::string j = verdict_to_json(v);
    CHECK(j.find("reduced") != std::string::npos);
}

TEST_CASE("svg snapshot contains the disc and six points") {
    Sextuple z = make_skh_config(3);
    std::string svg = disc_svg(z);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 8);
    for (int i = 1; i <= 6; ++i)
        CHECK(svg.find(">x" + std::to_string(i) + "<") != std::string::npos);
}

TEST_CASE("derive_seed determinism and dispersion") {
    CHECK(derive_seed(42, 7) == derive_seed(42, 7));
    std::set<std::uint64_t> seen;
    for (int k = 0; k < 100000; ++k) seen.insert(derive_seed(42, k));
    CHECK(seen.size() == 100000);  // no collisions observed
    CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}

TEST_CASE("batch results are schedule independent") {
    // per-item seeds do not depend on processing order
    std::vector<double> forward, backward;
    for (int k = 0; k < 16; ++k)
        forward.push_back(size_A(sample_random(derive_seed(7, k), 1.0)));
    for (int k = 15; k >= 0; --k)
        backward.push_back(size_A(sample_random(derive_seed(7, k), 1.0)));
    for (int k = 0; k < 16; ++k) CHECK(forward[k] == backward[15 - k]);
}

TEST_CASE("braid word parsing") {
    BraidWord w = BraidWord::parse("1 2 -3 6 -6");
    CHECK(w.size() == 5);
    CHECK(w.letters[2].index == 3);
    CHECK(w.letters[2].sign == -1);
    CHECK(w.freely_reduced().size() == 3);
    CHECK(w.to_string() == "1 2 -3 6 -6");
    CHECK_THROWS(BraidWord::parse("7"));
    // permutation bookkeeping: sigma_1 swaps slots 1 and 2
    BraidWord s1;
    s1.push(1, 1);
    auto perm = s1.permutation();
    CHECK(perm[0] == 2);
    CHECK(perm[1] == 1);
    CHECK(perm[2] == 3);
}

TEST_CASE("partition curve names and table") {
    PartitionCurve c = make_curve(2, 4, 6);  // complement side contains 1
    CHECK(c.triple == std::array<int, 3>{1, 3, 5});
    CHECK(c.name() == "tri:1,3,5");
    // conjugator moves the triple to slots (1,2,3)
    auto perm = c.conjugator.permutation();
    std::set<int> image{perm[0], perm[2], perm[4]};
    CHECK(image == std::set<int>{1, 2, 3});
}
