#pragma once

#include <string>
#include <vector>

#include "hexflip/sextuple.hpp"

// Size-reduction operations on sextuple configurations and the three-phase
// driver: braid moves only, every step replayable from its recorded word.

namespace hexflip {

struct OpResult {
    Sextuple z;
    BraidWord word;
};

struct ReductionStep {
    std::string op;    // operation name
    BraidWord word;    // replay: apply_word(previous, word) == recorded config
    double A, B, F;    // sizes after the step
    ConfigClass cls;   // class the dispatch saw (before the step)
};

using ReductionTrace = std::vector<ReductionStep>;

struct Verdict {
    enum class Tag { Reduced, Pinched, Singular, Stalled } tag;
    double eps = 0.0;
    Moebius gen1, gen2;  // Pinched: input pair for a Gilman-Maskit check
    std::string reason;
};

const char* verdict_name(Verdict::Tag t);

struct ReduceParams {
    double eps = 1e-3;
    long max_steps = 100000;
    double tol = kTolClass;
    double a_small = 0.05;  // smallness gate for the Lemma B-estimates
    double b_small = 0.05;
    long euclid_cap = 10000;
    double euclid_stall = 1e-13;  // relative per-step progress threshold
};

// thrown by op_skh2 when the rotation holonomy is not elliptic
struct skh2_unavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// signals a pinched orbit; carries the two-generator certificate
struct PinchedCertificate {
    Moebius gen1, gen2;
    std::string reason;
};

OpResult op_rot(const Sextuple& z);
OpResult op_tri(const Sextuple& z, double tol = kTolClass);
OpResult op_par(const Sextuple& z, double tol = kTolClass);
OpResult op_skh0(const Sextuple& z, double tol = kTolClass);
OpResult op_skh1(const Sextuple& z, double tol = kTolClass);
OpResult op_skh2(const Sextuple& z, double tol = kTolClass);
OpResult op_aligned(const Sextuple& z, double tol = kTolClass);

struct EuclidOutcome {
    bool pinched;
    OpResult result;           // when !pinched
    PinchedCertificate cert;   // when pinched
    BraidWord word;            // moves applied either way
    Sextuple z;                // configuration reached
    long euclid_steps = 0;     // subtractive steps performed
};

EuclidOutcome op_degenerate_euclid(const Sextuple& z, double eps = 1e-3,
                                   const ReduceParams& params = {});

struct ReduceResult {
    ReductionTrace trace;
    Verdict verdict;
    Sextuple final_config;
};

ReduceResult reduce(const Sextuple& z, const ReduceParams& params = {});

struct DiscretenessReport {
    enum class Kind { NonDiscrete, InconclusivePinched, Elementary, Undetermined } kind;
    Verdict verdict;
    Moebius gen1, gen2;  // for the external Gilman-Maskit check
    std::string detail;
};

const char* discreteness_kind_name(DiscretenessReport::Kind k);

DiscretenessReport discreteness_report(const Sextuple& z, double eps = 1e-3,
                                       const ReduceParams& params = {});

}  // namespace hexflip
