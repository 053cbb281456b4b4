#pragma once

#include <cstdint>
#include <string>

#include "hexflip/euclidean.hpp"
#include "hexflip/reduction.hpp"
#include "hexflip/sextuple.hpp"

namespace hexflip {

// {"model":"poincare_disc","points":[[re,im],...]} at 17 significant digits
std::string sextuple_to_json(const Sextuple& z);
Sextuple sextuple_from_json(const std::string& text);

// {"model":"euclidean","points":[[re,im],...]}
std::string euc_to_json(const EucConfig& v);
EucConfig euc_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& v);

// step, op, |word|, A, B, F, class
std::string trace_to_csv(const ReductionTrace& trace);

std::string disc_svg(const Sextuple& z, bool with_aux = true);

// stateless hash-based child seed derivation (splitmix64 over master ^ index)
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace hexflip
