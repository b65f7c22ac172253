// Copyright 2026 The stabmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABMUB_ARTIFACTS_H
#define STABMUB_ARTIFACTS_H

// JSON documents exchanged by the command-line tool. Field elements are bit-pattern integers
// (bit k is the coefficient of X^k); Gaussian dyadics are [re_num, im_num, log2_den] with the
// numerators written as JSON integers, or as decimal strings when they exceed 64 bits.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabmub/multiplier.h"
#include "stabmub/quadrature.h"

namespace stabmub {

using nlohmann::json;

json field_json(const Field &f);
json symp_json(const SympMap &m);
json vec_json(PhaseVec v);
json line_json(const Line &l);
json torus_json(const TorusSpec &t, const Field &f);
json gaussian_json(const GaussianDyadic &z);
/// Throws Error(ParseError) unless `j` is [re, im, log2_den] in the documented encoding.
GaussianDyadic parse_gaussian(const json &j);
/// Throws Error(ParseError) unless `j` is {"a","b","c","d"} of field elements, or the text
/// "a,b,c,d".
SympMap parse_symp(const json &j, const Field &f);
SympMap parse_symp(const std::string &text, const Field &f);

/// {"type": "multiplier", "n", "modulus_bits", "kind", "signs", "frame", "basis", "g"}; g is
/// row-major over V x V in bit-pattern order with values in {0, 1, 2, 3}.
json multiplier_json(const MultiplierSpec &spec);

/// One MUB document. Bases are ordered by direction index and vectors by line offset.
struct MubDocument {
    unsigned n = 0;
    TorusKind kind = TorusKind::Nonsplit;
    SignSequence signs;
    bool normalize_phase = false;
    std::vector<std::vector<ExactVector>> bases;
};

MubDocument build_mub_document(const MultiplierSpec &spec, bool normalize_phase, unsigned jobs = 1);
json mub_json(const MubDocument &doc);
/// Throws Error(ParseError) on any schema violation.
MubDocument parse_mub(const json &j);

/// Largest n for which file verification rebuilds dense projections, and for which
/// cross-basis overlaps are checked exhaustively rather than by seeded sampling.
inline constexpr unsigned kDenseVerifyMaxDegree = 4;

struct FileVerifyOptions {
    std::uint64_t seed = 0;
    std::uint64_t overlap_samples = 20000;
    unsigned jobs = 1;
};

/// Shape, agreement with a fresh construction (pinpointing the first differing line), exact
/// orthogonality and unbiasedness of the stored vectors, and, for n <= kDenseVerifyMaxDegree,
/// the quadrature axioms on the rebuilt projections v v^* / (v^* v).
Report verify_mub_document(const MubDocument &doc, const FileVerifyOptions &opts = {});

/// Reads a file; throws Error(IoError) or Error(ParseError).
json read_json_file(const std::string &path);
/// Writes `j` with two-space indentation and a trailing newline; throws Error(IoError).
void write_json_file(const std::string &path, const json &j);

}  // namespace stabmub

#endif
