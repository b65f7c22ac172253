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


#ifndef STABMUB_CLI_H
#define STABMUB_CLI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "stabmub/multiplier.h"
#include "stabmub/report.h"
#include "stabmub/sl2.h"

namespace stabmub {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitIo = 3 };

/// Largest degrees accepted by each command.
inline constexpr unsigned kGenerateMaxDegree = 8;
inline constexpr unsigned kTableMaxDegree = 5;
inline constexpr unsigned kVerifyMaxDegree = 4;
inline constexpr unsigned kCovarianceMaxDegree = 3;
inline constexpr unsigned kNogoMaxDegree = 2;
inline constexpr unsigned kConjugacyMaxDegree = 3;

/// "1,3-5" -> {1, 3, 4, 5}; sorted and deduplicated. Throws Error(InvalidConfig).
std::vector<unsigned> parse_degree_list(const std::string &text);
/// "split", "nonsplit" or "both".
std::vector<TorusKind> parse_kind_list(const std::string &text);
/// "all" or a comma-separated list of '+'/'-' strings of length n.
std::vector<SignSequence> parse_sign_list(const std::string &text, unsigned n);

/// Cyclic subgroups of SL(2, F): odd orders must yield invariant Weyl multipliers by averaging,
/// even orders must break (M.2). Throws Error(DegreeTooLarge) for n > kNogoMaxDegree.
Report nogo_report(unsigned n, unsigned jobs = 1);
/// Conjugator correctness over SL(2, F) \ {I}, with class sizes per trace in the details.
/// Throws Error(DegreeTooLarge) for n > kConjugacyMaxDegree.
Report conjugacy_report(unsigned n);
/// Pairwise distinct tables and equivalence keys across the given sign sequences.
CheckResult distinctness_check(unsigned n, TorusKind kind, const std::vector<SignSequence> &signs);
/// Nonsplit generator acts as one (|F|+1)-cycle on directions; split generator (n >= 2) fixes
/// exactly two directions and permutes the rest in cycles of length |F|-1.
CheckResult torus_action_check(unsigned n, TorusKind kind);

/// Entry point of the `stabmub` executable. JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace stabmub

#endif
