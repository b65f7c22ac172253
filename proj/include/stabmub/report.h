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

#ifndef STABMUB_REPORT_H
#define STABMUB_REPORT_H

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace stabmub {

/// Outcome of one exhaustive or sampled check. A failed check carries the least counterexample
/// in the check's canonical iteration order, so reports do not depend on scheduling.
struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {
    }

    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    nlohmann::json counterexample;  // null when passed
    nlohmann::json details = nlohmann::json::object();

    void fail(nlohmann::json witness) {
        if (passed) {
            passed = false;
            counterexample = std::move(witness);
        }
    }
    nlohmann::json to_json() const;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(CheckResult c) {
        checks.push_back(std::move(c));
    }
    void merge(const Report &other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool passed() const;
    nlohmann::json to_json() const;
};

}  // namespace stabmub

#endif
