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

#include "stabmub/report.h"

namespace stabmub {

nlohmann::json CheckResult::to_json() const {
    nlohmann::json out = {{"name", name}, {"status", passed ? "pass" : "fail"}, {"checked", checked}};
    if (!passed) {
        out["counterexample"] = counterexample;
    }
    if (!details.empty()) {
        out["details"] = details;
    }
    return out;
}

bool Report::passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    std::uint64_t failed = 0;
    for (const auto &c : checks) {
        list.push_back(c.to_json());
        failed += c.passed ? 0 : 1;
    }
    return {{"status", passed() ? "pass" : "fail"}, {"failed", failed}, {"checks", list}};
}

}  // namespace stabmub
