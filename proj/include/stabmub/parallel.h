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

#ifndef STABMUB_PARALLEL_H
#define STABMUB_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace stabmub {

/// Worker count used when a caller passes jobs = 0.
unsigned default_jobs();

/// Least index in [0, count) for which `fails(i)` is true, or nothing.
///
/// With jobs > 1 the range is split into contiguous blocks claimed in ascending order; blocks
/// starting past the best failure found so far are skipped. The answer is the same for any job
/// count. `fails` must be safe to call concurrently.
template <typename Pred>
std::optional<std::uint64_t> find_first_failure(std::uint64_t count, unsigned jobs, Pred &&fails) {
    if (jobs <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; i++) {
            if (fails(i)) {
                return i;
            }
        }
        return std::nullopt;
    }
    const std::uint64_t block = std::max<std::uint64_t>(1, count / (std::uint64_t{jobs} * 16));
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{count};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&]() {
        try {
            for (;;) {
                std::uint64_t start = next.fetch_add(block);
                if (start >= count || start >= best.load()) {
                    return;
                }
                std::uint64_t stop = std::min(count, start + block);
                for (std::uint64_t i = start; i < stop; i++) {
                    if (fails(i)) {
                        std::uint64_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) {
                error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; t++) {
        threads.emplace_back(worker);
    }
    for (auto &th : threads) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    if (best.load() < count) {
        return best.load();
    }
    return std::nullopt;
}

/// Runs body(i) for every i in [0, count). Results must be written to per-index slots.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned jobs, Body &&body) {
    find_first_failure(count, jobs, [&](std::uint64_t i) {
        body(i);
        return false;
    });
}

}  // namespace stabmub

#endif
