// Copyright 2026 The qwitness Authors
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

#ifndef QWITNESS_PARALLEL_HPP
#define QWITNESS_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace qw {

/// Runs body(begin, end, worker) over contiguous chunks of [0, n). Chunk
/// boundaries depend only on n and the worker count; callers reduce the
/// per-worker results in worker order.
template <class Body>
void parallel_chunks(std::size_t n, unsigned workers, Body body) {
    workers = std::max(1U, workers);
    if (workers == 1 || n < 2) {
        body(std::size_t{0}, n, 0U);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = std::min(n, w * chunk);
        std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([=, &body] { body(begin, end, w); });
    }
    for (auto &t : pool) t.join();
}

/// Running extremum that remembers the first index attaining it, so that
/// merging per-worker results gives the same answer for any worker count.
struct ArgBest {
    double value = 0.0;
    std::size_t index = static_cast<std::size_t>(-1);

    bool offer_min(double v, std::size_t i) {
        if (index == static_cast<std::size_t>(-1) || v < value || (v == value && i < index)) {
            value = v;
            index = i;
            return true;
        }
        return false;
    }
    bool offer_max(double v, std::size_t i) {
        if (index == static_cast<std::size_t>(-1) || v > value || (v == value && i < index)) {
            value = v;
            index = i;
            return true;
        }
        return false;
    }
    bool valid() const { return index != static_cast<std::size_t>(-1); }
};

}  // namespace qw

#endif
