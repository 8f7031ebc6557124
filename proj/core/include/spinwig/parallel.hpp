// Copyright 2026 The spinwig Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace spinwig {

/// Worker count: SPINWIG_THREADS if set and positive, otherwise the hardware
/// concurrency (at least 1).
int thread_count();

inline constexpr std::size_t kReduceChunk = 4096;

/// Sums fn(begin, end) over fixed chunks of [0, n) in chunk order. Chunks may
/// run on several threads; the result does not depend on the thread count.
template <class T, class Fn>
T chunked_reduce(std::size_t n, T zero, Fn&& fn) {
    const std::size_t chunks = (n + kReduceChunk - 1) / kReduceChunk;
    std::vector<T> partial(chunks, zero);
    auto run = [&](std::size_t c) {
        std::size_t begin = c * kReduceChunk;
        partial[c] = fn(begin, std::min(n, begin + kReduceChunk));
    };
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) run(c);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers) run(c);
            });
        }
        for (auto& t : pool) t.join();
    }
    T total = zero;
    for (auto& p : partial) total += p;
    return total;
}

}  // namespace spinwig
