// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Static range partitioning over std::thread. Callers merge per-chunk
// results in chunk order, so output never depends on the worker count.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace symtensor {

inline int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [begin, end) into `jobs` contiguous chunks and runs
/// fn(chunk_index, chunk_begin, chunk_end) on each, one thread per chunk.
/// The first exception thrown by any chunk is rethrown.
template <class Fn>
void parallel_chunks(std::int64_t begin, std::int64_t end, int jobs, Fn&& fn) {
  const std::int64_t total = std::max<std::int64_t>(0, end - begin);
  jobs = static_cast<int>(std::clamp<std::int64_t>(jobs, 1, std::max<std::int64_t>(1, total)));
  if (jobs == 1) {
    fn(0, begin, end);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    const std::int64_t lo = begin + total * j / jobs;
    const std::int64_t hi = begin + total * (j + 1) / jobs;
    workers.emplace_back([&, j, lo, hi] {
      try {
        fn(j, lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(j)] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace symtensor
