// Copyright 2026 The feds Authors
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

#ifndef FEDS_PARALLEL_HPP_
#define FEDS_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace feds {

inline unsigned hardware_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Static range split over `workers` threads: fn(begin, end) per slice.
// Output written by fn must be position-addressed so the split is invisible
// in the result. Exceptions from workers are rethrown on the caller thread.
template <typename Fn>
void parallel_for(size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    fn(size_t{0}, count);
    return;
  }
  workers = static_cast<unsigned>(std::min<size_t>(workers, count));
  size_t per = count / workers;
  size_t extra = count % workers;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  size_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    size_t len = per + (w < extra ? 1 : 0);
    size_t end = begin + len;
    threads.emplace_back([&fn, &errors, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace feds

#endif  // FEDS_PARALLEL_HPP_
