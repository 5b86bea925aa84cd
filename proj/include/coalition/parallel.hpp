// Copyright 2026 The coalition-forge Authors
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

#ifndef COALITION_PARALLEL_HPP
#define COALITION_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace coalition {

// Worker count: hardware concurrency, capped by COALITION_FORGE_THREADS.
int worker_count();

// Splits [0, count) into contiguous chunks, one per worker, and calls
// body(worker, begin, end) for each. Returns after all chunks finish. An
// exception thrown by any chunk is rethrown here. Calls made from inside a
// worker run serially on that worker.
void parallel_for(std::size_t count,
                  const std::function<void(int, std::size_t, std::size_t)>& body);

}  // namespace coalition

#endif  // COALITION_PARALLEL_HPP
