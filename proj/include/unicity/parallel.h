//
// Copyright 2026 The Unicity Authors
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
//

#ifndef UNICITY_PARALLEL_H_
#define UNICITY_PARALLEL_H_

#include <cstddef>
#include <functional>
#include <optional>

namespace unicity {

// Worker count: the explicit value if given, else UNICITY_THREADS from the
// environment, else the hardware concurrency. Always >= 1.
unsigned ResolveThreads(std::optional<int> requested = std::nullopt);

// Splits [0, count) into contiguous chunks and runs body(begin, end) on up to
// `threads` workers. Chunk boundaries depend on the thread count, so bodies
// must write results by index. The first exception thrown by any worker is
// rethrown after all workers have joined.
void ParallelFor(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace unicity

#endif  // UNICITY_PARALLEL_H_
