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

#ifndef SUBMODULAR_PARALLEL_H_
#define SUBMODULAR_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace submodular {

// Calls fn(i) for i in [0, count) on up to `workers` threads. Each index runs
// exactly once; callers write results into slot i to keep output order fixed.
// The first exception thrown by fn is rethrown after all workers stop.
void ParallelFor(std::size_t count, std::size_t workers,
                 const std::function<void(std::size_t)>& fn);

}  // namespace submodular

#endif  // SUBMODULAR_PARALLEL_H_
