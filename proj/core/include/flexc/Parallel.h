// Copyright 2026 The FlexC Authors.
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

//===- Parallel.h - Minimal worker pool --------------------------*- C++ -*-===//

#ifndef FLEXC_PARALLEL_H
#define FLEXC_PARALLEL_H

#include <cstddef>
#include <functional>

namespace flexc {

/// Hardware concurrency, capped by the FLEXC_THREADS environment variable.
unsigned defaultThreads();

/// Calls \p Fn(I) for every I in [0, N) on up to \p Threads threads. The
/// first exception thrown by any call is rethrown after all workers stop.
void parallelFor(size_t N, unsigned Threads,
                 const std::function<void(size_t)> &Fn);

} // namespace flexc

#endif // FLEXC_PARALLEL_H
