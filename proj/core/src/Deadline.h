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

//===- Deadline.h - Wall-clock deadlines ------------------------*- C++ -*-===//

#ifndef FLEXC_SRC_DEADLINE_H
#define FLEXC_SRC_DEADLINE_H

#include <algorithm>
#include <chrono>

namespace flexc {

/// Now plus \p Seconds, saturating far beyond any real run.
inline std::chrono::steady_clock::time_point deadlineAfter(double Seconds) {
  using Clock = std::chrono::steady_clock;
  Seconds = std::clamp(Seconds, 0.0, 1e8);
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(Seconds));
}

} // namespace flexc

#endif // FLEXC_SRC_DEADLINE_H
