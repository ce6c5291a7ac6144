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

//===- Parallel.cpp -------------------------------------------------------===//

#include "flexc/Parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

using namespace flexc;

unsigned flexc::defaultThreads() {
  unsigned N = std::max(1u, std::thread::hardware_concurrency());
  if (const char *Env = std::getenv("FLEXC_THREADS")) {
    try {
      long V = std::stol(Env);
      if (V >= 1)
        N = std::min<unsigned>(N, unsigned(V));
    } catch (const std::exception &) {
    }
  }
  return N;
}

void flexc::parallelFor(size_t N, unsigned Threads,
                        const std::function<void(size_t)> &Fn) {
  Threads = std::max(1u, std::min<unsigned>(Threads, N));
  if (Threads <= 1) {
    for (size_t I = 0; I < N; ++I)
      Fn(I);
    return;
  }
  std::atomic<size_t> Next{0};
  std::atomic<bool> Stop{false};
  std::exception_ptr Failure;
  std::mutex FailureLock;
  auto Work = [&] {
    for (size_t I; !Stop && (I = Next++) < N;) {
      try {
        Fn(I);
      } catch (...) {
        std::lock_guard<std::mutex> Guard(FailureLock);
        if (!Failure)
          Failure = std::current_exception();
        Stop = true;
      }
    }
  };
  std::vector<std::thread> Pool;
  for (unsigned T = 0; T < Threads; ++T)
    Pool.emplace_back(Work);
  for (std::thread &T : Pool)
    T.join();
  if (Failure)
    std::rethrow_exception(Failure);
}
