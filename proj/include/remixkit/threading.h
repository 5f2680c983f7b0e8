// include/remixkit/threading.h

// Copyright 2026  RemixKit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef REMIXKIT_THREADING_H_
#define REMIXKIT_THREADING_H_

#include <cstddef>
#include <functional>

namespace remixkit {

// Worker-count cap. 0 resets to the default (hardware concurrency, or the
// REMIXKIT_THREADS environment variable when set). Thread count never changes
// results: parallel sections write to pre-assigned slots and all reductions
// run in index order.
void set_max_threads(int n);
int max_threads();

// Runs fn(i) for i in [0, n), split across up to max_threads() workers.
// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace remixkit

#endif  // REMIXKIT_THREADING_H_
