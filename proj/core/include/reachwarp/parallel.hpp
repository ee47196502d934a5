/*
 Copyright 2026 The reachwarp Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef REACHWARP_PARALLEL_HPP
#define REACHWARP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace reachwarp {

/// Worker count: hardware concurrency, capped by REACHWARP_THREADS if set.
std::size_t worker_count();

/**
 * Runs fn(i) for i in [0, count) over worker_count() threads using static
 * contiguous chunks. The first exception thrown by any task is rethrown
 * after all workers join.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace reachwarp

#endif  // REACHWARP_PARALLEL_HPP
