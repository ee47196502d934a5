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
#ifndef REACHWARP_TOOLS_FIXTURES_HPP
#define REACHWARP_TOOLS_FIXTURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"

namespace reachwarp::cli {

struct Fixture {
    std::string name;
    ProblemConfig config;
};

/// Embedded problem set: the ADMIRE rate model (grow, shrink and mixed
/// direction), the damped oscillator, a scalar case with closed-form
/// answers and a diagonal 3-state system that meets both assumptions.
const std::vector<Fixture>& fixtures();

std::optional<ProblemConfig> find_fixture(std::string_view name);

}  // namespace reachwarp::cli

#endif  // REACHWARP_TOOLS_FIXTURES_HPP
