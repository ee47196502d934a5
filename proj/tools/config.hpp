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
#ifndef REACHWARP_TOOLS_CONFIG_HPP
#define REACHWARP_TOOLS_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reachwarp/errors.hpp"
#include "reachwarp/model.hpp"
#include "reachwarp/warp.hpp"

namespace reachwarp::cli {

/// Directions off unit norm by more than this are rejected on load.
inline constexpr double kDirectionNormTolerance = 1e-6;

/// Malformed or inconsistent problem configuration. `field` is a JSON
/// pointer-like path ("/admissible/radius"), or "line L, column C" for
/// syntax errors.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct ControlSpec {
    enum class Kind { box, vertices };
    Kind kind = Kind::box;
    Vec lo;
    Vec hi;
    std::vector<Vec> list;
};

struct ProblemConfig {
    std::string description;
    Mat a;
    Vec x0;
    double horizon = 1.0;
    ControlSpec control;
    Mat center;
    double radius = 0.0;
    Vec direction;  // unit norm after loading
    Sense sense = Sense::grow;
    std::size_t steps = kDefaultSteps;
    std::optional<std::size_t> directions;
    std::uint64_t seed = 42;
    Tolerances tolerances;

    LinearSystem system() const;
    ControlPolytope polytope() const;
    FrobeniusBall ball() const;
    Direction unit_direction() const;
    /// `directions` if set, else 64 in 2D and 400 otherwise.
    std::size_t sweep_count() const;
};

ProblemConfig parse_config(const nlohmann::json& doc);
ProblemConfig parse_config_text(const std::string& text);
ProblemConfig load_config_file(const std::filesystem::path& path);

nlohmann::json to_json(const ProblemConfig& config);

nlohmann::json matrix_json(const Mat& m);
nlohmann::json vector_json(const Vec& v);

/// Reads an n x m input matrix from a JSON file holding either a nested
/// array or an object with a "B" member.
Mat load_matrix_file(const std::filesystem::path& path);

}  // namespace reachwarp::cli

#endif  // REACHWARP_TOOLS_CONFIG_HPP
