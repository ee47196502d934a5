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
#include "config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace reachwarp::cli {
namespace {

using nlohmann::json;

constexpr std::array kKnownFields = {"description", "A",     "X0",         "T",
                                     "control",     "admissible", "direction", "sense",
                                     "steps",       "directions", "seed",      "tolerances"};

const json& require(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(path + "/" + key, "missing required field");
    return *it;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    const double value = j.get<double>();
    if (!std::isfinite(value)) throw ConfigError(path, "number must be finite");
    return value;
}

std::uint64_t count(const json& j, const std::string& path, std::uint64_t minimum) {
    if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
    if (j.is_number_unsigned()) {
        const auto value = j.get<std::uint64_t>();
        if (value < minimum) {
            throw ConfigError(path, "must be >= " + std::to_string(minimum));
        }
        return value;
    }
    const auto value = j.get<std::int64_t>();
    if (value < 0 || static_cast<std::uint64_t>(value) < minimum) {
        throw ConfigError(path, "must be >= " + std::to_string(minimum));
    }
    return static_cast<std::uint64_t>(value);
}

Vec vector_of(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a non-empty array");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = number(j[i], path + "/" + std::to_string(i));
    }
    return v;
}

Mat matrix_of(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError(path, "expected a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) {
        throw ConfigError(path + "/0", "expected a non-empty row array");
    }
    const std::size_t cols = j[0].size();
    Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_path = path + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols) {
            throw ConfigError(row_path, "expected a row of " + std::to_string(cols) +
                                            " numbers");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                number(j[r][c], row_path + "/" + std::to_string(c));
        }
    }
    return m;
}

std::string dims(Eigen::Index r, Eigen::Index c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

ControlSpec control_of(const json& j, Eigen::Index& input_dim) {
    if (!j.is_object()) throw ConfigError("/control", "expected an object");
    const json& type = require(j, "type", "/control");
    if (!type.is_string()) throw ConfigError("/control/type", "expected a string");
    ControlSpec spec;
    if (type == "box") {
        spec.kind = ControlSpec::Kind::box;
        spec.lo = vector_of(require(j, "lo", "/control"), "/control/lo");
        spec.hi = vector_of(require(j, "hi", "/control"), "/control/hi");
        if (spec.lo.size() != spec.hi.size()) {
            throw ConfigError("/control/hi", "lo and hi must have the same length");
        }
        for (Eigen::Index i = 0; i < spec.lo.size(); ++i) {
            if (spec.lo(i) > spec.hi(i)) {
                throw ConfigError("/control/lo/" + std::to_string(i), "lo exceeds hi");
            }
        }
        input_dim = spec.lo.size();
    } else if (type == "vertices") {
        spec.kind = ControlSpec::Kind::vertices;
        const json& list = require(j, "list", "/control");
        if (!list.is_array() || list.empty()) {
            throw ConfigError("/control/list", "expected a non-empty array of vertices");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            spec.list.push_back(vector_of(list[i], "/control/list/" + std::to_string(i)));
            if (spec.list.back().size() != spec.list.front().size()) {
                throw ConfigError("/control/list/" + std::to_string(i),
                                  "vertex dimension differs from the first vertex");
            }
        }
        input_dim = spec.list.front().size();
    } else {
        throw ConfigError("/control/type", "expected \"box\" or \"vertices\"");
    }
    return spec;
}

std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

LinearSystem ProblemConfig::system() const {
    return LinearSystem(a, x0, horizon, center.cols());
}

ControlPolytope ProblemConfig::polytope() const {
    if (control.kind == ControlSpec::Kind::box) return ControlPolytope::box(control.lo, control.hi);
    return ControlPolytope::from_vertices(control.list);
}

FrobeniusBall ProblemConfig::ball() const { return FrobeniusBall(center, radius); }

Direction ProblemConfig::unit_direction() const { return Direction(direction); }

std::size_t ProblemConfig::sweep_count() const {
    if (directions) return *directions;
    return a.rows() == 2 ? 64 : 400;
}

ProblemConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("/", "expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (std::find(kKnownFields.begin(), kKnownFields.end(), key) == kKnownFields.end()) {
            throw ConfigError("/" + key, "unknown field");
        }
    }

    ProblemConfig cfg;
    if (const auto it = doc.find("description"); it != doc.end()) {
        if (!it->is_string()) throw ConfigError("/description", "expected a string");
        cfg.description = it->get<std::string>();
    }

    cfg.a = matrix_of(require(doc, "A", ""), "/A");
    const Eigen::Index n = cfg.a.rows();
    if (cfg.a.cols() != n) {
        throw ConfigError("/A", "must be square, got " + dims(cfg.a.rows(), cfg.a.cols()));
    }
    cfg.x0 = vector_of(require(doc, "X0", ""), "/X0");
    if (cfg.x0.size() != n) {
        throw ConfigError("/X0", "expected length " + std::to_string(n) + ", got " +
                                     std::to_string(cfg.x0.size()));
    }
    cfg.horizon = number(require(doc, "T", ""), "/T");
    if (!(cfg.horizon > 0.0)) throw ConfigError("/T", "horizon must be > 0");

    Eigen::Index m = 0;
    cfg.control = control_of(require(doc, "control", ""), m);

    const json& adm = require(doc, "admissible", "");
    if (!adm.is_object()) throw ConfigError("/admissible", "expected an object");
    const json& adm_type = require(adm, "type", "/admissible");
    if (adm_type != "frobenius_ball") {
        throw ConfigError("/admissible/type", "expected \"frobenius_ball\"");
    }
    cfg.center = matrix_of(require(adm, "center", "/admissible"), "/admissible/center");
    if (cfg.center.rows() != n || cfg.center.cols() != m) {
        throw ConfigError("/admissible/center",
                          "expected " + dims(n, m) + " (state x input), got " +
                              dims(cfg.center.rows(), cfg.center.cols()));
    }
    cfg.radius = number(require(adm, "radius", "/admissible"), "/admissible/radius");
    if (cfg.radius < 0.0) throw ConfigError("/admissible/radius", "must be >= 0");

    const Vec raw_direction = vector_of(require(doc, "direction", ""), "/direction");
    if (raw_direction.size() != n) {
        throw ConfigError("/direction", "expected length " + std::to_string(n) + ", got " +
                                            std::to_string(raw_direction.size()));
    }
    try {
        cfg.direction = Direction::normalized(raw_direction, kDirectionNormTolerance).vec();
    } catch (const PreconditionError& e) {
        throw ConfigError("/direction", e.what());
    }

    if (const auto it = doc.find("sense"); it != doc.end()) {
        if (*it == "grow") {
            cfg.sense = Sense::grow;
        } else if (*it == "shrink") {
            cfg.sense = Sense::shrink;
        } else {
            throw ConfigError("/sense", "expected \"grow\" or \"shrink\"");
        }
    }
    if (const auto it = doc.find("steps"); it != doc.end()) {
        cfg.steps = count(*it, "/steps", 1);
    }
    if (const auto it = doc.find("directions"); it != doc.end()) {
        cfg.directions = count(*it, "/directions", 1);
    }
    if (const auto it = doc.find("seed"); it != doc.end()) {
        cfg.seed = count(*it, "/seed", 0);
    }
    if (const auto it = doc.find("tolerances"); it != doc.end()) {
        if (!it->is_object()) throw ConfigError("/tolerances", "expected an object");
        for (const auto& [key, value] : it->items()) {
            const std::string path = "/tolerances/" + key;
            const double tol = number(value, path);
            if (tol < 0.0) throw ConfigError(path, "must be >= 0");
            if (key == "tol_spec") {
                cfg.tolerances.spec = tol;
            } else if (key == "tol_ev") {
                cfg.tolerances.ev = tol;
            } else if (key == "tol_verify") {
                cfg.tolerances.verify = tol;
            } else {
                throw ConfigError(path, "unknown tolerance");
            }
        }
    }
    return cfg;
}

ProblemConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(line_column(text, e.byte), "JSON syntax error");
    }
    return parse_config(doc);
}

ProblemConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string(), "cannot open config file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

nlohmann::json matrix_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json vector_json(const Vec& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

nlohmann::json to_json(const ProblemConfig& cfg) {
    json doc = json::object();
    if (!cfg.description.empty()) doc["description"] = cfg.description;
    doc["A"] = matrix_json(cfg.a);
    doc["X0"] = vector_json(cfg.x0);
    doc["T"] = cfg.horizon;
    if (cfg.control.kind == ControlSpec::Kind::box) {
        doc["control"] = {{"type", "box"},
                          {"lo", vector_json(cfg.control.lo)},
                          {"hi", vector_json(cfg.control.hi)}};
    } else {
        json list = json::array();
        for (const auto& v : cfg.control.list) list.push_back(vector_json(v));
        doc["control"] = {{"type", "vertices"}, {"list", std::move(list)}};
    }
    doc["admissible"] = {{"type", "frobenius_ball"},
                         {"center", matrix_json(cfg.center)},
                         {"radius", cfg.radius}};
    doc["direction"] = vector_json(cfg.direction);
    doc["sense"] = std::string(to_string(cfg.sense));
    doc["steps"] = cfg.steps;
    if (cfg.directions) doc["directions"] = *cfg.directions;
    doc["seed"] = cfg.seed;
    doc["tolerances"] = {{"tol_spec", cfg.tolerances.spec},
                         {"tol_ev", cfg.tolerances.ev},
                         {"tol_verify", cfg.tolerances.verify}};
    return doc;
}

Mat load_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string(), "cannot open matrix file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + " " + line_column(text, e.byte),
                          "JSON syntax error");
    }
    if (doc.is_object()) return matrix_of(require(doc, "B", ""), "/B");
    return matrix_of(doc, "");
}

}  // namespace reachwarp::cli
