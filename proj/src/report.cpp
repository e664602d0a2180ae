// Copyright 2026 The qwitness Authors
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

#include "qwitness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qw {

namespace {

const char *relation_name(Relation r) {
    switch (r) {
        case Relation::kBelow:
            return "below";
        case Relation::kAbove:
            return "above";
        case Relation::kReport:
            return "report";
    }
    return "report";
}

nlohmann::json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

nlohmann::json measurement_json(const Measurement &m) {
    return {{"name", m.name},
            {"value", number(m.value)},
            {"tolerance", number(m.tolerance)},
            {"relation", relation_name(m.relation)},
            {"passed", m.passed()}};
}

}  // namespace

bool Measurement::passed() const {
    switch (relation) {
        case Relation::kBelow:
            return value < tolerance;
        case Relation::kAbove:
            return value > tolerance;
        case Relation::kReport:
            return true;
    }
    return false;
}

bool WitnessReport::has_flag(const std::string &f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

const Measurement *WitnessReport::find(const std::string &name) const {
    for (const auto *list : {&residuals, &coherence}) {
        for (const auto &m : *list) {
            if (m.name == name) return &m;
        }
    }
    return nullptr;
}

bool WitnessReport::all_passed() const {
    auto ok = [](const Measurement &m) { return m.passed(); };
    return std::all_of(residuals.begin(), residuals.end(), ok) && std::all_of(coherence.begin(), coherence.end(), ok);
}

nlohmann::json WitnessReport::to_json() const {
    nlohmann::json j;
    j["task"] = task;
    j["residuals"] = nlohmann::json::array();
    for (const auto &m : residuals) j["residuals"].push_back(measurement_json(m));
    j["coherence"] = nlohmann::json::array();
    for (const auto &m : coherence) j["coherence"].push_back(measurement_json(m));
    j["root_sets"] = nlohmann::json::object();
    for (const auto &[name, roots] : root_sets) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto &r : roots) list.push_back({r[0], r[1], r[2]});
        j["root_sets"][name] = list;
    }
    j["parameters"] = nlohmann::json::object();
    for (const auto &[k, v] : parameters) j["parameters"][k] = number(v);
    j["series"] = nlohmann::json::object();
    for (const auto &[k, v] : series) {
        nlohmann::json list = nlohmann::json::array();
        for (double x : v) list.push_back(number(x));
        j["series"][k] = list;
    }
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["flags"] = flags;
    j["verdict"] = verdict;
    return j;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void CsvWriter::row(const std::vector<std::string> &cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) os_ << ',';
        os_ << cells[k];
    }
    os_ << '\n';
}

}  // namespace qw
