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

#ifndef QWITNESS_REPORT_HPP
#define QWITNESS_REPORT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace qw {

/// How a measured value is judged against its tolerance.
enum class Relation {
    kBelow,   // pass when value < tolerance
    kAbove,   // pass when value > tolerance
    kReport,  // recorded only, always passes
};

struct Measurement {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::kReport;

    bool passed() const;
};

/// Structured verdict of one witnessing experiment.
struct WitnessReport {
    std::string task;
    std::vector<Measurement> residuals;
    std::vector<Measurement> coherence;
    std::map<std::string, std::vector<std::array<double, 3>>> root_sets;
    std::map<std::string, double> parameters;
    /// Named numeric series such as sampled trajectories.
    std::map<std::string, std::vector<double>> series;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> flags;
    std::string verdict;

    bool has_flag(const std::string &f) const;
    const Measurement *find(const std::string &name) const;
    bool all_passed() const;
    nlohmann::json to_json() const;
};

/// %.17g; "nan"/"inf" spelled out for CSV.
std::string format_double(double v);

/// Minimal CSV writer: comma separated, no quoting needed for our fields.
class CsvWriter {
   public:
    explicit CsvWriter(std::ostream &os) : os_(os) {}
    void header(const std::vector<std::string> &cols) { row(cols); }
    void row(const std::vector<std::string> &cells);

   private:
    std::ostream &os_;
};

}  // namespace qw

#endif
