// Copyright 2026 The entropic Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace entropic::runner {

/// Shortest form is not used on purpose: every value gets 17 significant
/// digits so that the text re-parses to the identical double.
std::string format_number(double x);

struct CurveRow {
  std::string system_id;
  std::string p;  // "" for classical curves, "inf" for p = infinity
  std::string t;
  double alpha = 0.0;
  double value = 0.0;
};

struct DistributionRow {
  std::string system_id;
  std::string t;
  double atom = 0.0;
  double weight = 0.0;
  std::string measure;  // P, Q or ES
};

struct CheckRow {
  std::string system_id;
  std::string p;
  std::string t;
  std::optional<double> alpha;
  double value = 0.0;
  std::string check;
  bool pass = false;
};

struct ResultTable {
  std::vector<CurveRow> curves;
  std::vector<DistributionRow> distributions;
  std::vector<CheckRow> checks;

  bool all_checks_pass() const;
  void append(ResultTable other);
};

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows);
void write_distributions_csv(std::ostream& os, const std::vector<DistributionRow>& rows);
void write_checks_csv(std::ostream& os, const std::vector<CheckRow>& rows);

struct RunMetadata {
  std::string command;
  std::string tool_version;
  std::string config_hash;
  std::optional<double> wall_time_seconds;
};

/// 64-bit FNV-1a of the config text, as 16 lowercase hex digits.
std::string config_hash(std::string_view text);

/// One JSON document mirroring the CSV tables, numbers as 17-digit strings.
std::string to_json(const ResultTable& table, const RunMetadata& meta);

struct OutputFiles {
  std::vector<std::string> written;
};

/// Writes `<dir>/<stem>_curves.csv`, `_distributions.csv`, `_checks.csv` (only
/// non-empty tables) and `<dir>/<stem>.json`, as enabled. With an empty
/// directory the CSV tables go to `out`, each preceded by a `# name` line.
OutputFiles write_outputs(const ResultTable& table, const RunMetadata& meta, const std::string& directory,
                          const std::string& stem, bool csv, bool json, std::ostream& out);

}  // namespace entropic::runner
