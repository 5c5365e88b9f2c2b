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

#include "entropic/runner/result_table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace entropic::runner {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // fold -0 into 0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf.data(), end);
}

bool ResultTable::all_checks_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void ResultTable::append(ResultTable other) {
  curves.insert(curves.end(), std::make_move_iterator(other.curves.begin()), std::make_move_iterator(other.curves.end()));
  distributions.insert(distributions.end(), std::make_move_iterator(other.distributions.begin()),
                       std::make_move_iterator(other.distributions.end()));
  checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()), std::make_move_iterator(other.checks.end()));
}

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "system_id,p,t,alpha,value\n";
  for (const auto& r : rows) {
    os << r.system_id << ',' << r.p << ',' << r.t << ',' << format_number(r.alpha) << ',' << format_number(r.value)
       << '\n';
  }
}

void write_distributions_csv(std::ostream& os, const std::vector<DistributionRow>& rows) {
  os << "system_id,t,atom,weight,measure\n";
  for (const auto& r : rows) {
    os << r.system_id << ',' << r.t << ',' << format_number(r.atom) << ',' << format_number(r.weight) << ','
       << r.measure << '\n';
  }
}

void write_checks_csv(std::ostream& os, const std::vector<CheckRow>& rows) {
  os << "system_id,p,t,alpha,value,check,pass\n";
  for (const auto& r : rows) {
    os << r.system_id << ',' << r.p << ',' << r.t << ',' << (r.alpha ? format_number(*r.alpha) : "") << ','
       << format_number(r.value) << ',' << r.check << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

std::string config_hash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string to_json(const ResultTable& table, const RunMetadata& meta) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["metadata"]["command"] = meta.command;
  doc["metadata"]["tool_version"] = meta.tool_version;
  doc["metadata"]["config_hash"] = meta.config_hash;
  if (meta.wall_time_seconds) doc["metadata"]["wall_time_seconds"] = format_number(*meta.wall_time_seconds);

  auto& curves = doc["curves"] = ordered_json::array();
  for (const auto& r : table.curves) {
    curves.push_back({{"system_id", r.system_id},
                      {"p", r.p},
                      {"t", r.t},
                      {"alpha", format_number(r.alpha)},
                      {"value", format_number(r.value)}});
  }
  auto& dists = doc["distributions"] = ordered_json::array();
  for (const auto& r : table.distributions) {
    dists.push_back({{"system_id", r.system_id},
                     {"t", r.t},
                     {"atom", format_number(r.atom)},
                     {"weight", format_number(r.weight)},
                     {"measure", r.measure}});
  }
  auto& checks = doc["checks"] = ordered_json::array();
  for (const auto& r : table.checks) {
    checks.push_back({{"system_id", r.system_id},
                      {"p", r.p},
                      {"t", r.t},
                      {"alpha", r.alpha ? format_number(*r.alpha) : ""},
                      {"value", format_number(r.value)},
                      {"check", r.check},
                      {"pass", r.pass}});
  }
  return doc.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents, OutputFiles& files) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << contents;
  if (!f) throw std::runtime_error("failed writing " + path.string());
  files.written.push_back(path.string());
}

template <class Row, class Writer>
std::string render(const std::vector<Row>& rows, Writer writer) {
  std::ostringstream os;
  writer(os, rows);
  return os.str();
}

}  // namespace

OutputFiles write_outputs(const ResultTable& table, const RunMetadata& meta, const std::string& directory,
                          const std::string& stem, bool csv, bool json, std::ostream& out) {
  OutputFiles files;
  if (directory.empty()) {
    if (csv) {
      if (!table.curves.empty()) out << "# curves\n" << render(table.curves, write_curves_csv);
      if (!table.distributions.empty()) out << "# distributions\n" << render(table.distributions, write_distributions_csv);
      if (!table.checks.empty()) out << "# checks\n" << render(table.checks, write_checks_csv);
    } else if (json) {
      out << to_json(table, meta);
    }
    return files;
  }
  const std::filesystem::path dir(directory);
  std::filesystem::create_directories(dir);
  if (csv) {
    if (!table.curves.empty()) write_file(dir / (stem + "_curves.csv"), render(table.curves, write_curves_csv), files);
    if (!table.distributions.empty()) {
      write_file(dir / (stem + "_distributions.csv"), render(table.distributions, write_distributions_csv), files);
    }
    if (!table.checks.empty()) write_file(dir / (stem + "_checks.csv"), render(table.checks, write_checks_csv), files);
  }
  if (json) write_file(dir / (stem + ".json"), to_json(table, meta), files);
  return files;
}

}  // namespace entropic::runner
