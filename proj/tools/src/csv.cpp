// Copyright 2026 The espkit Authors
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

#include "espkit_cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "espkit/errors.hpp"

namespace espkit::cli {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream row(line);
  while (std::getline(row, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_cell(const std::string& cell, std::size_t line, const std::string& column) {
  const std::string text = trim(cell);
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ConfigError("line " + std::to_string(line) + ": column " + column +
                      ": cannot parse '" + text + "' as a number");
  }
  return v;
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw Error("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << kTrajectoryHeader << '\n';
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const MonotoneSample& s = traj.samples[i];
    out << format_double(traj.times[i]) << ',' << format_double(s.negativity) << ','
        << format_double(s.concurrence) << ',' << format_double(s.cne) << ','
        << s.negative_count << '\n';
  }
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  write_trajectory_csv(os, traj);
  return os.str();
}

Trajectory read_trajectory_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header = split_row(line);
      break;
    }
  }
  if (header.empty()) throw ConfigError("trajectory CSV is empty");
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = trim(header[i]);
    if (name != "t" && name != "negativity" && name != "concurrence" && name != "cne" &&
        name != "negative_count") {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown column '" + name + "'");
    }
    if (!col.emplace(name, i).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate column '" + name + "'");
    }
  }
  for (const char* required : {"t", "negativity"}) {
    if (!col.count(required)) {
      throw ConfigError("line " + std::to_string(line_no) + ": header lacks column '" +
                        required + "'");
    }
  }

  Trajectory traj;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_row(line);
    if (cells.size() != header.size()) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " fields, found " +
                        std::to_string(cells.size()));
    }
    auto get = [&](const char* name) {
      const auto it = col.find(name);
      return it == col.end() ? nan : parse_cell(cells[it->second], line_no, name);
    };
    const double t = get("t");
    if (!traj.times.empty() && !(t > traj.times.back())) {
      throw ConfigError("line " + std::to_string(line_no) + ": times must be strictly increasing");
    }
    MonotoneSample s;
    s.negativity = get("negativity");
    if (!std::isfinite(s.negativity) || s.negativity < 0.0) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": negativity must be finite and nonnegative");
    }
    s.concurrence = get("concurrence");
    s.cne = get("cne");
    const double count = get("negative_count");
    s.negative_count = std::isfinite(count) ? static_cast<int>(count) : 0;
    traj.times.push_back(t);
    traj.samples.push_back(s);
  }
  return traj;
}

Trajectory read_trajectory_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  try {
    return read_trajectory_csv(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError(path + ": cannot open for writing");
  out << text;
  if (!out) throw ConfigError(path + ": write failed");
}

}  // namespace espkit::cli
