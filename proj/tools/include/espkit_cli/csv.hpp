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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "espkit/dynamics.hpp"

namespace espkit::cli {

inline constexpr const char* kTrajectoryHeader = "t,negativity,concurrence,cne,negative_count";

/** Shortest decimal text that reads back to the same double. */
std::string format_double(double x);

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
std::string trajectory_csv(const Trajectory& traj);

/**
 * Reads a trajectory CSV. The header must name t and negativity; the other
 * trajectory columns are optional and may appear in any order.
 *
 * @throws ConfigError naming the line of the first malformed row
 */
Trajectory read_trajectory_csv(std::istream& in);
Trajectory read_trajectory_csv_file(const std::string& path);

/** Writes text to a file, replacing it. */
void write_text_file(const std::string& path, const std::string& text);

}  // namespace espkit::cli
