// Copyright 2026 The wnd authors
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

#ifndef WND_CLI_HPP
#define WND_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wnd::cli {

// One benchmark line per instance, mirroring the usual coverage-planning
// report layout: root bounds with and without cuts, best objective, final
// gap, cut/node counters and wall time.
struct BenchRow {
  std::string id;
  int receivers = 0;
  int transmitters = 0;
  double ub0_plain = 0.0;
  double ub0_cuts = 0.0;
  double objective = 0.0;
  double gap_percent = 0.0;  // infinity when the objective is 0
  std::int64_t cuts = 0;
  std::int64_t nodes = 0;
  double wall_time_s = 0.0;
};

std::string format_table(const std::vector<BenchRow>& rows);
std::string to_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> from_csv(const std::string& text);

// Entry point behind the wnd binary. Exit codes: 0 success, 1 data error
// (unreadable file, invalid instance), 2 usage error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace wnd::cli

#endif  // WND_CLI_HPP
