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

#ifndef WND_SOLVER_HPP
#define WND_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "wnd/cycles.hpp"
#include "wnd/feasibility.hpp"
#include "wnd/instance.hpp"

namespace wnd {

enum class CutMode { kNone, kTwoCycle };

struct SolverConfig {
  CutMode cuts = CutMode::kTwoCycle;
  std::int64_t node_limit = 1'000'000;
  double time_limit_s = 3600.0;
  int threads = 1;  // > 1 splits the root subtrees across workers
  CheckOptions check;
  // Installed before the search starts, in addition to any root 2-cycle
  // cuts. Must be valid inequalities.
  std::vector<CycleCut> initial_cuts;
};

struct CutCounts {
  std::int64_t root_two_cycle = 0;
  std::int64_t negative_cycle = 0;
  std::int64_t iis_nogood = 0;

  std::int64_t total() const {
    return root_two_cycle + negative_cycle + iis_nogood;
  }
};

struct SolveResult {
  ServerAssignment best_assignment;
  PowerVector best_powers;  // minimal powers of the best assignment
  double objective = 0.0;
  double root_bound = 0.0;
  bool optimal = false;  // false means a node or time limit was hit
  CutCounts cuts;
  std::int64_t nodes_explored = 0;
  double wall_time_s = 0.0;
  // Cuts learned during the search (negative-cycle and IIS no-goods), in
  // discovery order; reinstalling them via initial_cuts reproduces the same
  // optimum.
  std::vector<CycleCut> learned_cuts;
};

// Exact branch-and-bound over server assignments. Branches on the undecided
// receiver with the fewest surviving candidate servers; candidates violating
// an active cut are pruned; the pairwise-relaxation graph of the decided
// pairs is checked for negative cycles at every serving decision (prune and
// learn the cycle cut on a hit); integer leaves run the exact feasibility
// check, turning any minimal infeasible subsystem into a no-good cut. The
// reported incumbent is always verified feasible.
SolveResult solve(const Instance& instance, const SolverConfig& config = {});

// Upper bound on the optimum at the root. Without cuts: total revenue of
// receivers with at least one individually servable candidate. With cuts: a
// greedy matching over the 2-cycle conflict edges whose endpoints have no
// alternative candidates subtracts the smaller revenue per selected edge.
// Always root_bound(instance, true) <= root_bound(instance, false).
double root_bound(const Instance& instance, bool with_cuts);

// Primal start: receivers by descending revenue each try their best-gain
// candidate and keep it iff the exact check stays feasible.
ServerAssignment greedy_heuristic(const Instance& instance,
                                  const CheckOptions& options = {});

}  // namespace wnd

#endif  // WND_SOLVER_HPP
