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

#ifndef WND_CYCLES_HPP
#define WND_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wnd/relaxation.hpp"

namespace wnd {

// A simple directed cycle in a DifferenceGraph; negative total weight means
// the corresponding difference constraints are jointly unsatisfiable.
struct Cycle {
  std::vector<Arc> arcs;  // head of each arc equals tail of the next
  std::int64_t total_weight = 0;
};

// Valid inequality sum of x over pairs <= |pairs| - 1: not all of the named
// (receiver, transmitter) activations can hold in a feasible assignment.
struct CycleCut {
  enum class Provenance { kTwoCycle, kNegativeCycle, kExactIis };

  std::vector<std::pair<int, int>> pairs;  // (receiver, transmitter), sorted
  int rhs = 0;                             // |pairs| - 1
  Provenance provenance = Provenance::kTwoCycle;

  bool operator==(const CycleCut&) const = default;
};

struct NegativeCycleSearch {
  std::optional<Cycle> cycle;
  // Valid iff no cycle was found: potentials[v] - potentials[u] <= weight
  // for every arc u -> v, certifying the difference system feasible.
  std::vector<std::int64_t> potentials;
};

// Bellman-Ford from a virtual source (all distances start at 0). Returns a
// simple negative cycle extracted by predecessor walking, or the feasible
// potential function when none exists. Parallel arcs are reduced to the
// minimum weight per node pair; node and arc scan order is fixed, so the
// returned cycle is deterministic.
NegativeCycleSearch find_negative_cycle(const DifferenceGraph& graph);

// Emits x[t1][beta] + x[t2][b] <= 1 for every transmitter pair (beta, b) and
// receiver pair (t1 served by beta, t2 served by b, t1 != t2) whose two arc
// weights sum negative. Requires a full-scope graph with pair_arcs retained.
// Output is deduplicated and deterministically ordered.
std::vector<CycleCut> enumerate_two_cycles(const DifferenceGraph& graph);

// Translates a negative cycle into its cut: pairs are the (receiver, server)
// provenances of the cycle's interference arcs; bound and noise-pin arcs
// contribute none. Throws std::invalid_argument when the cycle is not
// negative or contains no interference arc (a pure bound inconsistency is an
// instance-level error, not a cut), and std::logic_error when provenance
// transmitters or receivers repeat.
CycleCut cut_from_cycle(const Cycle& cycle);

// True iff every pair of the cut is activated by the assignment, i.e. the
// left-hand side exceeds rhs.
bool violated_by(const CycleCut& cut, const ServerAssignment& assignment);

// One line per cut, pairs in lexicographic order, for golden-file tests.
std::string dump_cuts(const std::vector<CycleCut>& cuts,
                      const Instance& instance);

}  // namespace wnd

#endif  // WND_CYCLES_HPP
