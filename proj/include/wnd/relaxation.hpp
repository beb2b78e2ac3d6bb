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

#ifndef WND_RELAXATION_HPP
#define WND_RELAXATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wnd/instance.hpp"

namespace wnd {

// The pairwise relaxation replaces each SIR inequality by one constraint per
// interferer: the server must beat every interferer (and the noise)
// individually by the SIR threshold. In dB, with q_b = 10*log10(p_b), each
// such constraint is a difference inequality q_b - q_beta <= w, so the whole
// relaxation becomes a weighted digraph whose negative cycles are exactly
// its irreducible infeasibilities.
//
// Node layout: 0..|B|-1 are transmitters, then the noise node (a fictitious
// transmitter pinned at the noise power), then the reference node whose
// potential anchors the absolute power bounds.

enum class ArcKind {
  kInterference,  // q_interferer - q_server <= w, one per (receiver, pair)
  kLowerBound,    // q_b >= floor(10*log10 p_min), arc b -> ref
  kUpperBound,    // q_b <= ceil(10*log10 p_max[b]), arc ref -> b
  kNoisePin,      // the two arcs fixing q_noise - q_ref
};

struct Arc {
  int tail = 0;
  int head = 0;
  std::int64_t weight = 0;
  ArcKind kind = ArcKind::kInterference;
  // Interference provenance; -1 elsewhere. interferer may be the noise node.
  int receiver = -1;
  int server = -1;
  int interferer = -1;
};

// Arcs carried by one ordered (server, interferer) node pair, one entry per
// receiver whose constraint generates that arc. Retained so 2-cycle
// enumeration can name the exact assignment variable behind each arc.
struct PairArcs {
  int server = 0;
  int interferer = 0;
  std::vector<std::pair<int, std::int64_t>> by_receiver;  // (receiver, weight)
};

struct DifferenceGraph {
  int node_count = 0;
  int noise_node = 0;
  int ref_node = 0;
  std::vector<Arc> arcs;
  std::vector<PairArcs> pair_arcs;

  const Instance* instance = nullptr;
};

// Result of evaluating one pairwise dB weight.
struct PairwiseWeight {
  enum class Kind {
    kArc,               // a regular integer-weight arc
    kInaudible,         // gain(t, interferer) = 0: no constraint, arc omitted
    kUnservableServer,  // gain(t, server) = 0: x[t][server] can never be 1
  };
  Kind kind = Kind::kArc;
  std::int64_t weight = 0;
};

// ceil(10 * (log10 a[t][server] - log10 a[t][interferer] - log10 delta)).
// Pass noise_interferer for the noise pseudo-transmitter (gain 1, power mu).
inline constexpr int kNoiseInterferer = -1;
PairwiseWeight pairwise_weight(const Instance& instance, int receiver,
                               int server, int interferer);

// Builds the difference graph over every candidate (receiver, server) pair.
// Per (server, interferer) node pair only the minimum-weight arc is kept
// (dominance); the full per-receiver weights live in pair_arcs.
DifferenceGraph build_graph(const Instance& instance);

// Builds the graph restricted to the constraints activated by the
// assignment, one arc per (served receiver, interferer). Bound and noise-pin
// arcs are always present.
DifferenceGraph build_graph(const Instance& instance,
                            const ServerAssignment& scope);

// Debug dump, one line per arc: "tail head weight provenance" in the
// deterministic construction order.
std::string dump_graph(const DifferenceGraph& graph);

}  // namespace wnd

#endif  // WND_RELAXATION_HPP
