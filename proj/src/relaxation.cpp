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

#include "wnd/relaxation.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wnd {

namespace {

std::int64_t ceil_db(double linear) {
  return static_cast<std::int64_t>(std::ceil(10.0 * std::log10(linear)));
}

std::int64_t floor_db(double linear) {
  return static_cast<std::int64_t>(std::floor(10.0 * std::log10(linear)));
}

}  // namespace

PairwiseWeight pairwise_weight(const Instance& instance, int receiver,
                               int server, int interferer) {
  const double a_server = instance.gain(receiver, server);
  if (a_server <= 0.0)
    return {PairwiseWeight::Kind::kUnservableServer, 0};

  double log_ratio;
  if (interferer == kNoiseInterferer) {
    // The noise pseudo-transmitter reaches every receiver at gain 1; its
    // power sits on the pinned noise node.
    log_ratio = std::log10(a_server) - std::log10(instance.sir_threshold);
  } else {
    const double a_int = instance.gain(receiver, interferer);
    if (a_int <= 0.0) return {PairwiseWeight::Kind::kInaudible, 0};
    log_ratio = std::log10(a_server) - std::log10(a_int) -
                std::log10(instance.sir_threshold);
  }
  return {PairwiseWeight::Kind::kArc,
          static_cast<std::int64_t>(std::ceil(10.0 * log_ratio))};
}

namespace {

// Rounding keeps every constraint a relaxation of its exact counterpart:
// interference and upper-bound arcs take the ceiling (larger right-hand
// side, weaker), the lower bound takes the floor. The noise pin uses one
// rounded constant on both arcs, so of any simple cycle's arcs at most the
// single arc entering the reference node is strengthened, and by strictly
// less than 1; integer cycle totals therefore stay nonnegative whenever the
// unrounded system is consistent.
void append_bound_and_pin_arcs(const Instance& instance,
                               DifferenceGraph& graph) {
  const int ref = graph.ref_node;
  const int noise = graph.noise_node;
  for (int b = 0; b < instance.num_transmitters(); ++b) {
    graph.arcs.push_back({b, ref, -floor_db(instance.p_min),
                          ArcKind::kLowerBound, -1, -1, -1});
    graph.arcs.push_back({ref, b, ceil_db(instance.p_max[b]),
                          ArcKind::kUpperBound, -1, -1, -1});
  }
  const std::int64_t pin = ceil_db(instance.noise);
  graph.arcs.push_back({ref, noise, pin, ArcKind::kNoisePin, -1, -1, -1});
  graph.arcs.push_back({noise, ref, -pin, ArcKind::kNoisePin, -1, -1, -1});
}

DifferenceGraph make_graph_shell(const Instance& instance) {
  DifferenceGraph graph;
  graph.node_count = instance.num_transmitters() + 2;
  graph.noise_node = instance.num_transmitters();
  graph.ref_node = instance.num_transmitters() + 1;
  graph.instance = &instance;
  return graph;
}

int interferer_node(const DifferenceGraph& graph, int interferer) {
  return interferer == kNoiseInterferer ? graph.noise_node : interferer;
}

}  // namespace

DifferenceGraph build_graph(const Instance& instance) {
  DifferenceGraph graph = make_graph_shell(instance);
  const int num_b = instance.num_transmitters();
  const int num_t = instance.num_receivers();

  for (int server = 0; server < num_b; ++server) {
    for (int v = 0; v <= num_b; ++v) {  // v == num_b is the noise node
      const int interferer = v == num_b ? kNoiseInterferer : v;
      if (interferer == server) continue;
      PairArcs group;
      group.server = server;
      group.interferer = interferer_node(graph, interferer);
      for (int t = 0; t < num_t; ++t) {
        const PairwiseWeight w = pairwise_weight(instance, t, server, interferer);
        if (w.kind == PairwiseWeight::Kind::kArc)
          group.by_receiver.emplace_back(t, w.weight);
      }
      if (group.by_receiver.empty()) continue;
      // Dominance: only the tightest arc per node pair matters for cycle
      // detection; its receiver names the variable a cut would use.
      std::size_t best = 0;
      for (std::size_t i = 1; i < group.by_receiver.size(); ++i) {
        if (group.by_receiver[i].second < group.by_receiver[best].second)
          best = i;
      }
      graph.arcs.push_back({server, group.interferer,
                            group.by_receiver[best].second,
                            ArcKind::kInterference,
                            group.by_receiver[best].first, server, group.interferer});
      graph.pair_arcs.push_back(std::move(group));
    }
  }

  append_bound_and_pin_arcs(instance, graph);
  return graph;
}

DifferenceGraph build_graph(const Instance& instance,
                            const ServerAssignment& scope) {
  if (scope.num_receivers() != instance.num_receivers())
    throw std::invalid_argument("assignment size does not match instance");
  DifferenceGraph graph = make_graph_shell(instance);
  const int num_b = instance.num_transmitters();

  std::map<std::pair<int, int>, PairArcs> groups;
  for (int t = 0; t < instance.num_receivers(); ++t) {
    const int server = scope.server(t);
    if (server == ServerAssignment::kUnserved) continue;
    for (int v = 0; v <= num_b; ++v) {
      const int interferer = v == num_b ? kNoiseInterferer : v;
      if (interferer == server) continue;
      const PairwiseWeight w = pairwise_weight(instance, t, server, interferer);
      if (w.kind != PairwiseWeight::Kind::kArc) continue;
      const int head = interferer_node(graph, interferer);
      graph.arcs.push_back({server, head, w.weight, ArcKind::kInterference,
                            t, server, head});
      auto& group = groups[{server, head}];
      group.server = server;
      group.interferer = head;
      group.by_receiver.emplace_back(t, w.weight);
    }
  }
  for (auto& [key, group] : groups) {
    (void)key;
    graph.pair_arcs.push_back(std::move(group));
  }

  append_bound_and_pin_arcs(instance, graph);
  return graph;
}

std::string dump_graph(const DifferenceGraph& graph) {
  const Instance& instance = *graph.instance;
  const auto node_name = [&](int node) -> std::string {
    if (node == graph.noise_node) return "noise";
    if (node == graph.ref_node) return "ref";
    return instance.transmitters[node];
  };

  std::ostringstream out;
  for (const Arc& arc : graph.arcs) {
    out << node_name(arc.tail) << ' ' << node_name(arc.head) << ' '
        << arc.weight << ' ';
    switch (arc.kind) {
      case ArcKind::kInterference:
        out << "sir " << instance.receivers[arc.receiver] << ' '
            << instance.transmitters[arc.server];
        break;
      case ArcKind::kLowerBound:
        out << "lower " << node_name(arc.tail);
        break;
      case ArcKind::kUpperBound:
        out << "upper " << node_name(arc.head);
        break;
      case ArcKind::kNoisePin:
        out << "pin";
        break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wnd
