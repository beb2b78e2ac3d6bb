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

#include "wnd/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wnd {

ActivatedSystem assignment_to_system(const ServerAssignment& assignment,
                                     const Instance& instance) {
  if (assignment.num_receivers() != instance.num_receivers())
    throw std::invalid_argument("assignment size does not match instance");
  ActivatedSystem system;
  system.instance = &instance;
  for (int t = 0; t < assignment.num_receivers(); ++t) {
    const int b = assignment.server(t);
    if (b == ServerAssignment::kUnserved) continue;
    if (b < 0 || b >= instance.num_transmitters())
      throw std::invalid_argument("assignment references unknown transmitter");
    system.constraints.push_back({t, b});
  }
  return system;
}

namespace {

int default_iteration_cap(const Instance& instance) {
  const double cap_ratio =
      *std::max_element(instance.p_max.begin(), instance.p_max.end()) /
      instance.p_min;
  const double cap = 10.0 * instance.num_transmitters() *
                     std::log(std::max(cap_ratio, 2.0));
  return std::clamp(static_cast<int>(cap), 50, 100000);
}

}  // namespace

FeasibilityVerdict check(const ActivatedSystem& system,
                         const CheckOptions& options) {
  const Instance& instance = *system.instance;
  const int num_b = instance.num_transmitters();

  {
    std::vector<bool> seen(static_cast<std::size_t>(instance.num_receivers()));
    for (const SirConstraint& c : system.constraints) {
      if (c.receiver < 0 || c.receiver >= instance.num_receivers() ||
          c.server < 0 || c.server >= num_b)
        throw std::invalid_argument("constraint references invalid indices");
      if (seen[c.receiver])
        throw std::invalid_argument("more than one server for receiver " +
                                    std::to_string(c.receiver));
      seen[c.receiver] = true;
    }
  }

  // A receiver that cannot hear its server is unsatisfiable on its own.
  for (const SirConstraint& c : system.constraints) {
    if (instance.gain(c.receiver, c.server) <= 0.0) {
      FeasibilityVerdict verdict;
      verdict.feasible = false;
      verdict.witness = std::vector<SirConstraint>{c};
      return verdict;
    }
  }

  std::vector<std::vector<int>> receivers_of(static_cast<std::size_t>(num_b));
  for (std::size_t i = 0; i < system.constraints.size(); ++i)
    receivers_of[system.constraints[i].server].push_back(
        system.constraints[i].receiver);

  const double delta = instance.sir_threshold;
  const double mu = instance.noise;
  const int max_iterations = options.max_iterations > 0
                                 ? options.max_iterations
                                 : default_iteration_cap(instance);

  std::vector<double> p(static_cast<std::size_t>(num_b), 0.0);
  std::vector<double> next(static_cast<std::size_t>(num_b), 0.0);

  const auto make_infeasible = [&system]() {
    FeasibilityVerdict verdict;
    verdict.feasible = false;
    verdict.witness = system.constraints;
    return verdict;
  };
  const auto make_feasible = [&](const std::vector<double>& powers) {
    FeasibilityVerdict verdict;
    verdict.feasible = true;
    verdict.minimal_powers = PowerVector{powers};
    return verdict;
  };

  if (system.constraints.empty()) return make_feasible(p);

  for (int iteration = 0; iteration < max_iterations; ++iteration) {
    bool converged = true;
    for (int beta = 0; beta < num_b; ++beta) {
      double required = 0.0;
      for (const int t : receivers_of[beta]) {
        double interference = mu;
        for (int b = 0; b < num_b; ++b) {
          if (b != beta) interference += instance.gain(t, b) * p[b];
        }
        required = std::max(
            required, delta * interference / instance.gain(t, beta));
      }
      if (required < p[beta])
        throw std::logic_error("fixed-point iterate decreased");
      next[beta] = required;
      if (required - p[beta] > options.rel_tol * required) converged = false;
    }
    p.swap(next);
    for (int beta = 0; beta < num_b; ++beta) {
      if (p[beta] > instance.p_max[beta] * (1.0 + options.bound_tol))
        return make_infeasible();
    }
    if (converged) return make_feasible(p);
  }

  // Cap reached without a divergence proof: accept the iterate if it sits
  // within the (tolerance-widened) caps.
  for (int beta = 0; beta < num_b; ++beta) {
    if (p[beta] > instance.p_max[beta] * (1.0 + options.bound_tol))
      return make_infeasible();
  }
  return make_feasible(p);
}

std::vector<SirConstraint> minimal_infeasible_subsystem(
    const ActivatedSystem& system, const CheckOptions& options) {
  if (check(system, options).feasible)
    throw std::invalid_argument(
        "minimal_infeasible_subsystem called on a feasible system");

  ActivatedSystem working = system;
  std::size_t index = 0;
  while (index < working.constraints.size()) {
    ActivatedSystem candidate;
    candidate.instance = working.instance;
    candidate.constraints = working.constraints;
    candidate.constraints.erase(candidate.constraints.begin() +
                                static_cast<std::ptrdiff_t>(index));
    if (!check(candidate, options).feasible) {
      working.constraints = std::move(candidate.constraints);
    } else {
      ++index;
    }
  }
  return working.constraints;
}

}  // namespace wnd
