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

#ifndef WND_FEASIBILITY_HPP
#define WND_FEASIBILITY_HPP

#include <optional>
#include <vector>

#include "wnd/instance.hpp"

namespace wnd {

// One activated SIR inequality: receiver must hear its server at
// sir_threshold times the noise-plus-interference sum.
struct SirConstraint {
  int receiver = 0;
  int server = 0;

  bool operator==(const SirConstraint&) const = default;
};

// The subsystem of SIR inequalities activated by a server assignment,
// together with the instance's power bounds. At most one constraint per
// receiver.
struct ActivatedSystem {
  const Instance* instance = nullptr;
  std::vector<SirConstraint> constraints;
};

ActivatedSystem assignment_to_system(const ServerAssignment& assignment,
                                     const Instance& instance);

struct CheckOptions {
  // Converged when every component's relative change drops below rel_tol.
  double rel_tol = 1e-10;
  // A component above p_max * (1 + bound_tol) proves infeasibility.
  double bound_tol = 1e-9;
  // <= 0 selects the default cap 10 * |B| * ln(max p_max / p_min).
  int max_iterations = 0;
};

struct FeasibilityVerdict {
  bool feasible = false;
  // Componentwise-minimal powers satisfying every activated inequality;
  // idle transmitters at 0. Present iff feasible.
  std::optional<PowerVector> minimal_powers;
  // An infeasible subset of the constraints. Present iff infeasible; a
  // singleton when some activated gain is zero, otherwise the whole system.
  // minimal_infeasible_subsystem refines it to an irreducible one.
  std::optional<std::vector<SirConstraint>> witness;
};

// Exact feasibility of the activated system within [0, p_max] via the
// monotone fixed-point iteration from p = 0: each round raises every serving
// transmitter to the least power covering all of its receivers against the
// current interference. Iterates are componentwise nondecreasing and bounded
// above by any feasible power vector, so the first component to exceed its
// cap proves infeasibility, and the limit is the minimal feasible point.
FeasibilityVerdict check(const ActivatedSystem& system,
                         const CheckOptions& options = {});

// Deletion filter: scans constraints in insertion order, dropping each whose
// removal keeps the remainder infeasible. The result is infeasible and every
// proper subset of it is feasible. Throws std::invalid_argument when the
// system is feasible.
std::vector<SirConstraint> minimal_infeasible_subsystem(
    const ActivatedSystem& system, const CheckOptions& options = {});

}  // namespace wnd

#endif  // WND_FEASIBILITY_HPP
