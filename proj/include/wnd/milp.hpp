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

#ifndef WND_MILP_HPP
#define WND_MILP_HPP

#include <string>

#include "wnd/instance.hpp"

namespace wnd {

// Smallest constant deactivating the (receiver, server) SIR row when
// x[t][b] = 0: delta*mu + delta * sum over interferers of gain * p_max. The
// row is slack-free with the server silent and every interferer at its cap.
double big_m_value(const Instance& instance, int receiver, int server);

// Emits the big-M mixed-integer formulation as LP-format text: binary
// variables x_t{i}_b{j}, continuous powers p_b{j}, one big-M SIR row per
// servable (receiver, candidate) pair, one-server rows, power bounds, and --
// when strengthen is set -- the enumerated 2-cycle cuts appended as cut{k}
// rows. x variables that can never be active (zero gain or individually
// unsatisfiable) are fixed to 0 in the Bounds section. Output is
// deterministic: the same instance yields byte-identical text.
std::string export_bm(const Instance& instance, bool strengthen);

}  // namespace wnd

#endif  // WND_MILP_HPP
