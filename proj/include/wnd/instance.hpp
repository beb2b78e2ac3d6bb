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

#ifndef WND_INSTANCE_HPP
#define WND_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wnd {

// A power-assignment coverage planning instance. Transmitters emit at a
// linear-scale power in [0, p_max[b]]; receiver t hears transmitter b at
// gain(t, b) times its emitted power. A receiver is covered when the power
// of its serving transmitter is at least sir_threshold times the noise plus
// the sum of all interfering powers. All quantities are linear scale (not
// dB); p_min is the power floor used only by the dB relaxation.
//
// Immutable by convention once built: nothing in the library mutates an
// Instance after construction, so instances can be shared across threads.
struct Instance {
  std::vector<std::string> transmitters;
  std::vector<std::string> receivers;
  std::vector<double> fading;  // row-major |receivers| x |transmitters|
  double sir_threshold = 0.0;  // linear, > 0
  double noise = 0.0;          // linear power, > 0
  std::vector<double> p_max;   // per-transmitter cap, > 0
  double p_min = 0.0;          // relaxation floor, 0 < p_min < p_max[b]
  std::vector<double> revenue;  // per receiver, > 0

  int num_transmitters() const { return static_cast<int>(transmitters.size()); }
  int num_receivers() const { return static_cast<int>(receivers.size()); }

  double gain(int receiver, int transmitter) const {
    return fading[static_cast<std::size_t>(receiver) * transmitters.size() +
                  static_cast<std::size_t>(transmitter)];
  }
  void set_gain(int receiver, int transmitter, double value) {
    fading[static_cast<std::size_t>(receiver) * transmitters.size() +
           static_cast<std::size_t>(transmitter)] = value;
  }

  bool operator==(const Instance&) const = default;
};

// Per-receiver choice of serving transmitter; kUnserved means the receiver
// is left out of the coverage plan. At most one server per receiver holds by
// construction.
class ServerAssignment {
 public:
  static constexpr int kUnserved = -1;

  ServerAssignment() = default;
  explicit ServerAssignment(int num_receivers)
      : server_(static_cast<std::size_t>(num_receivers), kUnserved) {}

  int num_receivers() const { return static_cast<int>(server_.size()); }
  int server(int receiver) const { return server_[receiver]; }
  bool is_served(int receiver) const { return server_[receiver] != kUnserved; }
  void serve(int receiver, int transmitter) { server_[receiver] = transmitter; }
  void unserve(int receiver) { server_[receiver] = kUnserved; }

  int served_count() const;

  bool operator==(const ServerAssignment&) const = default;

 private:
  std::vector<int> server_;
};

// Per-transmitter emission powers, linear scale.
struct PowerVector {
  std::vector<double> values;

  bool operator==(const PowerVector&) const = default;
};

// Returns a human-readable description of every violated Instance invariant,
// empty when the instance is well formed. Violations are data, not errors.
std::vector<std::string> validate(const Instance& instance);

// Controls for the synthetic instance generator. Points live in the unit
// square; the gain model is a truncated power law min(1, (d0/d)^gamma) with
// optional log-normal shadowing given as a dB standard deviation.
struct GeneratorParams {
  double d0 = 0.01;
  double gamma = 3.5;
  double shadow_sigma_db = 0.0;
  double sir_threshold_db = 8.0;  // converted as delta = 10^(dB/10)
  double noise = 1e-8;
  double p_max = 1.0;
  double revenue_min = 1.0;
  double revenue_max = 1.0;
};

// Deterministic: identical (seed, sizes, params) yield bit-identical
// instances across platforms. Throws std::invalid_argument on bad params.
Instance generate(std::uint64_t seed, int num_receivers, int num_transmitters,
                  const GeneratorParams& params = {});

// JSON instance format. read_instance rejects unknown fields, dimension
// mismatches and invariant violations; write_instance round-trips exactly.
Instance read_instance(const std::string& text);
std::string write_instance(const Instance& instance);

// Assignment file: JSON object mapping receiver name -> transmitter name;
// receivers absent from the map are unserved.
ServerAssignment read_assignment(const std::string& text,
                                 const Instance& instance);
std::string write_assignment(const ServerAssignment& assignment,
                             const Instance& instance);

}  // namespace wnd

#endif  // WND_INSTANCE_HPP
