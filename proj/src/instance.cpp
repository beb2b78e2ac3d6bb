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

#include "wnd/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace wnd {

int ServerAssignment::served_count() const {
  return static_cast<int>(std::count_if(server_.begin(), server_.end(),
                                        [](int s) { return s != kUnserved; }));
}

std::vector<std::string> validate(const Instance& instance) {
  std::vector<std::string> violations;
  const auto add = [&violations](std::string message) {
    violations.push_back(std::move(message));
  };

  const std::size_t num_b = instance.transmitters.size();
  const std::size_t num_t = instance.receivers.size();
  if (num_b == 0) add("transmitters must be non-empty");
  if (num_t == 0) add("receivers must be non-empty");

  if (instance.fading.size() != num_t * num_b) {
    add("fading must be a " + std::to_string(num_t) + "x" +
        std::to_string(num_b) + " matrix, got " +
        std::to_string(instance.fading.size()) + " entries");
  } else {
    for (std::size_t t = 0; t < num_t; ++t) {
      for (std::size_t b = 0; b < num_b; ++b) {
        const double a = instance.fading[t * num_b + b];
        if (!(a >= 0.0 && a <= 1.0)) {  // also catches NaN
          add("fading[" + std::to_string(t) + "][" + std::to_string(b) +
              "] out of [0,1]");
        }
      }
    }
  }

  if (!(instance.sir_threshold > 0.0) || !std::isfinite(instance.sir_threshold))
    add("sir_threshold must be > 0");
  if (!(instance.noise > 0.0) || !std::isfinite(instance.noise))
    add("noise must be > 0");

  if (instance.p_max.size() != num_b) {
    add("p_max must have one entry per transmitter");
  } else {
    for (std::size_t b = 0; b < num_b; ++b) {
      const double cap = instance.p_max[b];
      if (!(cap > 0.0) || !std::isfinite(cap))
        add("p_max[" + std::to_string(b) + "] must be > 0");
      else if (!(instance.p_min < cap))
        add("p_min must be < p_max[" + std::to_string(b) + "]");
    }
  }
  if (!(instance.p_min > 0.0) || !std::isfinite(instance.p_min))
    add("p_min must be > 0");

  if (instance.revenue.size() != num_t) {
    add("revenue must have one entry per receiver");
  } else {
    for (std::size_t t = 0; t < num_t; ++t) {
      if (!(instance.revenue[t] > 0.0) || !std::isfinite(instance.revenue[t]))
        add("revenue[" + std::to_string(t) + "] must be > 0");
    }
  }

  return violations;
}

namespace {

// Distribution draws are hand-rolled on top of mt19937_64 so that a seed
// pins the generated instance bit-for-bit across standard libraries.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double next_normal(std::mt19937_64& rng) {
  const double u1 = std::max(next_unit(rng), 0x1.0p-53);
  const double u2 = next_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

struct Point {
  double x = 0.0;
  double y = 0.0;
};

}  // namespace

Instance generate(std::uint64_t seed, int num_receivers, int num_transmitters,
                  const GeneratorParams& params) {
  if (num_receivers < 1) throw std::invalid_argument("num_receivers must be >= 1");
  if (num_transmitters < 1)
    throw std::invalid_argument("num_transmitters must be >= 1");
  if (!(params.gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(params.d0 > 0.0)) throw std::invalid_argument("d0 must be > 0");
  if (!(params.shadow_sigma_db >= 0.0))
    throw std::invalid_argument("shadow_sigma_db must be >= 0");
  if (!(params.noise > 0.0)) throw std::invalid_argument("noise must be > 0");
  if (!(params.p_max > 0.0)) throw std::invalid_argument("p_max must be > 0");
  if (!(params.revenue_min > 0.0) || !(params.revenue_max >= params.revenue_min))
    throw std::invalid_argument("revenue range must satisfy 0 < min <= max");
  if (!std::isfinite(params.sir_threshold_db))
    throw std::invalid_argument("sir_threshold_db must be finite");

  std::mt19937_64 rng(seed);

  std::vector<Point> tx(static_cast<std::size_t>(num_transmitters));
  for (auto& p : tx) {
    p.x = next_unit(rng);
    p.y = next_unit(rng);
  }
  std::vector<Point> rx(static_cast<std::size_t>(num_receivers));
  for (auto& p : rx) {
    p.x = next_unit(rng);
    p.y = next_unit(rng);
  }

  Instance instance;
  instance.transmitters.reserve(tx.size());
  for (int b = 0; b < num_transmitters; ++b)
    instance.transmitters.push_back("b" + std::to_string(b));
  instance.receivers.reserve(rx.size());
  for (int t = 0; t < num_receivers; ++t)
    instance.receivers.push_back("r" + std::to_string(t));

  instance.fading.resize(rx.size() * tx.size());
  for (int t = 0; t < num_receivers; ++t) {
    for (int b = 0; b < num_transmitters; ++b) {
      const double dist = std::hypot(rx[t].x - tx[b].x, rx[t].y - tx[b].y);
      double a = dist <= params.d0 ? 1.0 : std::pow(params.d0 / dist, params.gamma);
      if (params.shadow_sigma_db > 0.0) {
        a *= std::pow(10.0, params.shadow_sigma_db * next_normal(rng) / 10.0);
      }
      instance.set_gain(t, b, std::min(1.0, a));
    }
  }

  instance.sir_threshold = std::pow(10.0, params.sir_threshold_db / 10.0);
  instance.noise = params.noise;
  instance.p_max.assign(tx.size(), params.p_max);
  // Keeping the relaxation floor at or below the noise power preserves the
  // pairwise system as a true relaxation even for idle transmitters lifted
  // to p_min.
  instance.p_min = std::min(1e-6 * params.p_max, params.noise);

  instance.revenue.resize(rx.size());
  for (int t = 0; t < num_receivers; ++t) {
    instance.revenue[t] =
        params.revenue_max > params.revenue_min
            ? params.revenue_min +
                  (params.revenue_max - params.revenue_min) * next_unit(rng)
            : params.revenue_min;
  }

  return instance;
}

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error(message);
}

const json& require_field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

double require_number(const json& value, const std::string& what) {
  if (!value.is_number()) fail(what + " must be a number");
  return value.get<double>();
}

std::vector<std::string> require_names(const json& value,
                                       const std::string& what) {
  if (!value.is_array() || value.empty()) fail(what + " must be a non-empty array");
  std::vector<std::string> names;
  names.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) fail(what + " entries must be strings");
    names.push_back(item.get<std::string>());
  }
  return names;
}

}  // namespace

Instance read_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("instance document must be a JSON object");

  static const char* kFields[] = {"transmitters", "receivers", "fading",
                                  "sir_threshold", "noise", "p_max",
                                  "p_min", "revenue"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    bool known = false;
    for (const char* f : kFields) known = known || key == f;
    if (!known) fail("unknown field \"" + key + "\"");
  }

  Instance instance;
  instance.transmitters = require_names(require_field(doc, "transmitters"),
                                        "transmitters");
  instance.receivers = require_names(require_field(doc, "receivers"),
                                     "receivers");
  const std::size_t num_b = instance.transmitters.size();
  const std::size_t num_t = instance.receivers.size();

  const json& fading = require_field(doc, "fading");
  if (!fading.is_array() || fading.size() != num_t)
    fail("fading must have " + std::to_string(num_t) + " rows");
  instance.fading.reserve(num_t * num_b);
  for (std::size_t t = 0; t < num_t; ++t) {
    const json& row = fading[t];
    if (!row.is_array() || row.size() != num_b)
      fail("fading row " + std::to_string(t) + " must have " +
           std::to_string(num_b) + " entries");
    for (const auto& entry : row)
      instance.fading.push_back(
          require_number(entry, "fading row " + std::to_string(t)));
  }

  instance.sir_threshold =
      require_number(require_field(doc, "sir_threshold"), "sir_threshold");
  instance.noise = require_number(require_field(doc, "noise"), "noise");

  const json& p_max = require_field(doc, "p_max");
  if (p_max.is_number()) {
    instance.p_max.assign(num_b, p_max.get<double>());
  } else if (p_max.is_array()) {
    if (p_max.size() != num_b)
      fail("p_max must have " + std::to_string(num_b) + " entries");
    for (const auto& entry : p_max)
      instance.p_max.push_back(require_number(entry, "p_max"));
  } else {
    fail("p_max must be a number or an array");
  }

  instance.p_min = require_number(require_field(doc, "p_min"), "p_min");

  const json& revenue = require_field(doc, "revenue");
  if (!revenue.is_array() || revenue.size() != num_t)
    fail("revenue must have " + std::to_string(num_t) + " entries");
  for (const auto& entry : revenue)
    instance.revenue.push_back(require_number(entry, "revenue"));

  const auto violations = validate(instance);
  if (!violations.empty()) {
    std::string message = "invalid instance: " + violations.front();
    if (violations.size() > 1)
      message += " (and " + std::to_string(violations.size() - 1) + " more)";
    fail(message);
  }
  return instance;
}

std::string write_instance(const Instance& instance) {
  json doc;
  doc["transmitters"] = instance.transmitters;
  doc["receivers"] = instance.receivers;
  json rows = json::array();
  const std::size_t num_b = instance.transmitters.size();
  for (std::size_t t = 0; t < instance.receivers.size(); ++t) {
    json row = json::array();
    for (std::size_t b = 0; b < num_b; ++b)
      row.push_back(instance.fading[t * num_b + b]);
    rows.push_back(std::move(row));
  }
  doc["fading"] = std::move(rows);
  doc["sir_threshold"] = instance.sir_threshold;
  doc["noise"] = instance.noise;
  const bool uniform_cap =
      std::all_of(instance.p_max.begin(), instance.p_max.end(),
                  [&](double cap) { return cap == instance.p_max.front(); });
  if (uniform_cap && !instance.p_max.empty())
    doc["p_max"] = instance.p_max.front();
  else
    doc["p_max"] = instance.p_max;
  doc["p_min"] = instance.p_min;
  doc["revenue"] = instance.revenue;
  return doc.dump(2) + "\n";
}

ServerAssignment read_assignment(const std::string& text,
                                 const Instance& instance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("assignment document must be a JSON object");

  ServerAssignment assignment(instance.num_receivers());
  for (const auto& [receiver, server] : doc.items()) {
    const auto t = std::find(instance.receivers.begin(),
                             instance.receivers.end(), receiver);
    if (t == instance.receivers.end())
      fail("unknown receiver \"" + receiver + "\"");
    if (!server.is_string()) fail("server names must be strings");
    const auto b = std::find(instance.transmitters.begin(),
                             instance.transmitters.end(),
                             server.get<std::string>());
    if (b == instance.transmitters.end())
      fail("unknown transmitter \"" + server.get<std::string>() + "\"");
    assignment.serve(static_cast<int>(t - instance.receivers.begin()),
                     static_cast<int>(b - instance.transmitters.begin()));
  }
  return assignment;
}

std::string write_assignment(const ServerAssignment& assignment,
                             const Instance& instance) {
  json doc = json::object();
  for (int t = 0; t < assignment.num_receivers(); ++t) {
    if (assignment.is_served(t))
      doc[instance.receivers[t]] = instance.transmitters[assignment.server(t)];
  }
  return doc.dump(2) + "\n";
}

}  // namespace wnd
