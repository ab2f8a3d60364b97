// Copyright 2026 The qrc Authors
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

#include "qrc/experiments/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qrc::experiments {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<ExperimentKind, 5> kKinds{ExperimentKind::QelmClassify, ExperimentKind::QelmSurface,
                                               ExperimentKind::QclFit, ExperimentKind::QrcEmulate,
                                               ExperimentKind::QrcCapacity};
constexpr std::array<std::string_view, 5> kKindNames{"qelm-classify", "qelm-surface", "qcl-fit", "qrc-emulate",
                                                     "qrc-capacity"};

template <class E, std::size_t N>
struct EnumTable {
  std::array<E, N> values;
  std::array<std::string_view, N> names;

  std::string_view name(E e) const {
    for (std::size_t i = 0; i < N; ++i)
      if (values[i] == e) return names[i];
    return "?";
  }
  std::optional<E> parse(std::string_view s) const {
    for (std::size_t i = 0; i < N; ++i)
      if (names[i] == s) return values[i];
    return std::nullopt;
  }
  std::string choices() const {
    std::string out;
    for (std::size_t i = 0; i < N; ++i) out += (i ? ", " : "") + std::string(names[i]);
    return out;
  }
};

const EnumTable<qelm::AngleRule, 2> kEncodings{{qelm::AngleRule::Linear, qelm::AngleRule::PairScaled},
                                                {"linear", "pair-scaled"}};
const EnumTable<ChaoticSystem, 4> kSystems{
    {ChaoticSystem::Henon, ChaoticSystem::Lorenz, ChaoticSystem::MackeyGlass, ChaoticSystem::Rossler},
    {"henon", "lorenz", "mackey-glass", "rossler"}};
const EnumTable<reservoir::CapacityTask, 2> kTasks{{reservoir::CapacityTask::Stm, reservoir::CapacityTask::Parity},
                                                   {"stm", "parity"}};
const EnumTable<reservoir::InputKind, 2> kInputs{{reservoir::InputKind::Uniform, reservoir::InputKind::Binary},
                                                 {"uniform", "binary"}};
const EnumTable<reservoir::InitialState, 2> kInitials{
    {reservoir::InitialState::MaximallyMixed, reservoir::InitialState::Zero}, {"maximally-mixed", "zero"}};

// Reads one JSON object, remembering which keys were consumed so that
// leftovers (typos) can be reported.
class Section {
 public:
  Section(const json& obj, std::string prefix) : obj_(obj), prefix_(std::move(prefix)) {
    if (!obj_.is_object()) throw ConfigError(prefix_.empty() ? "<root>" : prefix_, "expected an object");
  }

  std::string key(std::string_view k) const { return prefix_.empty() ? std::string(k) : prefix_ + "." + std::string(k); }

  const json* find(std::string_view k) {
    used_.insert(std::string(k));
    const auto it = obj_.find(std::string(k));
    return it == obj_.end() ? nullptr : &*it;
  }

  const json& require(std::string_view k) {
    const json* v = find(k);
    if (!v) throw ConfigError(key(k), "missing required key");
    return *v;
  }

  void read(std::string_view k, double& out) {
    if (const json* v = find(k)) out = as_double(*v, k);
  }
  void read(std::string_view k, bool& out) {
    if (const json* v = find(k)) {
      if (!v->is_boolean()) throw ConfigError(key(k), "expected true or false");
      out = v->get<bool>();
    }
  }
  void read(std::string_view k, int& out) {
    if (const json* v = find(k)) {
      const std::int64_t i = as_int(*v, k);
      if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max())
        throw ConfigError(key(k), "out of range");
      out = static_cast<int>(i);
    }
  }
  void read(std::string_view k, std::size_t& out) {
    if (const json* v = find(k)) {
      const std::int64_t i = as_int(*v, k);
      if (i < 0) throw ConfigError(key(k), "must be non-negative");
      out = static_cast<std::size_t>(i);
    }
  }
  template <class E, std::size_t N>
  void read(std::string_view k, E& out, const EnumTable<E, N>& table) {
    if (const json* v = find(k)) {
      if (!v->is_string()) throw ConfigError(key(k), "expected one of " + table.choices());
      const auto e = table.parse(v->get<std::string>());
      if (!e) throw ConfigError(key(k), "unknown value '" + v->get<std::string>() + "', expected one of " + table.choices());
      out = *e;
    }
  }

  void finish() const {
    for (const auto& [k, v] : obj_.items())
      if (!used_.count(k)) throw ConfigError(key(k), "unknown key");
  }

 private:
  double as_double(const json& v, std::string_view k) const {
    if (!v.is_number()) throw ConfigError(key(k), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(key(k), "must be finite");
    return d;
  }
  std::int64_t as_int(const json& v, std::string_view k) const {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw ConfigError(key(k), "out of range");
    if (!v.is_number_integer()) throw ConfigError(key(k), "expected an integer");
    return v.get<std::int64_t>();
  }

  const json& obj_;
  std::string prefix_;
  std::set<std::string> used_;
};

void check(bool ok, const std::string& key, const std::string& why) {
  if (!ok) throw ConfigError(key, why);
}

void read_qelm(Section& s, QelmConfig& c, ExperimentKind kind) {
  s.read("n_qubits", c.n_qubits);
  s.read("encoding", c.encoding, kEncodings);
  s.read("sweeps", c.sweeps);
  if (kind == ExperimentKind::QelmClassify) {
    s.read("train", c.train);
    s.read("test", c.test);
    s.read("repeats", c.repeats);
    check(c.train >= 2, "qelm.train", "need at least 2 samples");
    check(c.test >= 1, "qelm.test", "need at least 1 sample");
    check(c.repeats >= 1, "qelm.repeats", "must be at least 1");
  } else {
    s.read("grid", c.grid);
    s.read("qubit", c.qubit);
    check(c.grid >= 2, "qelm.grid", "must be at least 2");
    check(c.qubit >= 0 && c.qubit < c.n_qubits, "qelm.qubit", "must be below n_qubits");
  }
  check(c.n_qubits >= 2 && c.n_qubits <= 12, "qelm.n_qubits", "must be in [2, 12]");
  check(c.sweeps >= 0, "qelm.sweeps", "must be non-negative");
  s.finish();
}

void read_qcl(Section& s, QclConfig& c) {
  s.read("n_qubits", c.n_qubits);
  s.read("layers", c.layers);
  s.read("points", c.points);
  s.read("alpha", c.alpha);
  s.read("iters", c.iters);
  s.read("eps", c.eps);
  s.finish();
  check(c.n_qubits >= 1 && c.n_qubits <= 10, "qcl.n_qubits", "must be in [1, 10]");
  check(c.layers >= 1, "qcl.layers", "must be at least 1");
  check(c.points >= 2, "qcl.points", "need at least 2 points");
  check(c.alpha > 0, "qcl.alpha", "must be positive");
  check(c.iters >= 0, "qcl.iters", "must be non-negative");
  check(c.eps > 0 && c.eps < 3.141592653589793, "qcl.eps", "must lie in (0, pi)");
}

void read_reservoir(Section& s, reservoir::ReservoirConfig& c) {
  s.read("n_qubits", c.n_qubits);
  s.read("j_min", c.j_min);
  s.read("j_max", c.j_max);
  s.read("h", c.h);
  s.read("tau", c.tau);
  s.read("v_nodes", c.v_nodes);
  s.read("input_qubit", c.input_qubit);
  s.read("washout", c.washout);
  s.read("bias", c.bias);
  s.read("initial", c.initial, kInitials);
  s.finish();
  check(c.n_qubits <= 8, "reservoir.n_qubits", "at most 8 qubits are supported by the dense simulator");
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    // "reservoir.<field>: why"
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    throw ConfigError(msg.substr(0, colon), colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
}

void read_emulate(Section& s, EmulateConfig& c) {
  s.read("system", c.system, kSystems);
  s.read("train", c.train);
  s.read("test", c.test);
  s.read("autonomous", c.autonomous);
  s.read("dt", c.dt);
  s.read("transient", c.transient);
  s.read("sample_every", c.sample_every);
  s.read("phase_delay", c.phase_delay);
  s.read("henon_x0", c.henon_x0);
  s.read("henon_x_prev", c.henon_x_prev);
  s.finish();
  check(c.train >= 1, "emulate.train", "must be positive");
  check(c.autonomous >= 1, "emulate.autonomous", "must be positive");
  check(c.dt > 0, "emulate.dt", "must be positive");
  check(c.sample_every >= 1, "emulate.sample_every", "must be at least 1");
  check(c.phase_delay >= 1, "emulate.phase_delay", "must be at least 1");
}

void read_capacity(Section& s, CapacityConfig& c) {
  s.read("task", c.task, kTasks);
  s.read("input", c.input, kInputs);
  s.read("train", c.train);
  s.read("test", c.test);
  s.read("max_delay", c.max_delay);
  s.read("baselines", c.baselines);
  s.read("esn_nodes", c.esn_nodes);
  s.read("esn_spectral_radius", c.esn_spectral_radius);
  s.finish();
  check(c.max_delay >= 0, "capacity.max_delay", "must be non-negative");
  check(c.train > static_cast<std::size_t>(c.max_delay), "capacity.train", "must exceed max_delay");
  check(c.test >= 2, "capacity.test", "need at least 2 samples");
  check(c.esn_nodes >= 1, "capacity.esn_nodes", "must be at least 1");
  check(c.esn_spectral_radius > 0, "capacity.esn_spectral_radius", "must be positive");
}

std::vector<std::string_view> sections_for(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::QelmClassify:
    case ExperimentKind::QelmSurface:
      return {"qelm"};
    case ExperimentKind::QclFit:
      return {"qcl"};
    case ExperimentKind::QrcEmulate:
      return {"reservoir", "emulate"};
    case ExperimentKind::QrcCapacity:
      return {"reservoir", "capacity"};
  }
  return {};
}

const json& section_or_empty(Section& root, std::string_view name) {
  static const json empty = json::object();
  const json* v = root.find(name);
  return v ? *v : empty;
}

}  // namespace

std::span<const ExperimentKind> all_experiment_kinds() { return kKinds; }

std::string_view kind_name(ExperimentKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<ExperimentKind> parse_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKinds.size(); ++i)
    if (kKindNames[i] == name) return kKinds[i];
  return std::nullopt;
}

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
  }
  Section root(doc, "");
  ExperimentConfig cfg;

  const json& kind = root.require("experiment");
  std::string choices;
  for (auto n : kKindNames) choices += (choices.empty() ? "" : ", ") + std::string(n);
  check(kind.is_string(), "experiment", "expected one of " + choices);
  const auto k = parse_kind(kind.get<std::string>());
  check(k.has_value(), "experiment", "unknown experiment '" + kind.get<std::string>() + "', expected one of " + choices);
  cfg.kind = *k;

  const json& seed = root.require("seed");
  check(seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0), "seed",
        "expected a non-negative integer");
  cfg.seed = seed.get<std::uint64_t>();

  const json& out = root.require("output_dir");
  check(out.is_string() && !out.get<std::string>().empty(), "output_dir", "expected a non-empty path");
  cfg.output_dir = out.get<std::string>();

  for (std::string_view name : sections_for(cfg.kind)) {
    Section s(section_or_empty(root, name), std::string(name));
    if (name == "qelm") read_qelm(s, cfg.qelm, cfg.kind);
    if (name == "qcl") read_qcl(s, cfg.qcl);
    if (name == "reservoir") read_reservoir(s, cfg.reservoir);
    if (name == "emulate") read_emulate(s, cfg.emulate);
    if (name == "capacity") read_capacity(s, cfg.capacity);
  }
  root.finish();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), "cannot read config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string echo_config(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = std::string(kind_name(cfg.kind));
  j["seed"] = cfg.seed;
  j["output_dir"] = cfg.output_dir;
  for (std::string_view name : sections_for(cfg.kind)) {
    json s;
    if (name == "qelm") {
      const QelmConfig& c = cfg.qelm;
      s["n_qubits"] = c.n_qubits;
      s["encoding"] = std::string(kEncodings.name(c.encoding));
      s["sweeps"] = c.sweeps;
      if (cfg.kind == ExperimentKind::QelmClassify) {
        s["train"] = c.train;
        s["test"] = c.test;
        s["repeats"] = c.repeats;
      } else {
        s["grid"] = c.grid;
        s["qubit"] = c.qubit;
      }
    } else if (name == "qcl") {
      const QclConfig& c = cfg.qcl;
      s = {{"n_qubits", c.n_qubits}, {"layers", c.layers}, {"points", c.points},
           {"alpha", c.alpha},       {"iters", c.iters},   {"eps", c.eps}};
    } else if (name == "reservoir") {
      const reservoir::ReservoirConfig& c = cfg.reservoir;
      s = {{"n_qubits", c.n_qubits},       {"j_min", c.j_min},     {"j_max", c.j_max},
           {"h", c.h},                     {"tau", c.tau},         {"v_nodes", c.v_nodes},
           {"input_qubit", c.input_qubit}, {"washout", c.washout}, {"bias", c.bias},
           {"initial", std::string(kInitials.name(c.initial))}};
    } else if (name == "emulate") {
      const EmulateConfig& c = cfg.emulate;
      s = {{"system", std::string(kSystems.name(c.system))}, {"train", c.train}, {"test", c.test},
           {"autonomous", c.autonomous},        {"dt", c.dt},       {"transient", c.transient},
           {"sample_every", c.sample_every},    {"phase_delay", c.phase_delay},
           {"henon_x0", c.henon_x0},            {"henon_x_prev", c.henon_x_prev}};
    } else if (name == "capacity") {
      const CapacityConfig& c = cfg.capacity;
      s = {{"task", std::string(kTasks.name(c.task))}, {"input", std::string(kInputs.name(c.input))},
           {"train", c.train},            {"test", c.test},
           {"max_delay", c.max_delay},    {"baselines", c.baselines},
           {"esn_nodes", c.esn_nodes},    {"esn_spectral_radius", c.esn_spectral_radius}};
    }
    j[std::string(name)] = s;
  }
  return j.dump(2);
}

}  // namespace qrc::experiments
