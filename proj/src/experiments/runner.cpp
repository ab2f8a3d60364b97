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

#include "qrc/experiments/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <system_error>

#include "json.hpp"
#include "qrc/dynamics/esn.hpp"
#include "qrc/dynamics/normalize.hpp"
#include "qrc/experiments/csv.hpp"
#include "qrc/experiments/seeds.hpp"
#include "qrc/qcl/qcl.hpp"
#include "qrc/qelm/qelm.hpp"
#include "qrc/random.hpp"
#include "qrc/reservoir/capacity.hpp"
#include "qrc/reservoir/emulation.hpp"

#ifndef QRC_VERSION
#define QRC_VERSION "0.0.0"
#endif

namespace qrc::experiments {

using json = nlohmann::ordered_json;
using Field = CsvWriter::Field;

namespace {

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }
Eigen::Index i0(std::size_t v) { return static_cast<Eigen::Index>(v); }

class Artifacts {
 public:
  explicit Artifacts(std::filesystem::path dir) : dir_(std::move(dir)) {}

  CsvWriter open(const std::string& name, std::vector<std::string> header) {
    files_.push_back(name);
    return CsvWriter(dir_ / name, std::move(header));
  }
  void metric(std::string name, double value) { metrics_.emplace_back(std::move(name), value); }

  const std::filesystem::path& dir() const { return dir_; }
  std::vector<std::string>& files() { return files_; }
  std::vector<std::pair<std::string, double>>& metrics() { return metrics_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> files_;
  std::vector<std::pair<std::string, double>> metrics_;
};

void write_dataset(Artifacts& a, const std::string& name, const qelm::LabeledDataset& d) {
  CsvWriter w = a.open(name, {"x0", "x1", "label"});
  for (std::size_t i = 0; i < d.size(); ++i) w.row({d.inputs[i][0], d.inputs[i][1], std::int64_t{d.labels[i]}});
  w.close();
}

void run_qelm_classify(const ExperimentConfig& cfg, Artifacts& a) {
  const QelmConfig& c = cfg.qelm;
  const SubSeeds seeds = seed_everything(cfg.seed);
  // One dataset stream: the training set first, then the test set.
  const qelm::LabeledDataset all = qelm::generate_circle_dataset(c.train + c.test, seeds.dataset);
  qelm::LabeledDataset train, test;
  train.inputs.assign(all.inputs.begin(), all.inputs.begin() + i64(c.train));
  train.labels.assign(all.labels.begin(), all.labels.begin() + i64(c.train));
  test.inputs.assign(all.inputs.begin() + i64(c.train), all.inputs.end());
  test.labels.assign(all.labels.begin() + i64(c.train), all.labels.end());
  write_dataset(a, "train.csv", train);
  write_dataset(a, "test.csv", test);

  qelm::EncodingSpec spec;
  spec.n_qubits = c.n_qubits;
  spec.rule = c.encoding;

  CsvWriter acc = a.open("accuracy.csv", {"seed", "n_qubits", "circuit_kind", "train_acc", "test_acc"});
  std::optional<qelm::Classifier> best;
  double best_test = -1.0;
  for (int r = 0; r < c.repeats; ++r) {
    // Repeat r uses the circuit stream of global seed + r, so each row can be
    // re-run on its own.
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(r);
    qelm::Classifier model =
        qelm::train_qelm(train, qelm::RandomCircuit(c.n_qubits, seed_everything(seed).circuit, c.sweeps), spec);
    const double train_acc = qelm::evaluate_qelm(train, model);
    const double test_acc = qelm::evaluate_qelm(test, model);
    acc.row({static_cast<std::int64_t>(seed), std::int64_t{c.n_qubits}, std::string("random"), train_acc, test_acc});
    if (test_acc > best_test) {
      best_test = test_acc;
      best = std::move(model);
    }
  }
  const qelm::Classifier plain = qelm::train_qelm(train, qelm::RandomCircuit::identity(c.n_qubits), spec);
  const double id_train = qelm::evaluate_qelm(train, plain), id_test = qelm::evaluate_qelm(test, plain);
  acc.row({static_cast<std::int64_t>(cfg.seed), std::int64_t{c.n_qubits}, std::string("identity"), id_train, id_test});
  const regression::ReadoutWeights lin = qelm::train_linear_baseline(train);
  const double lin_train = qelm::evaluate_linear_baseline(train, lin);
  const double lin_test = qelm::evaluate_linear_baseline(test, lin);
  acc.row({static_cast<std::int64_t>(cfg.seed), std::int64_t{0}, std::string("linear"), lin_train, lin_test});
  acc.close();

  CsvWriter pred = a.open("predictions.csv", {"x0", "x1", "label", "readout", "prediction"});
  const regression::Vector readout = best->predict(test);
  for (std::size_t i = 0; i < test.size(); ++i)
    pred.row({test.inputs[i][0], test.inputs[i][1], std::int64_t{test.labels[i]}, readout[i0(i)],
              std::int64_t{readout[i0(i)] > 0.5 ? 1 : 0}});
  pred.close();

  a.metric("best_test_accuracy", best_test);
  a.metric("identity_test_accuracy", id_test);
  a.metric("linear_test_accuracy", lin_test);
}

void run_qelm_surface(const ExperimentConfig& cfg, Artifacts& a) {
  const QelmConfig& c = cfg.qelm;
  const qelm::RandomCircuit circuit(c.n_qubits, seed_everything(cfg.seed).circuit, c.sweeps);
  qelm::EncodingSpec spec;
  spec.n_qubits = c.n_qubits;
  spec.rule = c.encoding;
  CsvWriter w = a.open("surface.csv", {"x0", "x1", "value"});
  double lo = 1.0, hi = -1.0;
  for (int i = 0; i < c.grid; ++i) {
    for (int j = 0; j < c.grid; ++j) {
      const qelm::Input x{static_cast<double>(i) / (c.grid - 1), static_cast<double>(j) / (c.grid - 1)};
      const double v = qelm::z_features(x, circuit, spec)[static_cast<std::size_t>(c.qubit)];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      w.row({x[0], x[1], v});
    }
  }
  w.close();
  a.metric("surface_min", lo);
  a.metric("surface_max", hi);
}

void run_qcl_fit(const ExperimentConfig& cfg, Artifacts& a) {
  const QclConfig& c = cfg.qcl;
  const auto target = [](double x) { return (2 * x - 1) * (2 * x - 1); };
  qcl::Dataset data;
  for (std::size_t j = 0; j < c.points; ++j) {
    const double x = static_cast<double>(j) / static_cast<double>(c.points - 1);
    data.push_back({{x, x}, target(x)});
  }
  CsvWriter tw = a.open("train.csv", {"x", "y"});
  for (const qcl::Sample& s : data) tw.row({s.x[0], s.y});
  tw.close();

  qelm::EncodingSpec spec;
  spec.n_qubits = c.n_qubits;
  const qcl::Model model{qcl::layered_ansatz(c.n_qubits, c.layers), quantum::Observable::pauli_z(c.n_qubits, 0), spec};
  Rng rng(seed_everything(cfg.seed).circuit);
  const std::vector<double> init = qcl::random_params(model.circuit.n_params(), rng);
  qcl::TrainOptions opts;
  opts.alpha = c.alpha;
  opts.iters = c.iters;
  opts.eps = c.eps;
  const qcl::TrainTrace trace = qcl::train(model, data, init, opts);

  CsvWriter trw = a.open("trace.csv", {"iter", "loss", "grad_norm"});
  for (const qcl::TraceRow& r : trace.rows) trw.row({std::int64_t{r.iter}, r.loss, r.grad_norm});
  trw.close();

  CsvWriter fw = a.open("fit.csv", {"x", "target", "prediction"});
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    fw.row({x, target(x), qcl::forward(model, {x, x}, trace.final_params)});
  }
  fw.close();

  const double n = static_cast<double>(c.points);
  a.metric("initial_mse", trace.initial_loss() / n);
  a.metric("final_mse", trace.final_loss() / n);
  a.metric("diverged", trace.diverged ? 1.0 : 0.0);
}

void write_capacity(Artifacts& a, const std::string& name, const reservoir::CapacityResult& r) {
  CsvWriter w = a.open(name, {"delay", "capacity"});
  for (std::size_t d = 0; d < r.per_delay.size(); ++d) w.row({i64(d), r.per_delay[d]});
  w.close();
}

void run_qrc_capacity(const ExperimentConfig& cfg, Artifacts& a) {
  const SubSeeds seeds = seed_everything(cfg.seed);
  reservoir::ReservoirConfig rc = cfg.reservoir;
  rc.seed = seeds.couplings;
  const CapacityConfig& c = cfg.capacity;
  reservoir::CapacityProtocol p;
  p.washout = rc.washout;
  p.train = c.train;
  p.test = c.test;
  p.max_delay = c.max_delay;
  p.input = c.input;
  p.input_seed = seeds.dataset;
  p.validate();

  const reservoir::CapacityResult q = reservoir::stm_parity_capacity(reservoir::Reservoir(rc), c.task, p);
  write_capacity(a, "capacity.csv", q);
  a.metric("total_capacity", q.total);
  if (c.baselines) {
    const std::vector<double> u = reservoir::capacity_inputs(p);
    dynamics::EsnConfig ec;
    ec.nodes = c.esn_nodes;
    ec.spectral_radius = c.esn_spectral_radius;
    ec.seed = seeds.esn;
    const reservoir::CapacityResult esn =
        reservoir::capacity_from_features(dynamics::EchoStateNetwork(ec).run(u), u, c.task, p);
    write_capacity(a, "capacity_esn.csv", esn);
    const reservoir::CapacityResult lin =
        reservoir::capacity_from_features(reservoir::memoryless_features(u), u, c.task, p);
    write_capacity(a, "capacity_memoryless.csv", lin);
    a.metric("esn_total_capacity", esn.total);
    a.metric("memoryless_total_capacity", lin.total);
  }
}

void run_qrc_emulate(const ExperimentConfig& cfg, Artifacts& a) {
  const EmulateConfig& c = cfg.emulate;
  reservoir::ReservoirConfig rc = cfg.reservoir;
  rc.seed = seed_everything(cfg.seed).couplings;
  reservoir::EmulationProtocol p;
  p.washout = rc.washout;
  p.train = c.train;
  p.test = c.test;
  p.autonomous = c.autonomous;

  const dynamics::TimeSeries raw = generate_series(c, p.required_length());
  CsvWriter sw = a.open("series.csv", {"step", "t", "value"});
  for (std::size_t k = 0; k < raw.values.size(); ++k)
    sw.row({i64(k), raw.t.empty() ? Field{CsvWriter::Empty{}} : Field{raw.t[k]}, raw.values[k]});
  sw.close();

  // Normalization is fitted on the teacher segment only.
  const dynamics::Normalized norm = dynamics::normalize_unit_interval(raw.values, p.teacher_length() + 1);
  const std::vector<double>& u = norm.values;
  const reservoir::EmulationResult res = reservoir::emulate(reservoir::Reservoir(rc), u, p);

  CsvWriter tw = a.open("trajectory.csv", {"step", "input", "target", "prediction", "mode"});
  const std::size_t n = p.teacher_length();
  for (std::size_t k = 0; k < n; ++k)
    tw.row({i64(k), u[k], u[k + 1], res.teacher_predictions[k], std::string("teacher")});
  const reservoir::AutonomousRun& run = res.closed_loop;
  for (std::size_t k = 0; k < run.outputs.size(); ++k)
    tw.row({i64(n + k), run.inputs[k], u[n + k + 1], run.outputs[k], std::string("autonomous")});
  tw.close();

  const std::size_t d = static_cast<std::size_t>(c.phase_delay);
  CsvWriter pw = a.open("phase.csv", {"step", "prediction", "prediction_delayed", "target", "target_delayed"});
  for (std::size_t k = d; k < run.outputs.size(); ++k)
    pw.row({i64(n + k), run.outputs[k], run.outputs[k - d], u[n + k + 1], u[n + k + 1 - d]});
  pw.close();

  a.metric("train_nmse", res.train_nmse);
  if (p.test > 0) a.metric("test_nmse", res.test_nmse);
  a.metric("bounded_steps", static_cast<double>(res.bounded_steps));
  a.metric("closed_loop_nrmse", res.closed_loop_nrmse);
  a.metric("clamped_inputs", static_cast<double>(norm.clamped));
  a.metric("diverged", run.diverged ? 1.0 : 0.0);
}

std::string error_line(std::string_view kind, std::string_view message, std::string_view key = {}) {
  json j;
  j["error"] = std::string(kind);
  if (!key.empty()) j["key"] = std::string(key);
  j["message"] = std::string(message);
  return j.dump();
}

}  // namespace

std::string library_version() { return QRC_VERSION; }

double RunSummary::metric(const std::string& name) const {
  for (const auto& [k, v] : metrics)
    if (k == name) return v;
  throw InvalidArgument("no metric named " + name);
}

std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg) {
  const std::filesystem::path dir(cfg.output_dir);
  if (dir.is_absolute()) return dir;
  const char* root = std::getenv(kOutputRootEnv);
  if (root && *root) return std::filesystem::path(root) / dir;
  return dir;
}

dynamics::TimeSeries generate_series(const EmulateConfig& c, std::size_t length) {
  if (c.system == ChaoticSystem::Henon) {
    dynamics::TimeSeries s = dynamics::henon_series(c.transient + length, c.henon_x0, c.henon_x_prev);
    if (s.truncated) throw DivergenceError("henon series escaped", static_cast<long>(s.values.size()));
    s.values.erase(s.values.begin(), s.values.begin() + i64(c.transient));
    return s;
  }
  dynamics::SamplingOptions o;
  o.length = length;
  o.dt = c.dt;
  o.transient = c.transient;
  o.sample_every = c.sample_every;
  switch (c.system) {
    case ChaoticSystem::Lorenz:
      return dynamics::lorenz_series(o);
    case ChaoticSystem::Rossler:
      return dynamics::rossler_series(o);
    default:
      return dynamics::mackey_glass_series(o);
  }
}

RunSummary run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  const auto t0 = std::chrono::steady_clock::now();
  Artifacts a(out_dir);
  switch (cfg.kind) {
    case ExperimentKind::QelmClassify:
      run_qelm_classify(cfg, a);
      break;
    case ExperimentKind::QelmSurface:
      run_qelm_surface(cfg, a);
      break;
    case ExperimentKind::QclFit:
      run_qcl_fit(cfg, a);
      break;
    case ExperimentKind::QrcEmulate:
      run_qrc_emulate(cfg, a);
      break;
    case ExperimentKind::QrcCapacity:
      run_qrc_capacity(cfg, a);
      break;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const SubSeeds s = seed_everything(cfg.seed);
  json m;
  m["tool"] = "qrc";
  m["version"] = library_version();
  m["experiment"] = std::string(kind_name(cfg.kind));
  m["seed"] = cfg.seed;
  m["sub_seeds"] = {{"circuit", s.circuit}, {"couplings", s.couplings}, {"dataset", s.dataset}, {"esn", s.esn}};
  m["config"] = json::parse(echo_config(cfg));
  m["files"] = a.files();
  json metrics = json::object();
  for (const auto& [k, v] : a.metrics()) metrics[k] = std::isfinite(v) ? json(v) : json(format_double(v));
  m["metrics"] = metrics;
  m["wall_time_seconds"] = wall;

  std::ofstream out(out_dir / "manifest.json", std::ios::binary | std::ios::trunc);
  out << m.dump(2) << "\n";
  out.close();
  if (!out) throw IoError("cannot write " + (out_dir / "manifest.json").string());

  RunSummary summary{out_dir, a.files(), a.metrics()};
  summary.files.push_back("manifest.json");
  return summary;
}

int validate_command(const std::filesystem::path& config_path, std::ostream& out, std::ostream& err) {
  try {
    const ExperimentConfig cfg = load_config(config_path);
    out << echo_config(cfg) << "\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    err << error_line("invalid_config", e.what(), e.key()) << "\n";
    return kExitInvalidConfig;
  }
}

int run_command(const std::filesystem::path& config_path, std::ostream& out, std::ostream& err) {
  try {
    const ExperimentConfig cfg = load_config(config_path);
    const RunSummary s = run_experiment(cfg, resolve_output_dir(cfg));
    for (const std::string& f : s.files) out << (s.output_dir / f).string() << "\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    err << error_line("invalid_config", e.what(), e.key()) << "\n";
    return kExitInvalidConfig;
  } catch (const DivergenceError& e) {
    err << error_line("divergence", e.what()) << "\n";
    return kExitDivergence;
  } catch (const IoError& e) {
    err << error_line("io", e.what()) << "\n";
    return kExitIo;
  } catch (const InvalidArgument& e) {
    // Parameter combinations only detected once the modules run.
    err << error_line("invalid_config", e.what()) << "\n";
    return kExitInvalidConfig;
  }
}

int list_command(std::ostream& out) {
  for (ExperimentKind k : all_experiment_kinds()) out << kind_name(k) << "\n";
  return kExitOk;
}

}  // namespace qrc::experiments
