#include "memevo/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>

#include "memevo/io.hpp"

namespace memevo {

namespace {

using nlohmann::json;

json config_echo(const RunConfig& cfg) {
  json j;
  j["experiment"] = cfg.experiment;
  j["k"] = cfg.k;
  j["restarts"] = cfg.restarts;
  j["alpha"] = cfg.solver.alpha;
  j["beta"] = cfg.solver.beta;
  j["lambda"] = cfg.solver.lambda;
  j["latent_dim"] = cfg.solver.latent_dim;
  j["max_iters"] = cfg.solver.max_iters;
  j["tol"] = cfg.solver.tol;
  j["seed"] = cfg.solver.seed;
  if (cfg.synth) {
    j["synth"] = {{"n", cfg.synth->n},
                  {"k", cfg.synth->k},
                  {"latent_dim_true", cfg.synth->latent_dim_true},
                  {"view_dims", cfg.synth->view_dims},
                  {"noise_sigma", cfg.synth->noise_sigma},
                  {"cluster_separation", cfg.synth->cluster_separation},
                  {"seed", cfg.synth->seed}};
  } else {
    std::vector<std::string> paths;
    for (const auto& p : cfg.view_paths) paths.push_back(p.string());
    j["view_paths"] = paths;
  }
  return j;
}

json report_json(int view, const SolveReport& rep) {
  return json{{"view", view},
              {"iterations", rep.iterations},
              {"converged", rep.converged},
              {"recon_residual", rep.recon_residual},
              {"tensor_residual", rep.tensor_residual},
              {"wall_time_s", rep.wall_time_s}};
}

json metrics_json(const MetricsReport& m) {
  return json{{"acc", m.acc},         {"nmi", m.nmi},         {"ari", m.ari},
              {"mean_acc", m.mean_acc}, {"mean_nmi", m.mean_nmi}, {"mean_ari", m.mean_ari}};
}

const LabelVector& require_labels(const std::optional<LabelVector>& labels) {
  if (!labels) throw ConfigError("metrics requested but no labels available");
  return *labels;
}

json stream_record(const StreamResult& result) {
  json views = json::array();
  for (std::size_t t = 0; t < result.reports.size(); ++t)
    views.push_back(report_json(int(t + 1), result.reports[t]));
  return views;
}

json run_arm(const std::vector<Matrix>& views, const std::optional<LabelVector>& labels,
             const RunConfig& cfg, const SolverConfig& solver) {
  const StreamResult result = run_stream(views, solver);
  json arm;
  arm["views"] = stream_record(result);
  if (labels) {
    const MetricsReport m = evaluate(result.final_z, *labels, cfg.k, cfg.restarts, solver.seed);
    arm["metrics"] = metrics_json(m);
  }
  return arm;
}

json experiment_run(const RunConfig& cfg, const std::vector<Matrix>& views,
                    const std::optional<LabelVector>& labels) {
  const StreamResult result = run_stream(views, cfg.solver);
  json j;
  j["views"] = stream_record(result);
  if (labels) {
    const MetricsReport m =
        evaluate(result.final_z, *labels, cfg.k, cfg.restarts, cfg.solver.seed);
    j["metrics"] = metrics_json(m);
  }
  save_matrix(cfg.output_dir / "z_final.txt", result.final_z);
  return j;
}

json experiment_ablation(const RunConfig& cfg, const std::vector<Matrix>& views,
                         const std::optional<LabelVector>& labels) {
  require_labels(labels);
  struct Variant {
    const char* name;
    double alpha, beta, lambda;
  };
  const Variant variants[] = {
      {"recon_only", 0.0, 0.0, 0.0},
      {"recon_vam", cfg.solver.alpha, 0.0, 0.0},
      {"recon_kcm", 0.0, cfg.solver.beta, 0.0},
      {"full_wo_cfm", cfg.solver.alpha, cfg.solver.beta, 0.0},
      {"full", cfg.solver.alpha, cfg.solver.beta, cfg.solver.lambda},
  };
  json arms = json::array();
  for (const Variant& v : variants) {
    SolverConfig solver = cfg.solver;
    solver.alpha = v.alpha;
    solver.beta = v.beta;
    solver.lambda = v.lambda;
    json arm = run_arm(views, labels, cfg, solver);
    arm["name"] = v.name;
    arm["alpha"] = v.alpha;
    arm["beta"] = v.beta;
    arm["lambda"] = v.lambda;
    arms.push_back(std::move(arm));
  }
  return json{{"arms", arms}};
}

json experiment_lambda_sweep(const RunConfig& cfg, const std::vector<Matrix>& views,
                             const std::optional<LabelVector>& labels) {
  require_labels(labels);
  json points = json::array();
  for (double lambda : {0.0, 1.0, 1.5, 2.0}) {
    SolverConfig solver = cfg.solver;
    solver.lambda = lambda;
    json point = run_arm(views, labels, cfg, solver);
    point["lambda"] = lambda;
    point["uniform_averaging_baseline"] = (lambda == 0.0);
    points.push_back(std::move(point));
  }
  return json{{"sweep", points}};
}

json experiment_view_curve(const RunConfig& cfg, const std::vector<Matrix>& views,
                           const std::optional<LabelVector>& labels) {
  const LabelVector& truth = require_labels(labels);
  const StreamResult result = run_stream(views, cfg.solver);
  json curve = json::array();
  for (std::size_t t = 0; t < result.per_view_z.size(); ++t) {
    const MetricsReport m =
        evaluate(result.per_view_z[t], truth, cfg.k, cfg.restarts, cfg.solver.seed);
    json point = report_json(int(t + 1), result.reports[t]);
    point["metrics"] = metrics_json(m);
    curve.push_back(std::move(point));
  }
  return json{{"curve", curve}};
}

json experiment_scaling(const RunConfig& cfg) {
  SynthSpec base = cfg.synth.value_or(SynthSpec{});
  base.view_dims = {30, 30};
  base.noise_sigma = {0.3, 0.3};

  SolverConfig solver = cfg.solver;
  solver.latent_dim = 20;
  solver.max_iters = 30;  // fixed iteration cap for comparable timings
  solver.tol = 1e-15;

  const std::vector<Eigen::Index> sizes = {1000, 2000, 4000, 8000};
  const auto streams = generate_scaling_series(base, sizes);

  json points = json::array();
  std::vector<double> log_n, log_t;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    // warm-up pass, then best of five repetitions per size to shield the
    // regression from scheduler/cache jitter
    run_stream(streams[i].views, solver);
    double per_view = std::numeric_limits<double>::infinity();
    for (int rep_run = 0; rep_run < 5; ++rep_run) {
      const StreamResult result = run_stream(streams[i].views, solver);
      double total = 0.0;
      for (const SolveReport& rep : result.reports) total += rep.wall_time_s;
      per_view = std::min(per_view, total / double(result.reports.size()));
    }
    points.push_back(json{{"n", sizes[i]}, {"per_view_wall_time_s", per_view}});
    log_n.push_back(std::log(double(sizes[i])));
    log_t.push_back(std::log(per_view));
  }

  // least-squares slope of log time vs log n
  const double N = double(log_n.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    sx += log_n[i];
    sy += log_t[i];
    sxx += log_n[i] * log_n[i];
    sxy += log_n[i] * log_t[i];
  }
  const double slope = (N * sxy - sx * sy) / (N * sxx - sx * sx);
  return json{{"points", points}, {"loglog_slope", slope}};
}

}  // namespace

void RunConfig::validate() const {
  if (view_paths.empty() == !synth.has_value())
    throw ConfigError("exactly one of view files or a synthetic spec must be given");
  if (k < 2) throw ConfigError("k must be >= 2");
  if (restarts < 1) throw ConfigError("restarts must be >= 1");
  const bool known = experiment == "run" || experiment == "ablation" ||
                     experiment == "lambda-sweep" || experiment == "view-curve" ||
                     experiment == "scaling";
  if (!known) throw ConfigError("unknown experiment '" + experiment + "'");
}

std::pair<std::vector<Matrix>, std::optional<LabelVector>> resolve_stream(const RunConfig& cfg) {
  if (cfg.synth) {
    SynthStream stream = generate_stream(*cfg.synth);
    return {std::move(stream.views), std::move(stream.labels)};
  }
  std::vector<Matrix> views;
  for (const auto& path : cfg.view_paths) views.push_back(load_view(path));
  std::optional<LabelVector> labels;
  if (cfg.labels_path) labels = load_labels(*cfg.labels_path);
  return {std::move(views), std::move(labels)};
}

nlohmann::json run_experiment(const RunConfig& cfg) {
  cfg.validate();
  std::filesystem::create_directories(cfg.output_dir);

  json manifest;
  manifest["config"] = config_echo(cfg);

  if (cfg.experiment == "scaling") {
    manifest["scaling"] = experiment_scaling(cfg);
  } else {
    auto [views, labels] = resolve_stream(cfg);
    if (cfg.experiment == "run") {
      manifest.update(experiment_run(cfg, views, labels));
    } else if (cfg.experiment == "ablation") {
      manifest.update(experiment_ablation(cfg, views, labels));
    } else if (cfg.experiment == "lambda-sweep") {
      manifest.update(experiment_lambda_sweep(cfg, views, labels));
    } else {
      manifest.update(experiment_view_curve(cfg, views, labels));
    }
  }

  std::ofstream out(cfg.output_dir / "manifest.json");
  if (!out) throw ConfigError("cannot write manifest under '" + cfg.output_dir.string() + "'");
  out << manifest.dump(2) << '\n';
  return manifest;
}

}  // namespace memevo
