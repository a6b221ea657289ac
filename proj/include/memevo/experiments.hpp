#ifndef MEMEVO_EXPERIMENTS_HPP_
#define MEMEVO_EXPERIMENTS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "memevo/datagen.hpp"
#include "memevo/solver.hpp"

namespace memevo {

struct RunConfig {
  std::vector<std::filesystem::path> view_paths;  // mutually exclusive with synth
  std::optional<SynthSpec> synth;
  std::optional<std::filesystem::path> labels_path;
  SolverConfig solver;
  int k = 3;
  int restarts = 10;
  std::filesystem::path output_dir = "out";
  std::string experiment = "run";  // run | ablation | lambda-sweep | view-curve | scaling

  void validate() const;
};

// Loads view files or generates the synthetic stream, plus labels when available.
std::pair<std::vector<Matrix>, std::optional<LabelVector>> resolve_stream(const RunConfig& cfg);

// Dispatches the requested experiment, writes manifest.json (and exported
// embeddings) under output_dir, and returns the manifest.
nlohmann::json run_experiment(const RunConfig& cfg);

}  // namespace memevo

#endif  // MEMEVO_EXPERIMENTS_HPP_
