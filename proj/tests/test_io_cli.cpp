#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "memevo/experiments.hpp"
#include "memevo/io.hpp"
#include "memevo/rng.hpp"

using namespace memevo;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("memevo_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

RunConfig small_synth_config(const std::string& experiment, const fs::path& out) {
  RunConfig cfg;
  SynthSpec spec;
  spec.n = 90;
  spec.view_dims = {10, 12};
  spec.noise_sigma = {0.3, 0.3};
  spec.seed = 1;
  cfg.synth = spec;
  cfg.solver.latent_dim = 8;
  cfg.solver.seed = 1;
  cfg.restarts = 3;
  cfg.experiment = experiment;
  cfg.output_dir = out;
  return cfg;
}

}  // namespace

TEST_CASE("load_view parses delimited tables") {
  const fs::path dir = temp_dir("load");
  write_file(dir / "ok.txt", "1 2\n3,4\n5\t6\n");
  const Matrix m = load_view(dir / "ok.txt");
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(2, 1) == 6.0);

  write_file(dir / "ragged.txt", "1 2\n3 4 5\n");
  try {
    load_view(dir / "ragged.txt");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  write_file(dir / "token.txt", "1 2\n3 oops\n");
  CHECK_THROWS_AS(load_view(dir / "token.txt"), ParseError);
  CHECK_THROWS_AS(load_view(dir / "missing.txt"), ParseError);
}

TEST_CASE("matrix and label round trips are exact") {
  const fs::path dir = temp_dir("roundtrip");
  GaussianStream g(5);
  const Matrix m = g.matrix(7, 4);
  save_matrix(dir / "m.txt", m);
  CHECK((load_view(dir / "m.txt") - m).cwiseAbs().maxCoeff() <= 1e-12);

  const LabelVector labels = {0, 2, 1, 1, 0};
  save_labels(dir / "l.txt", labels);
  CHECK(load_labels(dir / "l.txt") == labels);

  write_file(dir / "badlabel.txt", "0\n1.5\n");
  CHECK_THROWS_AS(load_labels(dir / "badlabel.txt"), ParseError);
}

TEST_CASE("run experiment writes a manifest and a reloadable embedding") {
  const fs::path dir = temp_dir("run");
  const RunConfig cfg = small_synth_config("run", dir);
  const nlohmann::json manifest = run_experiment(cfg);

  CHECK(manifest["views"].size() == 2);
  CHECK(manifest["views"][0]["converged"].get<bool>());
  CHECK(manifest.contains("metrics"));
  CHECK(fs::exists(dir / "manifest.json"));

  // exported embedding reloads to the matrix the metrics were computed on
  const Matrix z = load_view(dir / "z_final.txt");
  const auto [views, labels] = resolve_stream(cfg);
  const StreamResult result = run_stream(views, cfg.solver);
  CHECK((z - result.final_z).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("identical configs give identical manifests") {
  const auto m1 = run_experiment(small_synth_config("run", temp_dir("rep1")));
  const auto m2 = run_experiment(small_synth_config("run", temp_dir("rep2")));
  CHECK(std::abs(m1["metrics"]["mean_acc"].get<double>() -
                 m2["metrics"]["mean_acc"].get<double>()) <= 1e-10);
  CHECK(std::abs(m1["metrics"]["mean_nmi"].get<double>() -
                 m2["metrics"]["mean_nmi"].get<double>()) <= 1e-10);
}

TEST_CASE("lambda sweep flags the uniform-averaging baseline") {
  const nlohmann::json manifest =
      run_experiment(small_synth_config("lambda-sweep", temp_dir("sweep")));
  const auto& sweep = manifest["sweep"];
  CHECK(sweep.size() == 4);
  CHECK(sweep[0]["lambda"].get<double>() == 0.0);
  CHECK(sweep[0]["uniform_averaging_baseline"].get<bool>());
  for (std::size_t i = 1; i < sweep.size(); ++i)
    CHECK_FALSE(sweep[i]["uniform_averaging_baseline"].get<bool>());
}

TEST_CASE("ablation manifest carries all five arms") {
  const nlohmann::json manifest =
      run_experiment(small_synth_config("ablation", temp_dir("ablation")));
  const auto& arms = manifest["arms"];
  REQUIRE(arms.size() == 5);
  CHECK(arms[0]["name"] == "recon_only");
  CHECK(arms[4]["name"] == "full");
  for (const auto& arm : arms) CHECK(arm["metrics"]["mean_acc"].get<double>() >= 0.0);
}

TEST_CASE("view curve on a single view equals the plain run") {
  RunConfig curve_cfg = small_synth_config("view-curve", temp_dir("curve1"));
  curve_cfg.synth->view_dims = {10};
  curve_cfg.synth->noise_sigma = {0.3};
  const nlohmann::json curve = run_experiment(curve_cfg);
  REQUIRE(curve["curve"].size() == 1);

  RunConfig run_cfg = small_synth_config("run", temp_dir("curve2"));
  run_cfg.synth->view_dims = {10};
  run_cfg.synth->noise_sigma = {0.3};
  const nlohmann::json run = run_experiment(run_cfg);
  CHECK(curve["curve"][0]["metrics"]["mean_acc"].get<double>() ==
        doctest::Approx(run["metrics"]["mean_acc"].get<double>()).epsilon(1e-12));
}

TEST_CASE("config validation catches bad setups") {
  RunConfig none;
  CHECK_THROWS_AS(none.validate(), ConfigError);

  RunConfig both = small_synth_config("run", "out");
  both.view_paths = {"a.txt"};
  CHECK_THROWS_AS(both.validate(), ConfigError);

  RunConfig bad_exp = small_synth_config("frobnicate", "out");
  CHECK_THROWS_AS(bad_exp.validate(), ConfigError);

  // metrics without labels: file-backed views, no label file
  const fs::path dir = temp_dir("nolabels");
  write_file(dir / "v.txt", "1 2 3 4 5 6 7 8 9 10\n" );
  RunConfig cfg;
  cfg.view_paths = {dir / "v.txt"};
  cfg.experiment = "ablation";
  cfg.output_dir = dir;
  cfg.solver.latent_dim = 1;
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}
