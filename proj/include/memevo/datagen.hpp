#ifndef MEMEVO_DATAGEN_HPP_
#define MEMEVO_DATAGEN_HPP_

#include <cstdint>
#include <vector>

#include "memevo/eval.hpp"
#include "memevo/tensor_lab.hpp"

namespace memevo {

// Planted multi-view stream: k Gaussian clusters in a shared latent space,
// each view a seeded row-orthonormal projection plus per-view noise.
struct SynthSpec {
  Eigen::Index n = 300;
  int k = 3;
  Eigen::Index latent_dim_true = 5;
  std::vector<Eigen::Index> view_dims = {20, 30, 25, 40};
  std::vector<double> noise_sigma = {0.3, 0.3, 0.3, 0.3};
  double cluster_separation = 4.0;
  double cluster_scatter = 0.6;  // within-cluster latent std dev
  std::uint64_t seed = 0;

  void validate() const;

  // Noisy-early-views variant: the early views carry heavy noise while the
  // recent ones stay clean, so downweighting stale history pays off.
  static SynthSpec stale_early(std::uint64_t seed);
};

struct SynthStream {
  std::vector<Matrix> views;
  LabelVector labels;
};

SynthStream generate_stream(const SynthSpec& spec);

// Same planted structure at a range of sample counts (for runtime scaling).
std::vector<SynthStream> generate_scaling_series(const SynthSpec& base,
                                                 const std::vector<Eigen::Index>& sizes);

}  // namespace memevo

#endif  // MEMEVO_DATAGEN_HPP_
