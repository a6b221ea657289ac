#include "memevo/datagen.hpp"

#include <Eigen/QR>
#include <cmath>

#include "memevo/rng.hpp"

namespace memevo {

void SynthSpec::validate() const {
  if (n < 1) throw InvalidInput("SynthSpec: n must be positive");
  if (k < 2 || Eigen::Index(k) > n) throw InvalidInput("SynthSpec: need 2 <= k <= n");
  if (latent_dim_true < 1) throw InvalidInput("SynthSpec: latent_dim_true must be positive");
  if (view_dims.empty()) throw InvalidInput("SynthSpec: at least one view required");
  if (noise_sigma.size() != view_dims.size())
    throw InvalidInput("SynthSpec: noise_sigma length must match view count");
  for (Eigen::Index d : view_dims)
    if (d < latent_dim_true)
      throw InvalidInput("SynthSpec: every view dim must be >= latent_dim_true");
  for (double s : noise_sigma)
    if (s < 0.0) throw InvalidInput("SynthSpec: noise sigma must be nonnegative");
  if (!(cluster_separation > 0.0))
    throw InvalidInput("SynthSpec: cluster_separation must be positive");
  if (cluster_scatter < 0.0) throw InvalidInput("SynthSpec: cluster_scatter must be nonnegative");
}

SynthSpec SynthSpec::stale_early(std::uint64_t seed) {
  SynthSpec spec;
  spec.noise_sigma = {0.8, 0.75, 0.65, 0.65};
  spec.seed = seed;
  return spec;
}

namespace {

// k cluster centers with pairwise distance cluster_separation: mutually
// orthogonal seeded directions scaled by sep/sqrt(2) when the latent space
// allows, random unit directions otherwise.
Matrix make_centers(const SynthSpec& spec, GaussianStream& g) {
  const double scale = spec.cluster_separation / std::sqrt(2.0);
  Matrix dirs(spec.k, spec.latent_dim_true);
  if (Eigen::Index(spec.k) <= spec.latent_dim_true) {
    const Matrix raw = g.matrix(spec.latent_dim_true, spec.k);
    dirs = (Eigen::HouseholderQR<Matrix>(raw).householderQ() *
            Matrix::Identity(spec.latent_dim_true, spec.k))
               .transpose();
  } else {
    dirs = g.matrix(spec.k, spec.latent_dim_true);
    dirs.rowwise().normalize();
  }
  return scale * dirs;
}

Matrix make_projection(Eigen::Index latent, Eigen::Index d, GaussianStream& g) {
  const Matrix raw = g.matrix(d, latent);
  const Matrix q = Eigen::HouseholderQR<Matrix>(raw).householderQ() * Matrix::Identity(d, latent);
  return q.transpose();  // latent x d, orthonormal rows
}

}  // namespace

SynthStream generate_stream(const SynthSpec& spec) {
  spec.validate();
  GaussianStream g(spec.seed);

  const Matrix centers = make_centers(spec, g);
  std::vector<Matrix> projections;
  for (Eigen::Index d : spec.view_dims)
    projections.push_back(make_projection(spec.latent_dim_true, d, g));

  SynthStream stream;
  stream.labels.resize(spec.n);
  Matrix latent(spec.n, spec.latent_dim_true);
  for (Eigen::Index i = 0; i < spec.n; ++i) {
    const int c = int(i % spec.k);  // balanced classes
    stream.labels[i] = c;
    latent.row(i) = centers.row(c) + spec.cluster_scatter * g.matrix(1, spec.latent_dim_true);
  }

  for (std::size_t v = 0; v < spec.view_dims.size(); ++v) {
    Matrix x = latent * projections[v];
    if (spec.noise_sigma[v] > 0.0)
      x += spec.noise_sigma[v] * g.matrix(spec.n, spec.view_dims[v]);
    stream.views.push_back(std::move(x));
  }
  return stream;
}

std::vector<SynthStream> generate_scaling_series(const SynthSpec& base,
                                                 const std::vector<Eigen::Index>& sizes) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw InvalidInput("generate_scaling_series: sizes must ascend");
  std::vector<SynthStream> out;
  for (Eigen::Index n : sizes) {
    SynthSpec spec = base;
    spec.n = n;
    out.push_back(generate_stream(spec));
  }
  return out;
}

}  // namespace memevo
