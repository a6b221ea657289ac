#include "memevo/memory.hpp"

#include <cmath>

namespace memevo {

MemoryStore::MemoryStore(Eigen::Index n, Eigen::Index m, double lambda)
    : n_(n), m_(m), lambda_(lambda) {
  if (n <= 0 || m <= 0) throw InvalidInput("MemoryStore: dimensions must be positive");
  if (lambda < 0.0) throw InvalidInput("MemoryStore: lambda must be nonnegative");
}

void MemoryStore::archive_view(const Matrix& z) {
  if (z.rows() != n_ || z.cols() != m_)
    throw InvalidInput("archive_view: representation shape mismatch");
  if (!z.allFinite()) throw InvalidInput("archive_view: non-finite representation");
  archive_.push_back(z);
}

Vector MemoryStore::forgetting_weights(int t) const {
  if (t < 2) throw InvalidInput("forgetting_weights: view index must be >= 2");
  if (archive_.size() < static_cast<std::size_t>(t - 1))
    throw InvalidInput("forgetting_weights: archive shorter than t-1");
  Vector w(t - 1);
  for (int i = 1; i <= t - 1; ++i) w[i - 1] = std::pow(double(t - i), -lambda_);
  w /= w.sum();
  return w;
}

Matrix MemoryStore::aggregate_history(int t) const {
  const Vector w = forgetting_weights(t);
  Matrix z_hist = Matrix::Zero(n_, m_);
  for (int i = 0; i < t - 1; ++i) z_hist += w[i] * archive_[i];
  return z_hist;
}

}  // namespace memevo
