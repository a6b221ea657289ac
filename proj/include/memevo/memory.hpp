#ifndef MEMEVO_MEMORY_HPP_
#define MEMEVO_MEMORY_HPP_

#include <vector>

#include "memevo/tensor_lab.hpp"

namespace memevo {

// Cognitive forgetting module: ordered archive of finalized per-view
// representations with a power-law forgetting rate lambda.
class MemoryStore {
 public:
  MemoryStore(Eigen::Index n, Eigen::Index m, double lambda);

  // Appends a converged n x m representation; arrival order is preserved.
  void archive_view(const Matrix& z);

  // Normalized weights w_i = (t-i)^{-lambda} / sum_j (t-j)^{-lambda} for
  // i in {1,...,t-1}. Requires t >= 2 and at least t-1 archived views.
  Vector forgetting_weights(int t) const;

  // Weighted historical aggregate Z_hist = sum_i w_i Z_i.
  Matrix aggregate_history(int t) const;

  Eigen::Index n() const { return n_; }
  Eigen::Index m() const { return m_; }
  double lambda() const { return lambda_; }
  std::size_t size() const { return archive_.size(); }
  const Matrix& view(std::size_t i) const { return archive_.at(i); }

 private:
  Eigen::Index n_;
  Eigen::Index m_;
  double lambda_;
  std::vector<Matrix> archive_;
};

}  // namespace memevo

#endif  // MEMEVO_MEMORY_HPP_
