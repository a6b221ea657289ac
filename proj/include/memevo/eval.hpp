#ifndef MEMEVO_EVAL_HPP_
#define MEMEVO_EVAL_HPP_

#include <cstdint>
#include <vector>

#include "memevo/tensor_lab.hpp"

namespace memevo {

using LabelVector = std::vector<int>;

struct MetricsReport {
  std::vector<double> acc;
  std::vector<double> nmi;
  std::vector<double> ari;
  double mean_acc = 0.0;
  double mean_nmi = 0.0;
  double mean_ari = 0.0;
};

// Lloyd's algorithm with k-means++ seeding; one labeling per restart.
std::vector<LabelVector> kmeans(const Matrix& z, int k, int restarts, std::uint64_t seed);

// Clustering accuracy under the best one-to-one cluster-to-class assignment
// (Hungarian matching on the contingency table).
double accuracy(const LabelVector& pred, const LabelVector& truth);

// Mutual information normalized by the arithmetic mean of the two entropies.
double nmi(const LabelVector& pred, const LabelVector& truth);

// Adjusted Rand index.
double ari(const LabelVector& pred, const LabelVector& truth);

// Clusters z and scores every restart against the ground truth.
MetricsReport evaluate(const Matrix& z, const LabelVector& truth, int k, int restarts,
                       std::uint64_t seed);

}  // namespace memevo

#endif  // MEMEVO_EVAL_HPP_
