#include "memevo/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace memevo {

namespace {

int nearest_center(const Matrix& centers, const Eigen::RowVectorXd& point) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < centers.rows(); ++c) {
    const double d = (centers.row(c) - point).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = int(c);
    }
  }
  return best;
}

LabelVector kmeans_single_init(const Matrix& z, int k, std::uint64_t seed, double& wcss) {
  const Eigen::Index n = z.rows();
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // k-means++ seeding
  Matrix centers(k, z.cols());
  centers.row(0) = z.row(Eigen::Index(unit(gen) * double(n)) % n);
  Eigen::VectorXd dist2 = (z.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = dist2.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      double target = unit(gen) * total;
      for (; pick < n - 1; ++pick) {
        target -= dist2[pick];
        if (target <= 0.0) break;
      }
    } else {
      pick = Eigen::Index(unit(gen) * double(n)) % n;
    }
    centers.row(c) = z.row(pick);
    dist2 = dist2.cwiseMin((z.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }

  LabelVector labels(n, 0);
  for (int iter = 0; iter < 300; ++iter) {
    for (Eigen::Index i = 0; i < n; ++i) labels[i] = nearest_center(centers, z.row(i));

    Matrix next = Matrix::Zero(k, z.cols());
    std::vector<Eigen::Index> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      next.row(labels[i]) += z.row(i);
      ++counts[labels[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        next.row(c) /= double(counts[c]);
      } else {
        // revive an empty cluster with the point farthest from its center
        Eigen::Index far_i = 0;
        double far_d = -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
          const double d = (z.row(i) - centers.row(labels[i])).squaredNorm();
          if (d > far_d) {
            far_d = d;
            far_i = i;
          }
        }
        next.row(c) = z.row(far_i);
      }
    }
    const double shift = (next - centers).rowwise().norm().maxCoeff();
    centers = next;
    if (shift < 1e-6) break;
  }
  wcss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    labels[i] = nearest_center(centers, z.row(i));
    wcss += (z.row(i) - centers.row(labels[i])).squaredNorm();
  }
  return labels;
}

// one restart = best of several k-means++ initializations by within-cluster
// sum of squares (guards against the occasional degenerate seeding)
LabelVector kmeans_once(const Matrix& z, int k, std::uint64_t seed) {
  constexpr int kInits = 10;
  LabelVector best;
  double best_wcss = std::numeric_limits<double>::infinity();
  for (int init = 0; init < kInits; ++init) {
    double wcss = 0.0;
    LabelVector labels = kmeans_single_init(z, k, seed + 7919ull * init, wcss);
    if (wcss < best_wcss) {
      best_wcss = wcss;
      best = std::move(labels);
    }
  }
  return best;
}

int label_range(const LabelVector& labels) {
  int hi = 0;
  for (int l : labels) {
    if (l < 0) throw InvalidInput("labels must be nonnegative");
    hi = std::max(hi, l + 1);
  }
  return hi;
}

std::vector<std::vector<long>> contingency(const LabelVector& pred, const LabelVector& truth,
                                           int& kp, int& kt) {
  if (pred.size() != truth.size()) throw InvalidInput("label vectors differ in length");
  if (pred.empty()) throw InvalidInput("empty label vectors");
  kp = label_range(pred);
  kt = label_range(truth);
  std::vector<std::vector<long>> table(kp, std::vector<long>(kt, 0));
  for (std::size_t i = 0; i < pred.size(); ++i) ++table[pred[i]][truth[i]];
  return table;
}

// Min-cost assignment on a square cost matrix (Hungarian, potentials form).
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
  const int sz = int(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(sz + 1, 0.0), v(sz + 1, 0.0);
  std::vector<int> p(sz + 1, 0), way(sz + 1, 0);
  for (int i = 1; i <= sz; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(sz + 1, inf);
    std::vector<char> used(sz + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= sz; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= sz; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> match(sz, -1);  // match[row] = column
  for (int j = 1; j <= sz; ++j)
    if (p[j] > 0) match[p[j] - 1] = j - 1;
  return match;
}

double entropy(const std::vector<long>& counts, double n) {
  double h = 0.0;
  for (long c : counts)
    if (c > 0) h -= (double(c) / n) * std::log(double(c) / n);
  return h;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

std::vector<LabelVector> kmeans(const Matrix& z, int k, int restarts, std::uint64_t seed) {
  if (k < 2) throw InvalidInput("kmeans: k must be >= 2");
  if (k > z.rows()) throw InvalidInput("kmeans: k exceeds sample count");
  if (restarts < 1) throw InvalidInput("kmeans: restarts must be >= 1");
  if (!z.allFinite()) throw InvalidInput("kmeans: non-finite data");
  std::vector<LabelVector> out;
  out.reserve(restarts);
  for (int r = 0; r < restarts; ++r) out.push_back(kmeans_once(z, k, seed + 1000003ull * r));
  return out;
}

double accuracy(const LabelVector& pred, const LabelVector& truth) {
  int kp = 0, kt = 0;
  const auto table = contingency(pred, truth, kp, kt);
  const int sz = std::max(kp, kt);
  std::vector<std::vector<double>> cost(sz, std::vector<double>(sz, 0.0));
  for (int i = 0; i < kp; ++i)
    for (int j = 0; j < kt; ++j) cost[i][j] = -double(table[i][j]);
  const auto match = hungarian(cost);
  long hits = 0;
  for (int i = 0; i < kp; ++i)
    if (match[i] < kt) hits += table[i][match[i]];
  return double(hits) / double(pred.size());
}

double nmi(const LabelVector& pred, const LabelVector& truth) {
  int kp = 0, kt = 0;
  const auto table = contingency(pred, truth, kp, kt);
  const double n = double(pred.size());
  std::vector<long> row(kp, 0), col(kt, 0);
  for (int i = 0; i < kp; ++i)
    for (int j = 0; j < kt; ++j) {
      row[i] += table[i][j];
      col[j] += table[i][j];
    }
  double mi = 0.0;
  for (int i = 0; i < kp; ++i)
    for (int j = 0; j < kt; ++j)
      if (table[i][j] > 0)
        mi += (double(table[i][j]) / n) *
              std::log(n * double(table[i][j]) / (double(row[i]) * double(col[j])));
  const double hp = entropy(row, n);
  const double ht = entropy(col, n);
  if (hp + ht == 0.0) return 1.0;  // both partitions trivial, hence identical
  return mi / (0.5 * (hp + ht));
}

double ari(const LabelVector& pred, const LabelVector& truth) {
  int kp = 0, kt = 0;
  const auto table = contingency(pred, truth, kp, kt);
  const double n = double(pred.size());
  std::vector<long> row(kp, 0), col(kt, 0);
  double sum_cells = 0.0;
  for (int i = 0; i < kp; ++i)
    for (int j = 0; j < kt; ++j) {
      row[i] += table[i][j];
      col[j] += table[i][j];
      sum_cells += choose2(double(table[i][j]));
    }
  double sum_row = 0.0, sum_col = 0.0;
  for (long r : row) sum_row += choose2(double(r));
  for (long c : col) sum_col += choose2(double(c));
  const double expected = sum_row * sum_col / choose2(n);
  const double max_index = 0.5 * (sum_row + sum_col);
  if (max_index == expected) return sum_cells == expected ? 1.0 : 0.0;
  return (sum_cells - expected) / (max_index - expected);
}

MetricsReport evaluate(const Matrix& z, const LabelVector& truth, int k, int restarts,
                       std::uint64_t seed) {
  if (truth.size() != static_cast<std::size_t>(z.rows()))
    throw InvalidInput("evaluate: label length does not match sample count");
  MetricsReport rep;
  for (const LabelVector& pred : kmeans(z, k, restarts, seed)) {
    rep.acc.push_back(accuracy(pred, truth));
    rep.nmi.push_back(nmi(pred, truth));
    rep.ari.push_back(ari(pred, truth));
  }
  const auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
  };
  rep.mean_acc = mean(rep.acc);
  rep.mean_nmi = mean(rep.nmi);
  rep.mean_ari = mean(rep.ari);
  return rep;
}

}  // namespace memevo
