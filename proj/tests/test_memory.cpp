#include <doctest.h>

#include <cmath>

#include "memevo/memory.hpp"
#include "memevo/rng.hpp"

using namespace memevo;

TEST_CASE("archive_view keeps order and checks shapes") {
  MemoryStore store(5, 3, 1.0);
  GaussianStream g(1);
  const Matrix z1 = g.matrix(5, 3);
  const Matrix z2 = g.matrix(5, 3);

  store.archive_view(z1);
  CHECK(store.size() == 1);
  CHECK((store.view(0) - z1).cwiseAbs().maxCoeff() == 0.0);

  store.archive_view(z2);
  CHECK(store.size() == 2);
  CHECK((store.view(0) - z1).cwiseAbs().maxCoeff() == 0.0);
  CHECK((store.view(1) - z2).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(store.archive_view(g.matrix(4, 3)), InvalidInput);
}

TEST_CASE("forgetting_weights closed cases") {
  MemoryStore store(2, 2, 1.0);
  for (int i = 0; i < 3; ++i) store.archive_view(Matrix::Zero(2, 2));

  // t = 3, lambda = 1: raw weights 2^-1 and 1^-1
  const Vector w = store.forgetting_weights(3);
  CHECK(w[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  const Vector w2 = store.forgetting_weights(2);
  CHECK(w2.size() == 1);
  CHECK(w2[0] == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(store.forgetting_weights(1), InvalidInput);
  CHECK_THROWS_AS(store.forgetting_weights(5), InvalidInput);
}

TEST_CASE("lambda = 0 gives uniform weights") {
  MemoryStore store(2, 2, 0.0);
  for (int i = 0; i < 6; ++i) store.archive_view(Matrix::Zero(2, 2));
  for (int t = 2; t <= 7; ++t) {
    const Vector w = store.forgetting_weights(t);
    for (Eigen::Index i = 0; i < w.size(); ++i)
      CHECK(w[i] == doctest::Approx(1.0 / double(t - 1)).epsilon(1e-12));
  }
}

TEST_CASE("weights normalize and decay strictly for lambda > 0") {
  for (double lambda : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    MemoryStore store(2, 2, lambda);
    for (int i = 0; i < 49; ++i) store.archive_view(Matrix::Zero(2, 2));
    for (int t = 2; t <= 50; ++t) {
      const Vector w = store.forgetting_weights(t);
      CHECK(std::abs(w.sum() - 1.0) <= 1e-12);
      for (Eigen::Index i = 0; i < w.size(); ++i) CHECK(w[i] > 0.0);
      for (Eigen::Index i = 0; i + 1 < w.size(); ++i) {
        if (lambda > 0.0)
          CHECK(w[i] < w[i + 1]);  // strictly more weight on recent views
        else
          CHECK(w[i] == doctest::Approx(w[i + 1]).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("aggregate_history closed cases") {
  GaussianStream g(2);
  const Matrix z = g.matrix(4, 3);

  MemoryStore single(4, 3, 2.0);
  single.archive_view(z);
  CHECK((single.aggregate_history(2) - z).cwiseAbs().maxCoeff() < 1e-15);

  MemoryStore twins(4, 3, 0.7);
  twins.archive_view(z);
  twins.archive_view(z);
  CHECK((twins.aggregate_history(3) - z).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("aggregate_history matches a direct recomputation") {
  GaussianStream g(3);
  MemoryStore store(6, 4, 1.5);
  std::vector<Matrix> archive;
  for (int i = 0; i < 4; ++i) {
    archive.push_back(g.matrix(6, 4));
    store.archive_view(archive.back());
  }

  const int t = 5;
  Vector raw(4);
  for (int i = 1; i <= 4; ++i) raw[i - 1] = std::pow(double(t - i), -1.5);
  Matrix expected = Matrix::Zero(6, 4);
  for (int i = 0; i < 4; ++i) expected += (raw[i] / raw.sum()) * archive[i];

  CHECK((store.aggregate_history(t) - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("aggregate norm bounded by the largest archived norm") {
  GaussianStream g(4);
  MemoryStore store(5, 3, 1.0);
  double max_norm = 0.0;
  for (int i = 0; i < 5; ++i) {
    const Matrix z = g.matrix(5, 3);
    max_norm = std::max(max_norm, z.norm());
    store.archive_view(z);
  }
  CHECK(store.aggregate_history(6).norm() <= max_norm + 1e-12);
}
