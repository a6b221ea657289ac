#ifndef MEMEVO_RNG_HPP_
#define MEMEVO_RNG_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace memevo {

// Deterministic N(0,1) stream. std::normal_distribution is
// implementation-defined, so we roll Box-Muller over mt19937_64 draws to keep
// runs reproducible for a fixed platform.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = unit_(gen_);
    double u2 = unit_(gen_);
    // avoid log(0)
    while (u1 <= 1e-300) u1 = unit_(gen_);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Eigen::MatrixXd matrix(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = next();
    return out;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace memevo

#endif  // MEMEVO_RNG_HPP_
