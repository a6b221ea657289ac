#include "memevo/tensor_lab.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace memevo {

PairTensor::PairTensor(Matrix h, Matrix c) : hist(std::move(h)), cur(std::move(c)) {
  if (hist.rows() != cur.rows() || hist.cols() != cur.cols())
    throw InvalidInput("PairTensor slices must share dimensions");
}

double PairTensor::maxAbs() const {
  if (hist.size() == 0) return 0.0;
  return std::max(hist.cwiseAbs().maxCoeff(), cur.cwiseAbs().maxCoeff());
}

PairTensor operator+(const PairTensor& a, const PairTensor& b) {
  return PairTensor(a.hist + b.hist, a.cur + b.cur);
}

PairTensor operator-(const PairTensor& a, const PairTensor& b) {
  return PairTensor(a.hist - b.hist, a.cur - b.cur);
}

PairTensor operator*(double s, const PairTensor& t) {
  return PairTensor(s * t.hist, s * t.cur);
}

SpectrumSlice thin_svd(const Matrix& a) {
  if (!a.allFinite()) throw InvalidInput("thin_svd: non-finite input");
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return SpectrumSlice{svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

Matrix procrustes_min(const Matrix& target, const Matrix& carrier) {
  if (target.rows() != carrier.rows())
    throw InvalidInput("procrustes_min: row counts differ");
  if (carrier.cols() > target.cols())
    throw InvalidInput("procrustes_min: carrier has more columns than target");
  if (!target.allFinite() || !carrier.allFinite())
    throw InvalidInput("procrustes_min: non-finite input");
  const Matrix gram = carrier.transpose() * target;  // p x q, p <= q
  Eigen::JacobiSVD<Matrix> svd(gram, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().transpose();
}

Matrix shrink_columns_21(const Matrix& c, double threshold) {
  if (!(threshold > 0.0)) throw InvalidInput("shrink_columns_21: threshold must be positive");
  Matrix out = Matrix::Zero(c.rows(), c.cols());
  for (Eigen::Index i = 0; i < c.cols(); ++i) {
    const double norm = c.col(i).norm();
    if (norm > threshold) out.col(i) = ((norm - threshold) / norm) * c.col(i);
  }
  return out;
}

PairTensor dft2_forward(const PairTensor& t) {
  return PairTensor(t.hist + t.cur, t.hist - t.cur);
}

PairTensor dft2_inverse(const PairTensor& t) {
  return PairTensor(0.5 * (t.hist + t.cur), 0.5 * (t.hist - t.cur));
}

namespace {

// (1 - e^{-x}) / (1 + e^{-x}) = tanh(x/2), x >= 0
double rank_surrogate(double x) { return std::tanh(0.5 * x); }

// derivative 2 e^{-x} / (1 + e^{-x})^2
double rank_surrogate_grad(double x) {
  const double e = std::exp(-x);
  const double d = 1.0 + e;
  return 2.0 * e / (d * d);
}

}  // namespace

double armr_norm(const PairTensor& t) {
  const PairTensor f = dft2_forward(t);
  double total = 0.0;
  for (const Matrix* slice : {&f.hist, &f.cur}) {
    const Vector s = thin_svd(*slice).singular_values;
    for (Eigen::Index i = 0; i < s.size(); ++i) total += rank_surrogate(s[i]);
  }
  return 0.5 * total;
}

double armr_scalar_prox(double sigma, double weight) {
  if (!(weight > 0.0)) throw InvalidInput("armr_scalar_prox: weight must be positive");
  if (sigma < 0.0) throw InvalidInput("armr_scalar_prox: sigma must be nonnegative");
  double x = sigma;
  for (int iter = 0; iter < 50; ++iter) {
    const double next = std::max(sigma - weight * rank_surrogate_grad(x), 0.0);
    const double step = std::abs(next - x);
    x = next;
    if (step < 1e-10) break;
  }
  return x;
}

PairTensor armr_prox(const PairTensor& t, double weight) {
  if (!(weight > 0.0)) throw InvalidInput("armr_prox: weight must be positive");
  PairTensor f = dft2_forward(t);
  for (Matrix* slice : {&f.hist, &f.cur}) {
    SpectrumSlice spec = thin_svd(*slice);
    Vector shrunk = spec.singular_values;
    for (Eigen::Index i = 0; i < shrunk.size(); ++i)
      shrunk[i] = armr_scalar_prox(shrunk[i], weight);
    *slice = spec.left_factors * shrunk.asDiagonal() * spec.right_factors.transpose();
  }
  return dft2_inverse(f);
}

}  // namespace memevo
