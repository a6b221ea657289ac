#ifndef MEMEVO_TENSOR_LAB_HPP_
#define MEMEVO_TENSOR_LAB_HPP_

#include <Eigen/Dense>

#include "memevo/errors.hpp"

namespace memevo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Two frontal n x m slices stacked along a (length-2) third dimension.
struct PairTensor {
  Matrix hist;  // slice 1
  Matrix cur;   // slice 2

  PairTensor() = default;
  PairTensor(Matrix h, Matrix c);

  static PairTensor Zero(Eigen::Index rows, Eigen::Index cols) {
    return PairTensor(Matrix::Zero(rows, cols), Matrix::Zero(rows, cols));
  }

  Eigen::Index rows() const { return hist.rows(); }
  Eigen::Index cols() const { return hist.cols(); }
  double squaredNorm() const { return hist.squaredNorm() + cur.squaredNorm(); }
  double maxAbs() const;
};

PairTensor operator+(const PairTensor& a, const PairTensor& b);
PairTensor operator-(const PairTensor& a, const PairTensor& b);
PairTensor operator*(double s, const PairTensor& t);

// Thin SVD a = U diag(s) V^T with descending nonnegative singular values.
struct SpectrumSlice {
  Vector singular_values;
  Matrix left_factors;
  Matrix right_factors;
};

SpectrumSlice thin_svd(const Matrix& a);

// Minimizes ||target - carrier * W||_F over row-orthonormal W
// (W W^T = I, shape cols(carrier) x cols(target)).
// Requires cols(carrier) <= cols(target) and matching row counts.
Matrix procrustes_min(const Matrix& target, const Matrix& carrier);

// Column-wise l2,1 shrinkage: scale each column toward zero by `threshold`
// in euclidean norm, zeroing columns that fall below it.
Matrix shrink_columns_21(const Matrix& c, double threshold);

// Unnormalized length-2 DFT along the third dimension; all-real.
PairTensor dft2_forward(const PairTensor& t);
// Inverse transform (carries the 1/2 factor).
PairTensor dft2_inverse(const PairTensor& t);

// Nonconvex rank surrogate: (1/2) sum over both DFT-domain slices of
// (1 - e^{-sigma}) / (1 + e^{-sigma}) across singular values.
double armr_norm(const PairTensor& t);

// Scalar prox of the rank surrogate: argmin_{x>=0}
// (1/2)(x - sigma)^2 + weight * (1 - e^{-x}) / (1 + e^{-x}),
// solved by DC iteration initialized at sigma.
double armr_scalar_prox(double sigma, double weight);

// Tensor prox: per-slice singular-value shrinkage in the DFT domain.
PairTensor armr_prox(const PairTensor& t, double weight);

}  // namespace memevo

#endif  // MEMEVO_TENSOR_LAB_HPP_
