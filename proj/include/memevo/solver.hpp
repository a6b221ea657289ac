#ifndef MEMEVO_SOLVER_HPP_
#define MEMEVO_SOLVER_HPP_

#include <cstdint>
#include <vector>

#include "memevo/memory.hpp"
#include "memevo/tensor_lab.hpp"

namespace memevo {

struct SolverConfig {
  double alpha = 0.5;    // view-alignment weight
  double beta = 1.0;     // tensor-consolidation weight
  double lambda = 1.5;   // forgetting rate
  Eigen::Index latent_dim = 20;
  double mu0 = 1e-4;
  double rho0 = 1e-4;
  double mu_max = 1e10;
  double rho_max = 1e10;
  double delta = 2.0;    // penalty growth factor, > 1
  int max_iters = 200;
  double tol = 1e-6;
  std::uint64_t seed = 0;

  void validate() const;
};

// All per-view ADMM variables.
struct SolverState {
  Matrix A;       // m x d, row-orthonormal basis
  Matrix Z;       // n x m representation
  Matrix E;       // n x d column-sparse residual
  Matrix Y;       // n x d multiplier
  Matrix P;       // m x m orthogonal alignment (identity at t = 1)
  PairTensor M;   // auxiliary consolidation tensor
  PairTensor J;   // tensor multiplier
  double mu = 0.0;
  double rho = 0.0;
};

struct SolveReport {
  int iterations = 0;
  bool converged = false;
  double recon_residual = 0.0;   // ||X - Z A - E||_inf at exit
  double tensor_residual = 0.0;  // ||Z_stack - M||_inf at exit
  double max_a_orth = 0.0;       // worst ||A A^T - I||_inf over the trace
  double max_p_orth = 0.0;       // worst ||P P^T - I||_inf over the trace
  double wall_time_s = 0.0;
  // Per-iteration values of the three objective terms:
  // ||X - Z A||_2,1, alpha * ||Z - Z_prev P||_F^2, beta * armr(Z_stack).
  std::vector<double> recon_trace;
  std::vector<double> align_trace;
  std::vector<double> consolidate_trace;
  std::vector<double> mu_trace;
  std::vector<double> rho_trace;
  Matrix final_basis;  // A at exit
  Matrix final_noise;  // E at exit
};

// Base-view ADMM solve (no history).
std::pair<Matrix, SolveReport> solve_initial_view(const Matrix& x1, const SolverConfig& cfg);

// Incremental-view ADMM solve: aligns against prev_z and consolidates the
// stacked (Z_hist, Z_t) tensor. Requires the store to hold exactly t-1 views.
std::pair<Matrix, SolveReport> solve_incremental_view(const Matrix& xt, const Matrix& prev_z,
                                                      const MemoryStore& store, int t,
                                                      const SolverConfig& cfg);

struct StreamResult {
  Matrix final_z;
  std::vector<Matrix> per_view_z;
  std::vector<SolveReport> reports;
};

// Drives the full view stream, archiving each converged representation.
StreamResult run_stream(const std::vector<Matrix>& views, const SolverConfig& cfg);

// Closed-form minimizer of the Z_t subproblem (exposed for gradient checks).
Matrix update_z_closed_form(const Matrix& x, const Matrix& a, const Matrix& e, const Matrix& y,
                            const Matrix& prev_z, const Matrix& p, const Matrix& m_cur,
                            const Matrix& j_cur, double mu, double rho, double alpha);

}  // namespace memevo

#endif  // MEMEVO_SOLVER_HPP_
