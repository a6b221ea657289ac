#include "memevo/solver.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <chrono>
#include <cmath>

#include "memevo/rng.hpp"

namespace memevo {

void SolverConfig::validate() const {
  if (alpha < 0.0 || beta < 0.0 || lambda < 0.0)
    throw InvalidInput("SolverConfig: alpha, beta, lambda must be nonnegative");
  if (latent_dim <= 0) throw InvalidInput("SolverConfig: latent_dim must be positive");
  if (!(mu0 > 0.0) || !(rho0 > 0.0)) throw InvalidInput("SolverConfig: mu0, rho0 must be positive");
  if (mu0 > mu_max || rho0 > rho_max)
    throw InvalidInput("SolverConfig: initial penalties exceed their caps");
  if (!(delta > 1.0)) throw InvalidInput("SolverConfig: delta must exceed 1");
  if (max_iters <= 0) throw InvalidInput("SolverConfig: max_iters must be positive");
  if (!(tol > 0.0)) throw InvalidInput("SolverConfig: tol must be positive");
}

namespace {

// Row-orthonormal m x d basis from a seeded Gaussian draw via thin QR.
Matrix init_basis(Eigen::Index m, Eigen::Index d, std::uint64_t seed) {
  GaussianStream g(seed);
  const Matrix raw = g.matrix(d, m);
  const Matrix q = Eigen::HouseholderQR<Matrix>(raw).householderQ() * Matrix::Identity(d, m);
  return q.transpose();
}

double orth_residual(const Matrix& q) {
  return (q * q.transpose() - Matrix::Identity(q.rows(), q.rows())).cwiseAbs().maxCoeff();
}

double norm_21(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.cols(); ++i) s += a.col(i).norm();
  return s;
}

// One ADMM view solve. prev_z / z_hist are null when the corresponding
// coupling term is absent (base view, or alpha/beta ablated to zero); the
// loop then degenerates to plain robust representation learning.
std::pair<Matrix, SolveReport> solve_view(const Matrix& x, const Matrix* prev_z,
                                          const Matrix* z_hist, const SolverConfig& cfg) {
  cfg.validate();
  if (!x.allFinite()) throw InvalidInput("solve_view: non-finite view data");
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  const Eigen::Index m = cfg.latent_dim;
  if (m > std::min(n, d))
    throw InvalidInput("solve_view: latent_dim exceeds min(samples, features)");

  const bool use_align = prev_z != nullptr && cfg.alpha > 0.0;
  const bool use_tensor = z_hist != nullptr && cfg.beta > 0.0;

  const auto start = std::chrono::steady_clock::now();

  SolverState s;
  s.A = init_basis(m, d, cfg.seed);
  s.Z = x * s.A.transpose();
  s.E = Matrix::Zero(n, d);
  s.Y = Matrix::Zero(n, d);
  s.P = Matrix::Identity(m, m);
  s.M = PairTensor::Zero(n, m);
  s.J = PairTensor::Zero(n, m);
  s.mu = cfg.mu0;
  s.rho = cfg.rho0;

  const Matrix zero_prev = Matrix::Zero(n, m);
  const Matrix& zp = use_align ? *prev_z : zero_prev;
  const Matrix& zh = z_hist != nullptr ? *z_hist : zero_prev;

  SolveReport report;
  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    s.A = procrustes_min(x - s.E + s.Y / s.mu, s.Z);
    report.max_a_orth = std::max(report.max_a_orth, orth_residual(s.A));

    s.E = shrink_columns_21(x - s.Z * s.A + s.Y / s.mu, 1.0 / s.mu);

    if (use_align) {
      s.P = procrustes_min(s.Z, zp);
      report.max_p_orth = std::max(report.max_p_orth, orth_residual(s.P));
    }

    if (use_tensor) {
      s.Z = update_z_closed_form(x, s.A, s.E, s.Y, zp, s.P, s.M.cur, s.J.cur, s.mu, s.rho,
                                 use_align ? cfg.alpha : 0.0);
    } else if (use_align) {
      s.Z = (s.mu * ((x - s.E + s.Y / s.mu) * s.A.transpose()) + 2.0 * cfg.alpha * (zp * s.P)) /
            (s.mu + 2.0 * cfg.alpha);
    } else {
      s.Z = (x - s.E + s.Y / s.mu) * s.A.transpose();
    }
    if (!s.Z.allFinite()) throw NumericalBreakdown("solve_view: representation diverged");

    const PairTensor z_stack(zh, s.Z);
    if (use_tensor) {
      s.M = armr_prox(z_stack + (1.0 / s.rho) * s.J, cfg.beta / s.rho);
    } else {
      s.M = z_stack;  // constraint held exactly when the tensor block is off
    }

    const Matrix recon_gap = x - s.Z * s.A - s.E;
    s.Y += s.mu * recon_gap;
    if (use_tensor) s.J = s.J + s.rho * (z_stack - s.M);
    s.mu = std::min(cfg.delta * s.mu, cfg.mu_max);
    if (use_tensor) s.rho = std::min(cfg.delta * s.rho, cfg.rho_max);

    report.iterations = iter;
    report.recon_residual = recon_gap.cwiseAbs().maxCoeff();
    report.tensor_residual = use_tensor ? (z_stack - s.M).maxAbs() : 0.0;
    if (!std::isfinite(report.recon_residual))
      throw NumericalBreakdown("solve_view: residual diverged");

    report.recon_trace.push_back(norm_21(x - s.Z * s.A));
    report.align_trace.push_back(use_align ? cfg.alpha * (s.Z - zp * s.P).squaredNorm() : 0.0);
    report.consolidate_trace.push_back(use_tensor ? cfg.beta * armr_norm(z_stack) : 0.0);
    report.mu_trace.push_back(s.mu);
    report.rho_trace.push_back(s.rho);

    if (report.recon_residual < cfg.tol && report.tensor_residual < cfg.tol) {
      report.converged = true;
      break;
    }
  }

  report.final_basis = s.A;
  report.final_noise = s.E;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {s.Z, report};
}

}  // namespace

Matrix update_z_closed_form(const Matrix& x, const Matrix& a, const Matrix& e, const Matrix& y,
                            const Matrix& prev_z, const Matrix& p, const Matrix& m_cur,
                            const Matrix& j_cur, double mu, double rho, double alpha) {
  const Matrix rhs = mu * ((x - e + y / mu) * a.transpose()) + 2.0 * alpha * (prev_z * p) +
                     rho * m_cur - j_cur;
  return rhs / (mu + 2.0 * alpha + rho);
}

std::pair<Matrix, SolveReport> solve_initial_view(const Matrix& x1, const SolverConfig& cfg) {
  return solve_view(x1, nullptr, nullptr, cfg);
}

std::pair<Matrix, SolveReport> solve_incremental_view(const Matrix& xt, const Matrix& prev_z,
                                                      const MemoryStore& store, int t,
                                                      const SolverConfig& cfg) {
  if (t < 2) throw InvalidInput("solve_incremental_view: view index must be >= 2");
  if (store.size() != static_cast<std::size_t>(t - 1))
    throw InvalidInput("solve_incremental_view: archive length must equal t-1");
  if (prev_z.rows() != xt.rows() || prev_z.cols() != cfg.latent_dim)
    throw InvalidInput("solve_incremental_view: prev_z shape mismatch");
  const Matrix z_hist = store.aggregate_history(t);
  return solve_view(xt, &prev_z, &z_hist, cfg);
}

StreamResult run_stream(const std::vector<Matrix>& views, const SolverConfig& cfg) {
  if (views.empty()) throw InvalidInput("run_stream: at least one view required");
  const Eigen::Index n = views.front().rows();
  for (const Matrix& v : views)
    if (v.rows() != n) throw InvalidInput("run_stream: views disagree on sample count");

  StreamResult result;
  MemoryStore store(n, cfg.latent_dim, cfg.lambda);

  auto [z1, rep1] = solve_initial_view(views[0], cfg);
  store.archive_view(z1);
  result.per_view_z.push_back(z1);
  result.reports.push_back(std::move(rep1));

  for (std::size_t t = 2; t <= views.size(); ++t) {
    auto [zt, rep] =
        solve_incremental_view(views[t - 1], result.per_view_z.back(), store, int(t), cfg);
    store.archive_view(zt);
    result.per_view_z.push_back(zt);
    result.reports.push_back(std::move(rep));
  }
  result.final_z = result.per_view_z.back();
  return result;
}

}  // namespace memevo
