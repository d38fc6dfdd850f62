#pragma once

// Quadratic-loss training of a 1D-LCN as a weighted nearest-point problem on
// the neurovariety, and a numerical count of its complex critical points for
// hypersurface neurovarieties.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lcn/architecture.hpp"
#include "lcn/polyring.hpp"

namespace lcn {

// Minimize (w - u)^T T (w - u) over the zero set of f.
struct WeightedDistanceProblem {
  int k = 0;
  Eigen::MatrixXd T;
  Eigen::VectorXd u;
  MultiPoly f;
  std::vector<int> filter_sizes;  // reduced sizes when derived from an architecture
};

// Sum of the d_out principal k x k blocks of M at diagonal offsets s*m.
// M must be (k + (d_out - 1) s) square.
Eigen::MatrixXd psi_map(const Eigen::MatrixXd& M, int k, int s, int d_out);

// ||conv_matrix(w, s, rows(Y)) X - Y||_F^2
double training_loss(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y, const Eigen::VectorXd& w,
                     int stride);

struct TrainingReduction {
  WeightedDistanceProblem problem;
  Eigen::VectorXd b;  // loss = w^T T w - 2 w^T b + ||Y||^2
  double constant = 0.0;  // loss = (w - u)^T T (w - u) + constant
  int stride = 1;
};

// X is d_0 x N, Y is d_L x N with d_0 = k + (d_L - 1) s and N >= d_0.
// Throws InvalidArgument for shape or rank problems and Unsupported unless the
// neurovariety is a hypersurface.
TrainingReduction training_reduce(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                  const Architecture& arch);

struct TrainingData {
  Eigen::MatrixXd X;
  Eigen::MatrixXd Y;
};

// Standard Gaussian X (d_0 x (d_0 + extra)) and Y for the architecture.
TrainingData random_training_data(const Architecture& arch, int d_out, int extra_samples,
                                  std::uint64_t seed);

struct CriticalPoint {
  Eigen::VectorXcd w;
  std::complex<double> lambda;
  double residual = 0.0;  // scaled max residual of the Lagrange system
  bool is_real = false;
};

struct CriticalPointReport {
  std::vector<CriticalPoint> points;
  std::size_t distinct_count = 0;
  std::size_t real_count = 0;
  std::optional<Integer> expected;
  std::size_t starts_run = 0;
  std::size_t converged_runs = 0;
  double max_residual = 0.0;

  bool shortfall() const { return expected && Integer(static_cast<unsigned long>(distinct_count)) < *expected; }
  bool excess() const { return expected && Integer(static_cast<unsigned long>(distinct_count)) > *expected; }
};

struct SolveOptions {
  std::size_t starts = 500;
  std::uint64_t seed = 42;
  // Target count for early stopping; defaults to C_k of the problem's filter
  // sizes when those are known.
  std::optional<Integer> expected;
};

// Multi-start damped Newton on { f(w) = 0, T (w - u) = lambda grad f(w) }.
// Solutions on the singular locus (grad f = 0) are discarded. Stops early
// once the expected count is reached and the last 60% of starts found
// nothing new.
CriticalPointReport solve_critical_points(const WeightedDistanceProblem& problem,
                                          const SolveOptions& options);

// Every point's conjugate is also in the set (relative tolerance tol).
bool conjugation_closed(const CriticalPointReport& report, double tol = 1e-7);

}  // namespace lcn
