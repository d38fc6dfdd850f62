#include "lcn/critpoints.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lcn/eddegree.hpp"
#include "lcn/error.hpp"
#include "lcn/idealgen.hpp"

namespace lcn {

Eigen::MatrixXd psi_map(const Eigen::MatrixXd& M, int k, int s, int d_out) {
  if (k < 1 || s < 1 || d_out < 1) throw InvalidArgument("psi_map needs positive k, s, d_out");
  const Eigen::Index d0 = k + static_cast<Eigen::Index>(d_out - 1) * s;
  if (M.rows() != d0 || M.cols() != d0)
    throw InvalidArgument("psi_map expects a " + std::to_string(d0) + "x" + std::to_string(d0) +
                          " matrix");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(k, k);
  for (int m = 0; m < d_out; ++m) out += M.block(static_cast<Eigen::Index>(m) * s, static_cast<Eigen::Index>(m) * s, k, k);
  return out;
}

double training_loss(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y, const Eigen::VectorXd& w,
                     int stride) {
  std::vector<double> filter(w.data(), w.data() + w.size());
  const auto A = conv_matrix<double>(filter, stride, static_cast<std::size_t>(Y.rows()));
  if (static_cast<Eigen::Index>(A.cols) != X.rows())
    throw InvalidArgument("input dimension does not match filter, stride and output size");
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> Am(
      A.data.data(), static_cast<Eigen::Index>(A.rows), static_cast<Eigen::Index>(A.cols));
  return (Am * X - Y).squaredNorm();
}

TrainingReduction training_reduce(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                  const Architecture& arch) {
  const auto info = validate(arch);
  const int k = info.output_size;
  const int s = static_cast<int>(info.total_stride);
  const auto dL = Y.rows();
  if (dL < 1) throw InvalidArgument("labels need at least one row");
  const Eigen::Index d0 = k + (dL - 1) * s;
  if (X.rows() != d0)
    throw InvalidArgument("inputs must have d_0 = " + std::to_string(d0) + " rows");
  if (X.cols() != Y.cols()) throw InvalidArgument("inputs and labels have different sample counts");
  if (X.cols() < d0) throw InvalidArgument("need at least d_0 samples");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-12);
  if (qr.rank() < d0) throw InvalidArgument("input data matrix is rank deficient");

  const auto reduced = reduce_arch(info.arch);
  const int codim = k - expected_dimension(reduced);
  if (codim != 1)
    throw Unsupported("unsupported: non-hypersurface neurovariety (codimension " +
                      std::to_string(codim) + ")");
  const auto gens = vanishing_generators(info.arch);
  if (gens.size() != 1)
    throw Unsupported("unsupported: non-hypersurface neurovariety (" + std::to_string(gens.size()) +
                      " generators)");

  TrainingReduction red;
  red.stride = s;
  const Eigen::MatrixXd G = X * X.transpose();
  const Eigen::MatrixXd YX = Y * X.transpose();
  red.problem.k = k;
  red.problem.T = psi_map(G, k, s, static_cast<int>(dL));
  red.b = Eigen::VectorXd::Zero(k);
  for (Eigen::Index i = 0; i < dL; ++i)
    for (int j = 0; j < k; ++j) red.b(j) += YX(i, j + i * s);
  red.problem.u = red.problem.T.ldlt().solve(red.b);
  red.problem.f = gens.generators.front().poly;
  red.problem.filter_sizes = reduced.filter_sizes;
  red.constant = Y.squaredNorm() - red.b.dot(red.problem.u);
  return red;
}

TrainingData random_training_data(const Architecture& arch, int d_out, int extra_samples,
                                  std::uint64_t seed) {
  const auto info = validate(arch);
  if (d_out < 1 || extra_samples < 0) throw InvalidArgument("bad training data shape");
  const auto d0 = static_cast<Eigen::Index>(info.output_size) + (d_out - 1) * info.total_stride;
  const auto N = d0 + extra_samples;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  TrainingData data{Eigen::MatrixXd(d0, N), Eigen::MatrixXd(d_out, N)};
  for (Eigen::Index j = 0; j < N; ++j)
    for (Eigen::Index i = 0; i < d0; ++i) data.X(i, j) = gauss(rng);
  for (Eigen::Index j = 0; j < N; ++j)
    for (Eigen::Index i = 0; i < d_out; ++i) data.Y(i, j) = gauss(rng);
  return data;
}

namespace {

using cd = std::complex<double>;

// Flattened polynomial for fast complex evaluation.
struct CompiledPoly {
  std::vector<double> coeffs;
  std::vector<std::vector<std::uint32_t>> exps;
  std::size_t nvars = 0;

  explicit CompiledPoly(const MultiPoly& p, double scale = 1.0) : nvars(p.num_variables()) {
    for (const auto& [m, c] : p.terms()) {
      coeffs.push_back(c.get_d() * scale);
      exps.push_back(m.exps);
    }
  }

  cd eval(const Eigen::VectorXcd& z) const {
    cd sum = 0.0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      cd term = coeffs[t];
      for (std::size_t i = 0; i < nvars; ++i)
        for (std::uint32_t e = 0; e < exps[t][i]; ++e) term *= z(static_cast<Eigen::Index>(i));
      sum += term;
    }
    return sum;
  }

  double abs_eval(const Eigen::VectorXcd& z) const {
    double sum = 0.0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      double term = std::abs(coeffs[t]);
      for (std::size_t i = 0; i < nvars; ++i)
        for (std::uint32_t e = 0; e < exps[t][i]; ++e) term *= std::abs(z(static_cast<Eigen::Index>(i)));
      sum += term;
    }
    return sum;
  }
};

// The Lagrange system in scaled coordinates: w = rho * v, u = rho * u_s,
// T = tau * T_s, f = c * f_s; mu absorbs the multiplier.
class LagrangeSystem {
 public:
  LagrangeSystem(const Eigen::MatrixXd& T, const Eigen::VectorXd& u, const MultiPoly& f, double fscale)
      : k_(static_cast<int>(u.size())), T_(T.cast<cd>()), u_(u.cast<cd>()), f_(f, fscale) {
    for (int i = 0; i < k_; ++i) {
      const auto di = f.derivative(static_cast<std::size_t>(i));
      grad_.emplace_back(di, fscale);
      for (int j = 0; j <= i; ++j) hess_.emplace_back(di.derivative(static_cast<std::size_t>(j)), fscale);
    }
    Tnorm_ = T.norm();
  }

  int dim() const { return k_ + 1; }

  Eigen::VectorXcd gradient(const Eigen::VectorXcd& w) const {
    Eigen::VectorXcd g(k_);
    for (int i = 0; i < k_; ++i) g(i) = grad_[static_cast<std::size_t>(i)].eval(w);
    return g;
  }

  double gradient_scale(const Eigen::VectorXcd& w) const {
    double s = 0.0;
    for (const auto& g : grad_) s += g.abs_eval(w);
    return s;
  }

  Eigen::VectorXcd residual(const Eigen::VectorXcd& z) const {
    const Eigen::VectorXcd w = z.head(k_);
    const cd mu = z(k_);
    Eigen::VectorXcd F(k_ + 1);
    F.head(k_) = T_ * (w - u_) - mu * gradient(w);
    F(k_) = f_.eval(w);
    return F;
  }

  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& z) const {
    const Eigen::VectorXcd w = z.head(k_);
    const cd mu = z(k_);
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(k_ + 1, k_ + 1);
    J.topLeftCorner(k_, k_) = T_;
    std::size_t idx = 0;
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j <= i; ++j) {
        const cd h = hess_[idx++].eval(w);
        J(i, j) -= mu * h;
        if (i != j) J(j, i) -= mu * h;
      }
    const Eigen::VectorXcd g = gradient(w);
    J.block(0, k_, k_, 1) = -g;
    J.block(k_, 0, 1, k_) = g.transpose();
    return J;
  }

  // Each block relative to the magnitude of its own terms.
  double scaled_residual(const Eigen::VectorXcd& z) const {
    const Eigen::VectorXcd w = z.head(k_);
    const cd mu = z(k_);
    const Eigen::VectorXcd F = residual(z);
    const Eigen::VectorXcd g = gradient(w);
    const double stat_scale = Tnorm_ * (w.norm() + u_.norm()) + std::abs(mu) * g.norm() + 1e-300;
    const double eq_scale = f_.abs_eval(w) + 1e-300;
    return std::max(F.head(k_).norm() / stat_scale, std::abs(F(k_)) / eq_scale);
  }

 private:
  int k_;
  Eigen::MatrixXcd T_;
  Eigen::VectorXcd u_;
  CompiledPoly f_;
  std::vector<CompiledPoly> grad_;
  std::vector<CompiledPoly> hess_;  // lower triangle, row by row
  double Tnorm_ = 1.0;
};

constexpr double kConvergedResidual = 1e-12;
constexpr int kMaxIterations = 100;
constexpr double kDedupDistance = 1e-8;
constexpr double kRealTolerance = 1e-8;
constexpr double kSingularTolerance = 1e-8;
constexpr double kDivergedNorm = 1e8;

std::optional<Eigen::VectorXcd> newton(const LagrangeSystem& sys, Eigen::VectorXcd z) {
  Eigen::VectorXcd F = sys.residual(z);
  double merit = F.squaredNorm();
  for (int it = 0; it < kMaxIterations; ++it) {
    if (!std::isfinite(merit) || z.norm() > kDivergedNorm) return std::nullopt;
    if (sys.scaled_residual(z) < kConvergedResidual) return z;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys.jacobian(z));
    const Eigen::VectorXcd step = lu.solve(-F);
    if (!step.allFinite()) return std::nullopt;
    // Armijo backtracking on ||F||^2
    double t = 1.0;
    Eigen::VectorXcd trial;
    Eigen::VectorXcd Ft;
    double trial_merit = 0.0;
    while (true) {
      trial = z + t * step;
      Ft = sys.residual(trial);
      trial_merit = Ft.squaredNorm();
      if (trial_merit <= (1.0 - 1e-4 * t) * merit || t < 1e-6) break;
      t *= 0.5;
    }
    z = trial;
    F = Ft;
    merit = trial_merit;
  }
  if (sys.scaled_residual(z) < kConvergedResidual) return z;
  return std::nullopt;
}

bool close(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).norm() <= kDedupDistance * std::max({a.norm(), b.norm(), 1e-300});
}

}  // namespace

CriticalPointReport solve_critical_points(const WeightedDistanceProblem& p, const SolveOptions& opt) {
  const int k = p.k;
  if (k < 1 || p.u.size() != k || p.T.rows() != k || p.T.cols() != k)
    throw InvalidArgument("weighted distance problem has inconsistent dimensions");
  if (p.f.num_variables() != static_cast<std::size_t>(k))
    throw InvalidArgument("hypersurface lives in the wrong number of variables");
  if (p.f.total_degree() < 1) throw InvalidArgument("hypersurface equation is constant or zero");
  if ((p.T - p.T.transpose()).norm() > 1e-12 * std::max(1.0, p.T.norm()))
    throw InvalidArgument("weight matrix must be symmetric");
  if (opt.starts == 0) throw InvalidArgument("need at least one start");

  CriticalPointReport report;
  report.expected = opt.expected;
  if (!report.expected && !p.filter_sizes.empty()) {
    report.expected = p.filter_sizes.size() > 1 ? generic_ed_degree(p.filter_sizes) : Integer(1);
  }

  // Scale so that |u| = 1, |T| = 1 and f has unit largest coefficient.
  const bool homogeneous = p.f.is_homogeneous();
  const int d = p.f.total_degree();
  const double rho = homogeneous && p.u.norm() > 0 ? p.u.norm() : 1.0;
  const double tau = p.T.norm() > 0 ? p.T.norm() : 1.0;
  double cmax = 0.0;
  for (const auto& [m, c] : p.f.terms()) cmax = std::max(cmax, std::abs(c.get_d()));
  const double fscale = 1.0 / cmax;
  const LagrangeSystem scaled(p.T / tau, p.u / rho, p.f, fscale);
  const LagrangeSystem original(p.T, p.u, p.f, 1.0);
  // lambda = tau * mu / (c * rho^(d-2)) with f = c f_s
  const double lambda_factor = tau / (cmax * std::pow(rho, d - 2));

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double spread = 1.0 / std::sqrt(2.0 * k);
  std::vector<Eigen::VectorXcd> found;  // scaled (w, mu)
  std::size_t last_new = 0;

  for (std::size_t start = 1; start <= opt.starts; ++start) {
    Eigen::VectorXcd z(k + 1);
    for (int i = 0; i < k; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i) = cd(re, im) * spread;
    }
    {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(k) = cd(re, im);
    }
    report.starts_run = start;
    auto sol = newton(scaled, z);
    if (sol) {
      ++report.converged_runs;
      const Eigen::VectorXcd w = sol->head(k);
      const bool singular = scaled.gradient(w).norm() <= kSingularTolerance * (scaled.gradient_scale(w) + 1e-300);
      const bool duplicate = std::any_of(found.begin(), found.end(),
                                         [&](const Eigen::VectorXcd& f) { return close(f, *sol); });
      if (!singular && !duplicate) {
        found.push_back(*sol);
        last_new = start;
      }
    }
    if (report.expected && Integer(static_cast<unsigned long>(found.size())) == *report.expected &&
        static_cast<double>(start - last_new) >= 0.6 * static_cast<double>(start))
      break;
  }

  for (const auto& s : found) {
    CriticalPoint cp;
    cp.w = s.head(k) * rho;
    cp.lambda = s(k) * lambda_factor;
    Eigen::VectorXcd z(k + 1);
    z.head(k) = cp.w;
    z(k) = cp.lambda;
    cp.residual = original.scaled_residual(z);
    cp.is_real = s.imag().norm() <= kRealTolerance * s.norm();
    report.max_residual = std::max(report.max_residual, cp.residual);
    report.points.push_back(std::move(cp));
  }
  std::sort(report.points.begin(), report.points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    for (Eigen::Index i = 0; i < a.w.size(); ++i) {
      if (a.w(i).real() != b.w(i).real()) return a.w(i).real() < b.w(i).real();
      if (a.w(i).imag() != b.w(i).imag()) return a.w(i).imag() < b.w(i).imag();
    }
    return false;
  });
  report.distinct_count = report.points.size();
  report.real_count = static_cast<std::size_t>(
      std::count_if(report.points.begin(), report.points.end(), [](const CriticalPoint& c) { return c.is_real; }));
  return report;
}

bool conjugation_closed(const CriticalPointReport& report, double tol) {
  for (const auto& p : report.points) {
    const Eigen::VectorXcd conj = p.w.conjugate();
    const bool matched = std::any_of(report.points.begin(), report.points.end(), [&](const CriticalPoint& q) {
      return (q.w - conj).norm() <= tol * std::max(1.0, conj.norm());
    });
    if (!matched) return false;
  }
  return true;
}

}  // namespace lcn
