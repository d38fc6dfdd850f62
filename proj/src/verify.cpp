#include "lcn/verify.hpp"

#include <Eigen/Dense>

#include "lcn/idealgen.hpp"

namespace lcn {

int jacobian_rank(const Architecture& arch, const std::vector<std::vector<double>>& layers,
                  double rel_tol) {
  const auto info = validate(arch);
  if (layers.size() != info.layers) throw InvalidArgument("wrong number of layer filters");
  int params = 0;
  for (int k : info.arch.filter_sizes) params += k;
  Eigen::MatrixXd J(info.output_size, params);
  // The map is multilinear, so each column is the composition with one layer
  // replaced by a unit vector.
  int col = 0;
  for (std::size_t l = 0; l < info.layers; ++l) {
    for (int t = 0; t < info.arch.filter_sizes[l]; ++t, ++col) {
      auto probe = layers;
      std::fill(probe[l].begin(), probe[l].end(), 0.0);
      probe[l][static_cast<std::size_t>(t)] = 1.0;
      const auto w = compose_filters<double>(info.arch, probe);
      for (int i = 0; i < info.output_size; ++i) J(i, col) = w[static_cast<std::size_t>(i)];
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) >= rel_tol * sv(0)) ++rank;
  return rank;
}

VerificationReport verify_generators(const Architecture& arch, const IdealGenerators& gens,
                                     std::size_t n_samples, std::uint64_t seed) {
  const auto info = validate(arch);
  VerificationReport rep;
  rep.arch = info.arch;
  rep.samples_tested = n_samples;
  rep.generators_tested = gens.size();
  rep.expected_dim = expected_dimension(info.arch);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const auto sample = sample_neuromanifold(info.arch, seed + i);
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens.generators[g].poly.eval(std::span<const Rational>(sample.filter)) != 0)
        rep.failures.emplace_back(i, g);
  }
  for (int attempt = 0; attempt < 2; ++attempt) {
    ++rep.rank_attempts;
    const auto point = sample_neuromanifold_numeric(info.arch, seed + 0x9e3779b97f4a7c15ULL * (attempt + 1));
    rep.jacobian_rank = jacobian_rank(info.arch, point.layers);
    if (rep.jacobian_rank == rep.expected_dim) break;
  }
  return rep;
}

VerificationReport verify_ideal(const Architecture& arch, std::size_t n_samples, std::uint64_t seed) {
  return verify_generators(arch, vanishing_generators(arch), n_samples, seed);
}

std::size_t smoke_nonmembership(const IdealGenerators& gens, std::size_t n_trials, std::uint64_t seed) {
  // Wide numerators and denominators; the small range used for network
  // samples lands on low-degree hypersurfaces by accident too often.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  const std::size_t k = gens.variables.size();
  std::size_t violations = 0;
  for (std::size_t t = 0; t < n_trials; ++t) {
    std::vector<Rational> point(k);
    bool all_zero = true;
    do {
      all_zero = true;
      for (auto& v : point) {
        const long p = num(rng);
        const long q = den(rng);
        v = Rational(Integer(p), Integer(q));
        v.canonicalize();
        if (v != 0) all_zero = false;
      }
    } while (all_zero);
    if (first_violated(gens, point) < gens.size()) ++violations;
  }
  return violations;
}

std::size_t smoke_nonmembership(const Architecture& arch, std::size_t n_trials, std::uint64_t seed) {
  return smoke_nonmembership(vanishing_generators(arch), n_trials, seed);
}

}  // namespace lcn
