#pragma once

// Sampling oracles for generated equations: exact vanishing on the
// neuromanifold, non-vanishing off it, and the dimension of the
// parametrization.

#include <cstdint>
#include <utility>
#include <vector>

#include "lcn/architecture.hpp"
#include "lcn/ideal.hpp"

namespace lcn {

struct VerificationReport {
  Architecture arch;
  std::size_t samples_tested = 0;
  std::size_t generators_tested = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // (sample, generator)
  int jacobian_rank = 0;
  int expected_dim = 0;
  int rank_attempts = 0;

  bool passed() const { return failures.empty() && jacobian_rank == expected_dim; }
};

// Rank of the Jacobian of the layer-to-filter map at a point, with singular
// values below rel_tol * sigma_max counted as zero.
int jacobian_rank(const Architecture& arch, const std::vector<std::vector<double>>& layers,
                  double rel_tol = 1e-8);

// Samples come from sample_neuromanifold(arch, seed + i). The rank is
// measured at a Gaussian sample; a deficient rank is retried once at a
// fresh point.
VerificationReport verify_ideal(const Architecture& arch, std::size_t n_samples, std::uint64_t seed);

// Same as above with caller-supplied equations.
VerificationReport verify_generators(const Architecture& arch, const IdealGenerators& gens,
                                     std::size_t n_samples, std::uint64_t seed);

// Number of random nonzero rational points of the ambient space (entries
// p/q with |p|, q <= 10^6) that violate at least one generator.
std::size_t smoke_nonmembership(const Architecture& arch, std::size_t n_trials, std::uint64_t seed);
std::size_t smoke_nonmembership(const IdealGenerators& gens, std::size_t n_trials, std::uint64_t seed);

}  // namespace lcn
