#pragma once

#include "lcn/architecture.hpp"
#include "lcn/ideal.hpp"

namespace lcn {

// Polynomials in c_0..c_{k-1} whose common complex zero locus is the
// neurovariety of the architecture. The set is not radical and makes no
// minimality claim.
//
// The architecture is reduced first. A reduced two-layer architecture yields
// the resultant-minor equations of two_layer_ideal; with three or more layers
// the equations of the architecture with layers 1 and 2 merged are joined
// with those of the two-layer architecture (k_1, (k - k_1)/s_1 + 1; s_1).
//
// Leading size-1 layers with stride s > 1 confine the filter to multiples of
// s; those cases add the linear equations c_j = 0 for j not divisible by s.
IdealGenerators vanishing_generators(const Architecture& arch);

}  // namespace lcn
