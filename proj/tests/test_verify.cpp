#include "doctest.h"
#include "lcn/idealgen.hpp"
#include "lcn/verify.hpp"

using namespace lcn;

TEST_CASE("verify_ideal examples") {
  auto r = verify_ideal({{5, 2}, {3, 1}}, 100, 1);
  CHECK(r.failures.empty());
  CHECK(r.jacobian_rank == 6);
  CHECK(r.expected_dim == 6);
  CHECK(r.generators_tested == 5);
  CHECK(r.passed());

  r = verify_ideal({{2, 2}, {2, 1}}, 100, 1);
  CHECK(r.failures.empty());
  CHECK(r.jacobian_rank == 3);

  r = verify_ideal({{4}, {1}}, 10, 1);
  CHECK(r.failures.empty());
  CHECK(r.generators_tested == 0);
  CHECK(r.jacobian_rank == 4);
}

TEST_CASE("failures are recorded, not thrown") {
  IdealGenerators bogus;
  bogus.variables = coefficient_variables(4);
  bogus.generators.push_back({MultiPoly::variable(bogus.variables, 0), "test"});
  const auto r = verify_generators({{2, 2}, {2, 1}}, bogus, 20, 3);
  CHECK_FALSE(r.failures.empty());
  CHECK_FALSE(r.passed());
  CHECK(r.failures.front().second == 0);
}

TEST_CASE("smoke_nonmembership examples") {
  CHECK(smoke_nonmembership(Architecture{{2, 2}, {2, 1}}, 20, 1) == 20);
  CHECK(smoke_nonmembership(Architecture{{3, 2, 2}, {2, 2, 1}}, 20, 1) == 20);
  IdealGenerators empty;
  empty.variables = coefficient_variables(3);
  CHECK(smoke_nonmembership(empty, 10, 1) == 0);
}

TEST_CASE("jacobian rank detects degenerate points") {
  const Architecture a{{2, 2}, {2, 1}};
  CHECK(jacobian_rank(a, {{1.0, 2.0}, {3.0, -1.0}}) == 3);
  CHECK(jacobian_rank(a, {{0.0, 0.0}, {3.0, -1.0}}) < 3);
  CHECK(jacobian_rank(a, {{0.0, 0.0}, {0.0, 0.0}}) == 0);
}

TEST_CASE("reduction does not change verification") {
  const Architecture a{{2, 2, 2}, {1, 2, 1}};
  const auto r1 = verify_ideal(a, 50, 9);
  const auto r2 = verify_ideal(reduce_arch(a), 50, 9);
  CHECK(r1.failures.empty());
  CHECK(r2.failures.empty());
  CHECK(r2.jacobian_rank == r2.expected_dim);
  // the unreduced parametrization is redundant; its image has the reduced dimension
  CHECK(r1.jacobian_rank == r2.expected_dim);
}
