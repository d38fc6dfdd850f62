// Exercises the shared library strictly through its C header.

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "lcn/lcn.h"

namespace {

template <class F>
std::string fetch(F&& call) {
  size_t needed = 0;
  const lcn_status s = call(nullptr, 0, &needed);
  REQUIRE((s == LCN_ERR_BUFFER_TOO_SMALL || s == LCN_OK));
  std::string out(needed + 1, '\0');
  REQUIRE(call(out.data(), out.size(), &needed) == LCN_OK);
  out.resize(needed);
  return out;
}

}  // namespace

TEST_CASE("architecture handles") {
  lcn_arch* a = nullptr;
  REQUIRE(lcn_arch_parse("2,2,2", "1,2,7", &a) == LCN_OK);
  size_t layers = 0;
  CHECK(lcn_arch_layers(a, &layers) == LCN_OK);
  CHECK(layers == 3);
  int k = 0, dim = 0, reduced = -1;
  CHECK(lcn_arch_output_size(a, &k) == LCN_OK);
  CHECK(k == 5);
  CHECK(lcn_arch_dimension(a, &dim) == LCN_OK);
  CHECK(dim == 4);
  CHECK(lcn_arch_is_reduced(a, &reduced) == LCN_OK);
  CHECK(reduced == 0);
  int strides[3] = {0, 0, 0};
  size_t n = 0;
  CHECK(lcn_arch_strides(a, strides, 3, &n) == LCN_OK);
  CHECK(strides[2] == 1);
  CHECK(lcn_arch_strides(a, strides, 2, &n) == LCN_ERR_BUFFER_TOO_SMALL);
  CHECK(n == 3);

  lcn_arch* r = nullptr;
  REQUIRE(lcn_arch_reduce(a, &r) == LCN_OK);
  CHECK(fetch([&](char* b, size_t c, size_t* m) { return lcn_arch_describe(r, b, c, m); }) == "k=(3,2) s=(2,1)");
  lcn_arch_destroy(r);
  lcn_arch_destroy(a);
}

TEST_CASE("errors carry a status and a message") {
  lcn_arch* a = nullptr;
  CHECK(lcn_arch_parse("2,0", "2,1", &a) == LCN_ERR_INVALID_ARGUMENT);
  CHECK(a == nullptr);
  CHECK(std::strlen(lcn_last_error()) > 0);
  CHECK(lcn_arch_parse("2,x", nullptr, &a) == LCN_ERR_INVALID_ARGUMENT);
  CHECK(lcn_arch_parse(nullptr, nullptr, &a) == LCN_ERR_NULL);
  const int bad[2] = {1, 2};
  size_t needed = 0;
  CHECK(lcn_ed_degree(bad, 2, nullptr, 0, &needed) == LCN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(lcn_status_name(LCN_ERR_UNSUPPORTED)) == "unsupported");
  lcn_arch_destroy(nullptr);
}

TEST_CASE("ideal through the C interface") {
  lcn_arch* a = nullptr;
  REQUIRE(lcn_arch_parse("3,2", "2,1", &a) == LCN_OK);
  lcn_ideal* g = nullptr;
  REQUIRE(lcn_ideal_compute(a, &g) == LCN_OK);
  size_t count = 0;
  CHECK(lcn_ideal_size(g, &count) == LCN_OK);
  CHECK(count == 1);
  CHECK(fetch([&](char* b, size_t c, size_t* n) { return lcn_ideal_generator_text(g, 0, b, c, n); }) ==
        "A*D^2 + B^2*E - B*C*D");
  const auto js = fetch([&](char* b, size_t c, size_t* n) { return lcn_ideal_generator_json(g, 0, b, c, n); });
  CHECK(js.find("\"coeff\":\"-1\"") != std::string::npos);
  CHECK(fetch([&](char* b, size_t c, size_t* n) { return lcn_ideal_generator_provenance(g, 0, b, c, n); }) ==
        "two_layer(3,2;2)/I1");
  size_t needed = 0;
  char tiny[4];
  CHECK(lcn_ideal_generator_text(g, 0, tiny, sizeof tiny, &needed) == LCN_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == std::strlen("A*D^2 + B^2*E - B*C*D"));
  CHECK(lcn_ideal_generator_text(g, 5, tiny, sizeof tiny, &needed) == LCN_ERR_INVALID_ARGUMENT);

  // (1,1,2,1,1) lies on the variety, (1,0,0,0,1) does not
  const char* on[5] = {"1", "1", "2", "1", "1"};
  const char* off[5] = {"1", "0", "0", "1/2", "1"};
  size_t first = 99;
  CHECK(lcn_ideal_check_point(g, on, 5, &first) == LCN_OK);
  CHECK(first == 1);
  CHECK(lcn_ideal_check_point(g, off, 5, &first) == LCN_OK);
  CHECK(first == 0);
  CHECK(lcn_ideal_check_point(g, on, 4, &first) == LCN_ERR_INVALID_ARGUMENT);

  const auto text = fetch([&](char* b, size_t c, size_t* n) { return lcn_ideal_render(g, LCN_FORMAT_TEXT, 0, b, c, n); });
  CHECK(text == "A*D^2 + B^2*E - B*C*D\n");
  const auto json = fetch([&](char* b, size_t c, size_t* n) { return lcn_ideal_render(g, LCN_FORMAT_JSON, 0, b, c, n); });
  CHECK(json.find("\"vars\"") != std::string::npos);
  CHECK(json.find("\"c4\"") != std::string::npos);
  lcn_ideal_destroy(g);
  lcn_arch_destroy(a);
}

TEST_CASE("ED degrees through the C interface") {
  const int k[4] = {2, 3, 4, 5};
  CHECK(fetch([&](char* b, size_t c, size_t* n) { return lcn_ed_degree(k, 4, b, c, n); }) == "2976084");
  const auto tree = fetch([&](char* b, size_t c, size_t* n) { return lcn_ed_merge_tree(k, 4, LCN_FORMAT_TEXT, b, c, n); });
  CHECK(tree.find("C_{2,3,8} = 12698") != std::string::npos);
  CHECK(tree.find("C_{2,10} = 38") != std::string::npos);
  const auto table = fetch([&](char* b, size_t c, size_t* n) { return lcn_ed_table(3, 3, b, c, n); });
  CHECK(table == "k1\\k2\t2\t3\n2\t6\t10\n3\t10\t39\n");
  CHECK(fetch([&](char* b, size_t c, size_t* n) { return lcn_fully_connected_count(5, 4, 2, b, c, n); }) == "6");
  lcn_arch* a = nullptr;
  REQUIRE(lcn_arch_parse("2,2", "3,1", &a) == LCN_OK);
  CHECK(fetch([&](char* b, size_t c, size_t* n) { return lcn_arch_ed_degree(a, b, c, n); }) == "6");
  lcn_arch_destroy(a);
}

TEST_CASE("compose and resultant renderings") {
  lcn_arch* a = nullptr;
  REQUIRE(lcn_arch_parse("2,2", "2,1", &a) == LCN_OK);
  const auto c = fetch([&](char* b, size_t cap, size_t* n) {
    return lcn_compose_render(a, "2,3;5,7", 1, LCN_FORMAT_TEXT, b, cap, n);
  });
  CHECK(c.find("w = (10, 15, 14, 21)") != std::string::npos);
  size_t needed = 0;
  CHECK(lcn_compose_render(a, "2,3;5", 1, LCN_FORMAT_TEXT, nullptr, 0, &needed) == LCN_ERR_INVALID_ARGUMENT);
  const auto r = fetch([&](char* b, size_t cap, size_t* n) { return lcn_resultant_render(a, 1, LCN_FORMAT_TEXT, b, cap, n); });
  CHECK(r.find("[ A  C ]") != std::string::npos);
  lcn_arch_destroy(a);
}

TEST_CASE("critical points through the C interface") {
  lcn_arch* a = nullptr;
  REQUIRE(lcn_arch_parse("2,2", "2,1", &a) == LCN_OK);
  lcn_solve_options o;
  lcn_solve_options_default(&o);
  CHECK(o.starts == 500);
  CHECK(o.seed == 42);
  CHECK(o.data_seed == 7);
  lcn_critpoints* cp = nullptr;
  REQUIRE(lcn_critpoints_training(a, &o, &cp) == LCN_OK);
  size_t distinct = 0, real = 0, starts = 0;
  CHECK(lcn_critpoints_counts(cp, &distinct, &real, &starts) == LCN_OK);
  CHECK(distinct == 6);
  int verdict = 5, closed = 0;
  CHECK(lcn_critpoints_verdict(cp, &verdict) == LCN_OK);
  CHECK(verdict == 0);
  CHECK(lcn_critpoints_conjugation_closed(cp, &closed) == LCN_OK);
  CHECK(closed == 1);
  CHECK(fetch([&](char* b, size_t c, size_t* n) { return lcn_critpoints_expected(cp, b, c, n); }) == "6");
  double re[4], im[4], res = 1;
  int is_real = -1;
  CHECK(lcn_critpoints_point(cp, 0, re, im, 4, &res, &is_real) == LCN_OK);
  CHECK(res < 1e-10);
  CHECK(lcn_critpoints_point(cp, 0, re, im, 3, &res, &is_real) == LCN_ERR_INVALID_ARGUMENT);
  lcn_critpoints_destroy(cp);

  lcn_arch* deep = nullptr;
  REQUIRE(lcn_arch_parse("2,2,2", "2,2,1", &deep) == LCN_OK);
  CHECK(lcn_critpoints_training(deep, &o, &cp) == LCN_ERR_UNSUPPORTED);
  lcn_arch_destroy(deep);
  lcn_arch_destroy(a);

  const double T[16] = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
  const double u[4] = {1.3, -0.4, 0.7, 2.1};
  REQUIRE(lcn_critpoints_weighted(4, T, u, "AD-BC", "2", &o, &cp) == LCN_OK);
  CHECK(lcn_critpoints_counts(cp, &distinct, &real, nullptr) == LCN_OK);
  CHECK(distinct == 2);
  CHECK(real == 2);
  lcn_critpoints_destroy(cp);
}

TEST_CASE("verification through the C interface") {
  lcn_arch* a = nullptr;
  REQUIRE(lcn_arch_parse("5,2", "3,1", &a) == LCN_OK);
  lcn_verify_report* r = nullptr;
  REQUIRE(lcn_verify(a, 100, 1, 20, &r) == LCN_OK);
  size_t failures = 9, violations = 0, trials = 0;
  int rank = 0, expected = 0, passed = 0;
  CHECK(lcn_verify_summary(r, &failures, &rank, &expected, &violations, &trials) == LCN_OK);
  CHECK(failures == 0);
  CHECK(rank == 6);
  CHECK(expected == 6);
  CHECK(violations == 20);
  CHECK(trials == 20);
  CHECK(lcn_verify_passed(r, &passed) == LCN_OK);
  CHECK(passed == 1);
  const auto text = fetch([&](char* b, size_t c, size_t* n) { return lcn_verify_render(r, LCN_FORMAT_TEXT, b, c, n); });
  CHECK(text.find("PASS") != std::string::npos);
  lcn_verify_destroy(r);
  lcn_arch_destroy(a);
}
