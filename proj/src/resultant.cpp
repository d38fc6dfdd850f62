#include "lcn/resultant.hpp"

#include <algorithm>

#include "lcn/error.hpp"

namespace lcn {

namespace {

bool is_zero_poly(const std::vector<MultiPoly>& q) {
  return std::all_of(q.begin(), q.end(), [](const MultiPoly& c) { return c.is_zero(); });
}

}  // namespace

ResultantMatrix build_resultant(const std::vector<std::vector<MultiPoly>>& polys, int l) {
  if (l < 0) throw InvalidArgument("resultant degree l must be non-negative");
  const std::vector<std::string>* vars = nullptr;
  for (const auto& q : polys)
    if (!is_zero_poly(q)) {
      vars = &q.front().variables();
      break;
    }
  if (!vars) throw InvalidArgument("resultant matrix of zero polynomials");

  const auto cols = static_cast<std::size_t>(l) + 1;
  std::vector<RowOrigin> origins;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (is_zero_poly(polys[i])) continue;
    const int n = static_cast<int>(polys[i].size()) - 1;
    const int copies = std::max(0, l - n + 1);
    for (int t = 0; t < copies; ++t) origins.push_back({i, static_cast<std::size_t>(t)});
  }

  ResultantMatrix r;
  r.l = l;
  r.matrix = PolyMatrix(origins.size(), cols, *vars);
  for (std::size_t row = 0; row < origins.size(); ++row) {
    const auto& q = polys[origins[row].poly];
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j].variables() != *vars) throw InvalidArgument("coefficients live in different rings");
      r.matrix.at(row, origins[row].shift + j) = q[j];
    }
  }
  r.rows = std::move(origins);
  return r;
}

TwoLayerIdealRecipe two_layer_recipe(int k1, int k2, int s1) {
  if (k1 < 2 || k2 < 2 || s1 < 2)
    throw InvalidArgument("two-layer architecture (" + std::to_string(k1) + "," +
                          std::to_string(k2) + ";" + std::to_string(s1) +
                          ") is not reduced; apply reduce_arch first");
  TwoLayerIdealRecipe rc;
  rc.k1 = k1;
  rc.k2 = k2;
  rc.s1 = s1;
  rc.k = k1 + s1 * (k2 - 1);
  rc.profile = profile(rc.k, s1);
  rc.m = k2 - 1;
  const int hi = rc.profile.n_star_hi;
  const int lo = rc.profile.n_star_lo;
  rc.l1 = hi + lo - rc.m;
  rc.size1 = hi + lo - 2 * rc.m + 2;
  rc.l2 = 2 * hi - rc.m;
  rc.size2 = 2 * hi - 2 * rc.m + 2;
  rc.i2_active = rc.profile.r > 1 && rc.profile.r < rc.profile.nonzero_slots();
  rc.has_constant_slot = lo == 0;
  if (rc.l1 < 0 || rc.size1 < 1) throw InternalError("degenerate two-layer resultant recipe");
  return rc;
}

std::vector<std::vector<MultiPoly>> two_layer_slots(int k, int s1) {
  const auto vars = coefficient_variables(static_cast<std::size_t>(k));
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(vars.size());
  for (std::size_t j = 0; j < vars.size(); ++j) coeffs.push_back(MultiPoly::variable(vars, j));
  return s_decompose(coeffs, s1);
}

std::vector<ResultantMatrix> two_layer_matrices(const TwoLayerIdealRecipe& rc) {
  auto slots = two_layer_slots(rc.k, rc.s1);
  std::vector<ResultantMatrix> out;
  out.push_back(build_resultant(slots, rc.l1));
  if (rc.i2_active) {
    slots.resize(static_cast<std::size_t>(rc.profile.r));
    out.push_back(build_resultant(slots, rc.l2));
  }
  return out;
}

IdealGenerators two_layer_ideal(int k1, int k2, int s1) {
  const auto rc = two_layer_recipe(k1, k2, s1);
  const auto mats = two_layer_matrices(rc);
  const std::string tag = "two_layer(" + std::to_string(k1) + "," + std::to_string(k2) + ";" +
                          std::to_string(s1) + ")";

  IdealGenerators ideal;
  ideal.variables = coefficient_variables(static_cast<std::size_t>(rc.k));
  if (rc.has_constant_slot) ideal.notes.push_back(tag + ": degree-0 slot enters R_" + std::to_string(rc.l1));

  for (std::size_t family = 0; family < mats.size(); ++family) {
    const auto& R = mats[family];
    const auto size = static_cast<std::size_t>(family == 0 ? rc.size1 : rc.size2);
    const std::string label = tag + (family == 0 ? "/I1" : "/I2");
    auto found = minors(R.matrix, size);
    ideal.branches.push_back({label, R.l, R.matrix.rows(), R.matrix.cols(), size,
                              minor_count(R.matrix.rows(), R.matrix.cols(), size), found.size()});
    for (auto& g : found) ideal.generators.push_back({std::move(g), label});
  }
  ideal.finalize();
  return ideal;
}

}  // namespace lcn
