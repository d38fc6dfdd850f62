#pragma once

// Resultant matrices R_l of several binary forms and the two-layer
// neurovariety equations built from their minors.
//
// For forms q_i of degree n_i, R_l stacks max(0, l - n_i + 1) shifted copies
// of each coefficient row into l + 1 columns. The forms share a common
// factor of degree >= m iff rank R_{n* + n_* - m} < n* + n_* - 2m + 2, with
// n*, n_* the largest and smallest degree.

#include <vector>

#include "lcn/decomp.hpp"
#include "lcn/ideal.hpp"
#include "lcn/polyring.hpp"

namespace lcn {

struct RowOrigin {
  std::size_t poly;   // index into the input list
  std::size_t shift;  // leading column of the copy
};

struct ResultantMatrix {
  int l = 0;
  PolyMatrix matrix;
  std::vector<RowOrigin> rows;
};

// Each input is a coefficient list in decreasing x-power (degree = size - 1).
// Empty or all-zero inputs contribute no rows; all of them being zero is an
// error.
ResultantMatrix build_resultant(const std::vector<std::vector<MultiPoly>>& polys, int l);

struct TwoLayerIdealRecipe {
  int k1 = 0;
  int k2 = 0;
  int s1 = 0;
  int k = 0;
  DecompProfile profile;
  int m = 0;  // k2 - 1, the required common-factor degree
  int l1 = 0;
  int size1 = 0;
  int l2 = 0;
  int size2 = 0;
  bool i2_active = false;
  bool has_constant_slot = false;  // a slot of degree 0 feeds R_l
};

// Throws InvalidArgument unless k1, k2, s1 >= 2.
TwoLayerIdealRecipe two_layer_recipe(int k1, int k2, int s1);

// Symbolic slots q_1..q_{s1} of the generic filter c_0..c_{k-1}.
std::vector<std::vector<MultiPoly>> two_layer_slots(int k, int s1);

// R_{l1} (and R_{l2} when the second family is active).
std::vector<ResultantMatrix> two_layer_matrices(const TwoLayerIdealRecipe& recipe);

IdealGenerators two_layer_ideal(int k1, int k2, int s1);

}  // namespace lcn
