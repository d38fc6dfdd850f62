#pragma once

// The s-decomposition of a homogeneous bivariate polynomial, expressed on
// filter coefficient sequences. Coefficient j multiplies x^{k-1-j} y^j.
//
// Slot q_i (1-based, stored at index i-1) collects the coefficients whose
// x-exponent is congruent to i-1 modulo s, in order of decreasing
// x-exponent. After substituting x^s -> x, y^s -> y the slot is the
// coefficient list of a homogeneous polynomial of degree floor((k-i)/s).

#include <string>
#include <vector>

#include "lcn/error.hpp"

namespace lcn {

// Degree of slot i (1-based) for output size k, or -1 for an empty slot.
inline int slot_degree(int k, int s, int i) {
  const int top = k - i;
  return top < 0 ? -1 : top / s;
}

template <class T>
std::vector<std::vector<T>> s_decompose(const std::vector<T>& coeffs, int s) {
  if (s < 1) throw InvalidArgument("stride must be positive");
  if (coeffs.empty()) throw InvalidArgument("empty coefficient sequence");
  const int k = static_cast<int>(coeffs.size());
  std::vector<std::vector<T>> slots(static_cast<std::size_t>(s));
  for (int j = 0; j < k; ++j) slots[static_cast<std::size_t>((k - 1 - j) % s)].push_back(coeffs[j]);
  return slots;
}

template <class T>
std::vector<T> s_recompose(const std::vector<std::vector<T>>& slots, int s, int k) {
  if (s < 1 || k < 1) throw InvalidArgument("stride and size must be positive");
  if (slots.size() != static_cast<std::size_t>(s)) throw InvalidArgument("wrong number of slots");
  for (int i = 1; i <= s; ++i)
    if (static_cast<int>(slots[i - 1].size()) != slot_degree(k, s, i) + 1)
      throw InvalidArgument("slot " + std::to_string(i) + " has inconsistent length");
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(k));
  std::vector<std::size_t> next(static_cast<std::size_t>(s), 0);
  for (int j = 0; j < k; ++j) {
    const auto slot = static_cast<std::size_t>((k - 1 - j) % s);
    out.push_back(slots[slot][next[slot]++]);
  }
  return out;
}

struct DecompProfile {
  int s = 1;
  int m = 0;                 // total degree k - 1
  std::vector<int> degrees;  // per slot; -1 marks an identically-zero slot
  int n_star_hi = 0;         // max degree over nonzero slots
  int n_star_lo = 0;         // min degree over nonzero slots
  int r = 0;                 // slots attaining n_star_hi

  int nonzero_slots() const;
};

DecompProfile profile(int k, int s);

}  // namespace lcn
