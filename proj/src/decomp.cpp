#include "lcn/decomp.hpp"

#include <algorithm>

namespace lcn {

int DecompProfile::nonzero_slots() const {
  return static_cast<int>(std::count_if(degrees.begin(), degrees.end(), [](int d) { return d >= 0; }));
}

DecompProfile profile(int k, int s) {
  if (k < 1 || s < 1) throw InvalidArgument("profile needs k >= 1 and s >= 1");
  DecompProfile p;
  p.s = s;
  p.m = k - 1;
  for (int i = 1; i <= s; ++i) p.degrees.push_back(slot_degree(k, s, i));
  // slot 1 always has degree floor((k-1)/s) >= 0
  p.n_star_hi = p.degrees.front();
  p.n_star_lo = p.n_star_hi;
  for (int d : p.degrees)
    if (d >= 0) p.n_star_lo = std::min(p.n_star_lo, d);
  p.r = static_cast<int>(std::count(p.degrees.begin(), p.degrees.end(), p.n_star_hi));
  return p;
}

}  // namespace lcn
