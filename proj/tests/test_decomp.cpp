#include <random>

#include "doctest.h"
#include "lcn/architecture.hpp"
#include "lcn/decomp.hpp"
#include "oracles.hpp"

using namespace lcn;

namespace {

std::vector<std::string> letters(const std::string& s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

}  // namespace

TEST_CASE("s_decompose examples") {
  using V = std::vector<std::vector<std::string>>;
  CHECK(s_decompose(letters("ABCDE"), 2) == V{letters("ACE"), letters("BD")});
  CHECK(s_decompose(letters("ABCDEFGH"), 3) == V{letters("BEH"), letters("ADG"), letters("CF")});
  CHECK(s_decompose(letters("ABCDEFGHI"), 4) == V{letters("AEI"), letters("DH"), letters("CG"), letters("BF")});
  CHECK(s_decompose(letters("ABCDEFGHI"), 2) == V{letters("ACEGI"), letters("BDFH")});
  CHECK(s_decompose(letters("ABCD"), 1) == V{letters("ABCD")});
  CHECK(s_decompose(letters("AB"), 3) == V{letters("B"), letters("A"), {}});
  CHECK_THROWS_AS(s_decompose(letters("AB"), 0), InvalidArgument);
}

TEST_CASE("s_recompose inverts s_decompose") {
  const auto v = letters("ABCDEFGHI");
  CHECK(s_recompose(s_decompose(v, 4), 4, 9) == v);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> w;
    for (int i = 0; i < 12; ++i) w.push_back(oracle::small_rational(rng));
    CHECK(s_recompose(s_decompose(w, 5), 5, 12) == w);
  }
  const std::vector<std::vector<int>> unit = {{1, 0}, {0}};
  CHECK(s_recompose(unit, 2, 3) == std::vector<int>{1, 0, 0});
  const std::vector<std::vector<int>> bad = {{1, 0}, {0, 0}};
  CHECK_THROWS_AS(s_recompose(bad, 2, 3), InvalidArgument);
}

TEST_CASE("profile examples") {
  auto p = profile(8, 3);
  CHECK(p.degrees == std::vector<int>{2, 2, 1});
  CHECK(p.n_star_hi == 2);
  CHECK(p.n_star_lo == 1);
  CHECK(p.r == 2);
  p = profile(5, 2);
  CHECK(p.degrees == std::vector<int>{2, 1});
  CHECK(p.r == 1);
  CHECK(p.n_star_lo == 1);
  p = profile(9, 4);
  CHECK(p.degrees == std::vector<int>{2, 1, 1, 1});
  CHECK(p.r == 1);
  p = profile(2, 3);
  CHECK(p.degrees == std::vector<int>{0, 0, -1});
  CHECK(p.nonzero_slots() == 2);
}

TEST_CASE("profile bookkeeping for all 1 <= s <= k <= 30") {
  for (int k = 1; k <= 30; ++k)
    for (int s = 1; s <= k; ++s) {
      const auto p = profile(k, s);
      CHECK(p.m == k - 1);
      CHECK(p.n_star_hi == (k - 1) / s);
      for (int i = 1; i <= s; ++i) CHECK(p.degrees[static_cast<std::size_t>(i - 1)] == (k - i) / s);
      CHECK(p.n_star_hi - p.n_star_lo >= 0);
      CHECK(p.n_star_hi - p.n_star_lo <= 1);
      for (int i = 0; i < p.r; ++i) CHECK(p.degrees[static_cast<std::size_t>(i)] == p.n_star_hi);
      // slot lengths of an actual decomposition agree with the profile
      std::vector<int> w(static_cast<std::size_t>(k), 1);
      const auto slots = s_decompose(w, s);
      for (int i = 0; i < s; ++i)
        CHECK(static_cast<int>(slots[static_cast<std::size_t>(i)].size()) == p.degrees[static_cast<std::size_t>(i)] + 1);
    }
}

TEST_CASE("decomposition is linear") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> p, q, comb;
    const Rational a = oracle::small_rational(rng), b = oracle::small_rational(rng);
    for (int i = 0; i < 11; ++i) {
      p.push_back(oracle::small_rational(rng));
      q.push_back(oracle::small_rational(rng));
      comb.push_back(a * p.back() + b * q.back());
    }
    const auto sp = s_decompose(p, 3), sq = s_decompose(q, 3), sc = s_decompose(comb, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < sc[i].size(); ++j) CHECK(sc[i][j] == a * sp[i][j] + b * sq[i][j]);
  }
}

TEST_CASE("decomposition commutes with multiplication by polynomials in x^s, y^s") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const int s = 2 + t % 3;
    std::vector<Rational> q(7), w2(3);
    for (auto& x : q) x = oracle::small_rational(rng);
    for (auto& x : w2) x = oracle::small_rational(rng);
    // product filter of pi_s(w2) * pi_1(q)
    const auto prod = oracle::convolve(q, oracle::upsample(w2, s));
    const auto sp = s_decompose(prod, s);
    const auto sq = s_decompose(q, s);
    for (int i = 0; i < s; ++i) {
      const auto& slot = sq[static_cast<std::size_t>(i)];
      const auto expected = slot.empty() ? std::vector<Rational>{} : oracle::convolve(slot, w2);
      CHECK(sp[static_cast<std::size_t>(i)] == expected);
    }
  }
}
