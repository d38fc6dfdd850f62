#pragma once

#include <span>
#include <string>
#include <vector>

#include "lcn/polyring.hpp"

namespace lcn {

struct Generator {
  MultiPoly poly;
  std::string provenance;  // recursion path that produced it
};

// One minor enumeration: which resultant matrix, and how much it produced.
struct BranchStats {
  std::string provenance;
  int l = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t minor_size = 0;
  std::size_t enumerated = 0;  // number of size x size submatrices
  std::size_t emitted = 0;     // distinct nonzero minors
};

struct IdealGenerators {
  std::vector<std::string> variables;
  std::vector<Generator> generators;
  std::vector<BranchStats> branches;
  std::vector<std::string> notes;

  std::size_t size() const { return generators.size(); }
  std::size_t enumerated_minors() const;

  // Appends another generator set over the same variables, prefixing its
  // provenance. Call finalize() afterwards.
  void absorb(const IdealGenerators& other, const std::string& prefix);

  // Drops duplicates up to sign and integer content, then sorts by degree
  // and leading terms. Survivors keep their first provenance.
  void finalize();
};

// True iff every generator vanishes exactly at the point.
bool check_membership_sample(const IdealGenerators& gens, std::span<const Rational> point);

// Index of the first generator that does not vanish, or gens.size().
std::size_t first_violated(const IdealGenerators& gens, std::span<const Rational> point);

}  // namespace lcn
