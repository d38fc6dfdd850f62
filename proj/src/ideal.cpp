#include "lcn/ideal.hpp"

#include <algorithm>
#include <set>

#include "lcn/error.hpp"

namespace lcn {

std::size_t IdealGenerators::enumerated_minors() const {
  std::size_t n = 0;
  for (const auto& b : branches) n += b.enumerated;
  return n;
}

void IdealGenerators::absorb(const IdealGenerators& other, const std::string& prefix) {
  if (other.variables != variables) throw InternalError("absorbing generators over other variables");
  for (const auto& g : other.generators) generators.push_back({g.poly, prefix + g.provenance});
  for (auto b : other.branches) {
    b.provenance = prefix + b.provenance;
    branches.push_back(std::move(b));
  }
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

namespace {

bool generator_less(const MultiPoly& a, const MultiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const GrlexGreater order;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (order(ia->first, ib->first)) return true;
    if (order(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace

void IdealGenerators::finalize() {
  std::set<std::string> seen;
  std::vector<Generator> kept;
  for (auto& g : generators) {
    if (g.poly.is_zero()) continue;
    if (!seen.insert(to_text(g.poly.primitive_part().sign_normalized())).second) continue;
    kept.push_back({g.poly.sign_normalized(), std::move(g.provenance)});
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Generator& a, const Generator& b) {
    return generator_less(a.poly, b.poly);
  });
  generators = std::move(kept);
}

std::size_t first_violated(const IdealGenerators& gens, std::span<const Rational> point) {
  if (point.size() != gens.variables.size())
    throw InvalidArgument("point has " + std::to_string(point.size()) + " coordinates, expected " +
                          std::to_string(gens.variables.size()));
  // Homogeneous generators vanish at x iff they vanish at D x, so clear
  // denominators once and evaluate over the integers.
  Integer den = 1;
  for (const auto& c : point) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> scaled;
  scaled.reserve(point.size());
  for (const auto& c : point) {
    Rational v = c * den;
    scaled.push_back(v.get_num());
  }
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    const auto& p = gens.generators[i].poly;
    const bool zero = p.is_homogeneous() ? p.eval(std::span<const Integer>(scaled)) == 0
                                         : p.eval(point) == 0;
    if (!zero) return i;
  }
  return gens.generators.size();
}

bool check_membership_sample(const IdealGenerators& gens, std::span<const Rational> point) {
  return first_violated(gens, point) == gens.generators.size();
}

}  // namespace lcn
