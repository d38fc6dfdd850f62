#include "lcn/eddegree.hpp"

#include <algorithm>
#include <set>

#include "lcn/error.hpp"

namespace lcn {

namespace {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// sum over compositions i_1 + .. + i_L = t with 0 <= i_j <= n_j of
// prod binom(n_j + 1, i_j) / (n_j - i_j)!
Rational composition_sum(const std::vector<int>& n, int t) {
  const std::size_t L = n.size();
  std::vector<int> i(L, 0);
  int partial = 0;
  Rational total = 0;
  // odometer over every i with sum <= t; digits never push the sum past t
  while (true) {
    if (partial == t) {
      Rational term = 1;
      for (std::size_t j = 0; j < L; ++j) {
        Rational f(binomial(static_cast<unsigned long>(n[j] + 1), static_cast<unsigned long>(i[j])),
                   factorial(static_cast<unsigned long>(n[j] - i[j])));
        f.canonicalize();
        term *= f;
      }
      total += term;
    }
    std::size_t j = L;
    while (j-- > 0) {
      if (i[j] < n[j] && partial < t) {
        ++i[j];
        ++partial;
        break;
      }
      partial -= i[j];
      i[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return total;
}

}  // namespace

EDReport ed_report(std::span<const int> filter_sizes) {
  if (filter_sizes.empty()) throw InvalidArgument("need at least one filter size");
  std::vector<int> n;
  for (int k : filter_sizes) {
    if (k < 2) throw InvalidArgument("filter sizes must be >= 2 (reduce the architecture first)");
    n.push_back(k - 1);
  }
  int kbar = 0;
  for (int v : n) kbar += v;

  Integer value = 0;
  for (int t = 0; t <= kbar; ++t) {
    Rational term = composition_sum(n, t);
    term *= factorial(static_cast<unsigned long>(kbar - t));
    term.canonicalize();
    if (term.get_den() != 1) throw InternalError("ED degree term is not integral");
    Integer weight = (Integer(1) << static_cast<unsigned long>(kbar + 1 - t)) - 1;
    Integer contrib = term.get_num() * weight;
    if (t % 2) value -= contrib;
    else value += contrib;
  }
  if (value <= 0) throw InternalError("ED degree must be positive");
  return {std::vector<int>(filter_sizes.begin(), filter_sizes.end()), kbar, value};
}

Integer generic_ed_degree(std::span<const int> filter_sizes) { return ed_report(filter_sizes).value; }

Integer architecture_ed_degree(const Architecture& arch) {
  const auto reduced = reduce_arch(arch);
  if (reduced.layers() == 1) return 1;
  return generic_ed_degree(reduced.filter_sizes);
}

Integer fully_connected_count(int m, int n, int r) {
  if (m < 1 || n < 1) throw InvalidArgument("matrix dimensions must be positive");
  if (r < 1 || r > std::min(m, n)) throw InvalidArgument("rank must lie in [1, min(m, n)]");
  return binomial(static_cast<unsigned long>(std::min(m, n)), static_cast<unsigned long>(r));
}

MergeNode merge_tree(std::span<const int> filter_sizes) {
  MergeNode node{ed_report(filter_sizes), {}};
  const auto& k = node.report.filter_sizes;
  if (k.size() <= 2) return node;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      std::vector<int> child = k;
      child[i] = k[i] + k[j] - 1;
      child.erase(child.begin() + static_cast<long>(j));
      auto key = child;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) node.children.push_back(merge_tree(child));
    }
  return node;
}

}  // namespace lcn
