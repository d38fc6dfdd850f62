#include "lcn/architecture.hpp"

#include <sstream>

namespace lcn {

ArchitectureInfo validate(const Architecture& arch) {
  const auto L = arch.filter_sizes.size();
  if (L == 0) throw InvalidArgument("architecture needs at least one layer");
  if (arch.strides.size() != L)
    throw InvalidArgument("filter sizes and strides have different lengths");
  for (std::size_t l = 0; l < L; ++l) {
    if (arch.filter_sizes[l] < 1) throw InvalidArgument("filter sizes must be positive");
    if (arch.strides[l] < 1) throw InvalidArgument("strides must be positive");
  }

  ArchitectureInfo info;
  info.arch = arch;
  info.arch.strides.back() = 1;
  info.layers = L;
  info.cumulative.resize(L);
  long S = 1;
  long k = info.arch.filter_sizes[0];
  for (std::size_t l = 0; l < L; ++l) {
    info.cumulative[l] = S;
    if (l > 0) k += (info.arch.filter_sizes[l] - 1) * S;
    S *= info.arch.strides[l];
  }
  if (k > (1L << 30)) throw InvalidArgument("output filter size overflows");
  info.output_size = static_cast<int>(k);
  info.total_stride = S;

  info.reduced = true;
  for (std::size_t l = 0; l < L; ++l) {
    if (info.arch.filter_sizes[l] <= 1) info.reduced = false;
    if (l + 1 < L && info.arch.strides[l] <= 1) info.reduced = false;
  }
  return info;
}

int output_filter_size(const Architecture& arch) { return validate(arch).output_size; }

int expected_dimension(const Architecture& arch) {
  const auto info = validate(arch);
  int dim = 0;
  for (int k : info.arch.filter_sizes) dim += k;
  return dim - static_cast<int>(info.layers - 1);
}

Architecture reduce_arch(const Architecture& arch) {
  Architecture a = validate(arch).arch;
  while (a.layers() > 1) {
    const auto L = a.layers();
    std::size_t first = L;  // left index of the pair to merge
    for (std::size_t i = 0; i < L && first == L; ++i) {
      if (i + 1 < L && a.strides[i] == 1) first = i;
      else if (a.filter_sizes[i] == 1) first = i == 0 ? 0 : i - 1;
    }
    if (first == L) break;
    const int k = a.filter_sizes[first] + a.strides[first] * (a.filter_sizes[first + 1] - 1);
    const int s = a.strides[first] * a.strides[first + 1];
    a.filter_sizes[first] = k;
    a.strides[first] = s;
    a.filter_sizes.erase(a.filter_sizes.begin() + static_cast<long>(first) + 1);
    a.strides.erase(a.strides.begin() + static_cast<long>(first) + 1);
    a.strides.back() = 1;
  }
  return a;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw InvalidArgument("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty integer list");
  return out;
}

std::string to_string(const Architecture& arch) {
  std::ostringstream out;
  auto list = [&out](const std::vector<int>& v) {
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
  };
  out << "k=";
  list(arch.filter_sizes);
  out << " s=";
  list(arch.strides);
  return out.str();
}

MultiPoly pi_s(std::span<const Integer> w, int s) {
  if (s < 1) throw InvalidArgument("stride must be positive");
  if (w.empty()) throw InvalidArgument("empty filter");
  MultiPoly p({"x", "y"});
  const auto k = static_cast<std::uint32_t>(w.size());
  const auto us = static_cast<std::uint32_t>(s);
  for (std::uint32_t j = 0; j < k; ++j) p.add_term(Monomial{{us * (k - 1 - j), us * j}}, w[j]);
  return p;
}

MultiPoly pi_s(std::span<const MultiPoly> w, int s) {
  if (s < 1) throw InvalidArgument("stride must be positive");
  if (w.empty()) throw InvalidArgument("empty filter");
  const auto& base = w.front().variables();
  auto vars = base;
  vars.push_back("x");
  vars.push_back("y");
  std::vector<std::size_t> keep(base.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  const auto k = static_cast<std::uint32_t>(w.size());
  const auto us = static_cast<std::uint32_t>(s);
  MultiPoly p(vars);
  for (std::uint32_t j = 0; j < k; ++j) {
    if (w[j].variables() != base) throw InvalidArgument("filter entries live in different rings");
    Monomial xy{std::vector<std::uint32_t>(vars.size(), 0)};
    xy.exps[base.size()] = us * (k - 1 - j);
    xy.exps[base.size() + 1] = us * j;
    MultiPoly mono(vars);
    mono.add_term(xy, 1);
    p += w[j].embed(vars, keep) * mono;
  }
  return p;
}

std::vector<std::size_t> layer_dimensions(const Architecture& arch, std::size_t d_out) {
  const auto info = validate(arch);
  if (d_out < 1) throw InvalidArgument("output dimension must be positive");
  std::vector<std::size_t> d(info.layers + 1);
  d[info.layers] = d_out;
  for (std::size_t l = info.layers; l-- > 0;)
    d[l] = static_cast<std::size_t>(info.arch.filter_sizes[l]) +
           (d[l + 1] - 1) * static_cast<std::size_t>(info.arch.strides[l]);
  return d;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 10);
  const int p = num(rng);
  const int q_den = den(rng);
  Rational q(p, q_den);
  q.canonicalize();
  return q;
}

NeuromanifoldSample sample_neuromanifold(const Architecture& arch, std::uint64_t seed) {
  const auto info = validate(arch);
  std::mt19937_64 rng(seed);
  NeuromanifoldSample s;
  for (int k : info.arch.filter_sizes) {
    std::vector<Rational> w(static_cast<std::size_t>(k));
    for (auto& x : w) x = random_rational(rng);
    s.layers.push_back(std::move(w));
  }
  s.filter = compose_filters<Rational>(info.arch, s.layers);
  return s;
}

NumericSample sample_neuromanifold_numeric(const Architecture& arch, std::uint64_t seed) {
  const auto info = validate(arch);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  NumericSample s;
  for (int k : info.arch.filter_sizes) {
    std::vector<double> w(static_cast<std::size_t>(k));
    for (auto& x : w) x = gauss(rng);
    s.layers.push_back(std::move(w));
  }
  s.filter = compose_filters<double>(info.arch, s.layers);
  return s;
}

}  // namespace lcn
