#include "lcn/idealgen.hpp"

#include "lcn/resultant.hpp"

namespace lcn {

namespace {

IdealGenerators reduced_generators(const Architecture& a) {
  const auto info = validate(a);
  const auto& k = info.arch.filter_sizes;
  const auto& s = info.arch.strides;
  if (info.layers == 1) {
    IdealGenerators none;
    none.variables = coefficient_variables(static_cast<std::size_t>(info.output_size));
    return none;
  }
  if (info.layers == 2) return two_layer_ideal(k[0], k[1], s[0]);

  Architecture merged;
  merged.filter_sizes.push_back(k[0] + s[0] * (k[1] - 1));
  merged.strides.push_back(s[0] * s[1]);
  for (std::size_t l = 2; l < info.layers; ++l) {
    merged.filter_sizes.push_back(k[l]);
    merged.strides.push_back(s[l]);
  }
  const int rest = info.output_size - k[0];
  if (rest % s[0] != 0) throw InternalError("(k - k_1) is not divisible by s_1");

  IdealGenerators out;
  out.variables = coefficient_variables(static_cast<std::size_t>(info.output_size));
  out.absorb(reduced_generators(merged), "merge(1,2)/");
  out.absorb(two_layer_ideal(k[0], rest / s[0] + 1, s[0]), "");
  out.finalize();
  return out;
}

}  // namespace

IdealGenerators vanishing_generators(const Architecture& arch) {
  const auto info = validate(arch);
  Architecture tail = info.arch;
  long spread = 1;
  while (tail.layers() > 1 && tail.filter_sizes.front() == 1) {
    spread *= tail.strides.front();
    tail.filter_sizes.erase(tail.filter_sizes.begin());
    tail.strides.erase(tail.strides.begin());
  }

  IdealGenerators inner = reduced_generators(reduce_arch(tail));
  if (spread == 1) return inner;

  const auto k = static_cast<std::size_t>(info.output_size);
  const auto vars = coefficient_variables(k);
  IdealGenerators out;
  out.variables = vars;
  out.notes.push_back("filter supported on multiples of " + std::to_string(spread));
  for (std::size_t j = 0; j < k; ++j)
    if (j % static_cast<std::size_t>(spread) != 0)
      out.generators.push_back({MultiPoly::variable(vars, j), "support"});

  std::vector<std::size_t> index_map(inner.variables.size());
  for (std::size_t i = 0; i < index_map.size(); ++i) index_map[i] = i * static_cast<std::size_t>(spread);
  IdealGenerators lifted;
  lifted.variables = vars;
  for (const auto& g : inner.generators) lifted.generators.push_back({g.poly.embed(vars, index_map), g.provenance});
  lifted.branches = inner.branches;
  lifted.notes = inner.notes;
  out.absorb(lifted, "spread(" + std::to_string(spread) + ")/");
  out.finalize();
  return out;
}

}  // namespace lcn
