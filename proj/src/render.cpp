#include "lcn/render.hpp"

#include <cstdio>
#include <sstream>

#include "lcn/resultant.hpp"

namespace lcn {

using nlohmann::json;

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_complex(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string rational_tuple(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

struct TwoLayerStep {
  int k1, k2, s1;
  std::string path;
};

// Two-layer problems visited by the generator recursion, outermost first.
std::vector<TwoLayerStep> two_layer_steps(const Architecture& arch, long& spread) {
  Architecture tail = validate(arch).arch;
  spread = 1;
  while (tail.layers() > 1 && tail.filter_sizes.front() == 1) {
    spread *= tail.strides.front();
    tail.filter_sizes.erase(tail.filter_sizes.begin());
    tail.strides.erase(tail.strides.begin());
  }
  Architecture a = reduce_arch(tail);
  std::vector<TwoLayerStep> steps;
  std::string path;
  while (a.layers() >= 2) {
    const int k = output_filter_size(a);
    const int k1 = a.filter_sizes[0];
    const int s1 = a.strides[0];
    if (a.layers() == 2) {
      steps.push_back({k1, a.filter_sizes[1], s1, path});
      break;
    }
    steps.push_back({k1, (k - k1) / s1 + 1, s1, path});
    Architecture merged;
    merged.filter_sizes.push_back(k1 + s1 * (a.filter_sizes[1] - 1));
    merged.strides.push_back(s1 * a.strides[1]);
    for (std::size_t l = 2; l < a.layers(); ++l) {
      merged.filter_sizes.push_back(a.filter_sizes[l]);
      merged.strides.push_back(a.strides[l]);
    }
    a = merged;
    path += "merge(1,2)/";
  }
  return steps;
}

std::string step_tag(const TwoLayerStep& st) {
  return st.path + "two_layer(" + std::to_string(st.k1) + "," + std::to_string(st.k2) + ";" +
         std::to_string(st.s1) + ")";
}

}  // namespace

json arch_json(const Architecture& arch) {
  const auto info = validate(arch);
  const auto red = reduce_arch(arch);
  return {{"filter_sizes", info.arch.filter_sizes},
          {"strides", info.arch.strides},
          {"k", info.output_size},
          {"dimension", expected_dimension(info.arch)},
          {"reduced", info.reduced},
          {"reduced_filter_sizes", red.filter_sizes},
          {"reduced_strides", red.strides}};
}

std::string ideal_text(const IdealGenerators& gens, bool provenance) {
  std::ostringstream out;
  for (const auto& g : gens.generators) {
    out << to_text(g.poly, VarStyle::Letters);
    if (provenance) out << "\t# " << g.provenance;
    out << '\n';
  }
  if (provenance) {
    for (const auto& b : gens.branches)
      out << "# branch " << b.provenance << ": R_" << b.l << " " << b.rows << "x" << b.cols << ", "
          << b.minor_size << "x" << b.minor_size << " minors, " << b.enumerated << " enumerated, "
          << b.emitted << " nonzero distinct\n";
    out << "# " << gens.size() << " generators from " << gens.enumerated_minors() << " enumerated minors\n";
    for (const auto& n : gens.notes) out << "# note: " << n << '\n';
  }
  return out.str();
}

json ideal_json(const Architecture& arch, const IdealGenerators& gens) {
  json g = json::array();
  for (const auto& gen : gens.generators) {
    json p = to_json(gen.poly);
    g.push_back({{"poly", p}, {"degree", gen.poly.total_degree()}, {"provenance", gen.provenance}});
  }
  json branches = json::array();
  for (const auto& b : gens.branches)
    branches.push_back({{"provenance", b.provenance},
                        {"l", b.l},
                        {"rows", b.rows},
                        {"cols", b.cols},
                        {"minor_size", b.minor_size},
                        {"enumerated", b.enumerated},
                        {"emitted", b.emitted}});
  return {{"architecture", arch_json(arch)},
          {"vars", gens.variables},
          {"generators", g},
          {"branches", branches},
          {"enumerated_minors", gens.enumerated_minors()},
          {"notes", gens.notes}};
}

namespace {

void tree_lines(const MergeNode& n, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << "C_{" << join_ints(n.report.filter_sizes)
      << "} = " << n.report.value.get_str() << '\n';
  for (const auto& c : n.children) tree_lines(c, depth + 1, out);
}

}  // namespace

std::string merge_tree_text(const MergeNode& root) {
  std::ostringstream out;
  tree_lines(root, 0, out);
  return out.str();
}

json merge_tree_json(const MergeNode& root) {
  json children = json::array();
  for (const auto& c : root.children) children.push_back(merge_tree_json(c));
  return {{"filter_sizes", root.report.filter_sizes},
          {"k_bar", root.report.k_bar},
          {"ed_degree", root.report.value.get_str()},
          {"children", children}};
}

std::string ed_table_tsv(int k1max, int k2max) {
  if (k1max < 2 || k2max < 2) throw InvalidArgument("table bounds must be at least 2");
  std::ostringstream out;
  out << "k1\\k2";
  for (int b = 2; b <= k2max; ++b) out << '\t' << b;
  out << '\n';
  for (int a = 2; a <= k1max; ++a) {
    out << a;
    for (int b = 2; b <= k2max; ++b) {
      const int k[2] = {a, b};
      out << '\t' << generic_ed_degree(k).get_str();
    }
    out << '\n';
  }
  return out.str();
}

std::string resultant_text(const Architecture& arch, bool print_matrices) {
  long spread = 1;
  const auto steps = two_layer_steps(arch, spread);
  std::ostringstream out;
  out << to_string(validate(arch).arch) << '\n';
  if (spread > 1) out << "filter supported on multiples of " << spread << '\n';
  if (steps.empty()) out << "reduces to a single layer; no resultant conditions\n";
  for (const auto& st : steps) {
    const auto rc = two_layer_recipe(st.k1, st.k2, st.s1);
    out << step_tag(st) << ": k=" << rc.k << " common factor degree m=" << rc.m << '\n';
    out << "  slot degrees (" << join_ints(rc.profile.degrees) << ") n*=" << rc.profile.n_star_hi
        << " n_*=" << rc.profile.n_star_lo << " r=" << rc.profile.r << '\n';
    const auto mats = two_layer_matrices(rc);
    for (std::size_t f = 0; f < mats.size(); ++f) {
      const auto& R = mats[f];
      const int size = f == 0 ? rc.size1 : rc.size2;
      out << "  I" << f + 1 << ": R_" << R.l << " " << R.matrix.rows() << "x" << R.matrix.cols() << ", "
          << size << "x" << size << " minors\n";
      if (print_matrices) {
        std::istringstream rows(to_text(R.matrix, VarStyle::Letters));
        std::string line;
        std::size_t r = 0;
        while (std::getline(rows, line)) {
          out << "    q" << R.rows[r].poly + 1 << "<<" << R.rows[r].shift << "  " << line << '\n';
          ++r;
        }
      }
    }
    if (!rc.i2_active) out << "  I2: inactive\n";
    if (rc.has_constant_slot) out << "  note: degree-0 slot enters R_" << rc.l1 << '\n';
  }
  return out.str();
}

json resultant_json(const Architecture& arch, bool print_matrices) {
  long spread = 1;
  const auto steps = two_layer_steps(arch, spread);
  json js = json::array();
  for (const auto& st : steps) {
    const auto rc = two_layer_recipe(st.k1, st.k2, st.s1);
    json fam = json::array();
    const auto mats = two_layer_matrices(rc);
    for (std::size_t f = 0; f < mats.size(); ++f) {
      const auto& R = mats[f];
      json entry = {{"family", "I" + std::to_string(f + 1)},
                    {"l", R.l},
                    {"rows", R.matrix.rows()},
                    {"cols", R.matrix.cols()},
                    {"minor_size", f == 0 ? rc.size1 : rc.size2}};
      if (print_matrices) {
        json m = json::array();
        for (std::size_t r = 0; r < R.matrix.rows(); ++r) {
          json row = json::array();
          for (std::size_t c = 0; c < R.matrix.cols(); ++c) row.push_back(to_json(R.matrix.at(r, c)));
          m.push_back({{"poly", R.rows[r].poly + 1}, {"shift", R.rows[r].shift}, {"entries", row}});
        }
        entry["matrix"] = m;
      }
      fam.push_back(entry);
    }
    js.push_back({{"step", step_tag(st)},
                  {"k1", rc.k1},
                  {"k2", rc.k2},
                  {"s1", rc.s1},
                  {"k", rc.k},
                  {"m", rc.m},
                  {"slot_degrees", rc.profile.degrees},
                  {"n_star_hi", rc.profile.n_star_hi},
                  {"n_star_lo", rc.profile.n_star_lo},
                  {"r", rc.profile.r},
                  {"i2_active", rc.i2_active},
                  {"has_constant_slot", rc.has_constant_slot},
                  {"families", fam}});
  }
  return {{"architecture", arch_json(arch)}, {"spread", spread}, {"steps", js}};
}

std::vector<std::vector<Rational>> parse_filters(const std::string& text) {
  std::vector<std::vector<Rational>> out;
  std::stringstream in(text);
  std::string layer;
  while (std::getline(in, layer, ';')) {
    std::vector<Rational> entries;
    std::stringstream ls(layer);
    std::string item;
    while (std::getline(ls, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw InvalidArgument("empty filter entry");
      Rational q;
      if (q.set_str(item.substr(b, e - b + 1), 10) != 0 || q.get_den() == 0)
        throw InvalidArgument("bad filter entry '" + item + "'");
      q.canonicalize();
      entries.push_back(q);
    }
    out.push_back(std::move(entries));
  }
  if (out.empty()) throw InvalidArgument("no filters given");
  return out;
}

Composition compose(const Architecture& arch, std::optional<std::vector<std::vector<Rational>>> layers,
                    std::uint64_t seed) {
  const auto info = validate(arch);
  Composition c;
  c.arch = info.arch;
  if (layers) {
    c.layers = std::move(*layers);
    c.filter = compose_filters<Rational>(info.arch, c.layers);
  } else {
    auto s = sample_neuromanifold(info.arch, seed);
    c.layers = std::move(s.layers);
    c.filter = std::move(s.filter);
  }
  return c;
}

std::string composition_text(const Composition& c) {
  std::ostringstream out;
  out << to_string(c.arch) << '\n';
  for (std::size_t l = 0; l < c.layers.size(); ++l) out << "w" << l + 1 << " = " << rational_tuple(c.layers[l]) << '\n';
  out << "w = " << rational_tuple(c.filter) << '\n';
  return out.str();
}

json composition_json(const Composition& c) {
  json layers = json::array();
  for (const auto& l : c.layers) layers.push_back(rational_list(l));
  return {{"architecture", arch_json(c.arch)}, {"layers", layers}, {"filter", rational_list(c.filter)}};
}

std::string critpoints_text(const Architecture* arch, const CriticalPointReport& r) {
  std::ostringstream out;
  if (arch) out << to_string(*arch) << '\n';
  out << "expected " << (r.expected ? r.expected->get_str() : std::string("unknown")) << '\n';
  out << "distinct " << r.distinct_count << '\n';
  out << "real " << r.real_count << '\n';
  out << "starts " << r.starts_run << " converged " << r.converged_runs << '\n';
  out << "max_residual " << fmt_double(r.max_residual) << '\n';
  out << "conjugation_closed " << (conjugation_closed(r) ? "yes" : "no") << '\n';
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    out << "point " << i + 1 << (p.is_real ? " real" : " complex") << " residual " << fmt_double(p.residual)
        << " lambda " << fmt_complex(p.lambda) << " w (";
    for (Eigen::Index j = 0; j < p.w.size(); ++j) out << (j ? ", " : "") << fmt_complex(p.w(j));
    out << ")\n";
  }
  if (r.shortfall()) out << "status shortfall\n";
  else if (r.excess()) out << "status excess\n";
  else out << "status ok\n";
  return out.str();
}

json critpoints_json(const Architecture* arch, const CriticalPointReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) {
    json w = json::array();
    for (Eigen::Index j = 0; j < p.w.size(); ++j) w.push_back({p.w(j).real(), p.w(j).imag()});
    pts.push_back({{"w", w},
                   {"lambda", {p.lambda.real(), p.lambda.imag()}},
                   {"residual", p.residual},
                   {"real", p.is_real}});
  }
  json out = {{"expected", r.expected ? json(r.expected->get_str()) : json(nullptr)},
              {"distinct", r.distinct_count},
              {"real", r.real_count},
              {"starts", r.starts_run},
              {"converged", r.converged_runs},
              {"max_residual", r.max_residual},
              {"conjugation_closed", conjugation_closed(r)},
              {"status", r.shortfall() ? "shortfall" : r.excess() ? "excess" : "ok"},
              {"points", pts}};
  if (arch) out["architecture"] = arch_json(*arch);
  return out;
}

std::string verify_text(const VerifySummary& v) {
  const auto& r = v.report;
  std::ostringstream out;
  out << to_string(r.arch) << '\n';
  out << "samples " << r.samples_tested << " generators " << r.generators_tested << '\n';
  out << "failures " << r.failures.size() << '\n';
  for (const auto& [s, g] : r.failures) out << "  sample " << s << " generator " << g << '\n';
  out << "jacobian_rank " << r.jacobian_rank << " expected_dim " << r.expected_dim << '\n';
  if (v.smoke_trials) out << "nonmembership " << v.smoke_violations << "/" << *v.smoke_trials << '\n';
  out << (v.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

json verify_json(const VerifySummary& v) {
  const auto& r = v.report;
  json fails = json::array();
  for (const auto& [s, g] : r.failures) fails.push_back({{"sample", s}, {"generator", g}});
  json out = {{"architecture", arch_json(r.arch)},
              {"samples_tested", r.samples_tested},
              {"generators_tested", r.generators_tested},
              {"failures", fails},
              {"jacobian_rank", r.jacobian_rank},
              {"expected_dim", r.expected_dim},
              {"passed", v.passed()}};
  if (v.smoke_trials) out["nonmembership"] = {{"trials", *v.smoke_trials}, {"violations", v.smoke_violations}};
  return out;
}

}  // namespace lcn
