// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "ed_table.hpp"
#include "golden.hpp"
#include "lcn/critpoints.hpp"
#include "lcn/eddegree.hpp"
#include "lcn/idealgen.hpp"
#include "lcn/verify.hpp"

using namespace lcn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %-32s %s  %.3f s  %s\n", id, name, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string texts_key(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  std::string out;
  for (const auto& s : v) out += s + ";";
  return out;
}

std::vector<std::string> normalized(const IdealGenerators& g) {
  std::vector<std::string> out;
  for (const auto& x : g.generators) out.push_back(to_text(x.poly.primitive_part().sign_normalized(), VarStyle::Letters));
  return out;
}

// Reduced architectures with L <= 3, 2 <= k_i <= 5, 2 <= s_i <= 4 (i < L), k <= 14.
std::vector<Architecture> test_architectures() {
  std::vector<Architecture> out;
  for (int k1 = 2; k1 <= 5; ++k1) out.push_back({{k1}, {1}});
  for (int k1 = 2; k1 <= 5; ++k1)
    for (int k2 = 2; k2 <= 5; ++k2)
      for (int s1 = 2; s1 <= 4; ++s1)
        if (k1 + s1 * (k2 - 1) <= 14) out.push_back({{k1, k2}, {s1, 1}});
  for (int k1 = 2; k1 <= 5; ++k1)
    for (int k2 = 2; k2 <= 5; ++k2)
      for (int k3 = 2; k3 <= 5; ++k3)
        for (int s1 = 2; s1 <= 4; ++s1)
          for (int s2 = 2; s2 <= 4; ++s2)
            if (k1 + s1 * (k2 - 1) + s1 * s2 * (k3 - 1) <= 14) out.push_back({{k1, k2, k3}, {s1, s2, 1}});
  return out;
}

struct ArchData {
  Architecture arch;
  IdealGenerators gens;
};

std::vector<ArchData>& arch_data() {
  static std::vector<ArchData> data = [] {
    std::vector<ArchData> d;
    for (const auto& a : test_architectures()) d.push_back({a, vanishing_generators(a)});
    return d;
  }();
  return data;
}

}  // namespace

int main() {
  run(1, "ED-degree two-layer table", 1.0, [] {
    int ok = 0;
    for (int a = 2; a <= 9; ++a)
      for (int b = 2; b <= 9; ++b) {
        const int k[2] = {a, b};
        if (generic_ed_degree(k) == golden::ed_table[static_cast<std::size_t>(a - 2)][static_cast<std::size_t>(b - 2)]) ++ok;
      }
    return Outcome{ok == 64, std::to_string(ok) + "/64 entries"};
  });

  run(2, "merge-tree values", 1.0, [] {
    int ok = 0;
    for (const auto& n : golden::merge_tree_values)
      if (generic_ed_degree(n.k) == n.value) ++ok;
    const auto tree = merge_tree(golden::merge_tree_values.front().k);
    const bool root_ok = tree.report.value == 2976084;
    return Outcome{ok == 9 && root_ok, std::to_string(ok) + "/9 nodes"};
  });

  run(3, "golden ideals", 5.0, [] {
    std::string detail;
    bool pass = true;
    auto g = vanishing_generators({{2, 2}, {2, 1}});
    const bool a = texts_key(normalized(g)) == texts_key({"A*D - B*C"});
    g = vanishing_generators({{3, 2}, {2, 1}});
    const bool b = texts_key(normalized(g)) == texts_key({"A*D^2 + B^2*E - B*C*D"});
    g = vanishing_generators({{5, 2}, {3, 1}});
    int cubic = 0, quartic = 0;
    for (const auto& x : g.generators) {
      if (x.poly.total_degree() == 3 && x.provenance.ends_with("/I1")) ++cubic;
      if (x.poly.total_degree() == 4 && x.provenance.ends_with("/I2")) ++quartic;
    }
    const bool c = cubic == 4 && quartic == 1 && g.size() == 5;
    g = vanishing_generators({{3, 2, 2}, {2, 2, 1}});
    const bool d = g.branches.size() == 2 && g.branches[0].enumerated == 35 && g.branches[1].enumerated == 10;
    pass = a && b && c && d;
    detail = std::string("(2,2)") + (a ? "ok" : "BAD") + " (3,2)" + (b ? "ok" : "BAD") + " (5,2;3) " +
             std::to_string(cubic) + "+" + std::to_string(quartic) + " (3,2,2) " +
             std::to_string(g.enumerated_minors()) + " pre-dedup, " + std::to_string(g.size()) + " distinct";
    return Outcome{pass, detail};
  });

  run(4, "sampling soundness", 120.0, [] {
    std::size_t archs = 0, checks = 0, bad = 0;
    for (const auto& d : arch_data()) {
      ++archs;
      const auto rep = verify_generators(d.arch, d.gens, 100, 1);
      checks += rep.samples_tested * rep.generators_tested;
      bad += rep.failures.size();
    }
    struct Ref {
      Architecture arch;
      const std::vector<std::string>* polys;
    };
    const std::vector<Ref> refs = {{{{5, 2}, {3, 1}}, &golden::radical_5_2}, {{{3, 2, 2}, {2, 2, 1}}, &golden::radical_3_2_2}};
    std::size_t ref_bad = 0;
    for (const auto& r : refs) {
      IdealGenerators g;
      g.variables = coefficient_variables(static_cast<std::size_t>(output_filter_size(r.arch)));
      for (const auto& t : *r.polys) g.generators.push_back({parse_poly(t, g.variables), "reference"});
      ref_bad += verify_generators(r.arch, g, 100, 1).failures.size();
    }
    return Outcome{bad == 0 && ref_bad == 0, std::to_string(archs) + " architectures, " + std::to_string(checks) +
                                                 " exact evaluations, " + std::to_string(bad) + " failures, " +
                                                 std::to_string(ref_bad) + " reference failures"};
  });

  run(5, "non-membership smoke", 60.0, [] {
    std::size_t archs = 0, short_ = 0;
    for (const auto& d : arch_data()) {
      if (d.arch.layers() < 2) continue;
      ++archs;
      if (smoke_nonmembership(d.gens, 20, 1) != 20) ++short_;
    }
    return Outcome{short_ == 0, std::to_string(archs) + " architectures, " + std::to_string(short_) + " below 20/20"};
  });

  run(6, "Jacobian dimension", 60.0, [] {
    std::size_t archs = 0, bad = 0;
    int rank_52 = -1;
    for (const auto& d : arch_data()) {
      ++archs;
      IdealGenerators none;
      const auto rep = verify_generators(d.arch, none, 0, 1);
      if (rep.jacobian_rank != rep.expected_dim) ++bad;
      if (d.arch == Architecture{{5, 2}, {3, 1}}) rank_52 = rep.jacobian_rank;
    }
    return Outcome{bad == 0 && rank_52 == 6, std::to_string(archs) + " architectures, " + std::to_string(bad) +
                                                 " mismatches, rank(5,2;3) = " + std::to_string(rank_52)};
  });

  run(7, "critical-point counts", 120.0, [] {
    SolveOptions opt;
    opt.starts = 2000;
    opt.seed = 42;
    std::string detail;
    bool pass = true;
    for (const auto& [a, want] : std::vector<std::pair<Architecture, int>>{{{{2, 2}, {2, 1}}, 6}, {{{3, 2}, {2, 1}}, 10}}) {
      const auto data = random_training_data(a, 3, 5, 7);
      const auto red = training_reduce(data.X, data.Y, a);
      const auto r = solve_critical_points(red.problem, opt);
      const bool ok = static_cast<int>(r.distinct_count) == want && r.max_residual < 1e-10 && conjugation_closed(r);
      pass = pass && ok;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s: %zu/%d (res %.1e) ", to_string(a).c_str(), r.distinct_count, want, r.max_residual);
      detail += buf;
    }
    WeightedDistanceProblem ey;
    ey.k = 4;
    ey.T = Eigen::MatrixXd::Identity(4, 4);
    ey.u = Eigen::Vector4d(1.3, -0.4, 0.7, 2.1);
    ey.f = parse_poly("A*D - B*C", coefficient_variables(4));
    SolveOptions eo = opt;
    eo.expected = fully_connected_count(2, 2, 1);
    const auto r = solve_critical_points(ey, eo);
    pass = pass && r.distinct_count == 2 && r.max_residual < 1e-10;
    detail += "identity T: " + std::to_string(r.distinct_count) + "/2";
    return Outcome{pass, detail};
  });

  run(8, "training-reduction identity", 10.0, [] {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst = 0;
    for (const auto& a : std::vector<Architecture>{{{2, 2}, {2, 1}}, {{3, 2}, {2, 1}}}) {
      const auto data = random_training_data(a, 3, 5, 7);
      const auto red = training_reduce(data.X, data.Y, a);
      for (int t = 0; t < 100; ++t) {
        Eigen::VectorXd w(red.problem.k);
        for (int i = 0; i < w.size(); ++i) w(i) = g(rng);
        const double loss = training_loss(data.X, data.Y, w, red.stride);
        const Eigen::VectorXd d = w - red.problem.u;
        const double model = d.dot(red.problem.T * d) + red.constant;
        worst = std::max(worst, std::abs(loss - model) / std::abs(loss));
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max relative error %.2e", worst);
    return Outcome{worst <= 1e-9, buf};
  });

  run(9, "psi positivity", 10.0, [] {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g(0.0, 1.0);
    double min_eig = 1e300;
    for (int t = 0; t < 100; ++t) {
      const int k = 2 + t % 5, s = 1 + t % 4, dL = 1 + t % 3;
      const int d0 = k + (dL - 1) * s;
      Eigen::MatrixXd A(d0, d0);
      for (int i = 0; i < d0; ++i)
        for (int j = 0; j < d0; ++j) A(i, j) = g(rng);
      const Eigen::MatrixXd M = A * A.transpose() + 1e-3 * Eigen::MatrixXd::Identity(d0, d0);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(psi_map(M, k, s, dL));
      min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "smallest eigenvalue %.3e", min_eig);
    return Outcome{min_eig > 0, buf};
  });

  run(10, "formula invariance", 10.0, [] {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> L(2, 4), K(2, 7), S(2, 5);
    int bad = 0;
    for (int t = 0; t < 50; ++t) {
      std::vector<int> k(static_cast<std::size_t>(L(rng)));
      for (auto& x : k) x = K(rng);
      const auto base = generic_ed_degree(k);
      auto p = k;
      std::shuffle(p.begin(), p.end(), rng);
      if (generic_ed_degree(p) != base) ++bad;
      // two stride assignments of the same filter sizes
      Architecture a1{k, {}}, a2{k, {}};
      for (std::size_t i = 0; i < k.size(); ++i) {
        a1.strides.push_back(S(rng));
        a2.strides.push_back(S(rng));
      }
      if (architecture_ed_degree(a1) != base || architecture_ed_degree(a2) != base) ++bad;
    }
    return Outcome{bad == 0, std::to_string(50 - bad) + "/50 tuples"};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
