#include "lcn/lcn.h"

#include <cstring>
#include <new>
#include <string>

#include "lcn/critpoints.hpp"
#include "lcn/eddegree.hpp"
#include "lcn/error.hpp"
#include "lcn/idealgen.hpp"
#include "lcn/render.hpp"
#include "lcn/verify.hpp"

struct lcn_arch {
  lcn::Architecture arch;
};

struct lcn_ideal {
  lcn::Architecture arch;
  lcn::IdealGenerators gens;
};

struct lcn_critpoints {
  std::optional<lcn::Architecture> arch;
  lcn::CriticalPointReport report;
};

struct lcn_verify_report {
  lcn::VerifySummary summary;
};

namespace {

thread_local std::string last_error;

lcn_status fail(lcn_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
lcn_status guarded(F&& body) {
  try {
    return body();
  } catch (const lcn::InvalidArgument& e) {
    return fail(LCN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const lcn::Unsupported& e) {
    return fail(LCN_ERR_UNSUPPORTED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LCN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LCN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LCN_ERR_INTERNAL, "unknown error");
  }
}

lcn_status null_arg(const char* what) { return fail(LCN_ERR_NULL, std::string(what) + " is NULL"); }

lcn_status put_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (!needed) return null_arg("needed");
  *needed = s.size();
  if (cap < s.size() + 1)
    return fail(LCN_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(s.size() + 1) + " bytes");
  if (!buf) return null_arg("buf");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return LCN_OK;
}

lcn_status put_ints(const std::vector<int>& v, int* buf, size_t cap, size_t* needed) {
  if (!needed) return null_arg("needed");
  *needed = v.size();
  if (cap < v.size()) return fail(LCN_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(v.size()) + " ints");
  if (!buf && !v.empty()) return null_arg("buf");
  std::copy(v.begin(), v.end(), buf);
  return LCN_OK;
}

std::vector<int> int_list(const int* p, size_t n) {
  if (!p && n) throw lcn::InvalidArgument("filter sizes are NULL");
  return std::vector<int>(p, p + n);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* lcn_last_error(void) { return last_error.c_str(); }

const char* lcn_status_name(lcn_status status) {
  switch (status) {
    case LCN_OK: return "ok";
    case LCN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LCN_ERR_UNSUPPORTED: return "unsupported";
    case LCN_ERR_INTERNAL: return "internal error";
    case LCN_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case LCN_ERR_NULL: return "null pointer";
  }
  return "unknown status";
}

lcn_status lcn_arch_create(const int* filter_sizes, const int* strides, size_t layers, lcn_arch** out) {
  if (!out) return null_arg("out");
  if (!filter_sizes || !strides) return null_arg("filter_sizes/strides");
  return guarded([&] {
    lcn::Architecture a{int_list(filter_sizes, layers), int_list(strides, layers)};
    *out = new lcn_arch{lcn::validate(a).arch};
    return LCN_OK;
  });
}

lcn_status lcn_arch_parse(const char* filter_sizes, const char* strides, lcn_arch** out) {
  if (!out) return null_arg("out");
  if (!filter_sizes) return null_arg("filter_sizes");
  return guarded([&] {
    lcn::Architecture a;
    a.filter_sizes = lcn::parse_int_list(filter_sizes);
    a.strides = strides ? lcn::parse_int_list(strides) : std::vector<int>(a.filter_sizes.size(), 1);
    *out = new lcn_arch{lcn::validate(a).arch};
    return LCN_OK;
  });
}

void lcn_arch_destroy(lcn_arch* arch) { delete arch; }

lcn_status lcn_arch_layers(const lcn_arch* arch, size_t* layers) {
  if (!arch || !layers) return null_arg("arch/layers");
  *layers = arch->arch.layers();
  return LCN_OK;
}

lcn_status lcn_arch_filter_sizes(const lcn_arch* arch, int* buf, size_t cap, size_t* needed) {
  if (!arch) return null_arg("arch");
  return put_ints(arch->arch.filter_sizes, buf, cap, needed);
}

lcn_status lcn_arch_strides(const lcn_arch* arch, int* buf, size_t cap, size_t* needed) {
  if (!arch) return null_arg("arch");
  return put_ints(arch->arch.strides, buf, cap, needed);
}

lcn_status lcn_arch_output_size(const lcn_arch* arch, int* k) {
  if (!arch || !k) return null_arg("arch/k");
  return guarded([&] {
    *k = lcn::output_filter_size(arch->arch);
    return LCN_OK;
  });
}

lcn_status lcn_arch_dimension(const lcn_arch* arch, int* dim) {
  if (!arch || !dim) return null_arg("arch/dim");
  return guarded([&] {
    *dim = lcn::expected_dimension(arch->arch);
    return LCN_OK;
  });
}

lcn_status lcn_arch_is_reduced(const lcn_arch* arch, int* reduced) {
  if (!arch || !reduced) return null_arg("arch/reduced");
  return guarded([&] {
    *reduced = lcn::validate(arch->arch).reduced ? 1 : 0;
    return LCN_OK;
  });
}

lcn_status lcn_arch_reduce(const lcn_arch* arch, lcn_arch** out) {
  if (!arch || !out) return null_arg("arch/out");
  return guarded([&] {
    *out = new lcn_arch{lcn::reduce_arch(arch->arch)};
    return LCN_OK;
  });
}

lcn_status lcn_arch_describe(const lcn_arch* arch, char* buf, size_t cap, size_t* needed) {
  if (!arch) return null_arg("arch");
  return guarded([&] { return put_string(lcn::to_string(arch->arch), buf, cap, needed); });
}

lcn_status lcn_ideal_compute(const lcn_arch* arch, lcn_ideal** out) {
  if (!arch || !out) return null_arg("arch/out");
  return guarded([&] {
    *out = new lcn_ideal{arch->arch, lcn::vanishing_generators(arch->arch)};
    return LCN_OK;
  });
}

void lcn_ideal_destroy(lcn_ideal* ideal) { delete ideal; }

lcn_status lcn_ideal_size(const lcn_ideal* ideal, size_t* count) {
  if (!ideal || !count) return null_arg("ideal/count");
  *count = ideal->gens.size();
  return LCN_OK;
}

lcn_status lcn_ideal_enumerated_minors(const lcn_ideal* ideal, size_t* count) {
  if (!ideal || !count) return null_arg("ideal/count");
  *count = ideal->gens.enumerated_minors();
  return LCN_OK;
}

namespace {

lcn_status generator_string(const lcn_ideal* ideal, size_t index, char* buf, size_t cap, size_t* needed,
                            int what) {
  if (!ideal) return null_arg("ideal");
  if (index >= ideal->gens.size())
    return fail(LCN_ERR_INVALID_ARGUMENT, "generator index " + std::to_string(index) + " out of range");
  return guarded([&] {
    const auto& g = ideal->gens.generators[index];
    std::string s = what == 0   ? lcn::to_text(g.poly, lcn::VarStyle::Letters)
                    : what == 1 ? lcn::to_json(g.poly).dump()
                                : g.provenance;
    return put_string(s, buf, cap, needed);
  });
}

}  // namespace

lcn_status lcn_ideal_generator_text(const lcn_ideal* ideal, size_t index, char* buf, size_t cap,
                                    size_t* needed) {
  return generator_string(ideal, index, buf, cap, needed, 0);
}

lcn_status lcn_ideal_generator_json(const lcn_ideal* ideal, size_t index, char* buf, size_t cap,
                                    size_t* needed) {
  return generator_string(ideal, index, buf, cap, needed, 1);
}

lcn_status lcn_ideal_generator_provenance(const lcn_ideal* ideal, size_t index, char* buf, size_t cap,
                                          size_t* needed) {
  return generator_string(ideal, index, buf, cap, needed, 2);
}

lcn_status lcn_ideal_check_point(const lcn_ideal* ideal, const char* const* coords, size_t n,
                                 size_t* first_violated) {
  if (!ideal || !first_violated) return null_arg("ideal/first_violated");
  if (!coords && n) return null_arg("coords");
  return guarded([&] {
    std::vector<lcn::Rational> pt;
    for (size_t i = 0; i < n; ++i) {
      if (!coords[i]) throw lcn::InvalidArgument("coordinate " + std::to_string(i) + " is NULL");
      lcn::Rational q;
      if (q.set_str(coords[i], 10) != 0 || q.get_den() == 0)
        throw lcn::InvalidArgument(std::string("bad rational '") + coords[i] + "'");
      q.canonicalize();
      pt.push_back(q);
    }
    *first_violated = lcn::first_violated(ideal->gens, pt);
    return LCN_OK;
  });
}

lcn_status lcn_ideal_render(const lcn_ideal* ideal, lcn_format format, int provenance, char* buf, size_t cap,
                            size_t* needed) {
  if (!ideal) return null_arg("ideal");
  return guarded([&] {
    const std::string s = format == LCN_FORMAT_JSON ? dump(lcn::ideal_json(ideal->arch, ideal->gens))
                                                    : lcn::ideal_text(ideal->gens, provenance != 0);
    return put_string(s, buf, cap, needed);
  });
}

lcn_status lcn_ed_degree(const int* filter_sizes, size_t n, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    const auto k = int_list(filter_sizes, n);
    return put_string(lcn::generic_ed_degree(k).get_str(), buf, cap, needed);
  });
}

lcn_status lcn_arch_ed_degree(const lcn_arch* arch, char* buf, size_t cap, size_t* needed) {
  if (!arch) return null_arg("arch");
  return guarded([&] { return put_string(lcn::architecture_ed_degree(arch->arch).get_str(), buf, cap, needed); });
}

lcn_status lcn_ed_merge_tree(const int* filter_sizes, size_t n, lcn_format format, char* buf, size_t cap,
                             size_t* needed) {
  return guarded([&] {
    const auto k = int_list(filter_sizes, n);
    const auto tree = lcn::merge_tree(k);
    return put_string(format == LCN_FORMAT_JSON ? dump(lcn::merge_tree_json(tree)) : lcn::merge_tree_text(tree),
                      buf, cap, needed);
  });
}

lcn_status lcn_ed_table(int k1max, int k2max, char* buf, size_t cap, size_t* needed) {
  return guarded([&] { return put_string(lcn::ed_table_tsv(k1max, k2max), buf, cap, needed); });
}

lcn_status lcn_fully_connected_count(int m, int n, int r, char* buf, size_t cap, size_t* needed) {
  return guarded([&] { return put_string(lcn::fully_connected_count(m, n, r).get_str(), buf, cap, needed); });
}

lcn_status lcn_resultant_render(const lcn_arch* arch, int print_matrices, lcn_format format, char* buf,
                                size_t cap, size_t* needed) {
  if (!arch) return null_arg("arch");
  return guarded([&] {
    const std::string s = format == LCN_FORMAT_JSON ? dump(lcn::resultant_json(arch->arch, print_matrices != 0))
                                                    : lcn::resultant_text(arch->arch, print_matrices != 0);
    return put_string(s, buf, cap, needed);
  });
}

lcn_status lcn_compose_render(const lcn_arch* arch, const char* filters, uint64_t seed, lcn_format format,
                              char* buf, size_t cap, size_t* needed) {
  if (!arch) return null_arg("arch");
  return guarded([&] {
    std::optional<std::vector<std::vector<lcn::Rational>>> layers;
    if (filters) layers = lcn::parse_filters(filters);
    const auto c = lcn::compose(arch->arch, std::move(layers), seed);
    return put_string(format == LCN_FORMAT_JSON ? dump(lcn::composition_json(c)) : lcn::composition_text(c), buf,
                      cap, needed);
  });
}

void lcn_solve_options_default(lcn_solve_options* options) {
  if (!options) return;
  options->starts = 500;
  options->seed = 42;
  options->data_seed = 7;
  options->d_out = 3;
  options->extra_samples = 5;
}

lcn_status lcn_critpoints_training(const lcn_arch* arch, const lcn_solve_options* options, lcn_critpoints** out) {
  if (!arch || !out) return null_arg("arch/out");
  return guarded([&] {
    lcn_solve_options o;
    lcn_solve_options_default(&o);
    if (options) o = *options;
    const auto data = lcn::random_training_data(arch->arch, o.d_out, o.extra_samples, o.data_seed);
    const auto red = lcn::training_reduce(data.X, data.Y, arch->arch);
    lcn::SolveOptions so;
    so.starts = o.starts;
    so.seed = o.seed;
    *out = new lcn_critpoints{arch->arch, lcn::solve_critical_points(red.problem, so)};
    return LCN_OK;
  });
}

lcn_status lcn_critpoints_weighted(size_t k, const double* T, const double* u, const char* f, const char* expected,
                                   const lcn_solve_options* options, lcn_critpoints** out) {
  if (!T || !u || !f || !out) return null_arg("T/u/f/out");
  return guarded([&] {
    lcn_solve_options o;
    lcn_solve_options_default(&o);
    if (options) o = *options;
    lcn::WeightedDistanceProblem p;
    p.k = static_cast<int>(k);
    p.T = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        T, static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    p.u = Eigen::Map<const Eigen::VectorXd>(u, static_cast<Eigen::Index>(k));
    const auto vars = lcn::coefficient_variables(k);
    p.f = lcn::parse_poly(f, vars, k <= 26 && std::string(f).find('c') == std::string::npos ? lcn::VarStyle::Letters
                                                                                          : lcn::VarStyle::Names);
    lcn::SolveOptions so;
    so.starts = o.starts;
    so.seed = o.seed;
    if (expected) {
      lcn::Integer e;
      if (e.set_str(expected, 10) != 0) throw lcn::InvalidArgument("expected count is not an integer");
      so.expected = e;
    }
    *out = new lcn_critpoints{std::nullopt, lcn::solve_critical_points(p, so)};
    return LCN_OK;
  });
}

void lcn_critpoints_destroy(lcn_critpoints* cp) { delete cp; }

lcn_status lcn_critpoints_counts(const lcn_critpoints* cp, size_t* distinct, size_t* real, size_t* starts_run) {
  if (!cp) return null_arg("cp");
  if (distinct) *distinct = cp->report.distinct_count;
  if (real) *real = cp->report.real_count;
  if (starts_run) *starts_run = cp->report.starts_run;
  return LCN_OK;
}

lcn_status lcn_critpoints_verdict(const lcn_critpoints* cp, int* verdict) {
  if (!cp || !verdict) return null_arg("cp/verdict");
  *verdict = cp->report.shortfall() ? -1 : cp->report.excess() ? 1 : 0;
  return LCN_OK;
}

lcn_status lcn_critpoints_expected(const lcn_critpoints* cp, char* buf, size_t cap, size_t* needed) {
  if (!cp) return null_arg("cp");
  if (!cp->report.expected) return fail(LCN_ERR_INVALID_ARGUMENT, "no expected count");
  return guarded([&] { return put_string(cp->report.expected->get_str(), buf, cap, needed); });
}

lcn_status lcn_critpoints_max_residual(const lcn_critpoints* cp, double* residual) {
  if (!cp || !residual) return null_arg("cp/residual");
  *residual = cp->report.max_residual;
  return LCN_OK;
}

lcn_status lcn_critpoints_conjugation_closed(const lcn_critpoints* cp, int* closed) {
  if (!cp || !closed) return null_arg("cp/closed");
  *closed = lcn::conjugation_closed(cp->report) ? 1 : 0;
  return LCN_OK;
}

lcn_status lcn_critpoints_point(const lcn_critpoints* cp, size_t index, double* w_re, double* w_im, size_t k,
                                double* residual, int* is_real) {
  if (!cp || !w_re || !w_im) return null_arg("cp/w_re/w_im");
  if (index >= cp->report.points.size()) return fail(LCN_ERR_INVALID_ARGUMENT, "point index out of range");
  const auto& p = cp->report.points[index];
  if (k != static_cast<size_t>(p.w.size()))
    return fail(LCN_ERR_INVALID_ARGUMENT, "points have " + std::to_string(p.w.size()) + " coordinates");
  for (size_t i = 0; i < k; ++i) {
    w_re[i] = p.w(static_cast<Eigen::Index>(i)).real();
    w_im[i] = p.w(static_cast<Eigen::Index>(i)).imag();
  }
  if (residual) *residual = p.residual;
  if (is_real) *is_real = p.is_real ? 1 : 0;
  return LCN_OK;
}

lcn_status lcn_critpoints_render(const lcn_critpoints* cp, lcn_format format, char* buf, size_t cap,
                                 size_t* needed) {
  if (!cp) return null_arg("cp");
  return guarded([&] {
    const lcn::Architecture* a = cp->arch ? &*cp->arch : nullptr;
    return put_string(format == LCN_FORMAT_JSON ? dump(lcn::critpoints_json(a, cp->report))
                                                : lcn::critpoints_text(a, cp->report),
                      buf, cap, needed);
  });
}

lcn_status lcn_verify(const lcn_arch* arch, size_t samples, uint64_t seed, size_t smoke_trials,
                      lcn_verify_report** out) {
  if (!arch || !out) return null_arg("arch/out");
  return guarded([&] {
    const auto gens = lcn::vanishing_generators(arch->arch);
    lcn::VerifySummary v;
    v.report = lcn::verify_generators(arch->arch, gens, samples, seed);
    if (lcn::reduce_arch(arch->arch).layers() >= 2 && smoke_trials > 0) {
      v.smoke_trials = smoke_trials;
      v.smoke_violations = lcn::smoke_nonmembership(gens, smoke_trials, seed);
    }
    *out = new lcn_verify_report{std::move(v)};
    return LCN_OK;
  });
}

void lcn_verify_destroy(lcn_verify_report* report) { delete report; }

lcn_status lcn_verify_summary(const lcn_verify_report* report, size_t* failures, int* jacobian_rank,
                              int* expected_dim, size_t* smoke_violations, size_t* smoke_trials) {
  if (!report) return null_arg("report");
  const auto& v = report->summary;
  if (failures) *failures = v.report.failures.size();
  if (jacobian_rank) *jacobian_rank = v.report.jacobian_rank;
  if (expected_dim) *expected_dim = v.report.expected_dim;
  if (smoke_violations) *smoke_violations = v.smoke_violations;
  if (smoke_trials) *smoke_trials = v.smoke_trials.value_or(0);
  return LCN_OK;
}

lcn_status lcn_verify_passed(const lcn_verify_report* report, int* passed) {
  if (!report || !passed) return null_arg("report/passed");
  *passed = report->summary.passed() ? 1 : 0;
  return LCN_OK;
}

lcn_status lcn_verify_render(const lcn_verify_report* report, lcn_format format, char* buf, size_t cap,
                             size_t* needed) {
  if (!report) return null_arg("report");
  return guarded([&] {
    return put_string(format == LCN_FORMAT_JSON ? dump(lcn::verify_json(report->summary))
                                                : lcn::verify_text(report->summary),
                      buf, cap, needed);
  });
}

}  // extern "C"
