// lcn: command-line front end over the C interface.

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcn/lcn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Any status other than invalid argument is reported as a run failure.
struct Failure {
  lcn_status status;
  std::string message;
};

void check(lcn_status s) {
  if (s != LCN_OK) throw Failure{s, lcn_last_error()};
}

std::string fetch(const std::function<lcn_status(char*, size_t, size_t*)>& call) {
  size_t needed = 0;
  lcn_status s = call(nullptr, 0, &needed);
  if (s != LCN_OK && s != LCN_ERR_BUFFER_TOO_SMALL) check(s);
  std::string out(needed + 1, '\0');
  check(call(out.data(), out.size(), &needed));
  out.resize(needed);
  return out;
}

struct ArchHandle {
  lcn_arch* p = nullptr;
  ~ArchHandle() { lcn_arch_destroy(p); }
};

struct Options {
  std::string k;
  std::optional<std::string> s;
  std::string format = "text";
  bool json = false;
  std::optional<std::uint64_t> seed_flag;
  std::uint64_t seed = 0;
  std::uint64_t data_seed = 7;
  std::size_t samples = 100;
  std::size_t smoke = 20;
  std::size_t starts = 500;
  int d_out = 3;
  bool tree = false;
  std::vector<int> table;
  bool print_matrices = false;
  bool provenance = false;
  std::optional<std::string> filters;

  lcn_format fmt() const { return json || format == "json" ? LCN_FORMAT_JSON : LCN_FORMAT_TEXT; }
};

void add_arch(CLI::App* sub, Options& o, bool strides_required) {
  sub->add_option("-k", o.k, "filter sizes, e.g. 3,2,2")->required();
  auto* s = sub->add_option("-s", o.s, "strides, e.g. 2,2,1");
  if (strides_required) s->required();
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--json", o.json, "same as --format json");
}

void open_arch(const Options& o, ArchHandle& a) {
  check(lcn_arch_parse(o.k.c_str(), o.s ? o.s->c_str() : nullptr, &a.p));
}

std::vector<int> parse_sizes(const std::string& text, ArchHandle& a) {
  check(lcn_arch_parse(text.c_str(), nullptr, &a.p));
  size_t n = 0;
  check(lcn_arch_layers(a.p, &n));
  std::vector<int> k(n);
  check(lcn_arch_filter_sizes(a.p, k.data(), k.size(), &n));
  return k;
}

int run_ideal(const Options& o) {
  ArchHandle a;
  open_arch(o, a);
  lcn_ideal* ideal = nullptr;
  check(lcn_ideal_compute(a.p, &ideal));
  std::string out;
  try {
    out = fetch([&](char* b, size_t c, size_t* n) { return lcn_ideal_render(ideal, o.fmt(), o.provenance, b, c, n); });
  } catch (...) {
    lcn_ideal_destroy(ideal);
    throw;
  }
  lcn_ideal_destroy(ideal);
  std::cout << out;
  return kExitOk;
}

int run_eddeg(const Options& o) {
  if (!o.table.empty()) {
    std::cout << fetch([&](char* b, size_t c, size_t* n) { return lcn_ed_table(o.table[0], o.table[1], b, c, n); });
    return kExitOk;
  }
  if (o.k.empty()) throw Failure{LCN_ERR_INVALID_ARGUMENT, "eddeg needs -k or --table"};
  ArchHandle a;
  if (o.s) {
    open_arch(o, a);
    std::cout << fetch([&](char* b, size_t c, size_t* n) { return lcn_arch_ed_degree(a.p, b, c, n); }) << '\n';
    return kExitOk;
  }
  const auto k = parse_sizes(o.k, a);
  if (o.tree) {
    std::cout << fetch([&](char* b, size_t c, size_t* n) { return lcn_ed_merge_tree(k.data(), k.size(), o.fmt(), b, c, n); });
  } else if (o.fmt() == LCN_FORMAT_JSON) {
    const auto v = fetch([&](char* b, size_t c, size_t* n) { return lcn_ed_degree(k.data(), k.size(), b, c, n); });
    std::string list;
    for (std::size_t i = 0; i < k.size(); ++i) list += (i ? "," : "") + std::to_string(k[i]);
    std::cout << "{\n  \"filter_sizes\": [" << list << "],\n  \"ed_degree\": \"" << v << "\"\n}\n";
  } else {
    std::cout << fetch([&](char* b, size_t c, size_t* n) { return lcn_ed_degree(k.data(), k.size(), b, c, n); }) << '\n';
  }
  return kExitOk;
}

int run_critpoints(const Options& o) {
  ArchHandle a;
  open_arch(o, a);
  lcn_solve_options so;
  lcn_solve_options_default(&so);
  so.starts = o.starts;
  so.seed = o.seed;
  so.data_seed = o.data_seed;
  so.d_out = o.d_out;
  lcn_critpoints* cp = nullptr;
  check(lcn_critpoints_training(a.p, &so, &cp));
  int verdict = 0;
  std::string out;
  try {
    check(lcn_critpoints_verdict(cp, &verdict));
    out = fetch([&](char* b, size_t c, size_t* n) { return lcn_critpoints_render(cp, o.fmt(), b, c, n); });
  } catch (...) {
    lcn_critpoints_destroy(cp);
    throw;
  }
  lcn_critpoints_destroy(cp);
  std::cout << out;
  return verdict == 0 ? kExitOk : kExitFailed;
}

int run_verify(const Options& o) {
  ArchHandle a;
  open_arch(o, a);
  lcn_verify_report* rep = nullptr;
  check(lcn_verify(a.p, o.samples, o.seed, o.smoke, &rep));
  int passed = 0;
  std::string out;
  try {
    check(lcn_verify_passed(rep, &passed));
    out = fetch([&](char* b, size_t c, size_t* n) { return lcn_verify_render(rep, o.fmt(), b, c, n); });
  } catch (...) {
    lcn_verify_destroy(rep);
    throw;
  }
  lcn_verify_destroy(rep);
  std::cout << out;
  return passed ? kExitOk : kExitFailed;
}

int run_resultant(const Options& o) {
  ArchHandle a;
  open_arch(o, a);
  std::cout << fetch([&](char* b, size_t c, size_t* n) {
    return lcn_resultant_render(a.p, o.print_matrices, o.fmt(), b, c, n);
  });
  return kExitOk;
}

int run_compose(const Options& o) {
  ArchHandle a;
  open_arch(o, a);
  const char* f = o.filters ? o.filters->c_str() : nullptr;
  std::cout << fetch([&](char* b, size_t c, size_t* n) { return lcn_compose_render(a.p, f, o.seed, o.fmt(), b, c, n); });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic toolkit for 1D linear convolutional networks"};
  app.require_subcommand(1);
  Options o;

  auto* ideal = app.add_subcommand("ideal", "vanishing equations of the neurovariety");
  add_arch(ideal, o, true);
  add_format(ideal, o);
  ideal->add_flag("--provenance", o.provenance, "annotate generators with their recursion path");

  auto* eddeg = app.add_subcommand("eddeg", "generic ED degree (number of critical points)");
  eddeg->add_option("-k", o.k, "filter sizes, each >= 2 unless -s is given");
  eddeg->add_option("-s", o.s, "strides; the architecture is reduced first");
  add_format(eddeg, o);
  eddeg->add_flag("--tree", o.tree, "print the layer-merge tree");
  eddeg->add_option("--table", o.table, "two-layer table up to k1max k2max as TSV")->expected(2);

  auto* crit = app.add_subcommand("critpoints", "count complex critical points of training");
  add_arch(crit, o, true);
  add_format(crit, o);
  crit->add_option("--starts", o.starts, "Newton starts")->check(CLI::PositiveNumber);
  crit->add_option("--seed", o.seed_flag, "start-point seed (default 42)");
  crit->add_option("--data-seed", o.data_seed, "training data seed");
  crit->add_option("--d-out", o.d_out, "output dimension of the training data")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check generators on sampled network filters");
  add_arch(verify, o, true);
  add_format(verify, o);
  verify->add_option("--samples", o.samples, "exact samples");
  verify->add_option("--seed", o.seed_flag, "sample seed (default 1)");
  verify->add_option("--smoke", o.smoke, "random ambient points for the non-membership check");

  auto* res = app.add_subcommand("resultant", "resultant matrices behind the equations");
  add_arch(res, o, true);
  add_format(res, o);
  res->add_flag("--print-matrices", o.print_matrices, "dump the matrices");

  auto* comp = app.add_subcommand("compose", "compose layer filters into the end-to-end filter");
  add_arch(comp, o, true);
  add_format(comp, o);
  comp->add_option("--filters", o.filters, "layer filters, e.g. \"1,2,3;4,5\"");
  comp->add_option("--seed", o.seed_flag, "seed for a random sample (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  o.seed = o.seed_flag.value_or(crit->parsed() ? 42 : 1);

  try {
    if (ideal->parsed()) return run_ideal(o);
    if (eddeg->parsed()) return run_eddeg(o);
    if (crit->parsed()) return run_critpoints(o);
    if (verify->parsed()) return run_verify(o);
    if (res->parsed()) return run_resultant(o);
    if (comp->parsed()) return run_compose(o);
  } catch (const Failure& f) {
    std::cerr << "lcn: " << f.message << '\n';
    if (f.status == LCN_ERR_INVALID_ARGUMENT) return kExitUsage;
    return kExitFailed;
  }
  return kExitUsage;
}
