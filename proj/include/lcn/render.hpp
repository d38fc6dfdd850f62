#pragma once

// Text and JSON renderings of computed objects. Text output uses letters for
// variables when k <= 26; JSON always uses c0..c{k-1}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcn/architecture.hpp"
#include "lcn/critpoints.hpp"
#include "lcn/eddegree.hpp"
#include "lcn/ideal.hpp"
#include "lcn/verify.hpp"

namespace lcn {

nlohmann::json arch_json(const Architecture& arch);

// One generator per line; with provenance each line gets a "# path" suffix
// and the branch statistics follow.
std::string ideal_text(const IdealGenerators& gens, bool provenance);
nlohmann::json ideal_json(const Architecture& arch, const IdealGenerators& gens);

std::string merge_tree_text(const MergeNode& root);
nlohmann::json merge_tree_json(const MergeNode& root);
// Rows k1 = 2..k1max, columns k2 = 2..k2max, tab separated with headers.
std::string ed_table_tsv(int k1max, int k2max);

// Resultant recipes of every two-layer step of the recursion, optionally
// with the matrices themselves.
std::string resultant_text(const Architecture& arch, bool print_matrices);
nlohmann::json resultant_json(const Architecture& arch, bool print_matrices);

struct Composition {
  Architecture arch;
  std::vector<std::vector<Rational>> layers;
  std::vector<Rational> filter;
};

// "1,2,3;4,5" -> one list per layer; entries are integers or p/q.
std::vector<std::vector<Rational>> parse_filters(const std::string& text);
Composition compose(const Architecture& arch, std::optional<std::vector<std::vector<Rational>>> layers,
                    std::uint64_t seed);
std::string composition_text(const Composition& c);
nlohmann::json composition_json(const Composition& c);

std::string critpoints_text(const Architecture* arch, const CriticalPointReport& report);
nlohmann::json critpoints_json(const Architecture* arch, const CriticalPointReport& report);

struct VerifySummary {
  VerificationReport report;
  std::optional<std::size_t> smoke_trials;  // unset when the smoke test does not apply
  std::size_t smoke_violations = 0;

  bool passed() const {
    return report.passed() && (!smoke_trials || smoke_violations == *smoke_trials);
  }
};

std::string verify_text(const VerifySummary& v);
nlohmann::json verify_json(const VerifySummary& v);

}  // namespace lcn
