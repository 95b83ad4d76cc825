#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/json_io.hpp"
#include "brouwerlab/logic.hpp"
#include "brouwerlab/order.hpp"
#include "brouwerlab/report.hpp"

namespace brouwerlab {

struct SuiteConfig {
  std::uint64_t seed = 0;
  Exec exec;
  std::uint64_t cap_valuations = kDefaultValuationCap;
  std::size_t random_formulas = 200;
  bool timings = false;
};

template <class T>
using Named = std::pair<std::string, T>;

/// Small frames used across the battery, all with at most 6 worlds.
const std::vector<Named<Poset>>& frame_catalog();

/// Every algebra the battery calls "constructed": up-set algebras of the
/// frame catalog, B_1..B_4, some add_top extensions and intervals.
std::vector<Named<BrouwerAlgebra>> algebra_family(const Exec& exec = {});

/// The curated corpus plus `count` seeded random formulas over two atoms.
Corpus suite_corpus(std::uint64_t seed, std::size_t count);

struct SuiteCriterion {
  std::string id;
  std::string title;
  std::function<Report(const SuiteConfig&)> run;
};

/// Criteria 1 to 10 of the battery, in order.
const std::vector<SuiteCriterion>& suite_criteria();

struct SuiteResult {
  std::uint64_t seed = 0;
  std::vector<std::pair<SuiteCriterion, Report>> results;
  std::vector<double> seconds;

  bool passed() const;
  /// Timings are included only when `timings` is set, so that runs with
  /// different job counts stay byte-identical.
  Json to_json(bool timings) const;
  std::string to_text(bool timings) const;
};

SuiteResult run_suite(const SuiteConfig& cfg);

}  // namespace brouwerlab
