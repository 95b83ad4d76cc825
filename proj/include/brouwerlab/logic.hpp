#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/formula.hpp"
#include "brouwerlab/parallel.hpp"
#include "brouwerlab/report.hpp"

namespace brouwerlab {

/// Assignment of algebra elements to atoms, indexed by atom.
using Valuation = std::vector<Elem>;

/// Value of f under the dual reading: | is meet, & is join, -> is arrow,
/// ~a is a -> 1, top is 0 and bot is 1. Throws UnassignedAtom(i).
Elem eval_algebra(const BrouwerAlgebra& b, const Formula& f, const Valuation& v);

/// Postfix form of a formula for repeated evaluation.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);
  Elem eval(const BrouwerAlgebra& b, const Elem* values) const;
  std::size_t depth() const { return depth_; }

 private:
  struct Step {
    Op op;
    std::size_t atom;
  };
  std::vector<Step> steps_;
  std::size_t depth_ = 0;
};

inline constexpr std::uint64_t kDefaultValuationCap = 10'000'000;

struct IdentityResult {
  bool identity = true;
  Valuation witness;  // lexicographically least refuting valuation; atoms not in f map to 0
  Elem value = 0;     // value under the witness
};

/// Every valuation of the atoms occurring in f evaluates to 0. Valuations are
/// enumerated in mixed-radix order with the lowest atom most significant.
/// Throws CapExceeded when |b|^atoms exceeds `cap`.
IdentityResult is_identity(const BrouwerAlgebra& b, const Formula& f, std::uint64_t cap = kDefaultValuationCap,
                           const Exec& exec = {});

/// Truth-table check via the two-element algebra.
bool is_classical_tautology(const Formula& f);
const BrouwerAlgebra& two_element_algebra();

enum class Expect { ipc, cpc, jan, free };
std::string_view to_string(Expect e);
Expect expect_from_string(std::string_view s);

struct CorpusEntry {
  std::string name;
  Formula formula;
  Expect expect;
};

/// Named formula list with unique names.
class Corpus {
 public:
  Corpus() = default;
  /// Throws BadInput on duplicate names.
  explicit Corpus(std::vector<CorpusEntry> entries);

  const std::vector<CorpusEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// Appends formulas named <prefix><i> with Expect::free.
  void append_random(const std::vector<Formula>& fs, const std::string& prefix);

 private:
  std::vector<CorpusEntry> entries_;
};

/// The built-in curated corpus.
const Corpus& default_corpus();

enum class Inclusion { none, first_in_second, second_in_first };

/// Identity status of each corpus formula in both algebras; a check fails
/// when the declared inclusion is violated.
Report theory_compare(const BrouwerAlgebra& b1, const BrouwerAlgebra& b2, const Corpus& corpus,
                      Inclusion expect = Inclusion::none, std::uint64_t cap = kDefaultValuationCap,
                      const Exec& exec = {});

}  // namespace brouwerlab
