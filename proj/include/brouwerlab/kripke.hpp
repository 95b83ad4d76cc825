#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "brouwerlab/formula.hpp"
#include "brouwerlab/logic.hpp"
#include "brouwerlab/order.hpp"
#include "brouwerlab/parallel.hpp"
#include "brouwerlab/report.hpp"

namespace brouwerlab {

/// A frame with an up-set truth set per atom.
struct KripkeModel {
  Poset frame;
  std::vector<Mask> valuation;  // indexed by atom

  /// Throws BadInput if some truth set is not upward closed.
  void validate() const;
};

/// Intuitionistic forcing at world w. ~a holds when no successor forces a.
/// Throws UnassignedAtom.
bool forces(const KripkeModel& m, std::size_t w, const Formula& f);

/// Worlds forcing f, as a mask.
Mask truth_set(const KripkeModel& m, const Formula& f);

struct FrameResult {
  bool valid = true;
  std::vector<Mask> valuation;  // lexicographically least refuting valuation
  std::size_t world = 0;        // least world where it fails
};

/// f holds at every world under every up-set valuation. Valuations run in
/// mixed-radix order over the ascending up-set list, lowest atom most
/// significant. Throws CapExceeded.
FrameResult frame_valid(const Poset& p, const Formula& f, std::uint64_t cap = kDefaultValuationCap,
                        const Exec& exec = {});

/// frame_valid against is_identity on up(P) for every corpus formula.
Report dejongh_agreement(const Poset& p, const Corpus& corpus, std::uint64_t cap = kDefaultValuationCap,
                         const Exec& exec = {});

struct PMorphism {
  Poset source;
  Poset target;
  std::vector<std::size_t> map;

  bool onto() const;
};

/// Forth: x <= y implies f x <= f y. Back: f x <= y implies some z >= x has
/// f z = y. Witness is the failing pair (x, y); y is a target world for back.
Check is_pmorphism(const PMorphism& f);

inline constexpr std::uint64_t kDefaultSearchCap = 50'000'000;

/// Lexicographically least p-morphism from p1 to p2, or none.
std::optional<PMorphism> find_pmorphism(const Poset& p1, const Poset& p2, bool require_onto,
                                        std::uint64_t cap = kDefaultSearchCap);

/// Preimage of each truth set.
std::vector<Mask> pullback(const PMorphism& f, const std::vector<Mask>& valuation);

/// Refutations in the target pull back to refutations in the source, and
/// validity in the source implies validity in the target. Throws
/// NotAPMorphism or NotOnto.
Report pmorphism_theory_transfer(const PMorphism& f, const Corpus& corpus,
                                 std::uint64_t cap = kDefaultValuationCap, const Exec& exec = {});

}  // namespace brouwerlab
