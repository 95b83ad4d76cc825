#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brouwerlab/logic.hpp"
#include "brouwerlab/order.hpp"
#include "brouwerlab/report.hpp"

namespace brouwerlab {

/// A semilattice with a candidate class A, given as a down-set mask.
struct SplittingInstance {
  std::string name;
  UpperSemilattice usl;
  Mask a;

  /// Throws NotDownwardClosed, or PreconditionViolated when A is empty or
  /// misses the bottom.
  void validate() const;
  /// Elements of A that are not below `x`.
  Mask incomparable_to(std::size_t x) const;
};

/// Least c in A with c > a and b + c outside A for every b in B.
/// Throws PreconditionViolated unless a is in A and each b in A with b not <= a.
std::optional<std::size_t> splitting_witness(const SplittingInstance& inst, std::size_t a, Mask b);

/// The full definition over the finite instance. A finite nonempty A always
/// fails: a maximal element has nothing strictly above it inside A, so the
/// empty B already has no witness. The headline check names that element.
Report is_splitting_class_finite(const SplittingInstance& inst);

/// Witness condition for every a of height < d, using the full set of
/// incomparable elements as B (any c that works there works for subsets).
Report splitting_upto_depth(const SplittingInstance& inst, std::size_t d);

/// Looks for an onto p-morphism from A onto the depth-d binary tree, runs the
/// theory transfer along it, and checks that B -> B u A^c is an isomorphism
/// from up(A) onto the interval [U, A^c] of up(U).
Report tree_pipeline(const SplittingInstance& inst, std::size_t d, const Corpus& corpus,
                     std::uint64_t cap = kDefaultValuationCap, const Exec& exec = {});

/// Just the interval isomorphism part of tree_pipeline.
Report interval_isomorphism_check(const SplittingInstance& inst, const Exec& exec = {});

/// "atoms3", "fork2", "chain3", "grid3x4". Throws UnknownName.
SplittingInstance canned_splitting_instance(const std::string& name);
std::vector<std::string> canned_splitting_names();

}  // namespace brouwerlab
