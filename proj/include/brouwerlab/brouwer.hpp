#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brouwerlab/order.hpp"
#include "brouwerlab/parallel.hpp"
#include "brouwerlab/report.hpp"
#include "brouwerlab/upsets.hpp"

namespace brouwerlab {

enum class Provenance { raw, from_upsets, free_over, add_top, interval };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

/// Finite Brouwer algebra held as explicit operation tables. Validity is the
/// zero element: the dual reading of Heyting semantics, where a -> b is the
/// least c with a v c >= b.
///
/// Construction from raw tables only checks shapes; run validate_brouwer
/// for the algebraic laws. Every builder in this library produces algebras
/// that pass validation.
class BrouwerAlgebra {
 public:
  using Elem = std::uint32_t;
  static constexpr std::size_t kMaxSize = 65535;

  struct Tables {
    std::size_t size = 0;
    std::vector<std::uint8_t> leq;  // row-major 0/1
    std::vector<Elem> meet;
    std::vector<Elem> join;
    std::vector<Elem> arrow;
    Elem bottom = 0;
    Elem top = 0;
    Provenance provenance = Provenance::raw;
    std::vector<std::string> labels;
  };

  /// Throws BadInput on shape errors (sizes, out-of-range entries).
  static BrouwerAlgebra from_tables(const Tables& t);
  Tables tables() const;

  std::size_t size() const { return n_; }
  bool leq(Elem a, Elem b) const { return (leq_[a * words_ + (b >> 6)] >> (b & 63)) & 1u; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[std::size_t{a} * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[std::size_t{a} * n_ + b]; }
  Elem arrow(Elem a, Elem b) const { return arrow_[std::size_t{a} * n_ + b]; }
  /// Negation is a -> 1.
  Elem neg(Elem a) const { return arrow(a, top_); }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  Provenance provenance() const { return provenance_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem e) const;

  friend bool operator==(const BrouwerAlgebra& a, const BrouwerAlgebra& b);

 private:
  BrouwerAlgebra() = default;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> leq_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> arrow_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  Provenance provenance_ = Provenance::raw;
  std::vector<std::string> labels_;
};

using Elem = BrouwerAlgebra::Elem;

/// up(P) together with the up-set behind each element.
struct UpsetAlgebra {
  std::vector<Mask> masks;  // ascending; masks[e] is element e
  BrouwerAlgebra algebra;

  /// Element whose up-set is exactly `m`; throws BadInput if `m` is not one.
  Elem index_of(Mask m) const;
};

/// up(P) ordered by reverse inclusion: 0 = whole carrier, 1 = empty set,
/// meet = union, join = intersection. Throws CapExceeded.
UpsetAlgebra build_upset_algebra(const Preorder& p, std::size_t cap = kDefaultUpsetCap,
                                 Provenance provenance = Provenance::from_upsets, const Exec& exec = {});
BrouwerAlgebra from_upsets(const Preorder& p, std::size_t cap = kDefaultUpsetCap, const Exec& exec = {});

/// Lattice order, meet/join bounds, distributivity, residuation
/// (a v c >= b iff a -> b <= c), 0 != 1. One counterexample per failed law.
Report validate_brouwer(const BrouwerAlgebra& b, const Exec& exec = {});

/// arrow(a, b) <= b for all a, b.
Check check_arrow_below(const BrouwerAlgebra& b, const Exec& exec = {});
/// (a ^ b) -> c = (a -> c) v (b -> c) for all a, b, c.
Check check_meet_arrow_law(const BrouwerAlgebra& b, const Exec& exec = {});

bool is_meet_reducible(const BrouwerAlgebra& b, Elem x);
bool is_join_reducible(const BrouwerAlgebra& b, Elem x);
/// Non-top elements that are not a meet of two strictly greater elements.
std::vector<Elem> meet_irreducibles(const BrouwerAlgebra& b);
/// Non-bottom elements that are not a join of two strictly smaller elements.
std::vector<Elem> join_irreducibles(const BrouwerAlgebra& b);

/// Sub-algebra on [lo, hi] with `members[i]` the parent element of i.
struct Interval {
  BrouwerAlgebra algebra;
  std::vector<Elem> members;

  std::optional<Elem> index_of(Elem parent) const;
};

/// [0, a] with the parent's operations restricted. Throws BottomTop for a = 0.
Interval interval(const BrouwerAlgebra& b, Elem a);
/// [lo, hi] with the arrow recomputed as the least residual inside the
/// interval. Throws PreconditionFailed unless lo < hi.
Interval sub_interval(const BrouwerAlgebra& b, Elem lo, Elem hi);

/// Checks that u -> x v u maps [0, z] onto [x, y] as a Brouwer-algebra
/// homomorphism. Throws PreconditionFailed unless x < y and y = z v x.
Report interval_homomorphism_check(const BrouwerAlgebra& b, Elem x, Elem y, Elem z);

/// The three conditions for C to be canonical: arrows from C distribute over
/// meets, C is meet-irreducible, C is closed under join and arrow.
Report canonical_set_check(const BrouwerAlgebra& b, const std::vector<Elem>& c);

inline constexpr std::size_t kDefaultFamilyCap = 3;

/// Meet-family order criterion and the arrow expansion over families from C
/// (nonempty, up to `family_cap` members each), plus the unconditional
/// (a ^ b) -> c law over the whole algebra.
Report canonical_laws_check(const BrouwerAlgebra& b, const std::vector<Elem>& c,
                            std::size_t family_cap = kDefaultFamilyCap, const Exec& exec = {});

/// New top strictly above everything. Old arrows are kept, a -> 1' = 1',
/// 1' -> b = 0. Throws InvalidAlgebra if the result fails validation.
BrouwerAlgebra add_top(const BrouwerAlgebra& b);

/// 0 is meet-irreducible and 1 is join-irreducible.
bool embeddable_shape(const BrouwerAlgebra& b);

/// The join-reduct with arrow, as an implicative upper semilattice on the
/// same indices. Needs size <= 64.
ImplicativeUsl implicative_reduct(const BrouwerAlgebra& b);

}  // namespace brouwerlab
