#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brouwerlab {

/// Subset of a carrier of at most 64 elements; bit i is element i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
inline constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline constexpr bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Raw square relation, row i holding {j : (i, j) in R}. Nothing is assumed
/// about it until it is validated.
struct Relation {
  std::size_t size = 0;
  std::vector<Mask> rows;

  static Relation identity(std::size_t n);
  /// Reflexive relation plus the listed pairs. Transitive closure is NOT taken.
  static Relation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// From a dense 0/1 matrix; throws NotSquare for ragged input.
  static Relation from_matrix(const std::vector<std::vector<bool>>& matrix);

  bool contains(std::size_t i, std::size_t j) const { return has(rows[i], j); }
};

/// A reflexive, transitive relation on 0..size-1.
class Preorder {
 public:
  /// validate_preorder: throws NotReflexive(i) or NotTransitive(i, j, k).
  static Preorder validate(const Relation& r, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return has(up_[i], j); }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j) && !leq(j, i); }
  bool equivalent(std::size_t i, std::size_t j) const { return leq(i, j) && leq(j, i); }
  /// {j : i <= j}
  Mask up(std::size_t i) const { return up_[i]; }
  /// {j : j <= i}
  Mask down(std::size_t i) const { return down_[i]; }
  Mask carrier() const { return full_mask(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;
  std::string mask_label(Mask m) const;

  Relation relation() const { return Relation{size(), up_}; }
  bool is_antisymmetric() const;

  /// Elements with nothing strictly above / below them.
  Mask maximal() const;
  Mask minimal() const;

  /// Induced order on the elements of `keep`, re-indexed densely.
  Preorder restrict(Mask keep) const;

  friend bool operator==(const Preorder& a, const Preorder& b) { return a.up_ == b.up_; }

 protected:
  Preorder() = default;

  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<std::string> labels_;
};

/// An antisymmetric preorder.
class Poset : public Preorder {
 public:
  /// Throws the Preorder errors or NotAntisymmetric(i, j).
  static Poset validate(const Relation& r, std::vector<std::string> labels = {});
  static Poset from_preorder(Preorder p);

  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  /// Length of the longest chain ending at i.
  std::size_t height(std::size_t i) const;
  /// Length of the longest chain starting at i.
  std::size_t depth(std::size_t i) const;
  /// Elements listed so that every element comes after everything above it.
  std::vector<std::size_t> top_down_order() const;

  Poset restrict(Mask keep) const;

 private:
  Poset() = default;
};

struct Quotient {
  Poset poset;
  std::vector<std::size_t> class_of;
};

/// Collapses mutual-<= classes. Classes are numbered by their least member.
Quotient quotient_to_poset(const Preorder& p);

/// Poset with a binary join table and a least element.
class UpperSemilattice {
 public:
  /// Validates an explicit table: join(a, b) must be the least upper bound.
  static UpperSemilattice with_table(Poset poset, std::vector<std::uint8_t> join);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t bottom() const { return bottom_; }
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
  const std::vector<std::uint8_t>& join_table() const { return join_; }

 protected:
  UpperSemilattice(Poset poset, std::vector<std::uint8_t> join, std::size_t bottom);

  Poset poset_;
  std::vector<std::uint8_t> join_;
  std::size_t bottom_;

  friend UpperSemilattice compute_join_table(const Poset& p);
};

/// Throws NoBottom or NoLub(a, b) for the first pair without a least upper bound.
UpperSemilattice compute_join_table(const Poset& p);

/// Upper semilattice where arrow(a, b) = least {c : b <= a + c} exists for all pairs.
class ImplicativeUsl : public UpperSemilattice {
 public:
  std::size_t arrow(std::size_t a, std::size_t b) const { return arrow_[a * size() + b]; }
  const std::vector<std::uint8_t>& arrow_table() const { return arrow_; }

 private:
  ImplicativeUsl(UpperSemilattice usl, std::vector<std::uint8_t> arrow);

  std::vector<std::uint8_t> arrow_;

  friend ImplicativeUsl compute_implication_table(const UpperSemilattice& u);
};

/// Throws NoLeastResidual(a, b) for the first pair lacking a least residual.
ImplicativeUsl compute_implication_table(const UpperSemilattice& u);

inline constexpr std::size_t kDefaultBooleanCap = 6;

/// Subsets of {1..n} ordered by reverse inclusion: element index is the
/// subset's bit mask (bit k-1 for k), join is intersection, bottom is {1..n},
/// arrow(x, y) = y | ~x. Throws CapExceeded above `cap`.
ImplicativeUsl boolean_reverse_usl(std::size_t n, std::size_t cap = kDefaultBooleanCap);

/// Subsets of {1..n} under inclusion: join is union, bottom is the empty set,
/// arrow(x, y) = y & ~x.
ImplicativeUsl powerset_usl(std::size_t n, std::size_t cap = kDefaultBooleanCap);

/// Brace notation for a subset mask of {1..n}: "{}", "{1,3}".
std::string subset_label(Mask m);

namespace canned {
Poset chain(std::size_t k);
Poset antichain(std::size_t k);
/// root below two incomparable leaves: 0 = root, 1 = leaf0, 2 = leaf1
Poset fork();
/// bottom, two incomparable middles, top
Poset diamond();
/// 0/1 strings of length <= k under prefix order, breadth-first indexed.
Poset binary_tree(std::size_t k);
/// Subsets of {1..k} under inclusion, indexed by bit mask.
Poset boolean(std::size_t k);
}  // namespace canned

/// Named poset: "chain", "antichain", "fork", "diamond", "binary_tree",
/// "boolean". Throws UnknownName or CapExceeded.
Poset canned_poset(std::string_view name, std::size_t param = 0);
/// Parses "chain(3)", "fork", "binary_tree(2)".
Poset parse_canned_poset(std::string_view spec_text);

}  // namespace brouwerlab
