#pragma once

#include <cstddef>
#include <vector>

#include "brouwerlab/order.hpp"

namespace brouwerlab {

inline constexpr std::size_t kDefaultUpsetCap = 1'000'000;

/// Upward-closed subset of a host preorder. The host is not owned and must
/// outlive the value.
class UpSet {
 public:
  /// Throws BadInput if `members` is not upward closed in `host`.
  UpSet(const Preorder& host, Mask members);

  const Preorder& host() const { return *host_; }
  Mask members() const { return members_; }
  bool contains(std::size_t i) const { return has(members_, i); }
  bool empty() const { return members_ == 0; }
  /// Minimal members; the antichain view of the up-set.
  Mask generators() const;

  friend bool operator==(const UpSet& a, const UpSet& b) {
    return a.host_ == b.host_ && a.members_ == b.members_;
  }

 private:
  struct Unchecked {};
  UpSet(const Preorder& host, Mask members, Unchecked) : host_(&host), members_(members) {}

  const Preorder* host_;
  Mask members_;

  friend UpSet upward_closure(const Preorder& p, Mask s);
  friend std::vector<UpSet> enumerate_upsets(const Preorder& p, std::size_t cap);
  friend UpSet upset_meet(const UpSet& x, const UpSet& y);
  friend UpSet upset_join(const UpSet& x, const UpSet& y);
  friend UpSet upset_arrow(const UpSet& x, const UpSet& y);
  friend UpSet usl_upset_join(const UpperSemilattice& u, const UpSet& x, const UpSet& y);
  friend UpSet usl_upset_arrow(const UpperSemilattice& u, const UpSet& x, const UpSet& y);
};

/// Downward-closed subset of a host preorder.
class DownSet {
 public:
  /// Throws NotDownwardClosed(x, y) with x in the set, y <= x, y outside.
  DownSet(const Preorder& host, Mask members);

  const Preorder& host() const { return *host_; }
  Mask members() const { return members_; }
  bool contains(std::size_t i) const { return has(members_, i); }
  /// U \ A, which is upward closed.
  Mask complement() const { return host_->carrier() & ~members_; }

 private:
  const Preorder* host_;
  Mask members_;
};

bool is_upward_closed(const Preorder& p, Mask s);
bool is_downward_closed(const Preorder& p, Mask s);
Mask up_closure_mask(const Preorder& p, Mask s);
Mask down_closure_mask(const Preorder& p, Mask s);

/// Least up-set containing s.
UpSet upward_closure(const Preorder& p, Mask s);

/// Every up-set, ordered by ascending mask value. Throws CapExceeded when
/// more than `cap` exist.
std::vector<UpSet> enumerate_upsets(const Preorder& p, std::size_t cap = kDefaultUpsetCap);
/// Same enumeration as raw masks.
std::vector<Mask> enumerate_upset_masks(const Preorder& p, std::size_t cap = kDefaultUpsetCap);

/// Greatest lower bound in up(P) under reverse inclusion: union.
UpSet upset_meet(const UpSet& x, const UpSet& y);
/// Least upper bound in up(P) under reverse inclusion: intersection.
UpSet upset_join(const UpSet& x, const UpSet& y);
/// The largest up-set Z with Z & X contained in Y, i.e. {z : every w >= z in X is in Y}.
UpSet upset_arrow(const UpSet& x, const UpSet& y);
Mask upset_arrow_mask(const Preorder& p, Mask x, Mask y);

/// {x + y : x in X, y in Y}, which coincides with X & Y.
UpSet usl_upset_join(const UpperSemilattice& u, const UpSet& x, const UpSet& y);
/// {z : z + x in Y for every x in X}.
UpSet usl_upset_arrow(const UpperSemilattice& u, const UpSet& x, const UpSet& y);

}  // namespace brouwerlab
