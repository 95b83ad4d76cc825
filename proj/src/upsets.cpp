#include "brouwerlab/upsets.hpp"

#include <algorithm>
#include <bit>

#include "brouwerlab/error.hpp"

namespace brouwerlab {

namespace {

void require_same_host(const UpSet& x, const UpSet& y) {
  if (&x.host() != &y.host()) throw Error(ErrorKind::HostMismatch, "up-sets live on different hosts");
}

void require_usl_host(const UpperSemilattice& u, const UpSet& x) {
  const Preorder& host = x.host();
  if (&host != &u.poset() && !(host == static_cast<const Preorder&>(u.poset())))
    throw Error(ErrorKind::HostMismatch, "up-set host is not the semilattice's poset");
}

template <class F>
void for_each_bit(Mask m, F f) {
  while (m) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

}  // namespace

bool is_upward_closed(const Preorder& p, Mask s) {
  bool ok = true;
  for_each_bit(s, [&](std::size_t i) { ok = ok && (p.up(i) & ~s) == 0; });
  return ok;
}

bool is_downward_closed(const Preorder& p, Mask s) {
  bool ok = true;
  for_each_bit(s, [&](std::size_t i) { ok = ok && (p.down(i) & ~s) == 0; });
  return ok;
}

Mask up_closure_mask(const Preorder& p, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](std::size_t i) { out |= p.up(i); });
  return out;
}

Mask down_closure_mask(const Preorder& p, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](std::size_t i) { out |= p.down(i); });
  return out;
}

UpSet::UpSet(const Preorder& host, Mask members) : host_(&host), members_(members) {
  if ((members & ~host.carrier()) || !is_upward_closed(host, members))
    throw Error(ErrorKind::BadInput, host.mask_label(members) + " is not an up-set");
}

Mask UpSet::generators() const {
  Mask out = 0;
  for_each_bit(members_, [&](std::size_t i) {
    // i is minimal in the up-set when no other member lies strictly below it
    if ((host_->down(i) & members_ & ~host_->up(i)) == 0) out |= bit(i);
  });
  return out;
}

DownSet::DownSet(const Preorder& host, Mask members) : host_(&host), members_(members) {
  if (members & ~host.carrier()) throw Error(ErrorKind::BadInput, "down-set has members past the carrier");
  for (std::size_t x = 0; x < host.size(); ++x) {
    if (!has(members, x)) continue;
    const Mask escaped = host.down(x) & ~members;
    if (escaped) {
      const auto y = static_cast<std::int64_t>(std::countr_zero(escaped));
      throw Error(ErrorKind::NotDownwardClosed,
                  host.label(static_cast<std::size_t>(y)) + " <= " + host.label(x) + " is missing",
                  {static_cast<std::int64_t>(x), y});
    }
  }
}

UpSet upward_closure(const Preorder& p, Mask s) {
  if (s & ~p.carrier()) throw Error(ErrorKind::BadInput, "subset exceeds carrier");
  return UpSet(p, up_closure_mask(p, s), UpSet::Unchecked{});
}

std::vector<Mask> enumerate_upset_masks(const Preorder& p, std::size_t cap) {
  // Enumerate over the quotient so every class is decided at once.
  const Quotient q = quotient_to_poset(p);
  const Poset& poset = q.poset;
  std::vector<Mask> class_members(poset.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) class_members[q.class_of[i]] |= bit(i);

  const std::vector<std::size_t> order = poset.top_down_order();
  std::vector<Mask> out;
  // Depth-first over include/exclude decisions. Elements arrive after all
  // their strict upper bounds, so "include x" is legal exactly when every
  // strict upper bound is already in; excluding is always legal.
  struct Frame {
    std::size_t depth;
    Mask chosen;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.depth == order.size()) {
      if (out.size() == cap)
        throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " up-sets",
                    {static_cast<std::int64_t>(cap)});
      out.push_back(f.chosen);
      continue;
    }
    const std::size_t x = order[f.depth];
    stack.push_back({f.depth + 1, f.chosen});
    const Mask strict_above = poset.up(x) & ~bit(x);
    if ((strict_above & ~f.chosen) == 0) stack.push_back({f.depth + 1, f.chosen | bit(x)});
  }
  std::vector<Mask> expanded;
  expanded.reserve(out.size());
  for (Mask m : out) {
    Mask e = 0;
    for_each_bit(m, [&](std::size_t c) { e |= class_members[c]; });
    expanded.push_back(e);
  }
  std::sort(expanded.begin(), expanded.end());
  return expanded;
}

std::vector<UpSet> enumerate_upsets(const Preorder& p, std::size_t cap) {
  std::vector<UpSet> out;
  for (Mask m : enumerate_upset_masks(p, cap)) out.push_back(UpSet(p, m, UpSet::Unchecked{}));
  return out;
}

UpSet upset_meet(const UpSet& x, const UpSet& y) {
  require_same_host(x, y);
  return UpSet(x.host(), x.members() | y.members(), UpSet::Unchecked{});
}

UpSet upset_join(const UpSet& x, const UpSet& y) {
  require_same_host(x, y);
  return UpSet(x.host(), x.members() & y.members(), UpSet::Unchecked{});
}

Mask upset_arrow_mask(const Preorder& p, Mask x, Mask y) {
  Mask out = 0;
  const Mask bad = x & ~y;
  for (std::size_t z = 0; z < p.size(); ++z)
    if ((p.up(z) & bad) == 0) out |= bit(z);
  return out;
}

UpSet upset_arrow(const UpSet& x, const UpSet& y) {
  require_same_host(x, y);
  return UpSet(x.host(), upset_arrow_mask(x.host(), x.members(), y.members()), UpSet::Unchecked{});
}

UpSet usl_upset_join(const UpperSemilattice& u, const UpSet& x, const UpSet& y) {
  require_same_host(x, y);
  require_usl_host(u, x);
  Mask out = 0;
  for_each_bit(x.members(), [&](std::size_t a) {
    for_each_bit(y.members(), [&](std::size_t b) { out |= bit(u.join(a, b)); });
  });
  return UpSet(x.host(), out, UpSet::Unchecked{});
}

UpSet usl_upset_arrow(const UpperSemilattice& u, const UpSet& x, const UpSet& y) {
  require_same_host(x, y);
  require_usl_host(u, x);
  Mask out = 0;
  for (std::size_t z = 0; z < u.size(); ++z) {
    bool ok = true;
    for_each_bit(x.members(), [&](std::size_t a) { ok = ok && y.contains(u.join(z, a)); });
    if (ok) out |= bit(z);
  }
  return UpSet(x.host(), out, UpSet::Unchecked{});
}

}  // namespace brouwerlab
