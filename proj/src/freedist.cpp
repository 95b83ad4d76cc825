#include "brouwerlab/freedist.hpp"

#include <algorithm>
#include <bit>

#include "brouwerlab/error.hpp"

namespace brouwerlab {

namespace {

std::vector<std::int64_t> wit2(std::size_t a, std::size_t b) {
  return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
}

}  // namespace

Elem FreeLattice::element(Mask x) const {
  const Mask up = up_closure_mask(base.poset(), x);
  auto it = std::lower_bound(masks.begin(), masks.end(), up);
  return static_cast<Elem>(it - masks.begin());
}

std::vector<Elem> meet_irreducibles_fast(const BrouwerAlgebra& b) {
  // In a finite lattice x < 1 is meet-irreducible iff the meet of everything
  // strictly above it is still strictly above it.
  std::vector<Elem> out;
  for (Elem x = 0; x < b.size(); ++x) {
    if (x == b.top()) continue;
    Elem m = b.top();
    for (Elem y = 0; y < b.size(); ++y)
      if (b.lt(x, y)) m = b.meet(m, y);
    if (m != x) out.push_back(x);
  }
  return out;
}

FreeLattice free_over(const ImplicativeUsl& u, std::size_t cap, const Exec& exec) {
  UpsetAlgebra ua = build_upset_algebra(u.poset(), cap, Provenance::free_over, exec);
  std::vector<Elem> iota(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) iota[x] = ua.index_of(u.poset().up(x));
  FreeLattice f{u, std::move(ua.algebra), std::move(ua.masks), std::move(iota)};
  std::vector<Elem> image = f.iota;
  std::sort(image.begin(), image.end());
  if (image != meet_irreducibles_fast(f.algebra))
    throw Error(ErrorKind::InvalidAlgebra, "generator image differs from the meet-irreducibles");
  return f;
}

bool free_leq(const UpperSemilattice& u, Mask x, Mask y) {
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!has(y, j)) continue;
    bool some = false;
    for (std::size_t i = 0; i < u.size() && !some; ++i) some = has(x, i) && u.leq(i, j);
    if (!some) return false;
  }
  return true;
}

FreeLattice medvedev_algebra(std::size_t n, bool allow_large, const Exec& exec) {
  if (n == 0) throw Error(ErrorKind::PreconditionFailed, "n must be positive");
  const std::size_t limit = allow_large ? kMaxMedvedevLarge : kMaxMedvedev;
  if (n > limit)
    throw Error(ErrorKind::CapExceeded,
                "n = " + std::to_string(n) + " exceeds " + std::to_string(limit) +
                    (allow_large ? "" : " (use --allow-large for 5)"),
                {static_cast<std::int64_t>(n)});
  return free_over(boolean_reverse_usl(n, kMaxMedvedevLarge), kDefaultUpsetCap, exec);
}

Extension universal_extend(const FreeLattice& f, const std::vector<Elem>& g, const BrouwerAlgebra& target) {
  const UpperSemilattice& u = f.base;
  if (g.size() != u.size()) throw Error(ErrorKind::BadInput, "g must assign every generator");
  for (Elem v : g)
    if (v >= target.size()) throw Error(ErrorKind::BadInput, "g maps outside the target");
  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y)
      if (g[u.join(x, y)] != target.join(g[x], g[y]))
        throw Error(ErrorKind::NotAUslHom, "g(x + y) != g(x) v g(y)", wit2(x, y));

  const BrouwerAlgebra& a = f.algebra;
  Extension ext;
  ext.report = Report("universal_extend");
  ext.map.resize(a.size());
  for (Elem e = 0; e < a.size(); ++e) {
    Elem m = target.top();
    for (Mask rest = f.masks[e]; rest; rest &= rest - 1)
      m = target.meet(m, g[static_cast<std::size_t>(std::countr_zero(rest))]);
    ext.map[e] = m;
  }
  const auto& h = ext.map;
  auto pairwise = [&](const std::string& name, auto src, auto dst) {
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y)
        if (h[src(x, y)] != dst(h[x], h[y])) {
          ext.report.add(name, false, "fails on a pair", wit2(x, y));
          return;
        }
    ext.report.add(name, true);
  };
  pairwise("preserves_meet", [&](Elem x, Elem y) { return a.meet(x, y); },
           [&](Elem x, Elem y) { return target.meet(x, y); });
  pairwise("preserves_join", [&](Elem x, Elem y) { return a.join(x, y); },
           [&](Elem x, Elem y) { return target.join(x, y); });
  ext.report.add("preserves_top", h[a.top()] == target.top());
  ext.report.add("preserves_bottom", h[a.bottom()] == target.bottom());
  {
    std::optional<std::size_t> bad;
    for (std::size_t x = 0; x < u.size() && !bad; ++x)
      if (h[f.iota[x]] != g[x]) bad = x;
    if (bad)
      ext.report.add("agrees_on_generators", false, "g'(iota x) != g(x)", {static_cast<std::int64_t>(*bad)});
    else
      ext.report.add("agrees_on_generators", true);
  }
  {
    // Uniqueness: every element is the meet of the generators below it, so any
    // lattice hom agreeing with g on generators is h.
    std::optional<Elem> bad;
    for (Elem e = 0; e < a.size() && !bad; ++e) {
      Elem m = a.top();
      for (Mask rest = f.masks[e]; rest; rest &= rest - 1)
        m = a.meet(m, f.iota[static_cast<std::size_t>(std::countr_zero(rest))]);
      if (m != e) bad = e;
    }
    if (bad)
      ext.report.add("generators_meet_generate", false, "element is not a meet of generators",
                     {static_cast<std::int64_t>(*bad)});
    else
      ext.report.add("generators_meet_generate", true);
  }
  return ext;
}

Report iota_arrow_check(const FreeLattice& f) {
  Report r("iota_arrow");
  const ImplicativeUsl& u = f.base;
  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y)
      if (f.iota[u.arrow(x, y)] != f.algebra.arrow(f.iota[x], f.iota[y])) {
        r.add("iota_preserves_arrow", false, "iota(x -> y) != iota x -> iota y", wit2(x, y));
        return r;
      }
  r.add("iota_preserves_arrow", true, std::to_string(u.size() * u.size()) + " pairs");
  return r;
}

}  // namespace brouwerlab
