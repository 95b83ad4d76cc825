#include "brouwerlab/kripke.hpp"

#include <algorithm>
#include <array>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/error.hpp"
#include "brouwerlab/upsets.hpp"

namespace brouwerlab {

namespace {

std::int64_t i64(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

void KripkeModel::validate() const {
  for (std::size_t a = 0; a < valuation.size(); ++a)
    if ((valuation[a] & ~frame.carrier()) || !is_upward_closed(frame, valuation[a]))
      throw Error(ErrorKind::BadInput, "truth set of p" + std::to_string(a + 1) + " is not an up-set", {i64(a)});
}

namespace {

/// Formula flattened into an index tree so per-world recursion does not
/// touch reference counts.
struct Flat {
  struct Node {
    Op op;
    std::size_t atom;
    std::size_t lhs, rhs;
  };
  std::vector<Node> nodes;
  std::size_t root = 0;

  explicit Flat(const Formula& f) { root = add(f); }

  std::size_t add(const Formula& f) {
    Node n{f.op(), f.op() == Op::atom ? f.atom_index() : 0, 0, 0};
    if (f.op() == Op::neg) n.lhs = add(f.lhs());
    if (f.op() == Op::conj || f.op() == Op::disj || f.op() == Op::imp) {
      n.lhs = add(f.lhs());
      n.rhs = add(f.rhs());
    }
    nodes.push_back(n);
    return nodes.size() - 1;
  }
};

bool forces_flat(const Poset& p, const std::vector<Mask>& val, const Flat& f, std::size_t i, std::size_t w) {
  const Flat::Node& n = f.nodes[i];
  switch (n.op) {
    case Op::atom:
      if (n.atom >= val.size())
        throw Error(ErrorKind::UnassignedAtom, "p" + std::to_string(n.atom + 1) + " has no truth set",
                    {i64(n.atom)});
      return has(val[n.atom], w);
    case Op::top: return true;
    case Op::bot: return false;
    case Op::conj: return forces_flat(p, val, f, n.lhs, w) && forces_flat(p, val, f, n.rhs, w);
    case Op::disj: return forces_flat(p, val, f, n.lhs, w) || forces_flat(p, val, f, n.rhs, w);
    case Op::neg:
      for (std::size_t u = 0; u < p.size(); ++u)
        if (p.leq(w, u) && forces_flat(p, val, f, n.lhs, u)) return false;
      return true;
    case Op::imp:
      for (std::size_t u = 0; u < p.size(); ++u)
        if (p.leq(w, u) && forces_flat(p, val, f, n.lhs, u) && !forces_flat(p, val, f, n.rhs, u)) return false;
      return true;
  }
  return false;
}

}  // namespace

bool forces(const KripkeModel& m, std::size_t w, const Formula& f) {
  if (w >= m.frame.size()) throw Error(ErrorKind::BadInput, "world out of range", {i64(w)});
  const Flat flat(f);
  return forces_flat(m.frame, m.valuation, flat, flat.root, w);
}

Mask truth_set(const KripkeModel& m, const Formula& f) {
  Mask out = 0;
  for (std::size_t w = 0; w < m.frame.size(); ++w)
    if (forces(m, w, f)) out |= bit(w);
  return out;
}

FrameResult frame_valid(const Poset& p, const Formula& f, std::uint64_t cap, const Exec& exec) {
  const std::vector<Mask> upsets = enumerate_upset_masks(p, cap);
  const std::vector<std::size_t> atoms = f.atoms();
  if (atoms.size() > 64) throw Error(ErrorKind::CapExceeded, "more than 64 distinct atoms");
  const std::uint64_t n = upsets.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (total > cap / n)
      throw Error(ErrorKind::CapExceeded, "frame valuations exceed the cap of " + std::to_string(cap),
                  {static_cast<std::int64_t>(cap)});
    total *= n;
  }
  const std::size_t bound = f.atom_bound();
  const Flat flat(f);
  auto valuation_for = [&](std::uint64_t index) {
    std::vector<Mask> val(bound, 0);
    for (std::size_t i = atoms.size(); i-- > 0;) {
      val[atoms[i]] = upsets[index % n];
      index /= n;
    }
    return val;
  };
  auto failing_world = [&](const std::vector<Mask>& val) -> std::optional<std::size_t> {
    for (std::size_t w = 0; w < p.size(); ++w)
      if (!forces_flat(p, val, flat, flat.root, w)) return w;
    return std::nullopt;
  };
  auto hit = parallel_find_first(total, exec,
                                 [&](std::uint64_t index) { return failing_world(valuation_for(index)).has_value(); });
  FrameResult r;
  if (!hit) return r;
  r.valid = false;
  r.valuation = valuation_for(*hit);
  r.world = *failing_world(r.valuation);
  return r;
}

Report dejongh_agreement(const Poset& p, const Corpus& corpus, std::uint64_t cap, const Exec& exec) {
  Report r("dejongh_agreement");
  const BrouwerAlgebra b = from_upsets(p, cap, exec);
  auto word = [](bool v) { return v ? "valid" : "refuted"; };
  for (const auto& e : corpus.entries()) {
    const bool frame = frame_valid(p, e.formula, cap, exec).valid;
    const bool algebra = is_identity(b, e.formula, cap, exec).identity;
    r.add(e.name, frame == algebra, std::string("frame ") + word(frame) + ", algebra " + word(algebra));
  }
  return r;
}

bool PMorphism::onto() const {
  Mask hit = 0;
  for (std::size_t y : map) hit |= bit(y);
  return hit == target.carrier();
}

Check is_pmorphism(const PMorphism& f) {
  const Poset& s = f.source;
  const Poset& t = f.target;
  if (f.map.size() != s.size()) throw Error(ErrorKind::BadInput, "map must cover the source carrier");
  for (std::size_t y : f.map)
    if (y >= t.size()) throw Error(ErrorKind::BadInput, "map leaves the target carrier");
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (s.leq(x, y) && !t.leq(f.map[x], f.map[y]))
        return Check{"pmorphism", false, "forth fails: " + s.label(x) + " <= " + s.label(y), {i64(x), i64(y)}};
  for (std::size_t x = 0; x < s.size(); ++x) {
    Mask image = 0;
    for (std::size_t z = 0; z < s.size(); ++z)
      if (s.leq(x, z)) image |= bit(f.map[z]);
    const Mask missing = t.up(f.map[x]) & ~image;
    if (missing) {
      const std::size_t y = static_cast<std::size_t>(std::countr_zero(missing));
      return Check{"pmorphism", false, "back fails: nothing above " + s.label(x) + " maps to " + t.label(y),
                   {i64(x), i64(y)}};
    }
  }
  return Check{"pmorphism", true, {}, {}};
}

std::optional<PMorphism> find_pmorphism(const Poset& p1, const Poset& p2, bool require_onto, std::uint64_t cap) {
  const std::size_t n = p1.size(), m = p2.size();
  std::vector<std::size_t> up1(n), up2(m), depth1(n), depth2(m);
  for (std::size_t x = 0; x < n; ++x) {
    up1[x] = static_cast<std::size_t>(popcount(p1.up(x)));
    depth1[x] = p1.depth(x);
  }
  for (std::size_t y = 0; y < m; ++y) {
    up2[y] = static_cast<std::size_t>(popcount(p2.up(y)));
    depth2[y] = p2.depth(y);
  }
  std::vector<std::size_t> map(n, 0);
  std::uint64_t nodes = 0;

  // Back condition for x once every world above x has a value.
  auto back_ok = [&](std::size_t x) {
    Mask image = 0;
    for (std::size_t z = 0; z < n; ++z)
      if (p1.leq(x, z)) image |= bit(map[z]);
    return (p2.up(map[x]) & ~image) == 0;
  };

  auto assign = [&](auto& self, std::size_t k) -> bool {
    if (k == n) {
      if (!require_onto) return true;
      Mask hit = 0;
      for (std::size_t y : map) hit |= bit(y);
      return hit == p2.carrier();
    }
    if (require_onto) {
      Mask hit = 0;
      for (std::size_t i = 0; i < k; ++i) hit |= bit(map[i]);
      if (static_cast<std::size_t>(popcount(p2.carrier() & ~hit)) > n - k) return false;
    }
    for (std::size_t y = 0; y < m; ++y) {
      if (++nodes > cap)
        throw Error(ErrorKind::CapExceeded, "p-morphism search exceeded " + std::to_string(cap) + " nodes",
                    {static_cast<std::int64_t>(cap)});
      // the image of up(k) is exactly up(y), so up(k) must be large and deep enough
      if (up1[k] < up2[y] || depth1[k] < depth2[y]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (p1.leq(i, k) && !p2.leq(map[i], y)) ok = false;
        if (p1.leq(k, i) && !p2.leq(y, map[i])) ok = false;
      }
      if (!ok) continue;
      map[k] = y;
      const Mask assigned = full_mask(k + 1);
      for (std::size_t x = 0; x <= k && ok; ++x)
        if ((p1.up(x) & ~assigned) == 0 && (x == k || has(p1.up(x), k))) ok = back_ok(x);
      if (ok && self(self, k + 1)) return true;
    }
    return false;
  };
  if (n == 0) return std::nullopt;
  if (!assign(assign, 0)) return std::nullopt;
  return PMorphism{p1, p2, map};
}

std::vector<Mask> pullback(const PMorphism& f, const std::vector<Mask>& valuation) {
  std::vector<Mask> out(valuation.size(), 0);
  for (std::size_t a = 0; a < valuation.size(); ++a)
    for (std::size_t x = 0; x < f.source.size(); ++x)
      if (has(valuation[a], f.map[x])) out[a] |= bit(x);
  return out;
}

Report pmorphism_theory_transfer(const PMorphism& f, const Corpus& corpus, std::uint64_t cap, const Exec& exec) {
  const Check c = is_pmorphism(f);
  if (!c.passed) throw Error(ErrorKind::NotAPMorphism, c.detail, c.witness);
  if (!f.onto()) throw Error(ErrorKind::NotOnto, "the p-morphism misses target worlds");
  Report r("pmorphism_theory_transfer");
  for (const auto& e : corpus.entries()) {
    const FrameResult src = frame_valid(f.source, e.formula, cap, exec);
    const FrameResult tgt = frame_valid(f.target, e.formula, cap, exec);
    r.add("inclusion:" + e.name, !src.valid || tgt.valid,
          std::string("source ") + (src.valid ? "valid" : "refuted") + ", target " +
              (tgt.valid ? "valid" : "refuted"));
    if (tgt.valid) continue;
    const KripkeModel pulled{f.source, pullback(f, tgt.valuation)};
    std::size_t w = 0;
    while (f.map[w] != tgt.world) ++w;
    const bool refuted = !forces(pulled, w, e.formula);
    r.add("pullback:" + e.name, refuted, "source world " + f.source.label(w), {i64(w)});
  }
  return r;
}

}  // namespace brouwerlab
