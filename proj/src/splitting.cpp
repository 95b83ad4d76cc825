#include "brouwerlab/splitting.hpp"

#include <algorithm>
#include <bit>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/error.hpp"
#include "brouwerlab/kripke.hpp"
#include "brouwerlab/upsets.hpp"

namespace brouwerlab {

namespace {

std::int64_t i64(std::size_t x) { return static_cast<std::int64_t>(x); }

std::vector<std::int64_t> mask_witness(Mask m) {
  std::vector<std::int64_t> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace

void SplittingInstance::validate() const {
  const DownSet down(usl.poset(), a);
  if (a == 0) throw Error(ErrorKind::PreconditionViolated, "A is empty");
  if (!has(a, usl.bottom()))
    throw Error(ErrorKind::PreconditionViolated, "A does not contain the bottom", {i64(usl.bottom())});
}

Mask SplittingInstance::incomparable_to(std::size_t x) const { return a & ~usl.poset().down(x); }

std::optional<std::size_t> splitting_witness(const SplittingInstance& inst, std::size_t a, Mask b) {
  const Poset& p = inst.usl.poset();
  if (a >= p.size() || !has(inst.a, a))
    throw Error(ErrorKind::PreconditionViolated, "a is not in A", {i64(a)});
  if (b & ~inst.incomparable_to(a)) {
    const auto bad = static_cast<std::size_t>(std::countr_zero(b & ~inst.incomparable_to(a)));
    throw Error(ErrorKind::PreconditionViolated, p.label(bad) + " is outside A or below a", {i64(bad)});
  }
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (!has(inst.a, c) || !p.lt(a, c)) continue;
    bool escapes = true;
    for (Mask rest = b; rest && escapes; rest &= rest - 1)
      escapes = !has(inst.a, inst.usl.join(static_cast<std::size_t>(std::countr_zero(rest)), c));
    if (escapes) return c;
  }
  return std::nullopt;
}

Report is_splitting_class_finite(const SplittingInstance& inst) {
  inst.validate();
  const Poset& p = inst.usl.poset();
  Report per_a;
  std::optional<std::size_t> headline, first_failure;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!has(inst.a, a)) continue;
    // The condition is antitone in B, so the full set decides every subset.
    const Mask full = inst.incomparable_to(a);
    if (splitting_witness(inst, a, full)) {
      per_a.add("a=" + p.label(a), true);
      continue;
    }
    if (!first_failure) first_failure = a;
    if (!splitting_witness(inst, a, 0)) {
      if (!headline) headline = a;
      per_a.add("a=" + p.label(a), false, "no c > a in A even for B = {}", {i64(a)});
      continue;
    }
    // Report a smallest failing B by growing subset size.
    std::optional<Mask> failing;
    const int k = popcount(full);
    if (k <= 16) {
      std::vector<std::size_t> members;
      for (Mask rest = full; rest; rest &= rest - 1) members.push_back(std::countr_zero(rest));
      for (int size = 1; size <= k && !failing; ++size)
        for (Mask pick = 0; pick < (Mask{1} << k) && !failing; ++pick) {
          if (popcount(pick) != size) continue;
          Mask b = 0;
          for (int i = 0; i < k; ++i)
            if (has(pick, i)) b |= bit(members[i]);
          if (!splitting_witness(inst, a, b)) failing = b;
        }
    }
    const Mask b = failing.value_or(full);
    auto w = mask_witness(b);
    w.insert(w.begin(), i64(a));
    per_a.add("a=" + p.label(a), false, "no witness for B = " + p.mask_label(b), w);
  }
  Report r("splitting_class");
  const auto verdict = headline ? headline : first_failure;
  if (verdict)
    r.add("splitting_class", false,
          headline ? p.label(*verdict) + " is maximal in A" : "fails at " + p.label(*verdict), {i64(*verdict)});
  else
    r.add("splitting_class", true);
  r.merge(per_a);
  return r;
}

Report splitting_upto_depth(const SplittingInstance& inst, std::size_t d) {
  if (d == 0) throw Error(ErrorKind::PreconditionViolated, "depth must be at least 1");
  inst.validate();
  const Poset& p = inst.usl.poset();
  Report r("splitting_upto_depth");
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!has(inst.a, a) || p.height(a) >= d) continue;
    const Mask full = inst.incomparable_to(a);
    if (auto c = splitting_witness(inst, a, full))
      r.add("a=" + p.label(a), true, "c = " + p.label(*c), {i64(a), i64(*c)});
    else
      r.add("a=" + p.label(a), false, "no c works for B = " + p.mask_label(full), {i64(a)});
  }
  return r;
}

Report interval_isomorphism_check(const SplittingInstance& inst, const Exec& exec) {
  inst.validate();
  Report r("interval_isomorphism");
  const Poset& u = inst.usl.poset();
  const Poset a_poset = u.restrict(inst.a);
  std::vector<std::size_t> lift;
  for (std::size_t x = 0; x < u.size(); ++x)
    if (has(inst.a, x)) lift.push_back(x);
  const UpsetAlgebra small = build_upset_algebra(a_poset, kDefaultUpsetCap, Provenance::from_upsets, exec);
  const UpsetAlgebra big = build_upset_algebra(u, kDefaultUpsetCap, Provenance::from_upsets, exec);
  const Mask complement = u.carrier() & ~inst.a;
  const Interval iv = sub_interval(big.algebra, big.index_of(u.carrier()), big.index_of(complement));
  const BrouwerAlgebra& s = small.algebra;
  const BrouwerAlgebra& t = iv.algebra;
  r.add("same_size", s.size() == t.size(),
        std::to_string(s.size()) + " up-sets of A, " + std::to_string(t.size()) + " in the interval");
  std::vector<Elem> phi(s.size());
  for (Elem e = 0; e < s.size(); ++e) {
    Mask m = complement;
    for (Mask rest = small.masks[e]; rest; rest &= rest - 1) m |= bit(lift[std::countr_zero(rest)]);
    auto local = iv.index_of(big.index_of(m));
    if (!local) {
      r.add("maps_into_interval", false, "B u A^c leaves the interval", {i64(e)});
      return r;
    }
    phi[e] = *local;
  }
  r.add("maps_into_interval", true);
  std::vector<bool> hit(t.size(), false);
  for (Elem v : phi) hit[v] = true;
  r.add("bijective", s.size() == t.size() && std::find(hit.begin(), hit.end(), false) == hit.end());
  auto pairwise = [&](const std::string& name, auto bad) {
    const std::uint64_t n = s.size();
    auto found = parallel_find_first(n * n, exec, [&](std::uint64_t i) {
      return bad(static_cast<Elem>(i / n), static_cast<Elem>(i % n));
    });
    if (found)
      r.add(name, false, "fails on a pair", {i64(*found / n), i64(*found % n)});
    else
      r.add(name, true);
  };
  pairwise("order_iso", [&](Elem x, Elem y) { return s.leq(x, y) != t.leq(phi[x], phi[y]); });
  pairwise("preserves_meet", [&](Elem x, Elem y) { return phi[s.meet(x, y)] != t.meet(phi[x], phi[y]); });
  pairwise("preserves_join", [&](Elem x, Elem y) { return phi[s.join(x, y)] != t.join(phi[x], phi[y]); });
  pairwise("preserves_arrow", [&](Elem x, Elem y) { return phi[s.arrow(x, y)] != t.arrow(phi[x], phi[y]); });
  r.add("preserves_bottom", phi[s.bottom()] == t.bottom());
  r.add("preserves_top", phi[s.top()] == t.top());
  return r;
}

Report tree_pipeline(const SplittingInstance& inst, std::size_t d, const Corpus& corpus, std::uint64_t cap,
                     const Exec& exec) {
  inst.validate();
  Report r("tree_pipeline");
  const Poset a_poset = inst.usl.poset().restrict(inst.a);
  const Poset tree = canned::binary_tree(d);
  if (auto f = find_pmorphism(a_poset, tree, true)) {
    std::string shown;
    for (std::size_t x = 0; x < f->map.size(); ++x)
      shown += (x ? ", " : "") + a_poset.label(x) + "->" + tree.label(f->map[x]);
    r.add("pmorphism_found", true, shown);
    r.merge(pmorphism_theory_transfer(*f, corpus, cap, exec), "transfer.");
  } else {
    r.add("pmorphism_found", false, "A has no onto p-morphism to the depth-" + std::to_string(d) + " tree");
  }
  r.merge(interval_isomorphism_check(inst, exec), "interval.");
  return r;
}

namespace {

UpperSemilattice grid_usl(std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  Relation rel{n, std::vector<Mask>(n, 0)};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("(" + std::to_string(i / cols) + "," + std::to_string(i % cols) + ")");
    for (std::size_t j = 0; j < n; ++j)
      if (i / cols <= j / cols && i % cols <= j % cols) rel.rows[i] |= bit(j);
  }
  return compute_join_table(Poset::validate(rel, labels));
}

}  // namespace

SplittingInstance canned_splitting_instance(const std::string& name) {
  if (name == "atoms3") return {name, powerset_usl(3), bit(0) | bit(1) | bit(2) | bit(4)};
  if (name == "fork2") return {name, powerset_usl(2), bit(0) | bit(1) | bit(2)};
  if (name == "chain3") return {name, compute_join_table(canned::chain(4)), bit(0) | bit(1) | bit(2)};
  if (name == "grid3x4") {
    UpperSemilattice u = grid_usl(3, 4);
    Mask a = 0;
    for (std::size_t i = 0; i < 12; ++i)
      if (i / 4 + i % 4 <= 2) a |= bit(i);
    return {name, std::move(u), a};
  }
  throw Error(ErrorKind::UnknownName, "unknown splitting instance '" + name + "'");
}

std::vector<std::string> canned_splitting_names() { return {"atoms3", "fork2", "chain3", "grid3x4"}; }

}  // namespace brouwerlab
