#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the basic data types.

#include <cstddef>
#include <functional>
#include <vector>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/formula.hpp"
#include "brouwerlab/order.hpp"

namespace oracle {

using brouwerlab::Mask;

/// Every subset of the carrier that is closed upward, checked pair by pair.
inline std::vector<Mask> upsets(const brouwerlab::Preorder& p) {
  const std::size_t n = p.size();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (((s >> i) & 1) && p.leq(i, j) && !((s >> j) & 1)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

/// Dedekind-style count: up-closed subsets of the n-cube, filtering all
/// 2^(2^n) subsets against the subset order on bit masks.
inline std::size_t cube_upset_count(std::size_t n) {
  const std::size_t points = std::size_t{1} << n;
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << points); ++s) {
    bool ok = true;
    for (std::size_t x = 0; x < points && ok; ++x) {
      if (!((s >> x) & 1)) continue;
      for (std::size_t k = 0; k < n && ok; ++k)
        if (!((s >> (x | (std::size_t{1} << k))) & 1)) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

/// Least c with a v c >= b, found by scanning the order relation.
inline brouwerlab::Elem least_residual(const brouwerlab::BrouwerAlgebra& b, brouwerlab::Elem a,
                                       brouwerlab::Elem c) {
  const std::size_t n = b.size();
  std::vector<brouwerlab::Elem> cands;
  for (brouwerlab::Elem x = 0; x < n; ++x)
    if (b.leq(c, b.join(a, x))) cands.push_back(x);
  for (auto x : cands) {
    bool least = true;
    for (auto y : cands) least = least && b.leq(x, y);
    if (least) return x;
  }
  return static_cast<brouwerlab::Elem>(n);
}

/// Kripke forcing straight from the clauses, recursively.
inline bool forces(const brouwerlab::Poset& p, const std::vector<Mask>& v, std::size_t w,
                   const brouwerlab::Formula& f) {
  using brouwerlab::Op;
  auto all_above = [&](const std::function<bool(std::size_t)>& pred) {
    for (std::size_t u = 0; u < p.size(); ++u)
      if (p.leq(w, u) && !pred(u)) return false;
    return true;
  };
  switch (f.op()) {
    case Op::atom: return f.atom_index() < v.size() && ((v[f.atom_index()] >> w) & 1);
    case Op::top: return true;
    case Op::bot: return false;
    case Op::neg: return all_above([&](std::size_t u) { return !forces(p, v, u, f.lhs()); });
    case Op::conj: return forces(p, v, w, f.lhs()) && forces(p, v, w, f.rhs());
    case Op::disj: return forces(p, v, w, f.lhs()) || forces(p, v, w, f.rhs());
    case Op::imp:
      return all_above([&](std::size_t u) { return !forces(p, v, u, f.lhs()) || forces(p, v, u, f.rhs()); });
  }
  return false;
}

/// Valid on the frame: every valuation of the atoms by up-sets, every world.
inline bool frame_valid(const brouwerlab::Poset& p, const brouwerlab::Formula& f) {
  const auto ups = upsets(p);
  const std::size_t k = f.atom_bound();
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Mask> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = ups[idx[i]];
    for (std::size_t w = 0; w < p.size(); ++w)
      if (!forces(p, v, w, f)) return false;
    std::size_t i = 0;
    while (i < k && ++idx[i] == ups.size()) idx[i++] = 0;
    if (i == k) return true;
  }
}

/// Truth-table evaluation over {false, true}.
inline bool classical(const brouwerlab::Formula& f, Mask assignment) {
  using brouwerlab::Op;
  switch (f.op()) {
    case Op::atom: return (assignment >> f.atom_index()) & 1;
    case Op::top: return true;
    case Op::bot: return false;
    case Op::neg: return !classical(f.lhs(), assignment);
    case Op::conj: return classical(f.lhs(), assignment) && classical(f.rhs(), assignment);
    case Op::disj: return classical(f.lhs(), assignment) || classical(f.rhs(), assignment);
    case Op::imp: return !classical(f.lhs(), assignment) || classical(f.rhs(), assignment);
  }
  return false;
}

inline bool tautology(const brouwerlab::Formula& f) {
  for (Mask a = 0; a < (Mask{1} << f.atom_bound()); ++a)
    if (!classical(f, a)) return false;
  return true;
}

/// All posets on n labelled points, one per isomorphism-agnostic relation:
/// every transitive antisymmetric reflexive relation whose order extends the
/// index order (so i <= j only when i < j), which covers every shape.
inline std::vector<brouwerlab::Poset> posets_up_to(std::size_t n) {
  std::vector<brouwerlab::Poset> out;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.push_back({i, j});
  for (Mask pick = 0; pick < (Mask{1} << slots.size()); ++pick) {
    brouwerlab::Relation r = brouwerlab::Relation::identity(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((pick >> s) & 1) r.rows[slots[s].first] |= brouwerlab::bit(slots[s].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (r.contains(i, j) && r.contains(j, k) && !r.contains(i, k)) transitive = false;
    if (transitive) out.push_back(brouwerlab::Poset::validate(r));
  }
  return out;
}

}  // namespace oracle
