#include "brouwerlab/ipc.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "brouwerlab/error.hpp"

namespace brouwerlab {

namespace {

enum class K { atom, bot, top, conj, disj, imp };

/// Hash-consed formulas: equal subformulas share one id.
class Terms {
 public:
  int make(K k, int a = -1, int b = -1) {
    const auto key = std::make_tuple(static_cast<int>(k), a, b);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({k, a, b});
    ids_.emplace(key, id);
    return id;
  }

  int from(const Formula& f) {
    switch (f.op()) {
      case Op::atom: return make(K::atom, static_cast<int>(f.atom_index()));
      case Op::top: return make(K::top);
      case Op::bot: return make(K::bot);
      case Op::neg: return make(K::imp, from(f.lhs()), make(K::bot));
      case Op::conj: return make(K::conj, from(f.lhs()), from(f.rhs()));
      case Op::disj: return make(K::disj, from(f.lhs()), from(f.rhs()));
      case Op::imp: return make(K::imp, from(f.lhs()), from(f.rhs()));
    }
    return make(K::top);
  }

  K kind(int id) const { return nodes_[id].k; }
  int lhs(int id) const { return nodes_[id].a; }
  int rhs(int id) const { return nodes_[id].b; }

 private:
  struct Node {
    K k;
    int a, b;
  };
  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int>, int> ids_;
};

using Context = std::vector<int>;  // sorted, no duplicates

class Prover {
 public:
  explicit Prover(std::uint64_t cap) : cap_(cap) {}

  Terms terms;

  bool prove(const Context& ctx, int goal) {
    if (++visited_ > cap_)
      throw Error(ErrorKind::CapExceeded, "proof search exceeded " + std::to_string(cap_) + " sequents",
                  {static_cast<std::int64_t>(cap_)});
    const auto key = std::make_pair(ctx, goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = search(ctx, goal);
    memo_.emplace(key, result);
    return result;
  }

 private:
  static bool contains(const Context& ctx, int x) { return std::binary_search(ctx.begin(), ctx.end(), x); }

  static Context replace(const Context& ctx, std::size_t drop, std::initializer_list<int> add) {
    Context out;
    out.reserve(ctx.size() + add.size());
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (i != drop) out.push_back(ctx[i]);
    out.insert(out.end(), add.begin(), add.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  static Context with(const Context& ctx, int x) { return replace(ctx, ctx.size(), {x}); }

  bool search(const Context& ctx, int goal) {
    const Terms& t = terms;
    if (t.kind(goal) == K::top || contains(ctx, goal)) return true;
    for (int x : ctx)
      if (t.kind(x) == K::bot) return true;

    // Invertible left rules.
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const int x = ctx[i];
      switch (t.kind(x)) {
        case K::conj: return prove(replace(ctx, i, {t.lhs(x), t.rhs(x)}), goal);
        case K::disj:
          return prove(replace(ctx, i, {t.lhs(x)}), goal) && prove(replace(ctx, i, {t.rhs(x)}), goal);
        case K::top: return prove(replace(ctx, i, {}), goal);
        case K::imp: {
          const int a = t.lhs(x), b = t.rhs(x);
          switch (t.kind(a)) {
            case K::atom:
              if (contains(ctx, a)) return prove(replace(ctx, i, {b}), goal);
              break;
            case K::bot: return prove(replace(ctx, i, {}), goal);
            case K::top: return prove(replace(ctx, i, {b}), goal);
            case K::conj:
              return prove(replace(ctx, i, {terms.make(K::imp, t.lhs(a), terms.make(K::imp, t.rhs(a), b))}), goal);
            case K::disj:
              return prove(replace(ctx, i, {terms.make(K::imp, t.lhs(a), b), terms.make(K::imp, t.rhs(a), b)}),
                           goal);
            case K::imp: break;
          }
          break;
        }
        default: break;
      }
    }

    // Invertible right rules.
    if (t.kind(goal) == K::conj) return prove(ctx, t.lhs(goal)) && prove(ctx, t.rhs(goal));
    if (t.kind(goal) == K::imp) return prove(with(ctx, t.lhs(goal)), t.rhs(goal));

    // Non-invertible choices.
    if (t.kind(goal) == K::disj && (prove(ctx, t.lhs(goal)) || prove(ctx, t.rhs(goal)))) return true;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const int x = ctx[i];
      if (t.kind(x) != K::imp || t.kind(t.lhs(x)) != K::imp) continue;
      // (C -> D) -> B: prove C -> D from D -> B, then use B
      const int d = t.rhs(t.lhs(x)), b = t.rhs(x);
      if (prove(replace(ctx, i, {terms.make(K::imp, d, b)}), t.lhs(x)) && prove(replace(ctx, i, {b}), goal))
        return true;
    }
    return false;
  }

  std::uint64_t cap_;
  std::uint64_t visited_ = 0;
  std::map<std::pair<Context, int>, bool> memo_;
};

}  // namespace

bool ipc_prove(const Formula& f, std::uint64_t cap) {
  Prover p(cap);
  const int goal = p.terms.from(f);
  return p.prove({}, goal);
}

}  // namespace brouwerlab
