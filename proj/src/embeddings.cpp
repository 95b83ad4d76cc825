#include "brouwerlab/embeddings.hpp"

#include <algorithm>

#include "brouwerlab/error.hpp"

namespace brouwerlab {

namespace {

std::int64_t i64(std::uint64_t x) { return static_cast<std::int64_t>(x); }

/// Runs `bad` over all pairs of [0, n) and records the first failing pair.
template <class Bad>
void pair_check(Report& r, const std::string& name, std::uint64_t n, const Exec& exec, Bad bad,
                const std::string& detail) {
  auto hit = parallel_find_first(n * n, exec, [&](std::uint64_t i) { return bad(i / n, i % n); });
  if (hit)
    r.add(name, false, detail, {i64(*hit / n), i64(*hit % n)});
  else
    r.add(name, true);
}

}  // namespace

Report check_strong_u_antichain(const UpperSemilattice& u, Mask a, const std::vector<std::size_t>& xs) {
  const DownSet down(u.poset(), a);
  Report r("strong_u_antichain");
  for (std::size_t x : xs)
    if (x >= u.size()) throw Error(ErrorKind::BadInput, "antichain element out of range", {i64(x)});
  {
    auto it = std::find_if(xs.begin(), xs.end(), [&](std::size_t x) { return !down.contains(x); });
    if (it != xs.end())
      r.add("members_in_A", false, u.poset().label(*it) + " is not in A", {i64(it - xs.begin())});
    else
      r.add("members_in_A", true);
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (down.contains(u.join(xs[i], xs[j]))) {
        r.add("joins_leave_A", false,
              "x" + std::to_string(i + 1) + " + x" + std::to_string(j + 1) + " = " +
                  u.poset().label(u.join(xs[i], xs[j])) + " is in A",
              {i64(i), i64(j)});
        return r;
      }
  r.add("joins_leave_A", true);
  return r;
}

AlphaMap::AlphaMap(ImplicativeUsl u, Mask a, std::vector<std::size_t> xs, bool force)
    : u_(std::move(u)), a_(a), xs_(std::move(xs)) {
  if (xs_.empty()) throw Error(ErrorKind::PreconditionFailed, "antichain must be nonempty");
  if (xs_.size() > kMaxAntichain)
    throw Error(ErrorKind::CapExceeded, "antichains are limited to " + std::to_string(kMaxAntichain) + " elements");
  const Report check = check_strong_u_antichain(u_, a_, xs_);
  if (!force && !check.passed()) throw Error(ErrorKind::PreconditionFailed, "not a strong u-antichain:\n" + check.to_text());
  const Poset& p = u_.poset();
  const Mask complement = p.carrier() & ~a_;
  cache_.resize(std::size_t{1} << xs_.size());
  for (Mask x = 0; x < cache_.size(); ++x) {
    Mask m = complement;
    for (std::size_t i = 0; i < xs_.size(); ++i)
      if (has(x, i)) m |= p.up(xs_[i]);
    cache_[x] = m;
  }
}

Report verify_alpha_embedding(const AlphaMap& am, const Exec& exec) {
  Report r("alpha_embedding");
  const Poset& p = am.usl().poset();
  const std::uint64_t count = std::uint64_t{1} << am.n();
  const Mask all = am.index_set();
  {
    std::optional<Mask> bad;
    for (Mask x = 0; x < count && !bad; ++x)
      if (!is_upward_closed(p, am(x))) bad = x;
    if (bad)
      r.add("upward_closed", false, "alpha(X) is not an up-set", {i64(*bad)});
    else
      r.add("upward_closed", true);
  }
  const UpsetAlgebra ua = build_upset_algebra(p, kDefaultUpsetCap, Provenance::from_upsets, exec);
  const Elem lo = ua.index_of(am(all));
  const Elem hi = ua.index_of(am(0));
  if (!ua.algebra.lt(lo, hi)) {
    r.add("nondegenerate", false, "alpha(I) = alpha({})");
    return r;
  }
  const Interval iv = sub_interval(ua.algebra, lo, hi);
  std::vector<Elem> local(count);
  for (Mask x = 0; x < count; ++x) {
    auto e = iv.index_of(ua.index_of(am(x)));
    if (!e) {
      r.add("maps_into_interval", false, "alpha(X) leaves the interval", {i64(x)});
      return r;
    }
    local[x] = *e;
  }
  r.add("maps_into_interval", true);
  const BrouwerAlgebra& b = iv.algebra;
  // X <= Y in the source means X contains Y.
  pair_check(r, "order_embedding", count, exec,
             [&](Mask x, Mask y) { return ((y & ~x) == 0) != b.leq(local[x], local[y]); },
             "X contains Y does not match alpha(X) <= alpha(Y)");
  pair_check(r, "preserves_join", count, exec,
             [&](Mask x, Mask y) { return am(x & y) != (am(x) & am(y)); }, "alpha(X n Y) != alpha(X) n alpha(Y)");
  pair_check(r, "preserves_arrow", count, exec,
             [&](Mask x, Mask y) { return local[(y | (all & ~x))] != b.arrow(local[x], local[y]); },
             "alpha(Y u (I \\ X)) differs from the interval arrow");
  r.add("least_to_alpha_I", local[all] == b.bottom());
  r.add("greatest_to_alpha_empty", local[0] == b.top() && am(0) == (p.carrier() & ~am.down_set()));
  {
    const auto& xs = am.xs();
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i)
      for (std::size_t j = i + 1; j < xs.size() && ok; ++j)
        if (p.up(xs[i]) & p.up(xs[j]) & am.down_set()) {
          r.add("principal_overlap_outside_A", false, "[x_i) n [x_j) meets A", {i64(i), i64(j)});
          ok = false;
        }
    if (ok) r.add("principal_overlap_outside_A", true);
  }
  return r;
}

GammaResult gamma_embedding(std::size_t n, const AlphaMap& am, const Corpus* corpus, std::uint64_t cap,
                            const Exec& exec) {
  if (n != am.n()) throw Error(ErrorKind::PreconditionFailed, "n must equal the antichain length", {i64(n)});
  const Report alpha_report = verify_alpha_embedding(am, exec);
  if (!alpha_report.passed())
    throw Error(ErrorKind::PreconditionFailed, "alpha embedding fails:\n" + alpha_report.to_text());

  const FreeLattice bn = medvedev_algebra(n, false, exec);
  std::size_t top_u = 0;
  for (std::size_t x = 0; x < bn.base.size(); ++x)
    if (popcount(bn.base.poset().down(x)) == static_cast<int>(bn.base.size())) top_u = x;
  Interval domain = interval(bn.algebra, bn.iota[top_u]);

  const UpsetAlgebra ua = build_upset_algebra(am.usl().poset(), kDefaultUpsetCap, Provenance::from_upsets, exec);
  FreeLattice target = free_over(implicative_reduct(ua.algebra), kDefaultUpsetCap, exec);
  auto d = [&](Mask upset) { return target.iota[ua.index_of(upset)]; };

  // Generator x of B_n is a subset of I; bit i of x is index i of the antichain.
  std::vector<Elem> g(bn.base.size());
  for (std::size_t x = 0; x < bn.base.size(); ++x) g[x] = d(am(static_cast<Mask>(x)));

  const BrouwerAlgebra& t = target.algebra;
  const Elem lo = d(am(am.index_set()));
  const Elem hi = d(am(0));
  Interval image = sub_interval(t, lo, hi);

  std::vector<Elem> map(domain.members.size());
  for (std::size_t e = 0; e < map.size(); ++e) {
    Elem m = t.top();
    for (Mask rest = bn.masks[domain.members[e]]; rest; rest &= rest - 1)
      m = t.meet(m, g[static_cast<std::size_t>(std::countr_zero(rest))]);
    map[e] = m;
  }

  Report r("gamma_embedding");
  r.merge(alpha_report, "alpha.");
  const BrouwerAlgebra& s = domain.algebra;
  std::vector<Elem> local(map.size());
  {
    bool ok = true;
    for (std::size_t e = 0; e < map.size() && ok; ++e) {
      auto l = image.index_of(map[e]);
      if (!l) {
        r.add("maps_into_interval", false, "image leaves the interval", {i64(domain.members[e])});
        ok = false;
      } else {
        local[e] = *l;
      }
    }
    if (!ok) return GammaResult{std::move(domain), std::move(target), std::move(image), std::move(map), r};
    r.add("maps_into_interval", true);
  }
  const BrouwerAlgebra& iv = image.algebra;
  const std::uint64_t k = map.size();
  pair_check(r, "injective", k, exec, [&](std::uint64_t a, std::uint64_t b) { return a != b && map[a] == map[b]; },
             "two elements share an image");
  pair_check(r, "order_embedding", k, exec,
             [&](std::uint64_t a, std::uint64_t b) {
               return s.leq(static_cast<Elem>(a), static_cast<Elem>(b)) != iv.leq(local[a], local[b]);
             },
             "order is not reflected");
  pair_check(r, "preserves_meet", k, exec,
             [&](std::uint64_t a, std::uint64_t b) {
               return local[s.meet(static_cast<Elem>(a), static_cast<Elem>(b))] != iv.meet(local[a], local[b]);
             },
             "meet not preserved");
  pair_check(r, "preserves_join", k, exec,
             [&](std::uint64_t a, std::uint64_t b) {
               return local[s.join(static_cast<Elem>(a), static_cast<Elem>(b))] != iv.join(local[a], local[b]);
             },
             "join not preserved");
  pair_check(r, "preserves_arrow", k, exec,
             [&](std::uint64_t a, std::uint64_t b) {
               return local[s.arrow(static_cast<Elem>(a), static_cast<Elem>(b))] != iv.arrow(local[a], local[b]);
             },
             "arrow not preserved");
  r.add("preserves_bottom", local[s.bottom()] == iv.bottom());
  r.add("preserves_top", local[s.top()] == iv.top());

  const Extension ext = universal_extend(bn, g, t);
  {
    std::optional<std::size_t> bad;
    for (std::size_t e = 0; e < map.size() && !bad; ++e)
      if (ext.map[domain.members[e]] != map[e]) bad = e;
    if (bad)
      r.add("agrees_with_universal_extend", false, "pointwise difference", {i64(domain.members[*bad])});
    else
      r.add("agrees_with_universal_extend", true);
  }
  if (corpus) {
    for (const auto& e : corpus->entries()) {
      const bool in_image = is_identity(iv, e.formula, cap, exec).identity;
      const bool in_domain = is_identity(s, e.formula, cap, exec).identity;
      r.add("theory:" + e.name, !in_image || in_domain,
            std::string("interval ") + (in_image ? "identity" : "refuted") + ", B_n " +
                (in_domain ? "identity" : "refuted"));
    }
  }
  return GammaResult{std::move(domain), std::move(target), std::move(image), std::move(map), std::move(r)};
}

EmbeddingInstance canned_embedding_instance(const std::string& name) {
  if (name == "n1") return {name, powerset_usl(1), 0b1, {0}};
  if (name == "n2") return {name, powerset_usl(2), 0b0111, {1, 2}};
  if (name == "broken") return {name, powerset_usl(2), 0b1111, {1, 2}};
  throw Error(ErrorKind::UnknownName, "unknown embedding instance '" + name + "'");
}

std::vector<std::string> canned_embedding_names() { return {"n1", "n2", "broken"}; }

}  // namespace brouwerlab
