#include "brouwerlab/brouwer.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "brouwerlab/error.hpp"

namespace brouwerlab {

namespace {

std::vector<std::int64_t> wit(std::initializer_list<std::uint64_t> xs) {
  std::vector<std::int64_t> out;
  for (auto x : xs) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

std::string triple_text(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
}

/// First triple (a, b, c) in lexicographic order for which `bad` holds.
template <class Bad>
std::optional<std::array<Elem, 3>> first_bad_triple(std::size_t n, const Exec& exec, Bad bad) {
  const std::uint64_t nn = n;
  auto hit = parallel_find_first(nn * nn * nn, exec, [&](std::uint64_t i) {
    return bad(static_cast<Elem>(i / (nn * nn)), static_cast<Elem>((i / nn) % nn), static_cast<Elem>(i % nn));
  });
  if (!hit) return std::nullopt;
  const std::uint64_t i = *hit;
  return std::array<Elem, 3>{static_cast<Elem>(i / (nn * nn)), static_cast<Elem>((i / nn) % nn),
                             static_cast<Elem>(i % nn)};
}

void add_triple_law(Report& r, const std::string& name, std::size_t n, const Exec& exec,
                    const std::function<bool(Elem, Elem, Elem)>& bad) {
  if (auto t = first_bad_triple(n, exec, bad)) {
    r.add(name, false, "counterexample " + triple_text((*t)[0], (*t)[1], (*t)[2]), wit({(*t)[0], (*t)[1], (*t)[2]}));
  } else {
    r.add(name, true);
  }
}

Check triple_check(const std::string& name, std::size_t n, const Exec& exec,
                   const std::function<bool(Elem, Elem, Elem)>& bad) {
  Report r;
  add_triple_law(r, name, n, exec, bad);
  return r.checks().front();
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::raw: return "raw";
    case Provenance::from_upsets: return "from_upsets";
    case Provenance::free_over: return "free_over";
    case Provenance::add_top: return "add_top";
    case Provenance::interval: return "interval";
  }
  return "raw";
}

Provenance provenance_from_string(std::string_view s) {
  for (auto p : {Provenance::raw, Provenance::from_upsets, Provenance::free_over, Provenance::add_top,
                 Provenance::interval})
    if (to_string(p) == s) return p;
  throw Error(ErrorKind::BadInput, "unknown provenance '" + std::string(s) + "'");
}

BrouwerAlgebra BrouwerAlgebra::from_tables(const Tables& t) {
  const std::size_t n = t.size;
  if (n == 0) throw Error(ErrorKind::BadInput, "algebra must be nonempty");
  if (n > kMaxSize) throw Error(ErrorKind::CapExceeded, "algebra larger than " + std::to_string(kMaxSize));
  const std::size_t nn = n * n;
  if (t.leq.size() != nn || t.meet.size() != nn || t.join.size() != nn || t.arrow.size() != nn)
    throw Error(ErrorKind::BadInput, "operation tables must have size*size entries");
  if (t.bottom >= n || t.top >= n) throw Error(ErrorKind::BadInput, "bottom/top out of range");
  if (!t.labels.empty() && t.labels.size() != n) throw Error(ErrorKind::BadInput, "label count differs from size");
  BrouwerAlgebra b;
  b.n_ = n;
  b.words_ = (n + 63) / 64;
  b.leq_.assign(n * b.words_, 0);
  b.meet_.resize(nn);
  b.join_.resize(nn);
  b.arrow_.resize(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    if (t.leq[i] > 1) throw Error(ErrorKind::BadInput, "leq entries must be 0 or 1");
    if (t.meet[i] >= n || t.join[i] >= n || t.arrow[i] >= n)
      throw Error(ErrorKind::BadInput, "table entry out of range", wit({i}));
    if (t.leq[i]) b.leq_[(i / n) * b.words_ + (i % n) / 64] |= std::uint64_t{1} << ((i % n) % 64);
    b.meet_[i] = static_cast<std::uint16_t>(t.meet[i]);
    b.join_[i] = static_cast<std::uint16_t>(t.join[i]);
    b.arrow_[i] = static_cast<std::uint16_t>(t.arrow[i]);
  }
  b.bottom_ = t.bottom;
  b.top_ = t.top;
  b.provenance_ = t.provenance;
  b.labels_ = t.labels;
  return b;
}

BrouwerAlgebra::Tables BrouwerAlgebra::tables() const {
  Tables t;
  t.size = n_;
  const std::size_t nn = n_ * n_;
  t.leq.resize(nn);
  t.meet.resize(nn);
  t.join.resize(nn);
  t.arrow.resize(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    t.leq[i] = leq(static_cast<Elem>(i / n_), static_cast<Elem>(i % n_)) ? 1 : 0;
    t.meet[i] = meet_[i];
    t.join[i] = join_[i];
    t.arrow[i] = arrow_[i];
  }
  t.bottom = bottom_;
  t.top = top_;
  t.provenance = provenance_;
  t.labels = labels_;
  return t;
}

std::string BrouwerAlgebra::label(Elem e) const { return labels_.empty() ? std::to_string(e) : labels_[e]; }

bool operator==(const BrouwerAlgebra& a, const BrouwerAlgebra& b) {
  return a.n_ == b.n_ && a.leq_ == b.leq_ && a.meet_ == b.meet_ && a.join_ == b.join_ && a.arrow_ == b.arrow_ &&
         a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.provenance_ == b.provenance_ && a.labels_ == b.labels_;
}

Elem UpsetAlgebra::index_of(Mask m) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), m);
  if (it == masks.end() || *it != m) throw Error(ErrorKind::BadInput, "mask is not an up-set of the host");
  return static_cast<Elem>(it - masks.begin());
}

UpsetAlgebra build_upset_algebra(const Preorder& p, std::size_t cap, Provenance provenance, const Exec& exec) {
  std::vector<Mask> masks = enumerate_upset_masks(p, cap);
  const std::size_t n = masks.size();
  if (n > BrouwerAlgebra::kMaxSize)
    throw Error(ErrorKind::CapExceeded, std::to_string(n) + " up-sets exceed the algebra size limit",
                wit({n}));
  auto idx = [&](Mask m) {
    return static_cast<Elem>(std::lower_bound(masks.begin(), masks.end(), m) - masks.begin());
  };
  BrouwerAlgebra::Tables t;
  t.size = n;
  t.leq.resize(n * n);
  t.meet.resize(n * n);
  t.join.resize(n * n);
  t.arrow.resize(n * n);
  parallel_for(n, exec, [&](std::uint64_t a) {
    const Mask ma = masks[a];
    for (std::size_t b = 0; b < n; ++b) {
      const Mask mb = masks[b];
      const std::size_t i = a * n + b;
      t.leq[i] = (mb & ~ma) == 0 ? 1 : 0;
      t.meet[i] = idx(ma | mb);
      t.join[i] = idx(ma & mb);
      t.arrow[i] = idx(upset_arrow_mask(p, ma, mb));
    }
  });
  t.top = idx(0);
  t.bottom = idx(p.carrier());
  t.provenance = provenance;
  t.labels.reserve(n);
  for (Mask m : masks) t.labels.push_back(p.mask_label(m));
  return UpsetAlgebra{std::move(masks), BrouwerAlgebra::from_tables(t)};
}

BrouwerAlgebra from_upsets(const Preorder& p, std::size_t cap, const Exec& exec) {
  return build_upset_algebra(p, cap, Provenance::from_upsets, exec).algebra;
}

Report validate_brouwer(const BrouwerAlgebra& b, const Exec& exec) {
  Report r("validate_brouwer");
  const std::size_t n = b.size();
  add_triple_law(r, "partial_order", n, exec, [&](Elem x, Elem y, Elem z) {
    if (!b.leq(x, x)) return true;
    if (x != y && b.leq(x, y) && b.leq(y, x)) return true;
    return b.leq(x, y) && b.leq(y, z) && !b.leq(x, z);
  });
  add_triple_law(r, "meet_is_glb", n, exec, [&](Elem x, Elem y, Elem z) {
    const Elem m = b.meet(x, y);
    if (!b.leq(m, x) || !b.leq(m, y)) return true;
    return b.leq(z, x) && b.leq(z, y) && !b.leq(z, m);
  });
  add_triple_law(r, "join_is_lub", n, exec, [&](Elem x, Elem y, Elem z) {
    const Elem j = b.join(x, y);
    if (!b.leq(x, j) || !b.leq(y, j)) return true;
    return b.leq(x, z) && b.leq(y, z) && !b.leq(j, z);
  });
  {
    std::optional<Elem> bad;
    for (Elem x = 0; x < n && !bad; ++x)
      if (!b.leq(b.bottom(), x) || !b.leq(x, b.top())) bad = x;
    if (bad)
      r.add("bounds", false, "element " + std::to_string(*bad) + " escapes [0,1]", wit({*bad}));
    else
      r.add("bounds", true);
  }
  r.add("nontrivial", b.bottom() != b.top(), b.bottom() == b.top() ? "0 = 1" : "");
  add_triple_law(r, "distributive", n, exec, [&](Elem x, Elem y, Elem z) {
    return b.meet(x, b.join(y, z)) != b.join(b.meet(x, y), b.meet(x, z));
  });
  add_triple_law(r, "residuation", n, exec, [&](Elem x, Elem y, Elem z) {
    return b.leq(y, b.join(x, z)) != b.leq(b.arrow(x, y), z);
  });
  return r;
}

Check check_arrow_below(const BrouwerAlgebra& b, const Exec& exec) {
  const std::uint64_t n = b.size();
  auto hit = parallel_find_first(n * n, exec, [&](std::uint64_t i) {
    return !b.leq(b.arrow(static_cast<Elem>(i / n), static_cast<Elem>(i % n)), static_cast<Elem>(i % n));
  });
  if (hit) return Check{"arrow_below", false, "arrow(a,b) not <= b", wit({*hit / n, *hit % n})};
  return Check{"arrow_below", true, {}, {}};
}

Check check_meet_arrow_law(const BrouwerAlgebra& b, const Exec& exec) {
  return triple_check("meet_arrow_law", b.size(), exec, [&](Elem x, Elem y, Elem z) {
    return b.arrow(b.meet(x, y), z) != b.join(b.arrow(x, z), b.arrow(y, z));
  });
}

bool is_meet_reducible(const BrouwerAlgebra& b, Elem x) {
  std::vector<Elem> above;
  for (Elem y = 0; y < b.size(); ++y)
    if (b.lt(x, y)) above.push_back(y);
  for (std::size_t i = 0; i < above.size(); ++i)
    for (std::size_t j = i + 1; j < above.size(); ++j)
      if (b.meet(above[i], above[j]) == x) return true;
  return false;
}

bool is_join_reducible(const BrouwerAlgebra& b, Elem x) {
  std::vector<Elem> below;
  for (Elem y = 0; y < b.size(); ++y)
    if (b.lt(y, x)) below.push_back(y);
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = i + 1; j < below.size(); ++j)
      if (b.join(below[i], below[j]) == x) return true;
  return false;
}

std::vector<Elem> meet_irreducibles(const BrouwerAlgebra& b) {
  std::vector<Elem> out;
  for (Elem x = 0; x < b.size(); ++x)
    if (x != b.top() && !is_meet_reducible(b, x)) out.push_back(x);
  return out;
}

std::vector<Elem> join_irreducibles(const BrouwerAlgebra& b) {
  std::vector<Elem> out;
  for (Elem x = 0; x < b.size(); ++x)
    if (x != b.bottom() && !is_join_reducible(b, x)) out.push_back(x);
  return out;
}

std::optional<Elem> Interval::index_of(Elem parent) const {
  auto it = std::lower_bound(members.begin(), members.end(), parent);
  if (it == members.end() || *it != parent) return std::nullopt;
  return static_cast<Elem>(it - members.begin());
}

namespace {

Interval restrict_to(const BrouwerAlgebra& b, Elem lo, Elem hi, bool recompute_arrow) {
  std::vector<Elem> members;
  for (Elem x = 0; x < b.size(); ++x)
    if (b.leq(lo, x) && b.leq(x, hi)) members.push_back(x);
  const std::size_t k = members.size();
  Interval out{BrouwerAlgebra::from_tables([&] {
                 BrouwerAlgebra::Tables t;
                 t.size = 1;
                 t.leq = {1};
                 t.meet = t.join = t.arrow = {0};
                 return t;
               }()),
               members};
  auto local = [&](Elem parent) -> Elem {
    auto i = out.index_of(parent);
    if (!i)
      throw Error(ErrorKind::InvalidAlgebra,
                  "operation leaves the interval at element " + std::to_string(parent), wit({parent}));
    return *i;
  };
  BrouwerAlgebra::Tables t;
  t.size = k;
  t.leq.resize(k * k);
  t.meet.resize(k * k);
  t.join.resize(k * k);
  t.arrow.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem a = members[i], c = members[j];
      t.leq[i * k + j] = b.leq(a, c) ? 1 : 0;
      t.meet[i * k + j] = local(b.meet(a, c));
      t.join[i * k + j] = local(b.join(a, c));
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!recompute_arrow) {
        t.arrow[i * k + j] = local(b.arrow(members[i], members[j]));
        continue;
      }
      // least c in the interval with a v c >= b
      std::optional<std::size_t> least;
      for (std::size_t c = 0; c < k; ++c) {
        if (!b.leq(members[j], b.join(members[i], members[c]))) continue;
        if (!least || b.leq(members[c], members[*least])) least = c;
      }
      if (!least)
        throw Error(ErrorKind::InvalidAlgebra, "no residual inside the interval", wit({members[i], members[j]}));
      t.arrow[i * k + j] = static_cast<Elem>(*least);
    }
  t.bottom = local(lo);
  t.top = local(hi);
  t.provenance = Provenance::interval;
  if (!b.labels().empty())
    for (Elem m : members) t.labels.push_back(b.label(m));
  out.algebra = BrouwerAlgebra::from_tables(t);
  return out;
}

}  // namespace

Interval interval(const BrouwerAlgebra& b, Elem a) {
  if (a >= b.size()) throw Error(ErrorKind::BadInput, "element out of range", wit({a}));
  if (a == b.bottom()) throw Error(ErrorKind::BottomTop, "interval [0,0] is trivial");
  return restrict_to(b, b.bottom(), a, false);
}

Interval sub_interval(const BrouwerAlgebra& b, Elem lo, Elem hi) {
  if (lo >= b.size() || hi >= b.size()) throw Error(ErrorKind::BadInput, "element out of range", wit({lo, hi}));
  if (!b.lt(lo, hi))
    throw Error(ErrorKind::PreconditionFailed, "interval needs lo < hi", wit({lo, hi}));
  return restrict_to(b, lo, hi, true);
}

Report interval_homomorphism_check(const BrouwerAlgebra& b, Elem x, Elem y, Elem z) {
  if (x >= b.size() || y >= b.size() || z >= b.size())
    throw Error(ErrorKind::BadInput, "element out of range", wit({x, y, z}));
  if (!b.lt(x, y) || b.join(z, x) != y)
    throw Error(ErrorKind::PreconditionFailed, "need x < y and y = z v x", wit({x, y, z}));
  Report r("interval_homomorphism");
  const Interval source = interval(b, z);
  const Interval target = sub_interval(b, x, y);
  const BrouwerAlgebra& s = source.algebra;
  const BrouwerAlgebra& t = target.algebra;
  std::vector<Elem> image(s.size());
  bool into = true;
  for (Elem u = 0; u < s.size(); ++u) {
    auto local = target.index_of(b.join(x, source.members[u]));
    if (!local) {
      into = false;
      r.add("maps_into", false, "x v u leaves [x,y]", wit({source.members[u]}));
      break;
    }
    image[u] = *local;
  }
  if (!into) return r;
  r.add("maps_into", true);
  auto pairwise = [&](const std::string& name, auto src_op, auto dst_op) {
    for (Elem u = 0; u < s.size(); ++u)
      for (Elem v = 0; v < s.size(); ++v)
        if (image[src_op(u, v)] != dst_op(image[u], image[v])) {
          r.add(name, false, "fails at parent elements", wit({source.members[u], source.members[v]}));
          return;
        }
    r.add(name, true);
  };
  pairwise("preserves_meet", [&](Elem u, Elem v) { return s.meet(u, v); },
           [&](Elem u, Elem v) { return t.meet(u, v); });
  pairwise("preserves_join", [&](Elem u, Elem v) { return s.join(u, v); },
           [&](Elem u, Elem v) { return t.join(u, v); });
  pairwise("preserves_arrow", [&](Elem u, Elem v) { return s.arrow(u, v); },
           [&](Elem u, Elem v) { return t.arrow(u, v); });
  r.add("preserves_bottom", image[s.bottom()] == t.bottom());
  r.add("preserves_top", image[s.top()] == t.top());
  std::vector<bool> hit(t.size(), false);
  for (Elem v : image) hit[v] = true;
  const auto missed = std::find(hit.begin(), hit.end(), false);
  if (missed == hit.end())
    r.add("onto", true);
  else
    r.add("onto", false, "element of [x,y] not reached",
          wit({target.members[static_cast<std::size_t>(missed - hit.begin())]}));
  return r;
}

Report canonical_set_check(const BrouwerAlgebra& b, const std::vector<Elem>& c) {
  if (c.empty()) throw Error(ErrorKind::PreconditionFailed, "candidate set must be nonempty");
  Report r("canonical_set");
  std::vector<bool> in_c(b.size(), false);
  for (Elem a : c) {
    if (a >= b.size()) throw Error(ErrorKind::BadInput, "element out of range", wit({a}));
    in_c[a] = true;
  }
  {
    std::optional<std::array<Elem, 3>> bad;
    for (Elem a : c) {
      for (Elem x = 0; x < b.size() && !bad; ++x)
        for (Elem y = 0; y < b.size() && !bad; ++y)
          if (b.arrow(a, b.meet(x, y)) != b.meet(b.arrow(a, x), b.arrow(a, y))) bad = std::array<Elem, 3>{a, x, y};
      if (bad) break;
    }
    if (bad)
      r.add("arrow_distributes_over_meet", false, "a -> (b ^ c) differs from (a -> b) ^ (a -> c)",
            wit({(*bad)[0], (*bad)[1], (*bad)[2]}));
    else
      r.add("arrow_distributes_over_meet", true);
  }
  {
    std::optional<Elem> bad;
    for (Elem a : c)
      if (a == b.top() || is_meet_reducible(b, a)) {
        bad = a;
        break;
      }
    if (bad)
      r.add("meet_irreducible", false, b.label(*bad) + " is meet-reducible", wit({*bad}));
    else
      r.add("meet_irreducible", true);
  }
  {
    std::optional<std::array<Elem, 2>> bad_join, bad_arrow;
    for (Elem a : c)
      for (Elem x : c) {
        if (!bad_join && !in_c[b.join(a, x)]) bad_join = std::array<Elem, 2>{a, x};
        if (!bad_arrow && !in_c[b.arrow(a, x)]) bad_arrow = std::array<Elem, 2>{a, x};
      }
    if (bad_join)
      r.add("closed_under_join", false, "join leaves the set", wit({(*bad_join)[0], (*bad_join)[1]}));
    else
      r.add("closed_under_join", true);
    if (bad_arrow)
      r.add("closed_under_arrow", false, "arrow leaves the set", wit({(*bad_arrow)[0], (*bad_arrow)[1]}));
    else
      r.add("closed_under_arrow", true);
  }
  return r;
}

Report canonical_laws_check(const BrouwerAlgebra& b, const std::vector<Elem>& c, std::size_t family_cap,
                            const Exec& exec) {
  Report r("canonical_laws");
  std::vector<Elem> base = c;
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<std::vector<Elem>> families;
  std::vector<Elem> current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!current.empty()) families.push_back(current);
    if (current.size() == family_cap) return;
    for (std::size_t i = from; i < base.size(); ++i) {
      current.push_back(base[i]);
      grow(i + 1);
      current.pop_back();
    }
  };
  grow(0);
  std::vector<Elem> meets;
  for (const auto& f : families) {
    Elem m = b.top();
    for (Elem a : f) m = b.meet(m, a);
    meets.push_back(m);
  }
  const std::uint64_t nf = families.size();
  auto family_witness = [&](std::uint64_t i) {
    std::vector<std::int64_t> w;
    for (Elem a : families[i / nf]) w.push_back(a);
    w.push_back(-1);
    for (Elem x : families[i % nf]) w.push_back(x);
    return w;
  };
  auto item1 = parallel_find_first(nf * nf, exec, [&](std::uint64_t i) {
    const auto& as = families[i / nf];
    const auto& bs = families[i % nf];
    bool pointwise = true;
    for (Elem bj : bs) {
      bool some = false;
      for (Elem ai : as) some = some || b.leq(ai, bj);
      pointwise = pointwise && some;
    }
    return b.leq(meets[i / nf], meets[i % nf]) != pointwise;
  });
  if (item1)
    r.add("meet_family_order", false, "order of meets differs from the pointwise criterion", family_witness(*item1));
  else
    r.add("meet_family_order", true, std::to_string(nf) + " families");
  auto item2 = parallel_find_first(nf * nf, exec, [&](std::uint64_t i) {
    const auto& as = families[i / nf];
    const auto& bs = families[i % nf];
    Elem expansion = b.bottom();
    for (Elem ai : as) {
      Elem inner = b.top();
      for (Elem bj : bs) inner = b.meet(inner, b.arrow(ai, bj));
      expansion = b.join(expansion, inner);
    }
    return b.arrow(meets[i / nf], meets[i % nf]) != expansion;
  });
  if (item2)
    r.add("arrow_expansion", false, "arrow between meets differs from the join-of-meets expansion",
          family_witness(*item2));
  else
    r.add("arrow_expansion", true);
  Check law = check_meet_arrow_law(b, exec);
  r.add(law.name, law.passed, law.detail, law.witness);
  return r;
}

BrouwerAlgebra add_top(const BrouwerAlgebra& b) {
  const BrouwerAlgebra::Tables old = b.tables();
  const std::size_t n = old.size;
  const std::size_t m = n + 1;
  const Elem new_top = static_cast<Elem>(n);
  BrouwerAlgebra::Tables t;
  t.size = m;
  t.leq.assign(m * m, 0);
  t.meet.assign(m * m, 0);
  t.join.assign(m * m, 0);
  t.arrow.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t i = a * m + c;
      if (a < n && c < n) {
        t.leq[i] = old.leq[a * n + c];
        t.meet[i] = old.meet[a * n + c];
        t.join[i] = old.join[a * n + c];
        t.arrow[i] = old.arrow[a * n + c];
        continue;
      }
      const Elem ea = static_cast<Elem>(a), ec = static_cast<Elem>(c);
      t.leq[i] = c == n ? 1 : 0;
      t.meet[i] = a == n ? ec : ea;
      t.join[i] = new_top;
      // only 1' itself reaches 1' by a join, and 1' v anything covers everything
      t.arrow[i] = a == n ? old.bottom : new_top;
    }
  t.bottom = old.bottom;
  t.top = new_top;
  t.provenance = Provenance::add_top;
  if (!old.labels.empty()) {
    t.labels = old.labels;
    t.labels.push_back("1'");
  }
  BrouwerAlgebra out = BrouwerAlgebra::from_tables(t);
  const Report v = validate_brouwer(out);
  if (!v.passed()) throw Error(ErrorKind::InvalidAlgebra, "add_top produced an invalid algebra:\n" + v.to_text());
  return out;
}

bool embeddable_shape(const BrouwerAlgebra& b) {
  return !is_meet_reducible(b, b.bottom()) && !is_join_reducible(b, b.top());
}

ImplicativeUsl implicative_reduct(const BrouwerAlgebra& b) {
  const std::size_t n = b.size();
  if (n > kMaxCarrier) throw Error(ErrorKind::CapExceeded, "implicative reduct needs at most 64 elements", wit({n}));
  Relation r{n, std::vector<Mask>(n, 0)};
  std::vector<std::uint8_t> join(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      if (b.leq(a, c)) r.rows[a] |= bit(c);
      join[a * n + c] = static_cast<std::uint8_t>(b.join(a, c));
    }
  std::vector<std::string> labels;
  for (Elem a = 0; a < n; ++a) labels.push_back(b.label(a));
  return compute_implication_table(UpperSemilattice::with_table(Poset::validate(r, std::move(labels)), join));
}

}  // namespace brouwerlab
