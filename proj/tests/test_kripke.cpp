#include <gtest/gtest.h>

#include "brouwerlab/error.hpp"
#include "brouwerlab/kripke.hpp"
#include "brouwerlab/logic.hpp"
#include "oracles.hpp"

using namespace brouwerlab;

namespace {

Formula P(std::string_view s) { return parse_formula(s); }

bool oracle_pmorphism(const Poset& s, const Poset& t, const std::vector<std::size_t>& f) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (s.leq(x, y) && !t.leq(f[x], f[y])) return false;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (!t.leq(f[x], v)) continue;
      bool found = false;
      for (std::size_t y = 0; y < s.size(); ++y) found = found || (s.leq(x, y) && f[y] == v);
      if (!found) return false;
    }
  return true;
}

/// Every map s -> t in lexicographic order, stopping at the first hit.
std::optional<std::vector<std::size_t>> oracle_find(const Poset& s, const Poset& t, bool onto) {
  std::vector<std::size_t> f(s.size(), 0);
  while (true) {
    Mask hit = 0;
    for (auto y : f) hit |= bit(y);
    if ((!onto || hit == t.carrier()) && oracle_pmorphism(s, t, f)) return f;
    std::size_t i = s.size();
    while (i > 0 && ++f[i - 1] == t.size()) f[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

std::vector<Poset> small_posets(std::size_t max) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max; ++n)
    for (Poset& p : oracle::posets_up_to(n)) out.push_back(std::move(p));
  return out;
}

}  // namespace

TEST(Forcing, Examples) {
  const KripkeModel c{canned::chain(2), {0b10}};
  EXPECT_FALSE(forces(c, 0, P("p1 | ~p1")));
  EXPECT_TRUE(forces(c, 1, P("p1 | ~p1")));
  const KripkeModel f{canned::fork(), {0b010}};
  EXPECT_FALSE(forces(f, 0, P("~p1 | ~~p1")));
  for (std::size_t w = 0; w < 3; ++w) EXPECT_TRUE(forces(f, w, P("p1 -> p1")));
  EXPECT_EQ(truth_set(f, P("~p1")), 0b100u);
}

TEST(Forcing, NonUpsetValuationRejected) {
  const KripkeModel bad{canned::chain(2), {0b01}};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Forcing, MatchesClauseOracle) {
  const auto fs = random_formulas(21, 60, 3, 2);
  for (const Poset& p : small_posets(3)) {
    const auto ups = oracle::upsets(p);
    for (Mask a : ups)
      for (Mask b : ups) {
        const KripkeModel m{p, {a, b}};
        for (const Formula& f : fs)
          for (std::size_t w = 0; w < p.size(); ++w) ASSERT_EQ(forces(m, w, f), oracle::forces(p, {a, b}, w, f));
      }
  }
}

TEST(FrameValidity, Examples) {
  EXPECT_TRUE(frame_valid(canned::fork(), P("p1 -> p1")).valid);
  EXPECT_FALSE(frame_valid(canned::chain(2), P("p1 | ~p1")).valid);
  const FrameResult r = frame_valid(canned::binary_tree(1), P("~p1 | ~~p1"));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.world, 0u);
  EXPECT_EQ(r.valuation, std::vector<Mask>{0b010});
}

TEST(FrameValidity, MatchesOracleAndAlgebra) {
  const auto fs = random_formulas(5, 40, 3, 2);
  for (const Poset& p : small_posets(4)) {
    const BrouwerAlgebra b = from_upsets(p);
    for (const Formula& f : fs) {
      const bool v = frame_valid(p, f).valid;
      EXPECT_EQ(v, oracle::frame_valid(p, f)) << f.to_string();
      EXPECT_EQ(v, is_identity(b, f).identity) << f.to_string();
    }
  }
}

TEST(DeJongh, Examples) {
  EXPECT_TRUE(dejongh_agreement(canned::chain(2), default_corpus()).passed());
  const Corpus wlem({{"wlem", P("~p1 | ~~p1"), Expect::jan}});
  const Report r = dejongh_agreement(canned::fork(), wlem);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(r.checks()[0].detail.find("refuted"), std::string::npos);
  const Corpus lem({{"lem", P("p1 | ~p1"), Expect::cpc}});
  EXPECT_TRUE(dejongh_agreement(canned::antichain(1), lem).passed());
  EXPECT_TRUE(frame_valid(canned::antichain(1), P("p1 | ~p1")).valid);
}

TEST(PMorphisms, Examples) {
  const Poset fork = canned::fork(), c2 = canned::chain(2);
  EXPECT_TRUE(is_pmorphism({fork, fork, {0, 1, 2}}).passed);
  EXPECT_TRUE(is_pmorphism({fork, c2, {0, 1, 1}}).passed);
  const Check back = is_pmorphism({c2, fork, {0, 1}});
  EXPECT_FALSE(back.passed);
  EXPECT_EQ(back.witness, (std::vector<std::int64_t>{0, 2}));
}

TEST(PMorphisms, Search) {
  const Poset fork = canned::fork(), c2 = canned::chain(2);
  const auto f = find_pmorphism(fork, c2, true);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->map, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_FALSE(find_pmorphism(c2, fork, true));
  const auto t = find_pmorphism(canned::binary_tree(2), canned::binary_tree(1), true);
  ASSERT_TRUE(t);
  EXPECT_TRUE(t->onto());
  EXPECT_TRUE(oracle_pmorphism(t->source, t->target, t->map));
}

TEST(PMorphisms, SearchMatchesExhaustiveMaps) {
  const auto ps = small_posets(3);
  for (const Poset& a : ps)
    for (const Poset& b : ps)
      for (bool onto : {false, true}) {
        const auto mine = find_pmorphism(a, b, onto);
        const auto ref = oracle_find(a, b, onto);
        ASSERT_EQ(mine.has_value(), ref.has_value());
        if (mine) EXPECT_EQ(mine->map, *ref);
      }
}

TEST(PMorphisms, CheckMatchesOracle) {
  const auto ps = small_posets(3);
  for (const Poset& a : ps)
    for (const Poset& b : ps) {
      std::vector<std::size_t> f(a.size(), 0);
      while (true) {
        EXPECT_EQ(is_pmorphism({a, b, f}).passed, oracle_pmorphism(a, b, f));
        std::size_t i = a.size();
        while (i > 0 && ++f[i - 1] == b.size()) f[--i] = 0;
        if (i == 0) break;
      }
    }
}

TEST(Pullback, LemmaOnSmallFrames) {
  const auto fs = random_formulas(8, 25, 3, 2);
  const auto ps = small_posets(4);
  for (const Poset& a : ps)
    for (const Poset& b : ps) {
      if (b.size() > a.size()) continue;
      const auto f = find_pmorphism(a, b, true);
      if (!f) continue;
      const auto ups = oracle::upsets(b);
      for (Mask u : ups)
        for (Mask v : ups) {
          const std::vector<Mask> pulled = pullback(*f, {u, v});
          for (const Formula& phi : fs)
            for (std::size_t w = 0; w < a.size(); ++w)
              ASSERT_EQ(oracle::forces(a, pulled, w, phi), oracle::forces(b, {u, v}, f->map[w], phi));
        }
    }
}

TEST(Transfer, Examples) {
  const Poset fork = canned::fork(), c2 = canned::chain(2);
  const Corpus lem({{"lem", P("p1 | ~p1"), Expect::cpc}});
  const Report r = pmorphism_theory_transfer({fork, c2, {0, 1, 1}}, lem);
  EXPECT_TRUE(r.passed());
  ASSERT_NE(r.find("pullback:lem"), nullptr);

  EXPECT_TRUE(pmorphism_theory_transfer({fork, fork, {0, 1, 2}}, default_corpus()).passed());

  const auto t = find_pmorphism(canned::binary_tree(2), canned::binary_tree(1), true);
  const Corpus wlem({{"wlem", P("~p1 | ~~p1"), Expect::jan}});
  const Report tr = pmorphism_theory_transfer(*t, wlem);
  EXPECT_TRUE(tr.passed());
  EXPECT_NE(tr.find("pullback:wlem"), nullptr);
}

TEST(Transfer, Preconditions) {
  const Poset fork = canned::fork(), c2 = canned::chain(2);
  try {
    pmorphism_theory_transfer({c2, fork, {0, 1}}, default_corpus());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAPMorphism);
  }
  try {
    pmorphism_theory_transfer({c2, canned::chain(3), {1, 2}}, default_corpus());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOnto);
  }
}
