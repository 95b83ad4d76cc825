#include <gtest/gtest.h>

#include <algorithm>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/error.hpp"
#include "brouwerlab/freedist.hpp"
#include "oracles.hpp"

using namespace brouwerlab;

namespace {

bool is_chain(const BrouwerAlgebra& b) {
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y)
      if (!b.leq(x, y) && !b.leq(y, x)) return false;
  return true;
}

std::vector<Elem> sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const Check& check(const Report& r, std::string_view name) {
  const Check* c = r.find(name);
  if (!c) throw std::runtime_error("missing check " + std::string(name));
  return *c;
}

// bottom 0 < 1 < 2 < top 4, and 0 < 3 < 4
BrouwerAlgebra pentagon() {
  const std::size_t n = 5;
  const Poset p = Poset::validate(
      Relation::from_pairs(n, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}}));
  BrouwerAlgebra::Tables t;
  t.size = n;
  t.leq.resize(n * n);
  t.meet.resize(n * n);
  t.join.resize(n * n);
  t.arrow.assign(n * n, 4);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.leq[a * n + b] = p.leq(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        bool glb = p.leq(c, a) && p.leq(c, b), lub = p.leq(a, c) && p.leq(b, c);
        for (std::size_t d = 0; d < n; ++d) {
          if (p.leq(d, a) && p.leq(d, b) && !p.leq(d, c)) glb = false;
          if (p.leq(a, d) && p.leq(b, d) && !p.leq(c, d)) lub = false;
        }
        if (glb) t.meet[a * n + b] = static_cast<Elem>(c);
        if (lub) t.join[a * n + b] = static_cast<Elem>(c);
      }
    }
  t.bottom = 0;
  t.top = 4;
  return BrouwerAlgebra::from_tables(t);
}

}  // namespace

TEST(FromUpsets, Sizes) {
  EXPECT_EQ(from_upsets(canned::chain(2)).size(), 3u);
  EXPECT_TRUE(is_chain(from_upsets(canned::chain(2))));
  EXPECT_EQ(from_upsets(canned::fork()).size(), 5u);
  EXPECT_EQ(from_upsets(canned::antichain(1)).size(), 2u);
}

TEST(FromUpsets, ElementsFollowMasks) {
  const UpsetAlgebra ua = build_upset_algebra(canned::fork());
  EXPECT_EQ(ua.masks, (std::vector<Mask>{0, 0b010, 0b100, 0b110, 0b111}));
  EXPECT_EQ(ua.algebra.bottom(), ua.index_of(0b111));
  EXPECT_EQ(ua.algebra.top(), ua.index_of(0));
  EXPECT_THROW(ua.index_of(0b001), Error);
}

TEST(Validate, TamperedArrowBreaksResiduation) {
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  auto t = c3.tables();
  const Elem m = 1;
  ASSERT_EQ(c3.arrow(c3.bottom(), m), m);
  t.arrow[c3.bottom() * t.size + m] = c3.top();
  const Report r = validate_brouwer(BrouwerAlgebra::from_tables(t));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(check(r, "residuation").passed);
  EXPECT_EQ(check(r, "residuation").witness.size(), 3u);
}

TEST(Validate, PentagonIsNotDistributive) {
  const Report r = validate_brouwer(pentagon());
  EXPECT_TRUE(check(r, "partial_order").passed);
  EXPECT_TRUE(check(r, "meet_is_glb").passed);
  EXPECT_FALSE(check(r, "distributive").passed);
}

TEST(Validate, ShapeErrorsRejected) {
  auto t = from_upsets(canned::chain(2)).tables();
  t.meet.pop_back();
  EXPECT_THROW(BrouwerAlgebra::from_tables(t), Error);
  t = from_upsets(canned::chain(2)).tables();
  t.join[0] = 7;
  EXPECT_THROW(BrouwerAlgebra::from_tables(t), Error);
}

TEST(Irreducibles, Examples) {
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  EXPECT_EQ(sorted(meet_irreducibles(c3)), (std::vector<Elem>{1, 2}));
  const BrouwerAlgebra two = from_upsets(canned::antichain(1));
  EXPECT_EQ(meet_irreducibles(two), std::vector<Elem>{two.bottom()});
  EXPECT_EQ(join_irreducibles(two), std::vector<Elem>{two.top()});
  EXPECT_EQ(meet_irreducibles(medvedev_algebra(2).algebra).size(), 4u);
}

TEST(Intervals, Examples) {
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  const Interval whole = interval(c3, c3.top());
  EXPECT_EQ(whole.algebra.size(), 3u);
  EXPECT_EQ(whole.algebra.tables().arrow, c3.tables().arrow);
  EXPECT_EQ(interval(c3, 1).algebra.size(), 2u);
  EXPECT_THROW(interval(c3, c3.bottom()), Error);

  const FreeLattice b2 = medvedev_algebra(2);
  const Elem g1 = b2.iota[0b01];
  const Interval iv = interval(b2.algebra, g1);
  std::size_t below = 0;
  for (Elem x = 0; x < b2.algebra.size(); ++x) below += b2.algebra.leq(x, g1);
  EXPECT_EQ(iv.algebra.size(), below);
  EXPECT_TRUE(validate_brouwer(iv.algebra).passed());
}

TEST(Intervals, SubIntervalArrowIsLeastResidualInside) {
  for (const Poset& p : oracle::posets_up_to(4)) {
    const BrouwerAlgebra b = from_upsets(p);
    for (Elem lo = 0; lo < b.size(); ++lo)
      for (Elem hi = 0; hi < b.size(); ++hi) {
        if (!b.lt(lo, hi)) continue;
        const Interval iv = sub_interval(b, lo, hi);
        ASSERT_TRUE(validate_brouwer(iv.algebra).passed());
        for (Elem x = 0; x < iv.algebra.size(); ++x)
          for (Elem y = 0; y < iv.algebra.size(); ++y)
            EXPECT_EQ(iv.algebra.arrow(x, y), oracle::least_residual(iv.algebra, x, y));
      }
  }
}

TEST(Homomorphism, Examples) {
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  EXPECT_TRUE(interval_homomorphism_check(c3, c3.bottom(), 1, 1).passed());

  const FreeLattice b2 = medvedev_algebra(2);
  const Elem x = b2.iota[0b01], z = b2.iota[0b10];
  EXPECT_TRUE(interval_homomorphism_check(b2.algebra, x, b2.algebra.join(z, x), z).passed());

  const BrouwerAlgebra f = from_upsets(canned::fork());
  for (Elem x = 0; x < f.size(); ++x)
    for (Elem z = 0; z < f.size(); ++z) {
      const Elem y = f.join(z, x);
      if (f.lt(x, y)) EXPECT_TRUE(interval_homomorphism_check(f, x, y, z).passed());
    }
}

TEST(Canonical, Examples) {
  const FreeLattice b2 = medvedev_algebra(2);
  EXPECT_TRUE(canonical_set_check(b2.algebra, meet_irreducibles(b2.algebra)).passed());
  EXPECT_EQ(sorted(meet_irreducibles(b2.algebra)), sorted(b2.iota));

  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  EXPECT_TRUE(canonical_set_check(c3, {c3.bottom()}).passed());

  const BrouwerAlgebra f = from_upsets(canned::fork());
  std::vector<Elem> all;
  for (Elem x = 0; x < f.size(); ++x) all.push_back(x);
  const Report r = canonical_set_check(f, all);
  EXPECT_FALSE(check(r, "meet_irreducible").passed);
}

TEST(Canonical, Laws) {
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  EXPECT_TRUE(check_meet_arrow_law(c3).passed);
  const FreeLattice b2 = medvedev_algebra(2);
  EXPECT_TRUE(canonical_laws_check(b2.algebra, b2.iota, 2).passed());
}

TEST(AddTop, TwoElementBecomesChains) {
  const BrouwerAlgebra two = from_upsets(canned::antichain(1));
  const BrouwerAlgebra three = add_top(two);
  EXPECT_EQ(three.size(), 3u);
  EXPECT_TRUE(is_chain(three));
  const BrouwerAlgebra four = add_top(three);
  EXPECT_EQ(four.size(), 4u);
  EXPECT_TRUE(is_chain(four));
  EXPECT_TRUE(validate_brouwer(four).passed());
}

TEST(AddTop, OldArrowsKept) {
  for (const Poset& p : oracle::posets_up_to(4)) {
    const BrouwerAlgebra b = from_upsets(p);
    const BrouwerAlgebra t = add_top(b);
    ASSERT_EQ(t.size(), b.size() + 1);
    for (Elem x = 0; x < b.size(); ++x)
      for (Elem y = 0; y < b.size(); ++y) {
        EXPECT_EQ(t.arrow(x, y), b.arrow(x, y));
        EXPECT_EQ(t.meet(x, y), b.meet(x, y));
        EXPECT_EQ(t.join(x, y), b.join(x, y));
      }
    EXPECT_TRUE(embeddable_shape(t) || !embeddable_shape(b));
    const auto ji = join_irreducibles(t);
    EXPECT_NE(std::find(ji.begin(), ji.end(), t.top()), ji.end());
  }
}

TEST(Shape, Examples) {
  EXPECT_TRUE(embeddable_shape(from_upsets(canned::chain(2))));
  EXPECT_FALSE(embeddable_shape(from_upsets(canned::fork())));
  EXPECT_TRUE(embeddable_shape(from_upsets(canned::antichain(1))));
}

TEST(BrouwerProperties, UpsetAlgebrasOnAllSmallPosets) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : oracle::posets_up_to(n)) {
      const BrouwerAlgebra b = from_upsets(p);
      ASSERT_EQ(b.size(), oracle::upsets(p).size());
      EXPECT_TRUE(validate_brouwer(b).passed());
      EXPECT_TRUE(check_arrow_below(b).passed);
      EXPECT_TRUE(check_meet_arrow_law(b).passed);
      for (Elem x = 0; x < b.size(); ++x)
        for (Elem y = 0; y < b.size(); ++y) EXPECT_EQ(b.arrow(x, y), oracle::least_residual(b, x, y));
      const ImplicativeUsl r = implicative_reduct(b);
      for (Elem x = 0; x < b.size(); ++x)
        for (Elem y = 0; y < b.size(); ++y) {
          EXPECT_EQ(r.join(x, y), b.join(x, y));
          EXPECT_EQ(r.arrow(x, y), b.arrow(x, y));
        }
    }
}

TEST(BrouwerProperties, ParallelValidationMatchesSerial) {
  const BrouwerAlgebra b = medvedev_algebra(3).algebra;
  EXPECT_EQ(validate_brouwer(b, Exec{1}).to_json(), validate_brouwer(b, Exec{4}).to_json());
}
