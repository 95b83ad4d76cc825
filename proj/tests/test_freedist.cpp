#include <gtest/gtest.h>

#include <algorithm>

#include "brouwerlab/error.hpp"
#include "brouwerlab/freedist.hpp"
#include "oracles.hpp"

using namespace brouwerlab;

TEST(FreeOver, SmallBooleanBases) {
  const FreeLattice b1 = free_over(boolean_reverse_usl(1));
  EXPECT_EQ(b1.algebra.size(), 3u);
  EXPECT_EQ(b1.iota.size(), 2u);
  const FreeLattice b2 = free_over(boolean_reverse_usl(2));
  EXPECT_EQ(b2.algebra.size(), 6u);
  EXPECT_EQ(b2.iota.size(), 4u);
}

TEST(FreeOver, ChainBase) {
  const ImplicativeUsl u = compute_implication_table(compute_join_table(canned::chain(2)));
  const FreeLattice f = free_over(u);
  EXPECT_EQ(f.algebra.size(), 3u);
  for (Elem g : f.iota) EXPECT_NE(g, f.algebra.top());
  EXPECT_NE(f.iota[0], f.iota[1]);
}

TEST(FreeLeq, Examples) {
  const ImplicativeUsl u = boolean_reverse_usl(2);
  EXPECT_TRUE(free_leq(u, 0b0110, 0b0110));
  EXPECT_TRUE(free_leq(u, 0, 0));
  EXPECT_FALSE(free_leq(u, 0, 0b0001));
  // {{1},{2}} below {{}}: {1} is below {} under reverse inclusion
  EXPECT_TRUE(free_leq(u, bit(0b01) | bit(0b10), bit(0b00)));
}

TEST(FreeLeq, AgreesWithAlgebraOrder) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const FreeLattice f = medvedev_algebra(n);
    const std::size_t m = f.base.size();
    for (Mask x = 0; x < (Mask{1} << m); ++x)
      for (Mask y = 0; y < (Mask{1} << m); y += (m > 4 ? 7 : 1))
        EXPECT_EQ(free_leq(f.base, x, y), f.algebra.leq(f.element(x), f.element(y)));
  }
}

TEST(Medvedev, SizesMatchSubsetFilter) {
  const std::size_t expected[] = {0, 3, 6, 20, 168};
  for (std::size_t n = 1; n <= 4; ++n) {
    const FreeLattice f = medvedev_algebra(n);
    EXPECT_EQ(f.algebra.size(), expected[n]);
    EXPECT_EQ(f.algebra.size(), oracle::cube_upset_count(n));
    EXPECT_EQ(meet_irreducibles_fast(f.algebra).size(), std::size_t{1} << n);
  }
}

TEST(Medvedev, Limits) {
  try {
    medvedev_algebra(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_THROW(medvedev_algebra(0), Error);
}

TEST(Medvedev, FastIrreduciblesMatchPairScan) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const BrouwerAlgebra& b = medvedev_algebra(n).algebra;
    auto slow = meet_irreducibles(b), fast = meet_irreducibles_fast(b);
    std::sort(slow.begin(), slow.end());
    std::sort(fast.begin(), fast.end());
    EXPECT_EQ(slow, fast);
  }
}

TEST(UniversalExtend, IotaExtendsToIdentity) {
  const FreeLattice f = medvedev_algebra(2);
  const Extension e = universal_extend(f, f.iota, f.algebra);
  EXPECT_TRUE(e.report.passed());
  for (Elem x = 0; x < f.algebra.size(); ++x) EXPECT_EQ(e.map[x], x);
}

TEST(UniversalExtend, CollapseOntoThreeChain) {
  const FreeLattice f = medvedev_algebra(2);
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  const Elem m = 1;
  // reverse-boolean indices: 0b11 is the base bottom, 0b00 its top
  const std::vector<Elem> g{m, m, m, c3.bottom()};
  const Extension e = universal_extend(f, g, c3);
  EXPECT_TRUE(e.report.find("preserves_meet")->passed);
  EXPECT_TRUE(e.report.find("preserves_join")->passed);
  EXPECT_TRUE(e.report.find("agrees_on_generators")->passed);
  EXPECT_EQ(e.map[f.algebra.top()], c3.top());
}

TEST(UniversalExtend, RejectsNonHomomorphism) {
  const FreeLattice f = medvedev_algebra(2);
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  const std::vector<Elem> g{c3.bottom(), 1, 1, c3.bottom()};
  try {
    universal_extend(f, g, c3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAUslHom);
  }
}

TEST(IotaArrow, Examples) {
  const FreeLattice f = medvedev_algebra(2);
  EXPECT_EQ(f.iota[f.base.arrow(0b01, 0b10)], f.iota[0b10]);
  EXPECT_EQ(f.algebra.arrow(f.iota[0b01], f.iota[0b10]), f.iota[0b10]);
  for (std::size_t x = 0; x < 4; ++x) EXPECT_EQ(f.algebra.arrow(f.iota[x], f.iota[x]), f.iota[f.base.bottom()]);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(iota_arrow_check(medvedev_algebra(n)).passed());
}

TEST(IotaArrow, BottomGeneratorIsAlgebraBottom) {
  const FreeLattice f = medvedev_algebra(3);
  EXPECT_EQ(f.iota[f.base.bottom()], f.algebra.bottom());
}
