#include <gtest/gtest.h>

#include "brouwerlab/error.hpp"
#include "brouwerlab/order.hpp"
#include "oracles.hpp"

using namespace brouwerlab;

namespace {

ErrorKind kind_of(const std::function<void()>& f, std::vector<std::int64_t>* witness = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (witness) *witness = e.witness();
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::BadInput;
}

}  // namespace

TEST(Preorder, IdentityIsAnAntichain) {
  const Preorder p = Preorder::validate(Relation::identity(3));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.maximal(), 0b111u);
  EXPECT_EQ(p.minimal(), 0b111u);
}

TEST(Preorder, SymmetricPairIsOneClass) {
  const Preorder p = Preorder::validate(Relation::from_pairs(2, {{0, 1}, {1, 0}}));
  EXPECT_TRUE(p.equivalent(0, 1));
  EXPECT_FALSE(p.is_antisymmetric());
  const Quotient q = quotient_to_poset(p);
  EXPECT_EQ(q.poset.size(), 1u);
  EXPECT_EQ(q.class_of, (std::vector<std::size_t>{0, 0}));
}

TEST(Preorder, MissingCompositeIsNotTransitive) {
  std::vector<std::int64_t> w;
  EXPECT_EQ(kind_of([] { Preorder::validate(Relation::from_pairs(3, {{0, 1}, {1, 2}})); }, &w),
            ErrorKind::NotTransitive);
  EXPECT_EQ(w, (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(Preorder, NotReflexive) {
  Relation r = Relation::identity(2);
  r.rows[1] = 0;
  std::vector<std::int64_t> w;
  EXPECT_EQ(kind_of([&] { Preorder::validate(r); }, &w), ErrorKind::NotReflexive);
  EXPECT_EQ(w, (std::vector<std::int64_t>{1}));
}

TEST(Preorder, RaggedMatrixIsNotSquare) {
  EXPECT_EQ(kind_of([] { Relation::from_matrix({{true, false}, {true}}); }), ErrorKind::NotSquare);
}

TEST(Quotient, AntisymmetricInputIsUnchanged) {
  const Poset p = canned::diamond();
  const Quotient q = quotient_to_poset(p);
  EXPECT_EQ(q.poset.size(), 4u);
  EXPECT_EQ(q.class_of, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(static_cast<const Preorder&>(q.poset) == static_cast<const Preorder&>(p));
}

TEST(Quotient, TwoPairsStacked) {
  // {0,1} equivalent, {2,3} equivalent, first pair below the second
  const Preorder p = Preorder::validate(
      Relation::from_pairs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  const Quotient q = quotient_to_poset(p);
  ASSERT_EQ(q.poset.size(), 2u);
  EXPECT_TRUE(q.poset.lt(0, 1));
  EXPECT_EQ(q.class_of, (std::vector<std::size_t>{0, 0, 1, 1}));
}

TEST(Poset, AntisymmetryViolation) {
  std::vector<std::int64_t> w;
  EXPECT_EQ(kind_of([] { Poset::validate(Relation::from_pairs(2, {{0, 1}, {1, 0}})); }, &w),
            ErrorKind::NotAntisymmetric);
  EXPECT_EQ(w, (std::vector<std::int64_t>{0, 1}));
}

TEST(Poset, HeightAndDepth) {
  const Poset c = canned::chain(3);
  EXPECT_EQ(c.height(0), 0u);
  EXPECT_EQ(c.height(2), 2u);
  EXPECT_EQ(c.depth(0), 2u);
  EXPECT_EQ(c.hasse_edges().size(), 2u);
}

TEST(Usl, ChainJoin) {
  const UpperSemilattice u = compute_join_table(canned::chain(2));
  EXPECT_EQ(u.join(0, 1), 1u);
  EXPECT_EQ(u.bottom(), 0u);
}

TEST(Usl, AntichainHasNoBottom) {
  const ErrorKind k = kind_of([] { compute_join_table(canned::antichain(2)); });
  EXPECT_TRUE(k == ErrorKind::NoBottom || k == ErrorKind::NoLub);
}

TEST(Usl, PowersetJoinIsUnionByScan) {
  const UpperSemilattice u = compute_join_table(canned::boolean(2));
  EXPECT_EQ(u.bottom(), 0u);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      // least upper bound by direct scan
      std::size_t lub = 4;
      for (std::size_t c = 0; c < 4; ++c) {
        if (!u.leq(a, c) || !u.leq(b, c)) continue;
        bool least = true;
        for (std::size_t d = 0; d < 4; ++d)
          if (u.leq(a, d) && u.leq(b, d) && !u.leq(c, d)) least = false;
        if (least) lub = c;
      }
      EXPECT_EQ(u.join(a, b), lub);
      EXPECT_EQ(u.join(a, b), a | b);
    }
}

TEST(Usl, BadJoinTableRejected) {
  std::vector<std::uint8_t> join{0, 0, 0, 1};
  EXPECT_THROW(UpperSemilattice::with_table(canned::chain(2), join), Error);
}

TEST(Implication, ArrowToItselfIsBottom) {
  const ImplicativeUsl u = powerset_usl(3);
  for (std::size_t a = 0; a < u.size(); ++a) EXPECT_EQ(u.arrow(a, a), u.bottom());
}

TEST(Implication, PowersetExamples) {
  const ImplicativeUsl u = powerset_usl(2);
  EXPECT_EQ(u.arrow(0b01, 0b11), 0b10u);
  for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(u.arrow(0, b), b);
}

TEST(Implication, ArrowIsLeastResidualEverywhere) {
  for (const Poset& p : {canned::chain(4), canned::boolean(3), canned::diamond(), canned::fork()}) {
    UpperSemilattice u = [&] {
      try {
        return compute_join_table(p);
      } catch (const Error&) {
        return compute_join_table(canned::chain(1));
      }
    }();
    const ImplicativeUsl iu = compute_implication_table(u);
    const std::size_t n = iu.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t c = iu.arrow(a, b);
        EXPECT_TRUE(iu.leq(b, iu.join(a, c)));
        for (std::size_t d = 0; d < n; ++d)
          if (iu.leq(b, iu.join(a, d))) EXPECT_TRUE(iu.leq(c, d));
      }
  }
}

TEST(Implication, NoLeastResidualInN5Shape) {
  // bottom 0, chain 1 < 2, side 3, top 4: the pentagon as a join semilattice
  const Poset p = Poset::validate(
      Relation::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}}));
  const UpperSemilattice u = compute_join_table(p);
  EXPECT_EQ(kind_of([&] { compute_implication_table(u); }), ErrorKind::NoLeastResidual);
}

TEST(BooleanReverse, TwoGenerators) {
  const ImplicativeUsl u = boolean_reverse_usl(2);
  EXPECT_EQ(u.size(), 4u);
  EXPECT_EQ(u.join(0b01, 0b10), 0u);
  EXPECT_EQ(u.arrow(0b01, 0b10), 0b10u);
  EXPECT_EQ(u.bottom(), 0b11u);
}

TEST(BooleanReverse, OneGeneratorIsAChain) {
  const ImplicativeUsl u = boolean_reverse_usl(1);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(u.bottom(), 1u);
  EXPECT_TRUE(u.leq(1, 0));
  EXPECT_EQ(u.poset().label(0), "{}");
}

TEST(BooleanReverse, CapRefusesLargeN) {
  EXPECT_EQ(kind_of([] { boolean_reverse_usl(7); }), ErrorKind::CapExceeded);
}

TEST(Canned, Trees) {
  const Poset t1 = canned::binary_tree(1);
  EXPECT_EQ(t1.size(), 3u);
  EXPECT_TRUE(t1.lt(0, 1));
  EXPECT_TRUE(t1.lt(0, 2));
  EXPECT_FALSE(t1.leq(1, 2));
  EXPECT_EQ(canned::binary_tree(2).size(), 7u);
  EXPECT_EQ(canned::chain(2).size(), 2u);
  EXPECT_TRUE(canned::chain(2).lt(0, 1));
}

TEST(Canned, ParseNames) {
  EXPECT_EQ(parse_canned_poset("chain(3)").size(), 3u);
  EXPECT_EQ(parse_canned_poset("fork").size(), 3u);
  EXPECT_EQ(parse_canned_poset("binary_tree(2)").size(), 7u);
  EXPECT_EQ(kind_of([] { parse_canned_poset("pentagon"); }), ErrorKind::UnknownName);
}

TEST(OrderProperties, RestrictKeepsInducedOrder) {
  for (const Poset& p : oracle::posets_up_to(4)) {
    for (Mask keep = 1; keep < (Mask{1} << p.size()); ++keep) {
      const Poset r = p.restrict(keep);
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (has(keep, i)) idx.push_back(i);
      ASSERT_EQ(r.size(), idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) EXPECT_EQ(r.leq(a, b), p.leq(idx[a], idx[b]));
    }
  }
}
