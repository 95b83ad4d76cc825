#include <gtest/gtest.h>

#include <fstream>

#include "brouwerlab/error.hpp"
#include "brouwerlab/freedist.hpp"
#include "brouwerlab/ipc.hpp"
#include "brouwerlab/kripke.hpp"
#include "brouwerlab/logic.hpp"
#include "oracles.hpp"

using namespace brouwerlab;

namespace {

Formula P(std::string_view s) { return parse_formula(s); }

const Formula p1 = Formula::atom(0), p2 = Formula::atom(1);

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(P("p1 -> p1"), Formula::imp(p1, p1));
  EXPECT_EQ(P("~p1 | ~~p1"), Formula::disj(Formula::neg(p1), Formula::neg(Formula::neg(p1))));
  EXPECT_EQ(P("p1 -> p2 -> p1"), Formula::imp(p1, Formula::imp(p2, p1)));
  EXPECT_EQ(P("p1 & p2 | p1"), Formula::disj(Formula::conj(p1, p2), p1));
  EXPECT_EQ(P("top -> bot"), Formula::imp(Formula::top(), Formula::bot()));
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "p0", "p1 ->", "(p1", "p1 p2", "q1", "p1 && p2"}) {
    try {
      parse_formula(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SyntaxError) << bad;
      ASSERT_EQ(e.witness().size(), 1u) << bad;
    }
  }
  try {
    parse_formula("p1 -> )");
  } catch (const Error& e) {
    EXPECT_EQ(e.witness()[0], 6);
  }
}

TEST(Parse, PrintRoundTrip) {
  for (std::size_t depth = 1; depth <= 5; ++depth)
    for (const Formula& f : random_formulas(depth, 100, depth, 3)) EXPECT_EQ(P(f.to_string()), f);
  for (const auto& e : default_corpus().entries()) EXPECT_EQ(P(e.formula.to_string()), e.formula);
}

TEST(Random, GoldenSeedZero) {
  std::ifstream in(std::string(BROUWERLAB_TEST_DATA) + "/random_seed0_depth3_atoms2.txt");
  ASSERT_TRUE(in);
  std::vector<std::string> golden;
  for (std::string line; std::getline(in, line);) golden.push_back(line);
  const auto fs = random_formulas(0, golden.size(), 3, 2);
  ASSERT_EQ(fs.size(), golden.size());
  for (std::size_t i = 0; i < fs.size(); ++i) EXPECT_EQ(fs[i].to_string(), golden[i]);
}

TEST(Random, Bounds) {
  EXPECT_TRUE(random_formulas(0, 0, 3, 2).empty());
  for (const Formula& f : random_formulas(5, 50, 1, 1)) {
    EXPECT_LE(f.atom_bound(), 1u);
    EXPECT_LE(f.size(), 3u);
  }
  EXPECT_EQ(random_formulas(9, 20, 3, 2), random_formulas(9, 20, 3, 2));
}

TEST(Eval, Examples) {
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  for (Elem a = 0; a < c3.size(); ++a) EXPECT_EQ(eval_algebra(c3, P("p1 -> p1"), {a}), c3.bottom());
  EXPECT_EQ(eval_algebra(c3, P("((p1->p2)->p1)->p1"), {1, c3.top()}), 1u);
  const UpsetAlgebra fork = build_upset_algebra(canned::fork());
  EXPECT_EQ(eval_algebra(fork.algebra, P("~p1"), {fork.index_of(0b010)}), fork.index_of(0b100));
  EXPECT_THROW(eval_algebra(c3, P("p1 -> p2"), {0}), Error);
}

TEST(Eval, CompiledMatchesTreeWalk) {
  const BrouwerAlgebra b = from_upsets(canned::diamond());
  for (const Formula& f : random_formulas(3, 200, 4, 2)) {
    const CompiledFormula cf(f);
    for (Elem x = 0; x < b.size(); ++x)
      for (Elem y = 0; y < b.size(); ++y) {
        const Valuation v{x, y};
        // compiled formulas read one value per distinct atom, in atom order
        Valuation packed;
        for (std::size_t a : f.atoms()) packed.push_back(v[a]);
        EXPECT_EQ(cf.eval(b, packed.data()), eval_algebra(b, f, v));
      }
  }
}

TEST(Identity, Examples) {
  const UpsetAlgebra fork = build_upset_algebra(canned::fork());
  EXPECT_TRUE(is_identity(fork.algebra, P("p1 -> p1")).identity);
  const IdentityResult r = is_identity(fork.algebra, P("~p1 | ~~p1"));
  EXPECT_FALSE(r.identity);
  EXPECT_EQ(r.witness, Valuation{fork.index_of(0b010)});
  EXPECT_EQ(r.value, fork.index_of(0b110));
  EXPECT_TRUE(is_identity(from_upsets(canned::chain(2)), P("~p1 | ~~p1")).identity);
}

TEST(Identity, Cap) {
  const BrouwerAlgebra b = medvedev_algebra(3).algebra;
  try {
    is_identity(b, P("p1 & p2 & p3 & p4 & p5 & p6 -> p1"), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Identity, ParallelWitnessIsLeast) {
  const BrouwerAlgebra b = medvedev_algebra(3).algebra;
  for (const char* s : {"p1 | ~p1", "~p1 | ~~p1", "(p1 -> p2) | (p2 -> p1)", "p1 | p2 | ~p3"}) {
    const IdentityResult a = is_identity(b, P(s), kDefaultValuationCap, Exec{1});
    const IdentityResult c = is_identity(b, P(s), kDefaultValuationCap, Exec{4});
    EXPECT_EQ(a.identity, c.identity);
    EXPECT_EQ(a.witness, c.witness);
  }
}

TEST(Classical, Examples) {
  EXPECT_TRUE(is_classical_tautology(P("p1 -> p1")));
  EXPECT_TRUE(is_classical_tautology(P("p1 | ~p1")));
  EXPECT_FALSE(is_classical_tautology(P("p1")));
  for (const Formula& f : random_formulas(11, 300, 4, 3)) EXPECT_EQ(is_classical_tautology(f), oracle::tautology(f));
}

TEST(Positive, Examples) {
  EXPECT_TRUE(classify_positive(P("p1 -> p2")));
  EXPECT_FALSE(classify_positive(P("~p1")));
  EXPECT_TRUE(classify_positive(P("(p1 | p2) -> p1 & p2")));
  EXPECT_FALSE(classify_positive(P("bot -> p1")));
}

TEST(Ipc, Examples) {
  EXPECT_TRUE(ipc_prove(P("p1 -> p1")));
  EXPECT_FALSE(ipc_prove(P("p1 | ~p1")));
  EXPECT_FALSE(ipc_prove(P("~p1 | ~~p1")));
  EXPECT_FALSE(ipc_prove(P("((p1->p2)->p1)->p1")));
  EXPECT_TRUE(ipc_prove(P("~~(p1 | ~p1)")));
  EXPECT_TRUE(ipc_prove(P("(p1 -> p2 -> p3) -> (p1 -> p2) -> p1 -> p3")));
}

TEST(Ipc, CorpusExpectations) {
  for (const auto& e : default_corpus().entries()) {
    EXPECT_EQ(ipc_prove(e.formula), e.expect == Expect::ipc) << e.name;
    EXPECT_EQ(is_classical_tautology(e.formula), e.expect != Expect::free) << e.name;
  }
}

TEST(Ipc, AgreesWithSmallKripkeFrames) {
  // Provable formulas hold on every frame. Unprovable random formulas of this
  // size all have a countermodel on at most four worlds.
  std::vector<Poset> frames;
  for (std::size_t n = 1; n <= 4; ++n)
    for (Poset& p : oracle::posets_up_to(n)) frames.push_back(std::move(p));
  for (const Formula& f : random_formulas(7, 150, 3, 2)) {
    bool valid_everywhere = true;
    for (const Poset& p : frames)
      if (!oracle::frame_valid(p, f)) {
        valid_everywhere = false;
        break;
      }
    EXPECT_EQ(ipc_prove(f), valid_everywhere) << f.to_string();
  }
}

TEST(Ipc, SoundOnTrees) {
  for (std::size_t k = 1; k <= 2; ++k) {
    const Poset t = canned::binary_tree(k);
    for (const auto& e : default_corpus().entries())
      if (ipc_prove(e.formula)) EXPECT_TRUE(frame_valid(t, e.formula).valid) << e.name;
  }
}

TEST(Ipc, Cap) {
  EXPECT_THROW(ipc_prove(P("((p1 -> p2) -> p3) -> ((p2 -> p1) -> p3) -> p3"), 3), Error);
}

TEST(Corpus, DuplicateNamesRejected) {
  EXPECT_THROW(Corpus({{"a", p1, Expect::free}, {"a", p2, Expect::free}}), Error);
  EXPECT_GE(default_corpus().size(), 20u);
}

TEST(TheoryCompare, Examples) {
  const BrouwerAlgebra c3 = from_upsets(canned::chain(2));
  const BrouwerAlgebra fork = from_upsets(canned::fork());
  const Corpus id({{"identity", P("p1 -> p1"), Expect::ipc}});
  EXPECT_TRUE(theory_compare(c3, fork, id, Inclusion::first_in_second).passed());
  const Corpus wlem({{"wlem", P("~p1 | ~~p1"), Expect::jan}});
  EXPECT_TRUE(theory_compare(fork, c3, wlem, Inclusion::first_in_second).passed());
  EXPECT_FALSE(theory_compare(c3, fork, wlem, Inclusion::first_in_second).passed());
}

TEST(TheoryCompare, IntervalHomomorphismTransfersIdentities) {
  const BrouwerAlgebra f = from_upsets(canned::fork());
  for (Elem x = 0; x < f.size(); ++x)
    for (Elem z = 0; z < f.size(); ++z) {
      const Elem y = f.join(z, x);
      if (!f.lt(x, y) || z == f.bottom()) continue;
      const Interval source = interval(f, z), target = sub_interval(f, x, y);
      ASSERT_TRUE(interval_homomorphism_check(f, x, y, z).passed());
      EXPECT_TRUE(theory_compare(source.algebra, target.algebra, default_corpus(), Inclusion::first_in_second)
                      .passed());
    }
}
