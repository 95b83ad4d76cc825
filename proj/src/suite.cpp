#include "brouwerlab/suite.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "brouwerlab/embeddings.hpp"
#include "brouwerlab/error.hpp"
#include "brouwerlab/freedist.hpp"
#include "brouwerlab/ipc.hpp"
#include "brouwerlab/kripke.hpp"
#include "brouwerlab/splitting.hpp"
#include "brouwerlab/upsets.hpp"

namespace brouwerlab {

namespace {

Poset from_covers(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> covers,
                  std::vector<std::string> labels = {}) {
  // transitive closure of the cover pairs
  Relation r = Relation::from_pairs(n, covers);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (has(r.rows[i], k)) r.rows[i] |= r.rows[k];
  return Poset::validate(r, std::move(labels));
}

std::size_t subset_filter_count(std::size_t n) {
  const Poset cube = canned::boolean(n);
  const std::size_t size = cube.size();
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << size); ++s) {
    bool closed = true;
    for (std::size_t x = 0; x < size && closed; ++x)
      if (has(s, x))
        for (std::size_t y = 0; y < size && closed; ++y)
          if (cube.leq(x, y) && !has(s, y)) closed = false;
    count += closed;
  }
  return count;
}

Report free_sizes(const SuiteConfig& cfg) {
  Report r("free_sizes");
  const std::size_t expected[] = {3, 6, 20, 168};
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t size = medvedev_algebra(n, false, cfg.exec).algebra.size();
    const std::size_t oracle = subset_filter_count(n);
    r.add("B" + std::to_string(n), size == oracle && size == expected[n - 1],
          "size " + std::to_string(size) + ", subset filter " + std::to_string(oracle));
  }
  return r;
}

Report brouwer_laws(const SuiteConfig& cfg) {
  Report r("brouwer_laws");
  for (const auto& [name, b] : algebra_family(cfg.exec)) {
    const Report v = validate_brouwer(b, cfg.exec);
    const Check law = check_meet_arrow_law(b, cfg.exec);
    const Check below = check_arrow_below(b, cfg.exec);
    std::string detail = std::to_string(b.size()) + " elements";
    std::vector<std::int64_t> witness;
    for (const Check& c : v.checks())
      if (!c.passed) {
        detail += "; " + c.name + " " + c.detail;
        witness = c.witness;
      }
    if (!law.passed) detail += "; meet_arrow_law " + law.detail;
    if (!below.passed) detail += "; arrow_below " + below.detail;
    r.add(name, v.passed() && law.passed && below.passed, detail, witness);
  }
  return r;
}

Report free_generators(const SuiteConfig& cfg) {
  Report r("free_generators");
  for (std::size_t n = 1; n <= 4; ++n) {
    const FreeLattice f = medvedev_algebra(n, false, cfg.exec);
    std::vector<Elem> image = f.iota;
    std::sort(image.begin(), image.end());
    const std::vector<Elem> irr = meet_irreducibles(f.algebra);
    r.add("B" + std::to_string(n) + ".irreducibles", irr == image && irr.size() == (std::size_t{1} << n),
          std::to_string(irr.size()) + " meet-irreducibles");
    r.merge(iota_arrow_check(f), "B" + std::to_string(n) + ".");
  }
  return r;
}

Report dejongh(const SuiteConfig& cfg) {
  Report r("dejongh");
  const Corpus corpus = suite_corpus(cfg.seed, cfg.random_formulas);
  for (const auto& [name, p] : frame_catalog()) {
    const Report d = dejongh_agreement(p, corpus, cfg.cap_valuations, cfg.exec);
    std::size_t agree = 0;
    const Check* first_bad = nullptr;
    for (const Check& c : d.checks()) {
      agree += c.passed;
      if (!c.passed && !first_bad) first_bad = &c;
    }
    r.add(name, d.passed(),
          std::to_string(agree) + "/" + std::to_string(d.checks().size()) + " agree" +
              (first_bad ? "; first disagreement " + first_bad->name : ""));
  }
  return r;
}

Report ipc_sandwich(const SuiteConfig& cfg) {
  Report r("ipc_sandwich");
  const Corpus corpus = suite_corpus(cfg.seed, cfg.random_formulas);
  std::vector<bool> theorem, classical;
  for (const auto& e : corpus.entries()) {
    theorem.push_back(ipc_prove(e.formula));
    classical.push_back(is_classical_tautology(e.formula));
  }
  {
    std::string mismatch;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& e = corpus.entries()[i];
      if (e.expect == Expect::free) continue;
      const bool ok = e.expect == Expect::ipc ? theorem[i] && classical[i] : !theorem[i] && classical[i];
      if (!ok && mismatch.empty()) mismatch = e.name;
    }
    r.add("curated_expectations", mismatch.empty(), mismatch.empty() ? "" : "mismatch at " + mismatch);
  }
  for (const auto& [name, b] : algebra_family(cfg.exec)) {
    std::string lower, upper;
    std::size_t identities = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& e = corpus.entries()[i];
      const bool id = is_identity(b, e.formula, cfg.cap_valuations, cfg.exec).identity;
      identities += id;
      if (theorem[i] && !id && lower.empty()) lower = e.name;
      if (id && !classical[i] && upper.empty()) upper = e.name;
    }
    std::string detail = std::to_string(identities) + " identities";
    if (!lower.empty()) detail += "; theorem refuted: " + lower;
    if (!upper.empty()) detail += "; non-tautology identity: " + upper;
    r.add(name, lower.empty() && upper.empty(), detail);
  }
  return r;
}

Report jankov(const SuiteConfig& cfg) {
  Report r("jankov");
  const Formula wlem = parse_formula("~p1 | ~~p1");
  for (const auto& [name, b] : algebra_family(cfg.exec)) {
    if (is_join_reducible(b, b.top())) continue;
    const IdentityResult id = is_identity(b, wlem, cfg.cap_valuations, cfg.exec);
    r.add(name, id.identity, "top is join-irreducible");
  }
  const UpsetAlgebra fork = build_upset_algebra(canned::fork());
  const IdentityResult id = is_identity(fork.algebra, wlem, cfg.cap_valuations, cfg.exec);
  const bool pinned = !id.identity && id.witness.size() == 1 && fork.masks[id.witness[0]] == bit(1);
  r.add("fork_refutes", pinned,
        id.identity ? "identity" : "witness p1 -> " + fork.algebra.label(id.witness[0]),
        {id.identity ? -1 : static_cast<std::int64_t>(id.witness[0])});
  return r;
}

Report add_top_positive(const SuiteConfig& cfg) {
  Report r("add_top_positive");
  const Corpus corpus = suite_corpus(cfg.seed, cfg.random_formulas);
  std::vector<const CorpusEntry*> positive;
  for (const auto& e : corpus.entries())
    if (classify_positive(e.formula)) positive.push_back(&e);
  for (const auto& [name, b] : algebra_family(cfg.exec)) {
    if (b.size() > 20) continue;
    const BrouwerAlgebra big = add_top(b);
    std::string commute, transfer;
    for (const CorpusEntry* e : positive) {
      const std::vector<std::size_t> atoms = e->formula.atoms();
      const std::size_t bound = e->formula.atom_bound();
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < atoms.size(); ++i) total *= b.size();
      for (std::uint64_t index = 0; index < total && commute.empty(); ++index) {
        Valuation v(bound, b.bottom());
        std::uint64_t rest = index;
        for (std::size_t i = atoms.size(); i-- > 0;) {
          v[atoms[i]] = static_cast<Elem>(rest % b.size());
          rest /= b.size();
        }
        if (eval_algebra(big, e->formula, v) != eval_algebra(b, e->formula, v)) commute = e->name;
      }
      const bool in_big = is_identity(big, e->formula, cfg.cap_valuations, cfg.exec).identity;
      const bool in_small = is_identity(b, e->formula, cfg.cap_valuations, cfg.exec).identity;
      if (in_big && !in_small && transfer.empty()) transfer = e->name;
    }
    std::string detail = std::to_string(positive.size()) + " positive formulas";
    if (!commute.empty()) detail += "; evaluation differs on " + commute;
    if (!transfer.empty()) detail += "; identity does not transfer for " + transfer;
    r.add(name, commute.empty() && transfer.empty(), detail);
  }
  return r;
}

Report embedding_pipeline(const SuiteConfig& cfg) {
  Report r("embedding_pipeline");
  for (const std::string name : {"n1", "n2"}) {
    const EmbeddingInstance inst = canned_embedding_instance(name);
    const AlphaMap am(inst.usl, inst.down_set, inst.xs);
    const Report alpha = verify_alpha_embedding(am, cfg.exec);
    r.add(name + ".alpha", alpha.passed(), std::to_string(alpha.checks().size()) + " laws");
    const Corpus& corpus = default_corpus();
    const GammaResult g = gamma_embedding(inst.xs.size(), am, &corpus, cfg.cap_valuations, cfg.exec);
    std::string failed;
    for (const Check& c : g.report.checks())
      if (!c.passed && failed.empty()) failed = c.name;
    r.add(name + ".gamma", g.report.passed(),
          std::to_string(g.domain.algebra.size()) + " -> " + std::to_string(g.image_interval.algebra.size()) +
              (failed.empty() ? "" : "; fails " + failed));
  }
  const EmbeddingInstance broken = canned_embedding_instance("broken");
  const AlphaMap forced(broken.usl, broken.down_set, broken.xs, true);
  const Report alpha = verify_alpha_embedding(forced, cfg.exec);
  const Check* join = alpha.find("preserves_join");
  r.add("broken.join_fails", join && !join->passed, "negative control", join ? join->witness : std::vector<std::int64_t>{});
  return r;
}

Report pmorphisms(const SuiteConfig& cfg) {
  Report r("pmorphisms");
  const Poset fork = canned::fork();
  const Poset chain2 = canned::chain(2);
  r.add("fork_to_chain2", is_pmorphism(PMorphism{fork, chain2, {0, 1, 1}}).passed);
  {
    const Check c = is_pmorphism(PMorphism{chain2, fork, {0, 1}});
    r.add("chain2_to_fork_rejected", !c.passed, c.detail, c.witness);
  }
  r.add("chain2_onto_fork_none", !find_pmorphism(chain2, fork, true).has_value());
  const auto tree = find_pmorphism(canned::binary_tree(2), canned::binary_tree(1), true);
  r.add("tree2_onto_tree1", tree && is_pmorphism(*tree).passed && tree->onto());

  // Pullback lemma over the least onto p-morphism between catalogue frames.
  const Corpus corpus = suite_corpus(cfg.seed, cfg.random_formulas);
  std::size_t morphisms = 0;
  std::string failure;
  for (const auto& [sname, s] : frame_catalog())
    for (const auto& [tname, t] : frame_catalog()) {
      if (t.size() > s.size() || !failure.empty()) continue;
      const auto f = find_pmorphism(s, t, true);
      if (!f) continue;
      ++morphisms;
      const std::vector<Mask> upsets = enumerate_upset_masks(t);
      for (const auto& e : corpus.entries()) {
        const std::vector<std::size_t> atoms = e.formula.atoms();
        const std::size_t bound = e.formula.atom_bound();
        if (atoms.size() > 2) continue;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < atoms.size(); ++i) total *= upsets.size();
        for (std::uint64_t index = 0; index < total && failure.empty(); ++index) {
          KripkeModel target{t, std::vector<Mask>(bound, 0)};
          std::uint64_t rest = index;
          for (std::size_t i = atoms.size(); i-- > 0;) {
            target.valuation[atoms[i]] = upsets[rest % upsets.size()];
            rest /= upsets.size();
          }
          const KripkeModel source{s, pullback(*f, target.valuation)};
          const Mask there = truth_set(target, e.formula);
          const Mask here = truth_set(source, e.formula);
          for (std::size_t w = 0; w < s.size(); ++w)
            if (has(here, w) != has(there, f->map[w])) {
              failure = sname + "->" + tname + " " + e.name;
              break;
            }
        }
      }
    }
  r.add("pullback_lemma", failure.empty(),
        std::to_string(morphisms) + " onto p-morphisms" + (failure.empty() ? "" : "; fails " + failure));

  const Corpus& curated = default_corpus();
  r.merge(pmorphism_theory_transfer(PMorphism{fork, chain2, {0, 1, 1}}, curated, cfg.cap_valuations, cfg.exec),
          "fork_chain2.");
  if (tree) r.merge(pmorphism_theory_transfer(*tree, curated, cfg.cap_valuations, cfg.exec), "tree2_tree1.");
  return r;
}

Report splitting(const SuiteConfig& cfg) {
  Report r("splitting");
  const SplittingInstance atoms3 = canned_splitting_instance("atoms3");
  {
    const auto c = splitting_witness(atoms3, 0, bit(1));
    r.add("atoms3_witness", c && *c == 2, c ? "c = " + atoms3.usl.poset().label(*c) : "none");
  }
  for (const std::string& name : canned_splitting_names()) {
    const SplittingInstance inst = canned_splitting_instance(name);
    const Report s = is_splitting_class_finite(inst);
    const Check& head = s.checks().front();
    bool maximal = false;
    if (!head.passed && head.witness.size() == 1) {
      const auto a = static_cast<std::size_t>(head.witness[0]);
      maximal = (inst.usl.poset().up(a) & inst.a) == bit(a);
    }
    r.add(name + ".not_splitting", !head.passed && maximal, head.detail, head.witness);
    const Report iso = interval_isomorphism_check(inst, cfg.exec);
    r.add(name + ".interval_iso", iso.passed(), iso.checks().front().detail);
  }
  return r;
}

}  // namespace

const std::vector<Named<Poset>>& frame_catalog() {
  static const std::vector<Named<Poset>> frames = [] {
    std::vector<Named<Poset>> out;
    for (std::size_t k = 1; k <= 6; ++k) out.emplace_back("chain" + std::to_string(k), canned::chain(k));
    out.emplace_back("antichain2", canned::antichain(2));
    out.emplace_back("antichain3", canned::antichain(3));
    out.emplace_back("fork", canned::fork());
    out.emplace_back("vee", from_covers(3, {{0, 2}, {1, 2}}));
    out.emplace_back("diamond", canned::diamond());
    out.emplace_back("trident", from_covers(4, {{0, 1}, {0, 2}, {0, 3}}));
    out.emplace_back("n4", from_covers(4, {{0, 2}, {1, 2}, {1, 3}}));
    out.emplace_back("fork_stem", from_covers(4, {{0, 1}, {1, 2}, {1, 3}}));
    out.emplace_back("tree5", from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}));
    out.emplace_back("fan6", from_covers(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}));
    return out;
  }();
  return frames;
}

std::vector<Named<BrouwerAlgebra>> algebra_family(const Exec& exec) {
  std::vector<Named<BrouwerAlgebra>> out;
  for (const auto& [name, p] : frame_catalog()) out.emplace_back("up(" + name + ")", from_upsets(p, kDefaultUpsetCap, exec));
  for (std::size_t n = 1; n <= 4; ++n) {
    const FreeLattice f = medvedev_algebra(n, false, exec);
    out.emplace_back("B" + std::to_string(n), f.algebra);
    if (n <= 3) {
      std::size_t top_u = 0;
      for (std::size_t x = 0; x < f.base.size(); ++x)
        if (popcount(f.base.poset().down(x)) == static_cast<int>(f.base.size())) top_u = x;
      out.emplace_back("B" + std::to_string(n) + "[0,iota(1)]", interval(f.algebra, f.iota[top_u]).algebra);
    }
  }
  for (const char* name : {"chain2", "fork", "diamond", "antichain2", "trident"})
    for (const auto& [fname, p] : frame_catalog())
      if (fname == name) out.emplace_back("add_top(up(" + fname + "))", add_top(from_upsets(p)));
  return out;
}

Corpus suite_corpus(std::uint64_t seed, std::size_t count) {
  Corpus c = default_corpus();
  c.append_random(random_formulas(seed, count, 3, 2), "random");
  return c;
}

const std::vector<SuiteCriterion>& suite_criteria() {
  static const std::vector<SuiteCriterion> criteria = {
      {"1", "free lattice sizes match the subset-filter oracle", free_sizes},
      {"2", "Brouwer laws hold in every constructed algebra", brouwer_laws},
      {"3", "meet-irreducibles of B_n are the generators; iota keeps the arrow", free_generators},
      {"4", "Kripke frame validity agrees with up-set algebra identities", dejongh},
      {"5", "IPC theorems are identities and identities are tautologies", ipc_sandwich},
      {"6", "weak excluded middle under a join-irreducible top", jankov},
      {"7", "positive formulas commute with add_top", add_top_positive},
      {"8", "alpha and gamma embeddings", embedding_pipeline},
      {"9", "p-morphism checks, search and pullback", pmorphisms},
      {"10", "splitting witnesses and the interval isomorphism", splitting},
  };
  return criteria;
}

bool SuiteResult::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second.passed(); });
}

Json SuiteResult::to_json(bool timings) const {
  Json j;
  j["seed"] = seed;
  j["passed"] = passed();
  Json list = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [c, report] = results[i];
    Json e;
    e["id"] = c.id;
    e["title"] = c.title;
    Json body = report.to_json();
    e["passed"] = body["passed"];
    e["checks"] = body["checks"];
    if (timings && i < seconds.size()) e["seconds"] = seconds[i];
    list.push_back(std::move(e));
  }
  j["criteria"] = std::move(list);
  return j;
}

std::string SuiteResult::to_text(bool timings) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [c, report] = results[i];
    out << (report.passed() ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title;
    if (timings && i < seconds.size()) out << " (" << seconds[i] << "s)";
    out << '\n';
    for (const Check& k : report.checks())
      if (!k.passed) {
        out << "      " << k.name;
        if (!k.detail.empty()) out << ": " << k.detail;
        out << '\n';
      }
  }
  out << (passed() ? "suite passed" : "suite FAILED") << '\n';
  return out.str();
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  SuiteResult out;
  out.seed = cfg.seed;
  for (const SuiteCriterion& c : suite_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Report r = c.run(cfg);
    out.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    out.results.emplace_back(c, std::move(r));
  }
  return out;
}

}  // namespace brouwerlab
