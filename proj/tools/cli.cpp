#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/dot.hpp"
#include "brouwerlab/embeddings.hpp"
#include "brouwerlab/error.hpp"
#include "brouwerlab/freedist.hpp"
#include "brouwerlab/ipc.hpp"
#include "brouwerlab/json_io.hpp"
#include "brouwerlab/kripke.hpp"
#include "brouwerlab/logic.hpp"
#include "brouwerlab/splitting.hpp"
#include "brouwerlab/suite.hpp"

namespace brouwerlab {

namespace {

struct Options {
  std::size_t cap_upsets = kDefaultUpsetCap;
  std::uint64_t cap_valuations = kDefaultValuationCap;
  std::size_t cap_family = kDefaultFamilyCap;
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string corpus;
  bool allow_large = false;
  bool timings = false;
  bool heyting = false;

  std::string poset, algebra, usl, downset, instance, formula, valuation, map, from, to, antichain, dump;
  std::size_t n = 0, depth = 1;
  std::optional<std::size_t> upper, lower, hom_z, a_elem;
  std::string b_set;
  bool onto = false, force = false, depth_given = false;
};

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadInput, "expected a comma-separated index list, got '" + text + "'");
    }
  }
  return out;
}

Mask list_mask(const std::vector<std::size_t>& xs) {
  Mask m = 0;
  for (auto x : xs) {
    if (x >= kMaxCarrier) throw Error(ErrorKind::BadInput, "index out of range", {static_cast<std::int64_t>(x)});
    m |= bit(x);
  }
  return m;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  Exec exec() const { return Exec{o_.jobs}; }

  Corpus corpus() const { return o_.corpus.empty() ? default_corpus() : load_corpus(o_.corpus); }

  void print_json(const Json& j) const { out_ << j.dump(2) << '\n'; }

  int emit(const Report& r) const {
    if (o_.format == "json")
      print_json(r.to_json());
    else
      out_ << r.to_text();
    return r.passed() ? 0 : 1;
  }

  // poset

  int poset_validate() const {
    Report r("poset validate");
    try {
      const Poset p = load_poset(o_.poset);
      r.add("poset", true, std::to_string(p.size()) + " elements");
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BadInput || e.kind() == ErrorKind::UnknownName) throw;
      r.add("poset", false, e.what(), e.witness());
    }
    return emit(r);
  }

  int poset_show() const {
    const Poset p = load_poset(o_.poset);
    if (!o_.dump.empty()) write_text_file(o_.dump, poset_to_json(p).dump(2) + "\n");
    if (o_.format == "dot") {
      out_ << poset_dot(p);
    } else if (o_.format == "json") {
      print_json(poset_to_json(p));
    } else {
      out_ << p.size() << " elements\n";
      for (auto [i, j] : p.hasse_edges()) out_ << "  " << p.label(i) << " < " << p.label(j) << '\n';
    }
    return 0;
  }

  // algebra

  void maybe_dump(const BrouwerAlgebra& b) const {
    if (!o_.dump.empty()) write_text_file(o_.dump, algebra_to_json(b).dump(2) + "\n");
  }

  void show_algebra(const BrouwerAlgebra& b, const std::vector<Elem>& highlight = {}) const {
    if (o_.format == "dot") {
      out_ << algebra_dot(b, highlight);
    } else if (o_.format == "json") {
      print_json(algebra_to_json(b));
    } else {
      out_ << "size " << b.size() << ", bottom " << b.label(b.bottom()) << ", top " << b.label(b.top())
           << ", provenance " << to_string(b.provenance()) << '\n';
    }
  }

  int algebra_build() const {
    const BrouwerAlgebra b = from_upsets(load_poset(o_.poset), o_.cap_upsets, exec());
    maybe_dump(b);
    show_algebra(b);
    return 0;
  }

  int algebra_validate() const {
    const BrouwerAlgebra b = load_algebra(o_.algebra, o_.allow_large);
    Report r = validate_brouwer(b, exec());
    r.add(check_arrow_below(b, exec()).name, check_arrow_below(b, exec()).passed);
    const Check law = check_meet_arrow_law(b, exec());
    r.add(law.name, law.passed, law.detail, law.witness);
    return emit(r);
  }

  int algebra_irreducibles() const {
    const BrouwerAlgebra b = load_algebra(o_.algebra, o_.allow_large);
    const auto meet = meet_irreducibles(b);
    const auto join = join_irreducibles(b);
    if (o_.format == "json") {
      Json j;
      j["meet_irreducible"] = meet;
      j["join_irreducible"] = join;
      j["embeddable_shape"] = embeddable_shape(b);
      print_json(j);
      return 0;
    }
    auto list = [&](const std::vector<Elem>& xs) {
      std::string s;
      for (Elem x : xs) s += (s.empty() ? "" : " ") + b.label(x);
      return s;
    };
    out_ << "meet-irreducible (" << meet.size() << "): " << list(meet) << '\n';
    out_ << "join-irreducible (" << join.size() << "): " << list(join) << '\n';
    out_ << "0 meet-irreducible and 1 join-irreducible: " << (embeddable_shape(b) ? "yes" : "no") << '\n';
    return 0;
  }

  int algebra_interval() const {
    const BrouwerAlgebra b = load_algebra(o_.algebra, o_.allow_large);
    if (!o_.upper) throw Error(ErrorKind::BadInput, "--upper is required");
    if (o_.hom_z) {
      if (!o_.lower) throw Error(ErrorKind::BadInput, "--hom-z needs --lower");
      return emit(interval_homomorphism_check(b, static_cast<Elem>(*o_.lower), static_cast<Elem>(*o_.upper),
                                              static_cast<Elem>(*o_.hom_z)));
    }
    const Interval iv = o_.lower ? sub_interval(b, static_cast<Elem>(*o_.lower), static_cast<Elem>(*o_.upper))
                                 : interval(b, static_cast<Elem>(*o_.upper));
    maybe_dump(iv.algebra);
    show_algebra(iv.algebra);
    return 0;
  }

  int free_lattice() const {
    const FreeLattice f = medvedev_algebra(o_.n, o_.allow_large, exec());
    if (!o_.dump.empty()) write_text_file(o_.dump, algebra_to_json(f.algebra).dump(2) + "\n");
    if (o_.format == "json") {
      Json j;
      j["n"] = o_.n;
      j["size"] = f.algebra.size();
      j["generators"] = f.iota.size();
      j["iota"] = f.iota;
      print_json(j);
    } else if (o_.format == "dot") {
      out_ << algebra_dot(f.algebra, f.iota, "B" + std::to_string(o_.n));
    } else {
      out_ << "B" << o_.n << ": size " << f.algebra.size() << ", generators " << f.iota.size() << '\n';
    }
    return 0;
  }

  // formulas

  std::string heyting_note(const BrouwerAlgebra& b, Elem v) const {
    if (!o_.heyting) return {};
    if (v == b.bottom()) return " [Heyting view: top, designated]";
    if (v == b.top()) return " [Heyting view: bottom]";
    return " [Heyting view: intermediate, not designated]";
  }

  int formula_eval() const {
    const BrouwerAlgebra b = load_algebra(o_.algebra, o_.allow_large);
    const Formula f = parse_formula(o_.formula);
    const auto xs = parse_list(o_.valuation);
    const Valuation v(xs.begin(), xs.end());
    const Elem value = eval_algebra(b, f, v);
    if (o_.format == "json") {
      Json j;
      j["formula"] = f.to_string();
      j["value"] = value;
      j["label"] = b.label(value);
      j["is_zero"] = value == b.bottom();
      print_json(j);
    } else {
      out_ << f.to_string() << " = " << b.label(value) << heyting_note(b, value) << '\n';
    }
    return 0;
  }

  int formula_valid() const {
    const BrouwerAlgebra b = load_algebra(o_.algebra, o_.allow_large);
    const Formula f = parse_formula(o_.formula);
    const IdentityResult id = is_identity(b, f, o_.cap_valuations, exec());
    Report r("formula valid");
    if (id.identity) {
      r.add("identity", true, f.to_string() + " evaluates to 0 everywhere" + heyting_note(b, b.bottom()));
    } else {
      std::string shown;
      std::vector<std::int64_t> w;
      for (std::size_t a : f.atoms()) {
        shown += (shown.empty() ? "" : ", ") + ("p" + std::to_string(a + 1)) + " -> " + b.label(id.witness[a]);
        w.push_back(id.witness[a]);
      }
      r.add("identity", false, shown + " gives " + b.label(id.value) + heyting_note(b, id.value), w);
    }
    return emit(r);
  }

  int formula_classify() const {
    const Formula f = parse_formula(o_.formula);
    const bool positive = classify_positive(f);
    const bool theorem = ipc_prove(f);
    const bool tautology = is_classical_tautology(f);
    if (o_.format == "json") {
      Json j;
      j["formula"] = f.to_string();
      j["positive"] = positive;
      j["ipc"] = theorem;
      j["classical"] = tautology;
      print_json(j);
    } else {
      out_ << f.to_string() << "\n  positive: " << (positive ? "yes" : "no") << "\n  IPC theorem: "
           << (theorem ? "yes" : "no") << "\n  classical tautology: " << (tautology ? "yes" : "no") << '\n';
    }
    return 0;
  }

  // kripke

  int kripke_valid() const {
    const Poset p = load_poset(o_.poset);
    const Formula f = parse_formula(o_.formula);
    const FrameResult res = frame_valid(p, f, o_.cap_valuations, exec());
    Report r("kripke valid");
    if (res.valid) {
      r.add("frame_valid", true);
    } else {
      std::string shown;
      std::vector<std::int64_t> w{static_cast<std::int64_t>(res.world)};
      for (std::size_t a : f.atoms()) {
        shown += ", p" + std::to_string(a + 1) + " true at " + p.mask_label(res.valuation[a]);
        w.push_back(static_cast<std::int64_t>(res.valuation[a]));
      }
      r.add("frame_valid", false, "fails at " + p.label(res.world) + shown, w);
    }
    return emit(r);
  }

  int kripke_agree() const {
    return emit(dejongh_agreement(load_poset(o_.poset), corpus(), o_.cap_valuations, exec()));
  }

  int pmorphism_check() const {
    PMorphism f{load_poset(o_.from), load_poset(o_.to), parse_list(o_.map)};
    Report r("pmorphism check");
    const Check c = is_pmorphism(f);
    r.add(c.name, c.passed, c.detail, c.witness);
    if (c.passed && o_.onto) r.add("onto", f.onto());
    return emit(r);
  }

  int pmorphism_find() const {
    const Poset p1 = load_poset(o_.from), p2 = load_poset(o_.to);
    const auto f = find_pmorphism(p1, p2, o_.onto);
    Report r("pmorphism find");
    if (!f) {
      r.add("found", false, "no p-morphism");
    } else {
      std::string shown;
      std::vector<std::int64_t> w;
      for (std::size_t x = 0; x < f->map.size(); ++x) {
        shown += (x ? ", " : "") + p1.label(x) + " -> " + p2.label(f->map[x]);
        w.push_back(static_cast<std::int64_t>(f->map[x]));
      }
      r.add("found", true, shown, w);
    }
    return emit(r);
  }

  // embeddings and splitting

  Mask load_downset(const Poset& host) const {
    if (o_.downset.empty()) throw Error(ErrorKind::BadInput, "--downset is required");
    if (o_.downset.find_first_not_of("0123456789,") == std::string::npos) {
      const Mask m = list_mask(parse_list(o_.downset));
      DownSet(host, m);
      return m;
    }
    return downset_from_json(load_json_file(o_.downset), host);
  }

  EmbeddingInstance embedding_instance() const {
    if (!o_.instance.empty()) return canned_embedding_instance(o_.instance);
    if (o_.usl.empty()) throw Error(ErrorKind::BadInput, "--usl or --instance is required");
    const UpperSemilattice u = load_usl(o_.usl);
    const Mask a = load_downset(u.poset());
    return EmbeddingInstance{"custom", compute_implication_table(u), a, parse_list(o_.antichain)};
  }

  int embedding_verify() const {
    const EmbeddingInstance inst = embedding_instance();
    Report r("embedding verify");
    if (!o_.force) {
      const Report pre = check_strong_u_antichain(inst.usl, inst.down_set, inst.xs);
      if (!pre.passed()) {
        r.merge(pre, "antichain.");
        return emit(r);
      }
    }
    const AlphaMap am(inst.usl, inst.down_set, inst.xs, o_.force);
    r.merge(verify_alpha_embedding(am, exec()), "alpha.");
    if (!r.passed()) return emit(r);
    const std::size_t n = o_.n ? o_.n : inst.xs.size();
    if (n > kMaxMedvedev) {
      r.add("gamma", false, "gamma needs n <= " + std::to_string(kMaxMedvedev));
      return emit(r);
    }
    const Corpus c = corpus();
    const GammaResult g = gamma_embedding(n, am, &c, o_.cap_valuations, exec());
    if (o_.format == "dot") {
      out_ << algebra_dot(g.target.algebra, g.map, "gamma");
      return g.report.passed() ? 0 : 1;
    }
    r = g.report;
    return emit(r);
  }

  SplittingInstance splitting_instance() const {
    if (!o_.instance.empty()) return canned_splitting_instance(o_.instance);
    if (o_.usl.empty()) throw Error(ErrorKind::BadInput, "--usl or --instance is required");
    UpperSemilattice u = load_usl(o_.usl);
    const Mask a = load_downset(u.poset());
    return SplittingInstance{"custom", std::move(u), a};
  }

  int splitting_witness_cmd() const {
    const SplittingInstance inst = splitting_instance();
    if (!o_.a_elem) throw Error(ErrorKind::BadInput, "--a is required");
    const Mask b = list_mask(parse_list(o_.b_set));
    const auto c = splitting_witness(inst, *o_.a_elem, b);
    const Poset& p = inst.usl.poset();
    Report r("splitting witness");
    if (c)
      r.add("witness", true, "c = " + p.label(*c), {static_cast<std::int64_t>(*c)});
    else
      r.add("witness", false, "no c > " + p.label(*o_.a_elem) + " in A escapes for B = " + p.mask_label(b));
    return emit(r);
  }

  int splitting_check() const {
    const SplittingInstance inst = splitting_instance();
    Report r = o_.depth_given ? splitting_upto_depth(inst, o_.depth) : is_splitting_class_finite(inst);
    return emit(r);
  }

  int splitting_pipeline() const {
    return emit(tree_pipeline(splitting_instance(), o_.depth, corpus(), o_.cap_valuations, exec()));
  }

  int corpus_run() const {
    const BrouwerAlgebra b = load_algebra(o_.algebra, o_.allow_large);
    Report r("corpus run");
    const Corpus c = corpus();
    for (const auto& e : c.entries()) {
      const bool id = is_identity(b, e.formula, o_.cap_valuations, exec()).identity;
      const bool theorem = ipc_prove(e.formula);
      const bool tautology = is_classical_tautology(e.formula);
      r.add(e.name, (!theorem || id) && (!id || tautology),
            std::string(id ? "identity" : "refuted") + ", IPC " + (theorem ? "yes" : "no") + ", CPC " +
                (tautology ? "yes" : "no"));
    }
    return emit(r);
  }

  int suite() const {
    SuiteConfig cfg;
    cfg.seed = o_.seed;
    cfg.exec = exec();
    cfg.cap_valuations = o_.cap_valuations;
    cfg.timings = o_.timings;
    const SuiteResult res = run_suite(cfg);
    if (o_.format == "json")
      print_json(res.to_json(o_.timings));
    else
      out_ << res.to_text(o_.timings);
    return res.passed() ? 0 : 1;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite Brouwer algebras, intermediate logics and Kripke frames"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cap-upsets", o.cap_upsets, "Maximum number of up-sets to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--cap-valuations", o.cap_valuations, "Maximum number of valuations per check")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-family", o.cap_family, "Maximum family size in canonical-set checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "Worker threads (default: BROUWERLAB_JOBS or 1)");
  app.add_option("--seed", o.seed, "Seed for random formulas");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--corpus", o.corpus, "Corpus JSON file (default: built-in corpus)");
  app.add_flag("--allow-large", o.allow_large, "Allow B_5");
  app.add_flag("--timings", o.timings, "Include timings in suite reports");
  app.add_flag("--heyting", o.heyting, "Also describe values in the dual (Heyting) order");

  std::function<int(Runner&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (Runner::*fn)() const) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = [fn](Runner& r) { return (r.*fn)(); }; });
    return sub;
  };

  CLI::App* poset = app.add_subcommand("poset", "Poset files and canned posets")->require_subcommand(1);
  leaf(poset, "validate", "Check the order axioms", &Runner::poset_validate)
      ->add_option("--poset", o.poset, "canned:<name> or JSON file")->required();
  {
    CLI::App* s = leaf(poset, "show", "Print the Hasse diagram", &Runner::poset_show);
    s->add_option("--poset", o.poset, "canned:<name> or JSON file")->required();
    s->add_option("--dump", o.dump, "Write the poset as JSON");
  }

  CLI::App* algebra = app.add_subcommand("algebra", "Brouwer algebras")->require_subcommand(1);
  {
    CLI::App* s = leaf(algebra, "build", "Build up(P)", &Runner::algebra_build);
    s->add_option("--poset", o.poset, "canned:<name> or JSON file")->required();
    s->add_option("--dump", o.dump, "Write the algebra as JSON");
    leaf(algebra, "validate", "Check the Brouwer laws", &Runner::algebra_validate)
        ->add_option("--algebra", o.algebra, "canned:B<n>, canned:up:<poset> or JSON file")->required();
    leaf(algebra, "irreducibles", "List meet- and join-irreducibles", &Runner::algebra_irreducibles)
        ->add_option("--algebra", o.algebra, "Algebra source")->required();
    s = leaf(algebra, "interval", "Interval sub-algebra", &Runner::algebra_interval);
    s->add_option("--algebra", o.algebra, "Algebra source")->required();
    s->add_option("--upper", o.upper, "Upper end of the interval");
    s->add_option("--lower", o.lower, "Lower end (default 0)");
    s->add_option("--hom-z", o.hom_z, "Check u -> lower v u from [0,z] onto [lower,upper]");
    s->add_option("--dump", o.dump, "Write the interval algebra as JSON");
  }

  {
    CLI::App* s = leaf(&app, "free-lattice", "The algebra B_n", &Runner::free_lattice);
    s->add_option("--n", o.n, "Number of generators of the Boolean base")->required();
    s->add_option("--dump", o.dump, "Write the algebra as JSON");
  }

  CLI::App* formula = app.add_subcommand("formula", "Formulas in algebras")->require_subcommand(1);
  {
    CLI::App* s = leaf(formula, "eval", "Evaluate under a valuation", &Runner::formula_eval);
    s->add_option("--algebra", o.algebra, "Algebra source")->required();
    s->add_option("--formula", o.formula, "Formula text")->required();
    s->add_option("--valuation", o.valuation, "Element index per atom, comma separated")->required();
    s = leaf(formula, "valid", "Is the formula an identity", &Runner::formula_valid);
    s->add_option("--algebra", o.algebra, "Algebra source")->required();
    s->add_option("--formula", o.formula, "Formula text")->required();
    leaf(formula, "classify", "Positive, IPC, classical", &Runner::formula_classify)
        ->add_option("--formula", o.formula, "Formula text")->required();
  }

  CLI::App* kripke = app.add_subcommand("kripke", "Kripke frames")->require_subcommand(1);
  {
    CLI::App* s = leaf(kripke, "valid", "Frame validity", &Runner::kripke_valid);
    s->add_option("--frame", o.poset, "Frame source")->required();
    s->add_option("--formula", o.formula, "Formula text")->required();
    leaf(kripke, "agree", "Frame validity against up-set identities", &Runner::kripke_agree)
        ->add_option("--frame", o.poset, "Frame source")->required();
  }

  CLI::App* pm = app.add_subcommand("pmorphism", "p-morphisms")->require_subcommand(1);
  {
    CLI::App* s = leaf(pm, "check", "Check a map", &Runner::pmorphism_check);
    s->add_option("--from", o.from, "Source frame")->required();
    s->add_option("--to", o.to, "Target frame")->required();
    s->add_option("--map", o.map, "Image of each source world, comma separated")->required();
    s->add_flag("--onto", o.onto, "Also require surjectivity");
    s = leaf(pm, "find", "Search for the least p-morphism", &Runner::pmorphism_find);
    s->add_option("--from", o.from, "Source frame")->required();
    s->add_option("--to", o.to, "Target frame")->required();
    s->add_flag("--onto", o.onto, "Only onto maps");
  }

  CLI::App* emb = app.add_subcommand("embedding", "alpha and gamma embeddings")->require_subcommand(1);
  {
    CLI::App* s = leaf(emb, "verify", "Verify alpha and gamma", &Runner::embedding_verify);
    s->add_option("--usl", o.usl, "Semilattice source");
    s->add_option("--downset", o.downset, "Down-set JSON file or index list");
    s->add_option("--antichain", o.antichain, "Antichain indices, comma separated");
    s->add_option("--instance", o.instance, "Canned instance: n1, n2, broken");
    s->add_option("--n", o.n, "Size of the index set");
    s->add_flag("--force", o.force, "Skip the antichain precondition");
  }

  CLI::App* sp = app.add_subcommand("splitting", "Splitting classes")->require_subcommand(1);
  {
    auto common = [&](CLI::App* s) {
      s->add_option("--usl", o.usl, "Semilattice source");
      s->add_option("--downset", o.downset, "Down-set JSON file or index list");
      s->add_option("--instance", o.instance, "Canned instance: atoms3, fork2, chain3, grid3x4");
    };
    CLI::App* s = leaf(sp, "witness", "Least witness c", &Runner::splitting_witness_cmd);
    common(s);
    s->add_option("--a", o.a_elem, "Element a of A")->required();
    s->add_option("--b", o.b_set, "Elements of B, comma separated");
    s = leaf(sp, "check", "The full definition, or a truncation with --depth", &Runner::splitting_check);
    common(s);
    s->add_option("--depth", o.depth, "Only elements of height below this")
        ->each([&](const std::string&) { o.depth_given = true; });
    s = leaf(sp, "pipeline", "p-morphism to the binary tree and the interval isomorphism",
             &Runner::splitting_pipeline);
    common(s);
    s->add_option("--depth", o.depth, "Depth of the binary tree");
  }

  CLI::App* corpus = app.add_subcommand("corpus", "Corpus runs")->require_subcommand(1);
  leaf(corpus, "run", "Identity status of every corpus formula", &Runner::corpus_run)
      ->add_option("--algebra", o.algebra, "Algebra source")
      ->required();

  leaf(&app, "suite", "Run the acceptance battery", &Runner::suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (o.jobs == 0) {
    o.jobs = 1;
    if (const char* env = std::getenv("BROUWERLAB_JOBS")) {
      try {
        o.jobs = static_cast<unsigned>(std::max(1ul, std::stoul(env)));
      } catch (const std::exception&) {
        err << "error: BROUWERLAB_JOBS must be a positive integer\n";
        return 2;
      }
    }
  }
  if (!action) {
    err << app.help();
    return 2;
  }
  Runner runner(o, out);
  try {
    return action(runner);
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (!e.witness().empty()) {
      err << " (witness";
      for (auto w : e.witness()) err << ' ' << w;
      err << ')';
    }
    err << '\n';
    return 2;
  }
}

}  // namespace brouwerlab
