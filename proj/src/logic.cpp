#include "brouwerlab/logic.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "brouwerlab/error.hpp"

namespace brouwerlab {

namespace {

Elem eval_tree(const BrouwerAlgebra& b, const Formula& f, const Valuation& v) {
  switch (f.op()) {
    case Op::atom:
      if (f.atom_index() >= v.size())
        throw Error(ErrorKind::UnassignedAtom, "p" + std::to_string(f.atom_index() + 1) + " has no value",
                    {static_cast<std::int64_t>(f.atom_index())});
      if (v[f.atom_index()] >= b.size()) throw Error(ErrorKind::BadInput, "valuation leaves the algebra");
      return v[f.atom_index()];
    case Op::top: return b.bottom();
    case Op::bot: return b.top();
    case Op::neg: return b.neg(eval_tree(b, f.lhs(), v));
    case Op::conj: return b.join(eval_tree(b, f.lhs(), v), eval_tree(b, f.rhs(), v));
    case Op::disj: return b.meet(eval_tree(b, f.lhs(), v), eval_tree(b, f.rhs(), v));
    case Op::imp: return b.arrow(eval_tree(b, f.lhs(), v), eval_tree(b, f.rhs(), v));
  }
  return b.bottom();
}

}  // namespace

Elem eval_algebra(const BrouwerAlgebra& b, const Formula& f, const Valuation& v) { return eval_tree(b, f, v); }

CompiledFormula::CompiledFormula(const Formula& f) {
  const std::vector<std::size_t> atoms = f.atoms();
  std::size_t height = 0;
  auto emit = [&](auto& self, const Formula& g) -> void {
    switch (g.op()) {
      case Op::atom: {
        const auto pos = std::lower_bound(atoms.begin(), atoms.end(), g.atom_index()) - atoms.begin();
        steps_.push_back({Op::atom, static_cast<std::size_t>(pos)});
        depth_ = std::max(depth_, ++height);
        return;
      }
      case Op::top:
      case Op::bot:
        steps_.push_back({g.op(), 0});
        depth_ = std::max(depth_, ++height);
        return;
      case Op::neg:
        self(self, g.lhs());
        steps_.push_back({Op::neg, 0});
        return;
      default:
        self(self, g.lhs());
        self(self, g.rhs());
        steps_.push_back({g.op(), 0});
        --height;
        return;
    }
  };
  emit(emit, f);
}

Elem CompiledFormula::eval(const BrouwerAlgebra& b, const Elem* values) const {
  std::array<Elem, 64> small{};
  std::vector<Elem> large;
  Elem* stack = small.data();
  if (depth_ > small.size()) {
    large.resize(depth_);
    stack = large.data();
  }
  std::size_t sp = 0;
  for (const Step& s : steps_) {
    switch (s.op) {
      case Op::atom: stack[sp++] = values[s.atom]; break;
      case Op::top: stack[sp++] = b.bottom(); break;
      case Op::bot: stack[sp++] = b.top(); break;
      case Op::neg: stack[sp - 1] = b.neg(stack[sp - 1]); break;
      case Op::conj: --sp; stack[sp - 1] = b.join(stack[sp - 1], stack[sp]); break;
      case Op::disj: --sp; stack[sp - 1] = b.meet(stack[sp - 1], stack[sp]); break;
      case Op::imp: --sp; stack[sp - 1] = b.arrow(stack[sp - 1], stack[sp]); break;
    }
  }
  return stack[0];
}

IdentityResult is_identity(const BrouwerAlgebra& b, const Formula& f, std::uint64_t cap, const Exec& exec) {
  const std::vector<std::size_t> atoms = f.atoms();
  const std::uint64_t n = b.size();
  if (atoms.size() > 64) throw Error(ErrorKind::CapExceeded, "more than 64 distinct atoms");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (total > cap / n)
      throw Error(ErrorKind::CapExceeded,
                  std::to_string(n) + "^" + std::to_string(atoms.size()) + " valuations exceed the cap of " +
                      std::to_string(cap),
                  {static_cast<std::int64_t>(cap)});
    total *= n;
  }
  if (total > cap)
    throw Error(ErrorKind::CapExceeded, "valuations exceed the cap", {static_cast<std::int64_t>(cap)});
  const CompiledFormula program(f);
  const std::size_t k = atoms.size();
  auto decode = [&](std::uint64_t index, Elem* values) {
    for (std::size_t i = k; i-- > 0;) {
      values[i] = static_cast<Elem>(index % n);
      index /= n;
    }
  };
  auto hit = parallel_find_first(total, exec, [&](std::uint64_t index) {
    std::array<Elem, 64> values{};
    decode(index, values.data());
    return program.eval(b, values.data()) != b.bottom();
  });
  IdentityResult r;
  if (!hit) return r;
  std::array<Elem, 64> values{};
  decode(*hit, values.data());
  r.identity = false;
  r.witness.assign(f.atom_bound(), b.bottom());
  for (std::size_t i = 0; i < k; ++i) r.witness[atoms[i]] = values[i];
  r.value = program.eval(b, values.data());
  return r;
}

const BrouwerAlgebra& two_element_algebra() {
  static const BrouwerAlgebra b = from_upsets(canned::chain(1));
  return b;
}

bool is_classical_tautology(const Formula& f) {
  return is_identity(two_element_algebra(), f, std::uint64_t{1} << 62).identity;
}

std::string_view to_string(Expect e) {
  switch (e) {
    case Expect::ipc: return "ipc";
    case Expect::cpc: return "cpc";
    case Expect::jan: return "jan";
    case Expect::free: return "free";
  }
  return "free";
}

Expect expect_from_string(std::string_view s) {
  for (auto e : {Expect::ipc, Expect::cpc, Expect::jan, Expect::free})
    if (to_string(e) == s) return e;
  throw Error(ErrorKind::BadInput, "unknown expectation '" + std::string(s) + "'");
}

Corpus::Corpus(std::vector<CorpusEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const auto& e : entries_)
    if (!seen.insert(e.name).second) throw Error(ErrorKind::BadInput, "duplicate corpus name '" + e.name + "'");
}

void Corpus::append_random(const std::vector<Formula>& fs, const std::string& prefix) {
  std::set<std::string> seen;
  for (const auto& e : entries_) seen.insert(e.name);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::string name = prefix + std::to_string(i);
    if (!seen.insert(name).second) throw Error(ErrorKind::BadInput, "duplicate corpus name '" + name + "'");
    entries_.push_back({std::move(name), fs[i], Expect::free});
  }
}

const Corpus& default_corpus() {
  static const Corpus corpus = [] {
    const std::pair<const char*, const char*> ipc[] = {
        {"identity", "p1 -> p1"},
        {"k", "p1 -> p2 -> p1"},
        {"s", "(p1 -> p2 -> p3) -> (p1 -> p2) -> p1 -> p3"},
        {"dni", "p1 -> ~~p1"},
        {"tne", "~~~p1 -> ~p1"},
        {"contraposition", "(p1 -> p2) -> ~p2 -> ~p1"},
        {"de_morgan_or", "~(p1 | p2) -> ~p1 & ~p2"},
        {"de_morgan_and_weak", "~p1 | ~p2 -> ~(p1 & p2)"},
        {"ex_falso", "bot -> p1"},
        {"verum", "top"},
        {"and_elim", "p1 & p2 -> p1"},
        {"or_intro", "p1 -> p1 | p2"},
        {"distributivity", "p1 & (p2 | p3) -> p1 & p2 | p1 & p3"},
        {"curry", "(p1 & p2 -> p3) -> p1 -> p2 -> p3"},
        {"non_contradiction", "~(p1 & ~p1)"},
        {"not_not_lem", "~~(p1 | ~p1)"},
        {"or_elim", "(p1 -> p3) -> (p2 -> p3) -> p1 | p2 -> p3"},
    };
    const std::pair<const char*, const char*> cpc[] = {
        {"lem", "p1 | ~p1"},
        {"peirce", "((p1 -> p2) -> p1) -> p1"},
        {"dummett", "(p1 -> p2) | (p2 -> p1)"},
        {"kreisel_putnam", "(~p1 -> p2 | p3) -> (~p1 -> p2) | (~p1 -> p3)"},
        {"dne", "~~p1 -> p1"},
        {"material_implication", "(p1 -> p2) -> ~p1 | p2"},
        {"scott", "((~~p1 -> p1) -> p1 | ~p1) -> ~p1 | ~~p1"},
    };
    const std::pair<const char*, const char*> jan[] = {
        {"wlem", "~p1 | ~~p1"},
        {"de_morgan_and", "~(p1 & p2) -> ~p1 | ~p2"},
    };
    const std::pair<const char*, const char*> other[] = {
        {"atom", "p1"},
        {"contradiction", "p1 & ~p1"},
        {"converse_k", "(p1 -> p2) -> p1"},
    };
    std::vector<CorpusEntry> entries;
    for (auto [n, t] : ipc) entries.push_back({n, parse_formula(t), Expect::ipc});
    for (auto [n, t] : cpc) entries.push_back({n, parse_formula(t), Expect::cpc});
    for (auto [n, t] : jan) entries.push_back({n, parse_formula(t), Expect::jan});
    for (auto [n, t] : other) entries.push_back({n, parse_formula(t), Expect::free});
    return Corpus(std::move(entries));
  }();
  return corpus;
}

Report theory_compare(const BrouwerAlgebra& b1, const BrouwerAlgebra& b2, const Corpus& corpus, Inclusion expect,
                      std::uint64_t cap, const Exec& exec) {
  Report r("theory_compare");
  auto status = [](bool id) { return id ? "identity" : "refuted"; };
  for (const auto& e : corpus.entries()) {
    const bool in1 = is_identity(b1, e.formula, cap, exec).identity;
    const bool in2 = is_identity(b2, e.formula, cap, exec).identity;
    bool ok = true;
    if (expect == Inclusion::first_in_second) ok = !in1 || in2;
    if (expect == Inclusion::second_in_first) ok = !in2 || in1;
    r.add(e.name, ok, std::string("first ") + status(in1) + ", second " + status(in2));
  }
  return r;
}

}  // namespace brouwerlab
