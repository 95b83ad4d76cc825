#include "brouwerlab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "brouwerlab/error.hpp"

namespace brouwerlab {

namespace {

std::shared_ptr<const Formula::Node> make(Op op, std::size_t atom, std::shared_ptr<const Formula::Node> l,
                                          std::shared_ptr<const Formula::Node> r) {
  return std::make_shared<const Formula::Node>(Formula::Node{op, atom, std::move(l), std::move(r)});
}

bool equal(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return true;
  if (!a || !b || a->op != b->op || a->atom != b->atom) return false;
  return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
}

int precedence(Op op) {
  switch (op) {
    case Op::imp: return 1;
    case Op::disj: return 2;
    case Op::conj: return 3;
    case Op::neg: return 4;
    default: return 5;
  }
}

void print(const Formula& f, std::string& out) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  const int p = precedence(f.op());
  switch (f.op()) {
    case Op::atom: out += "p" + std::to_string(f.atom_index() + 1); return;
    case Op::top: out += "top"; return;
    case Op::bot: out += "bot"; return;
    case Op::neg:
      out += '~';
      child(f.lhs(), precedence(f.lhs().op()) < p);
      return;
    case Op::conj:
    case Op::disj:
      child(f.lhs(), precedence(f.lhs().op()) < p);
      out += f.op() == Op::conj ? " & " : " | ";
      child(f.rhs(), precedence(f.rhs().op()) <= p);
      return;
    case Op::imp:
      child(f.lhs(), precedence(f.lhs().op()) <= p);
      out += " -> ";
      child(f.rhs(), precedence(f.rhs().op()) < p);
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = implication();
    skip();
    if (pos_ != text_.size()) fail("end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(ErrorKind::SyntaxError,
                "at offset " + std::to_string(pos_) + ": expected " + expected,
                {static_cast<std::int64_t>(pos_)});
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::imp(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conj(f, unary());
    return f;
  }

  bool keyword(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  Formula unary() {
    skip();
    if (accept("~")) return Formula::neg(unary());
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) fail("')'");
      return f;
    }
    if (keyword("top")) return Formula::top();
    if (keyword("bot")) return Formula::bot();
    if (pos_ < text_.size() && text_[pos_] == 'p') {
      const std::size_t start = pos_ + 1;
      std::size_t end = start;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == start || end - start > 9) {
        pos_ = start;
        fail("atom number");
      }
      const std::size_t k = std::stoul(std::string(text_.substr(start, end - start)));
      if (k == 0) {
        pos_ = start;
        fail("atom number >= 1");
      }
      pos_ = end;
      return Formula::atom(k - 1);
    }
    fail("formula");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Formula random_formula(std::mt19937_64& rng, std::size_t depth, std::size_t atoms) {
  auto pick_atom = [&] { return Formula::atom(rng() % atoms); };
  if (depth == 0) return pick_atom();
  switch (rng() % 6) {
    case 0: return pick_atom();
    case 1: return Formula::neg(random_formula(rng, depth - 1, atoms));
    case 2: {
      Formula a = random_formula(rng, depth - 1, atoms);
      return Formula::conj(a, random_formula(rng, depth - 1, atoms));
    }
    case 3: {
      Formula a = random_formula(rng, depth - 1, atoms);
      return Formula::disj(a, random_formula(rng, depth - 1, atoms));
    }
    default: {
      Formula a = random_formula(rng, depth - 1, atoms);
      return Formula::imp(a, random_formula(rng, depth - 1, atoms));
    }
  }
}

}  // namespace

Formula Formula::atom(std::size_t index) { return Formula(make(Op::atom, index, nullptr, nullptr)); }
Formula Formula::top() { return Formula(make(Op::top, 0, nullptr, nullptr)); }
Formula Formula::bot() { return Formula(make(Op::bot, 0, nullptr, nullptr)); }
Formula Formula::neg(Formula a) { return Formula(make(Op::neg, 0, a.node_, nullptr)); }
Formula Formula::conj(Formula a, Formula b) { return Formula(make(Op::conj, 0, a.node_, b.node_)); }
Formula Formula::disj(Formula a, Formula b) { return Formula(make(Op::disj, 0, a.node_, b.node_)); }
Formula Formula::imp(Formula a, Formula b) { return Formula(make(Op::imp, 0, a.node_, b.node_)); }

std::vector<std::size_t> Formula::atoms() const {
  std::vector<std::size_t> out;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->op == Op::atom) out.push_back(n->atom);
    if (n->lhs) stack.push_back(n->lhs.get());
    if (n->rhs) stack.push_back(n->rhs.get());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Formula::atom_bound() const {
  const auto a = atoms();
  return a.empty() ? 0 : a.back() + 1;
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  if (node_->lhs) n += lhs().size();
  if (node_->rhs) n += rhs().size();
  return n;
}

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) { return equal(a.node_.get(), b.node_.get()); }

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

bool classify_positive(const Formula& f) {
  switch (f.op()) {
    case Op::neg:
    case Op::bot: return false;
    case Op::atom:
    case Op::top: return true;
    case Op::conj:
    case Op::disj:
    case Op::imp: return classify_positive(f.lhs()) && classify_positive(f.rhs());
  }
  return false;
}

std::vector<Formula> random_formulas(std::uint64_t seed, std::size_t count, std::size_t depth, std::size_t atoms) {
  if (atoms == 0) throw Error(ErrorKind::PreconditionFailed, "need at least one atom");
  std::mt19937_64 rng(seed);
  std::vector<Formula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_formula(rng, depth, atoms));
  return out;
}

}  // namespace brouwerlab
