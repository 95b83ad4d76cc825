#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace brouwerlab {

enum class Op { atom, top, bot, neg, conj, disj, imp };

/// Immutable propositional formula. Atom k is written p<k+1>.
class Formula {
 public:
  struct Node {
    Op op;
    std::size_t atom = 0;
    std::shared_ptr<const Node> lhs, rhs;
  };

  static Formula atom(std::size_t index);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);

  Op op() const { return node_->op; }
  std::size_t atom_index() const { return node_->atom; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  /// Sorted distinct atom indices.
  std::vector<std::size_t> atoms() const;
  /// One more than the largest atom index, 0 without atoms.
  std::size_t atom_bound() const;
  std::size_t size() const;

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: ~ binds tightest, then &, then |, then -> (right associative);
/// & and | associate to the left. Atoms p1, p2, ...; constants top and bot.
/// Throws SyntaxError with the byte offset as witness.
Formula parse_formula(std::string_view text);

/// No negation and no bot. bot denotes the algebra's 1, which add_top moves.
bool classify_positive(const Formula& f);

/// Deterministic random formulas over p1..p<atoms> with nesting up to `depth`.
std::vector<Formula> random_formulas(std::uint64_t seed, std::size_t count, std::size_t depth, std::size_t atoms);

}  // namespace brouwerlab
