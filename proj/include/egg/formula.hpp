#ifndef EGG_FORMULA_HPP
#define EGG_FORMULA_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace egg {

/// Propositional goal formulas over a declared atom set.
///
/// Concrete syntax, precedence low to high:
///   implication   a -> b        (right associative)
///   disjunction   a | b
///   conjunction   a & b
///   negation      ~a
///   atoms         [a-zA-Z_][a-zA-Z0-9_]*, constants `true` / `false`,
///   parentheses.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies };

  Formula() : kind_(Kind::False) {}

  static Formula constant(bool value);
  static Formula atom(std::string name, int index);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Kind kind() const { return kind_; }
  int atom_index() const { return atom_; }
  const std::string& atom_name() const { return name_; }
  const Formula& child(int i) const { return children_[i]; }
  int child_count() const { return static_cast<int>(children_.size()); }

  /// Fully parenthesized rendering; parse(to_string()) reproduces the tree.
  std::string to_string() const;

 private:
  Kind kind_;
  int atom_ = -1;
  std::string name_;
  std::vector<Formula> children_;
};

struct FormulaError : std::runtime_error {
  FormulaError(std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
        offset(offset) {}
  std::size_t offset;
};

/// Parses `text` against the declared atom list. Throws FormulaError with the
/// byte offset of the problem; undeclared atoms are reported by name.
Formula parse_formula(std::string_view text, std::span<const std::string> atoms);

/// Truth-functional evaluation; `valuation` is indexed by atom index and must
/// cover every atom occurring in the formula.
bool eval(const Formula& f, const std::vector<bool>& valuation);

}  // namespace egg

#endif
