#include "egg/formula.hpp"

#include <cctype>
#include <utility>

namespace egg {

Formula Formula::constant(bool value) {
  Formula f;
  f.kind_ = value ? Kind::True : Kind::False;
  return f;
}

Formula Formula::atom(std::string name, int index) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.name_ = std::move(name);
  f.atom_ = index;
  return f;
}

Formula Formula::negation(Formula child) {
  Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(child));
  return f;
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::And;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::Or;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::Implies;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

std::string Formula::to_string() const {
  switch (kind_) {
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Atom:
      return name_;
    case Kind::Not:
      return "(~" + children_[0].to_string() + ")";
    case Kind::And:
      return "(" + children_[0].to_string() + " & " + children_[1].to_string() + ")";
    case Kind::Or:
      return "(" + children_[0].to_string() + " | " + children_[1].to_string() + ")";
    case Kind::Implies:
      return "(" + children_[0].to_string() + " -> " + children_[1].to_string() + ")";
  }
  return "false";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> atoms)
      : text_(text), atoms_(atoms) {}

  Formula run() {
    skip_space();
    if (pos_ >= text_.size()) throw FormulaError(pos_, "empty formula");
    Formula f = parse_implies();
    skip_space();
    if (pos_ < text_.size())
      throw FormulaError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  Formula parse_implies() {
    Formula lhs = parse_or();
    skip_space();
    if (match("->")) return Formula::implication(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        f = Formula::disjunction(std::move(f), parse_and());
      } else {
        return f;
      }
    }
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        f = Formula::conjunction(std::move(f), parse_unary());
      } else {
        return f;
      }
    }
  }

  Formula parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) throw FormulaError(pos_, "formula ends unexpectedly");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = parse_implies();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw FormulaError(pos_, "missing ')'");
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "true") return Formula::constant(true);
      if (name == "false") return Formula::constant(false);
      for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == name) return Formula::atom(name, static_cast<int>(i));
      throw FormulaError(start, "undeclared atom '" + name + "'");
    }
    throw FormulaError(pos_, std::string("unexpected '") + c + "'");
  }

  bool match(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::span<const std::string> atoms_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, std::span<const std::string> atoms) {
  return Parser(text, atoms).run();
}

bool eval(const Formula& f, const std::vector<bool>& valuation) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      if (f.atom_index() < 0 || f.atom_index() >= static_cast<int>(valuation.size()))
        throw std::invalid_argument("eval: no assignment for atom '" + f.atom_name() + "'");
      return valuation[f.atom_index()];
    case Formula::Kind::Not:
      return !eval(f.child(0), valuation);
    case Formula::Kind::And:
      return eval(f.child(0), valuation) && eval(f.child(1), valuation);
    case Formula::Kind::Or:
      return eval(f.child(0), valuation) || eval(f.child(1), valuation);
    case Formula::Kind::Implies:
      return !eval(f.child(0), valuation) || eval(f.child(1), valuation);
  }
  return false;
}

}  // namespace egg
