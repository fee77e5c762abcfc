#ifndef EGG_GAME_FILE_HPP
#define EGG_GAME_FILE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "egg/boolean_game.hpp"
#include "egg/endogenous.hpp"
#include "egg/game.hpp"
#include "egg/transfers.hpp"

namespace egg {

/// Line-oriented UTF-8 game documents, one directive per line, `#` comments.
///
/// strategic games:
///   game strategic
///   players <n>
///   strategy <player> <label>
///   payoff <l0>,<l1>,...  <x0> <x1> ...
///   goal <player> <l0>,<l1>,...
///   boost <player|all> offset <delta> | regret <epsilon>
///   budget <player> <profile> <bound>        (default bound = payoff)
///
/// boolean games:
///   game boolean
///   atoms <a> <b> ...
///   control <player> <atom> ...
///   goalformula <player> "<formula>"
///   cost <player> <pattern> <c>              (pattern: `*` or atom=0|1 list;
///                                             later lines override earlier)
///   epsilon <e>
///
/// either kind may carry transfer and tax stanzas:
///   transfer <giver> <profile> -> <receiver> : <amount>
///   tax <player> <profile> : <amount>
///
/// Profiles are strategy-label tuples in player order; boolean outcomes are
/// atom=0/1 lists in declared atom order. Printing is canonical:
/// parse-then-print is a fixpoint after one round.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

struct ParsedGame {
  std::optional<BooleanGame> boolean;

  // Strategic payload; for boolean documents these mirror the translation
  // (payoffs are negated costs) so stanza resolution has a profile space.
  StrategicGame game;
  GoalAssignment goals;
  std::vector<BoostSpec> boost;  // empty when the document has no boost lines
  std::optional<BudgetConstraints> budgets;

  std::optional<TransferFunction> transfers;
  std::optional<TaxationMechanism> taxes;

  bool is_boolean() const { return boolean.has_value(); }
  bool has_boost() const { return !boost.empty(); }

  /// Engine view. Boolean documents use the regret boost and the budget mode
  /// given here; strategic documents need boost lines when goals are present.
  EndogenousGame to_endogenous(BudgetMode mode = BudgetMode::EffectiveCost) const;

  /// The game analyses run on: instantiated when goals + boost are present.
  StrategicGame analysis_game() const;
};

ParsedGame parse_game_file(std::string_view text);
std::string print_game_file(const ParsedGame& g);

/// Files holding only transfer/tax stanzas, resolved against `context`.
struct AuxiliaryStanzas {
  std::optional<TransferFunction> transfers;
  std::optional<TaxationMechanism> taxes;
};
AuxiliaryStanzas parse_auxiliary_file(std::string_view text, const ParsedGame& context);

/// Profile (or boolean outcome) token <-> profile index.
ProfileIndex resolve_profile_token(const ParsedGame& g, const std::string& token);
std::string profile_token(const ParsedGame& g, ProfileIndex profile);

}  // namespace egg

#endif
