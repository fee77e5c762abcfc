#ifndef EGG_BOOLEAN_GAME_HPP
#define EGG_BOOLEAN_GAME_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "egg/formula.hpp"
#include "egg/game.hpp"

namespace egg {

/// Boolean game: players control disjoint, nonempty sets of atoms, pay a
/// non-negative cost at every valuation, and pursue a propositional goal.
/// Valuations are indexed 0 .. 2^|atoms|-1 in lexicographic order of the
/// declared atom list with false < true (atom 0 is the most significant bit).
struct BooleanGame {
  std::vector<std::string> atoms;
  std::vector<std::vector<int>> control;  // per player, ascending atom indices
  std::vector<double> cost;               // [valuation * players + player]
  std::vector<Formula> goal;              // per player
  double epsilon = 1.0;

  int players() const { return static_cast<int>(control.size()); }
  int atom_count() const { return static_cast<int>(atoms.size()); }
  std::int64_t valuation_count() const { return std::int64_t{1} << atom_count(); }

  bool atom_value(int valuation, int atom) const {
    return (valuation >> (atom_count() - 1 - atom)) & 1;
  }
  std::vector<bool> valuation_bits(int valuation) const;
  double cost_of(int valuation, int player) const {
    return cost[static_cast<std::size_t>(valuation) * players() + player];
  }
  void set_cost(int valuation, int player, double c) {
    cost[static_cast<std::size_t>(valuation) * players() + player] = c;
  }
  bool satisfies_goal(int valuation, int player) const;

  // Choice of `player` embedded in a valuation: bits of the controlled atoms,
  // most significant first.
  int choice_of(int valuation, int player) const;
  int choice_count(int player) const {
    return 1 << static_cast<int>(control[player].size());
  }
  std::string choice_label(int player, int choice) const;

  void validate() const;  // partition, nonempty control, costs >= 0
};

/// All valuations as explicit bit vectors, in canonical order.
std::vector<std::vector<bool>> valuations(const BooleanGame& b);

/// Worst effective cost for a player. `effective_cost` is laid out like
/// BooleanGame::cost; transfers and taxes are folded in by the caller.
double mu(const BooleanGame& b, std::span<const double> effective_cost, int player);
double mu(const BooleanGame& b, int player);

/// Budget flavour used when translating a boolean game.
///   EffectiveCost: bound 0 everywhere, i.e. effective costs stay non-negative.
///   LiteralNegatedCost: bound -c_i(v), i.e. no net receipt at any outcome.
enum class BudgetMode { EffectiveCost, LiteralNegatedCost };

struct GoalGameTranslation {
  StrategicGame game;  // payoff is the negated cost
  GoalAssignment goals;
  BoostSpec boost;  // regret family with the game's epsilon
  BudgetConstraints budgets;
  std::vector<ProfileIndex> profile_of_valuation;
  std::vector<int> valuation_of_profile;
};

/// Strategic-game-with-goals view of a boolean game. Player strategies are
/// the choices over their controlled atoms; the valuation/profile maps give
/// the bijection between the two outcome spaces.
GoalGameTranslation to_goal_game(const BooleanGame& b,
                                 BudgetMode mode = BudgetMode::EffectiveCost);

struct StrategicEmbedding {
  BooleanGame game;
  double k = 0.0;  // induced utilities equal the original payoffs minus k
  std::vector<int> valuation_of_profile;
};

/// Embeds a strategic game whose strategy counts are all powers of two into a
/// boolean game with unsatisfiable goals and costs k - payoff.
StrategicEmbedding embed_strategic(const StrategicGame& game);

}  // namespace egg

#endif
