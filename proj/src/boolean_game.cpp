#include "egg/boolean_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace egg {

std::vector<bool> BooleanGame::valuation_bits(int valuation) const {
  std::vector<bool> bits(atom_count());
  for (int a = 0; a < atom_count(); ++a) bits[a] = atom_value(valuation, a);
  return bits;
}

bool BooleanGame::satisfies_goal(int valuation, int player) const {
  return eval(goal[player], valuation_bits(valuation));
}

int BooleanGame::choice_of(int valuation, int player) const {
  const auto& owned = control[player];
  int choice = 0;
  for (std::size_t t = 0; t < owned.size(); ++t)
    choice |= static_cast<int>(atom_value(valuation, owned[t])) << (owned.size() - 1 - t);
  return choice;
}

std::string BooleanGame::choice_label(int player, int choice) const {
  const auto& owned = control[player];
  std::string label;
  for (std::size_t t = 0; t < owned.size(); ++t) {
    label += atoms[owned[t]];
    label += ((choice >> (owned.size() - 1 - t)) & 1) ? '1' : '0';
  }
  return label;
}

void BooleanGame::validate() const {
  if (players() == 0) throw std::invalid_argument("boolean game needs players");
  if (atom_count() == 0) throw std::invalid_argument("boolean game needs atoms");
  if (atom_count() > 24) throw std::invalid_argument("too many atoms");
  std::vector<int> owner(atom_count(), -1);
  for (int i = 0; i < players(); ++i) {
    if (control[i].empty())
      throw std::invalid_argument("player " + std::to_string(i) + " controls no atoms");
    for (int a : control[i]) {
      if (a < 0 || a >= atom_count()) throw std::invalid_argument("control atom out of range");
      if (owner[a] != -1) throw std::invalid_argument("atom '" + atoms[a] + "' controlled twice");
      owner[a] = i;
    }
    if (!std::is_sorted(control[i].begin(), control[i].end()))
      throw std::invalid_argument("control sets must list atoms in declared order");
  }
  for (int a = 0; a < atom_count(); ++a)
    if (owner[a] == -1) throw std::invalid_argument("atom '" + atoms[a] + "' is uncontrolled");
  if (cost.size() != static_cast<std::size_t>(valuation_count()) * players())
    throw std::invalid_argument("cost table has the wrong shape");
  for (double c : cost)
    if (!(c >= 0) || !std::isfinite(c)) throw std::invalid_argument("costs must be >= 0");
  if (static_cast<int>(goal.size()) != players())
    throw std::invalid_argument("every player needs a goal formula");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
}

std::vector<std::vector<bool>> valuations(const BooleanGame& b) {
  std::vector<std::vector<bool>> out;
  out.reserve(static_cast<std::size_t>(b.valuation_count()));
  for (int v = 0; v < b.valuation_count(); ++v) out.push_back(b.valuation_bits(v));
  return out;
}

double mu(const BooleanGame& b, std::span<const double> effective_cost, int player) {
  if (effective_cost.size() != static_cast<std::size_t>(b.valuation_count()) * b.players())
    throw std::invalid_argument("mu: effective cost table has the wrong shape");
  double worst = -std::numeric_limits<double>::infinity();
  for (int v = 0; v < b.valuation_count(); ++v)
    worst = std::max(worst, effective_cost[static_cast<std::size_t>(v) * b.players() + player]);
  return worst;
}

double mu(const BooleanGame& b, int player) {
  return mu(b, std::span<const double>(b.cost), player);
}

GoalGameTranslation to_goal_game(const BooleanGame& b, BudgetMode mode) {
  b.validate();
  std::vector<std::vector<std::string>> labels(b.players());
  for (int i = 0; i < b.players(); ++i)
    for (int c = 0; c < b.choice_count(i); ++c) labels[i].push_back(b.choice_label(i, c));

  GoalGameTranslation t{StrategicGame(std::move(labels)), GoalAssignment(), BoostSpec::regret(b.epsilon),
                        BudgetConstraints(), {}, {}};
  t.goals = GoalAssignment(t.game);
  t.budgets = BudgetConstraints(t.game, 0.0);
  t.profile_of_valuation.resize(static_cast<std::size_t>(b.valuation_count()));
  t.valuation_of_profile.assign(static_cast<std::size_t>(b.valuation_count()), -1);

  std::vector<int> profile(b.players());
  for (int v = 0; v < b.valuation_count(); ++v) {
    for (int i = 0; i < b.players(); ++i) profile[i] = b.choice_of(v, i);
    ProfileIndex p = t.game.index_of(profile);
    t.profile_of_valuation[v] = p;
    t.valuation_of_profile[static_cast<std::size_t>(p)] = v;
    for (int i = 0; i < b.players(); ++i) {
      t.game.set_payoff(p, i, -b.cost_of(v, i));
      if (b.satisfies_goal(v, i)) t.goals.add_goal(i, p);
      if (mode == BudgetMode::LiteralNegatedCost) t.budgets.set_bound(p, i, -b.cost_of(v, i));
    }
  }
  return t;
}

StrategicEmbedding embed_strategic(const StrategicGame& game) {
  StrategicEmbedding e;
  e.game.epsilon = 1.0;
  int next_atom = 0;
  for (int i = 0; i < game.players(); ++i) {
    int count = game.strategy_count(i);
    if ((count & (count - 1)) != 0 || count < 2)
      throw std::invalid_argument("embed_strategic: strategy counts must be powers of two (>= 2)");
    int bits = 0;
    while ((1 << bits) < count) ++bits;
    std::vector<int> owned;
    for (int t = 0; t < bits; ++t) {
      e.game.atoms.push_back("x" + std::to_string(next_atom));
      owned.push_back(next_atom++);
    }
    e.game.control.push_back(owned);
  }

  // Unsatisfiable goal built from an atom the player controls.
  for (int i = 0; i < game.players(); ++i) {
    const std::string& name = e.game.atoms[e.game.control[i][0]];
    Formula p = Formula::atom(name, e.game.control[i][0]);
    e.game.goal.push_back(Formula::conjunction(p, Formula::negation(p)));
  }

  double max_payoff = -std::numeric_limits<double>::infinity();
  for (ProfileIndex p = 0; p < game.profile_count(); ++p)
    for (int i = 0; i < game.players(); ++i) max_payoff = std::max(max_payoff, game.payoff(p, i));
  e.k = std::ceil(std::max(0.0, max_payoff));

  e.game.cost.assign(static_cast<std::size_t>(e.game.valuation_count()) * game.players(), 0.0);
  e.valuation_of_profile.resize(static_cast<std::size_t>(game.profile_count()));
  std::vector<int> profile(game.players());
  for (int v = 0; v < e.game.valuation_count(); ++v) {
    for (int i = 0; i < game.players(); ++i) profile[i] = e.game.choice_of(v, i);
    ProfileIndex p = game.index_of(profile);
    e.valuation_of_profile[static_cast<std::size_t>(p)] = v;
    for (int i = 0; i < game.players(); ++i)
      e.game.set_cost(v, i, e.k - game.payoff(p, i));
  }
  e.game.validate();
  return e;
}

}  // namespace egg
