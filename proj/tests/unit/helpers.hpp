#ifndef EGG_TEST_HELPERS_HPP
#define EGG_TEST_HELPERS_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "egg/boolean_game.hpp"
#include "egg/endogenous.hpp"
#include "egg/equilibria.hpp"
#include "egg/game.hpp"
#include "egg/game_file.hpp"
#include "egg/numeric.hpp"
#include "egg/transfers.hpp"

namespace eggtest {

using namespace egg;

// payoffs[profile][player] in flat profile order.
inline StrategicGame make_game(const std::vector<int>& shape,
                               const std::vector<std::vector<double>>& payoffs) {
  StrategicGame g = StrategicGame::with_shape(shape);
  for (ProfileIndex p = 0; p < g.profile_count(); ++p)
    for (int i = 0; i < g.players(); ++i) g.set_payoff(p, i, payoffs[p][i]);
  return g;
}

inline GoalAssignment goals_at(const StrategicGame& g,
                               const std::vector<std::vector<ProfileIndex>>& per_player) {
  GoalAssignment goals(g);
  for (std::size_t i = 0; i < per_player.size(); ++i)
    for (ProfileIndex p : per_player[i]) goals.add_goal(static_cast<int>(i), p);
  return goals;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(EGG_GAMES_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ParsedGame load_fixture(const std::string& name) {
  return parse_game_file(read_fixture(name));
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  double payoff(int lo = -5, int hi = 5) { return uniform(lo, hi); }
  bool flip(double p = 0.5) { return std::bernoulli_distribution(p)(gen); }
};

inline StrategicGame random_game(Rng& rng, int players, int max_strategies = 3, int lo = -5,
                                 int hi = 5) {
  std::vector<int> shape(players);
  for (int i = 0; i < players; ++i) shape[i] = rng.uniform(2, max_strategies);
  StrategicGame g = StrategicGame::with_shape(shape);
  for (ProfileIndex p = 0; p < g.profile_count(); ++p)
    for (int i = 0; i < players; ++i) g.set_payoff(p, i, rng.uniform(lo, hi));
  return g;
}

inline GoalAssignment random_goals(Rng& rng, const StrategicGame& g, double density = 0.3,
                                   bool forbid_all_goals = false) {
  std::vector<std::vector<char>> mask(g.players(),
                                      std::vector<char>(g.profile_count(), 0));
  for (int i = 0; i < g.players(); ++i) {
    for (ProfileIndex p = 0; p < g.profile_count(); ++p) mask[i][p] = rng.flip(density);
    if (forbid_all_goals) {
      bool all = true;
      for (char c : mask[i]) all = all && c;
      if (all) mask[i][rng.uniform(0, static_cast<int>(g.profile_count()) - 1)] = 0;
    }
  }
  GoalAssignment goals(g);
  for (int i = 0; i < g.players(); ++i)
    for (ProfileIndex p = 0; p < g.profile_count(); ++p)
      if (mask[i][p]) goals.add_goal(i, p);
  return goals;
}

inline TransferFunction random_transfers(Rng& rng, const StrategicGame& g, int max_amount = 3,
                                         double density = 0.25) {
  TransferFunction t = TransferFunction::zero(g);
  for (ProfileIndex p = 0; p < g.profile_count(); ++p)
    for (int i = 0; i < g.players(); ++i)
      for (int j = 0; j < g.players(); ++j)
        if (i != j && rng.flip(density)) t.set_pay(p, i, j, rng.uniform(0, max_amount));
  return t;
}

inline bool same_profile_sets(std::vector<ProfileIndex> a, std::vector<ProfileIndex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace eggtest

#endif
