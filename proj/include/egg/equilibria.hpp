#ifndef EGG_EQUILIBRIA_HPP
#define EGG_EQUILIBRIA_HPP

#include <string>
#include <vector>

#include "egg/game.hpp"

namespace egg {

/// Exact enumeration of pure Nash equilibria (no strictly improving
/// unilateral deviation, strictness with the global tolerance).
std::vector<ProfileIndex> pure_ne(const StrategicGame& game);
bool is_pure_ne(const StrategicGame& game, ProfileIndex profile);

/// Support enumeration for two-player games. Equal-size supports are solved
/// through the indifference system; every candidate must pass interiority,
/// indifference and a best-response test before it is returned. Vertex
/// equilibria only; degenerate continua show up through their vertices.
std::vector<MixedProfile> mixed_ne_2p(const StrategicGame& game);

/// Goal-probability / expected-payoff pair ordered lexicographically.
struct LexValue {
  double goal_prob = 0.0;
  double exp_payoff = 0.0;
};

enum class Ordering { Less, Equal, Greater };

LexValue lex_value(const StrategicGame& game, const GoalAssignment& goals,
                   const MixedProfile& delta, int player);

/// Compares two mixed profiles for `player`: goal probability first, expected
/// payoff (of the raw game, not the boosted one) second.
Ordering lex_compare(const StrategicGame& game, const GoalAssignment& goals,
                     const MixedProfile& a, const MixedProfile& b, int player);

/// All probability vectors over `dims` entries with denominators k.
std::vector<std::vector<double>> simplex_grid(int dims, int k);

/// Exhaustive scan of the product of discretized simplices: returns the grid
/// profiles from which no player has a lex-improving deviation to any grid
/// mix (pure strategies are grid vertices). A certificate at resolution k,
/// not a proof about the continuum.
std::vector<MixedProfile> lex_ne_search(const StrategicGame& game, const GoalAssignment& goals,
                                        int resolution);

/// Pure profiles with no lex-improving pure deviation.
std::vector<ProfileIndex> pure_lex_ne(const StrategicGame& game, const GoalAssignment& goals);

enum class DominanceMode { Strict, Weak };

struct DominatorKind {
  bool grid = false;
  int resolution = 0;
  static DominatorKind pure() { return {false, 0}; }
  static DominatorKind grid_mixes(int k) { return {true, k}; }
};

struct EliminationStep {
  int player;
  std::string strategy;
  std::string dominator;
};

struct DominanceResult {
  StrategicGame game;
  GoalAssignment goals;
  std::vector<EliminationStep> trace;
  std::vector<std::vector<int>> kept;  // surviving original strategy indices
};

/// Iterated elimination of lex-dominated strategies. Candidates are scanned
/// in player then declared-strategy order, one removal per pass, until no
/// strategy is dominated (strictly or weakly per `mode`) against all pure
/// opponent profiles over the surviving strategies.
DominanceResult dominance_eliminate(const StrategicGame& game, const GoalAssignment& goals,
                                    DominanceMode mode,
                                    DominatorKind dominators = DominatorKind::pure());

}  // namespace egg

#endif
