#ifndef EGG_GAME_HPP
#define EGG_GAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace egg {

using ProfileIndex = std::int64_t;

/// Finite normal-form game: ordered players, per-player ordered strategy
/// labels, and a dense payoff tensor (one real per player per pure profile).
/// Profiles are addressed by a flat index, row-major with player 0 most
/// significant.
class StrategicGame {
 public:
  StrategicGame() = default;
  explicit StrategicGame(std::vector<std::vector<std::string>> strategies);

  // Shorthand with generated labels s0, s1, ...
  static StrategicGame with_shape(const std::vector<int>& counts);

  int players() const { return static_cast<int>(strategies_.size()); }
  int strategy_count(int player) const {
    return static_cast<int>(strategies_[player].size());
  }
  const std::vector<std::string>& strategy_labels(int player) const {
    return strategies_[player];
  }
  ProfileIndex profile_count() const { return profile_count_; }

  ProfileIndex index_of(std::span<const int> profile) const;
  std::vector<int> profile_at(ProfileIndex index) const;
  int strategy_at(ProfileIndex index, int player) const;
  // Same profile with one player's strategy replaced.
  ProfileIndex replace(ProfileIndex index, int player, int strategy) const;

  double payoff(ProfileIndex profile, int player) const {
    return payoffs_[profile * players() + player];
  }
  void set_payoff(ProfileIndex profile, int player, double value) {
    payoffs_[profile * players() + player] = value;
  }

  bool same_shape(const StrategicGame& other) const;
  // Strategy labels joined with commas, e.g. "D,R".
  std::string profile_label(ProfileIndex index) const;
  // Resolves a comma-separated label tuple; empty if unknown.
  std::optional<ProfileIndex> profile_from_label(const std::string& label) const;
  std::optional<int> strategy_from_label(int player, const std::string& label) const;

 private:
  std::vector<std::vector<std::string>> strategies_;
  std::vector<ProfileIndex> strides_;
  ProfileIndex profile_count_ = 0;
  std::vector<double> payoffs_;
};

/// Per-player sets of goal profiles layered on top of a game.
class GoalAssignment {
 public:
  GoalAssignment() = default;
  explicit GoalAssignment(const StrategicGame& game);

  bool is_goal(int player, ProfileIndex profile) const {
    return mask_[player][static_cast<std::size_t>(profile)] != 0;
  }
  void add_goal(int player, ProfileIndex profile) {
    mask_[player][static_cast<std::size_t>(profile)] = 1;
  }
  bool any_goal(int player) const;
  bool all_goals(int player) const;
  bool empty() const;
  int players() const { return static_cast<int>(mask_.size()); }
  ProfileIndex profiles() const {
    return mask_.empty() ? 0 : static_cast<ProfileIndex>(mask_[0].size());
  }
  std::vector<ProfileIndex> goal_profiles(int player) const;

 private:
  std::vector<std::vector<char>> mask_;
};

/// A concrete boost-factor family plus its parameter.
///   offset: goal payoffs are shifted so the least of them sits `amount`
///           above the player's best non-goal payoff, preserving relative
///           distances between goal states.
///   regret: goal payoffs gain `amount` plus the worst effective cost in the
///           game (the classic mu factor of boolean games).
struct BoostSpec {
  enum class Family { Offset, Regret };
  Family family = Family::Offset;
  double amount = 1.0;

  static BoostSpec offset(double delta);
  static BoostSpec regret(double epsilon);
};

std::vector<BoostSpec> uniform_boost(int players, BoostSpec spec);

/// Per-player, per-profile ceilings on post-transfer payoffs.
class BudgetConstraints {
 public:
  BudgetConstraints() = default;
  BudgetConstraints(const StrategicGame& shape, double fill);
  static BudgetConstraints from_payoffs(const StrategicGame& game);

  double bound(ProfileIndex profile, int player) const {
    return bound_[profile * players_ + player];
  }
  void set_bound(ProfileIndex profile, int player, double value) {
    bound_[profile * players_ + player] = value;
  }
  int players() const { return players_; }
  ProfileIndex profiles() const {
    return players_ == 0 ? 0 : static_cast<ProfileIndex>(bound_.size()) / players_;
  }

 private:
  int players_ = 0;
  std::vector<double> bound_;
};

/// Product distribution: one probability vector per player.
struct MixedProfile {
  std::vector<std::vector<double>> probs;

  static MixedProfile pure(const StrategicGame& game, ProfileIndex profile);
  double probability(const StrategicGame& game, ProfileIndex profile) const;
  bool valid_for(const StrategicGame& game) const;
  bool is_pure() const;
  std::string to_string(const StrategicGame& game) const;
};

// Precomputed additive boosts for one (game, goals, boost profile) triple.
// Both supported families reduce to x + shift_i.
class BoostContext {
 public:
  static BoostContext from(const StrategicGame& game, const GoalAssignment& goals,
                           std::span<const BoostSpec> boost);
  double boost(int player, double x) const { return x + shift_[player]; }
  double shift(int player) const { return shift_[player]; }

 private:
  std::vector<double> shift_;
};

/// Boosted value of payoff x for a player at their goal states.
/// The player must have at least one goal profile.
double boost_value(const StrategicGame& game, const GoalAssignment& goals,
                   const BoostSpec& spec, int player, double x);

/// The induced game: goal profiles get boosted payoffs, the rest keep theirs.
StrategicGame instantiate(const StrategicGame& game, const GoalAssignment& goals,
                          std::span<const BoostSpec> boost);
StrategicGame instantiate(const StrategicGame& game, const GoalAssignment& goals,
                          const BoostSpec& spec);

struct PenalizedUtility {
  StrategicGame utilities;
  double kappa = 0.0;          // highest excess of a payoff over its budget
  std::vector<int> violators;  // players attaining that excess (empty when kappa == 0)
};

/// Utilities of `updated` (some transfer applied to `base`) under budget
/// constraints declared on `base`: boost profits as in instantiate, then charge
/// everyone |D| * kappa where kappa is the largest budget excess and D the set
/// of players attaining it.
PenalizedUtility penalized_utility(const StrategicGame& updated, const StrategicGame& base,
                                   const GoalAssignment& goals, std::span<const BoostSpec> boost,
                                   const BudgetConstraints& budgets);

double expected_utility(const StrategicGame& game, const MixedProfile& delta, int player);

/// Per-player positive affine rescaling of payoffs.
StrategicGame affine_transform(const StrategicGame& game, std::span<const double> scale,
                               std::span<const double> shift);

}  // namespace egg

#endif
