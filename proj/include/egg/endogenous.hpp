#ifndef EGG_ENDOGENOUS_HPP
#define EGG_ENDOGENOUS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "egg/boolean_game.hpp"
#include "egg/game.hpp"
#include "egg/transfers.hpp"

namespace egg {

/// Origin record for games translated from boolean form; keeps the valuation
/// bijection around so shareability can be consulted during survival checks.
struct BooleanContext {
  BooleanGame game;
  std::vector<ProfileIndex> profile_of_valuation;
  std::vector<int> valuation_of_profile;
};

/// A strategic game with goals, boosts and optional budget constraints,
/// played after a pre-play phase in which players commit to transfers.
struct EndogenousGame {
  StrategicGame base;
  GoalAssignment goals;
  std::vector<BoostSpec> boost;
  std::optional<BudgetConstraints> budgets;
  std::shared_ptr<const BooleanContext> boolean;  // null unless boolean-derived

  bool boolean_derived() const { return boolean != nullptr; }
};

EndogenousGame from_boolean(const BooleanGame& b, BudgetMode mode = BudgetMode::EffectiveCost);

/// Applies a taxation mechanism to the base payoffs (and, for boolean-derived
/// games, folds it into the costs of the carried boolean game).
EndogenousGame with_tax(const EndogenousGame& e, const TaxationMechanism& tax);

/// Discretization of the transfer space. `step` and `bound` fix the amount
/// lattice {0, step, ..., bound}. Enumerating every lattice transfer function
/// is hopeless beyond toy shapes, so the per-player candidate family is the
/// structured sub-lattice actually used by pre-play arguments:
///   - single-profile offers: one outcome, any amount vector over receivers;
///   - strategy-contingent offers: per receiver, a fixed amount paid whenever
///     that receiver plays a chosen strategy.
/// Results computed over the family are under-approximations of the lattice
/// optimum and are labelled as grid certificates throughout.
struct TransferGrid {
  double step = 1.0;
  double bound = 1.0;
  std::int64_t family_cap = 10'000'000;
};

/// The per-player candidate family described above, zero transfer first.
std::vector<TransferFunction> transfer_family(const EndogenousGame& e, int player,
                                              const TransferGrid& grid);

/// Number of functions in the full amount lattice for one player (for
/// reporting; this is what exhaustive enumeration would have to visit).
double full_grid_cardinality(const EndogenousGame& e, const TransferGrid& grid);

/// Induced (and budget-penalized, when budgets are present) utilities plus
/// the equilibria found in the subgame reached by one transfer profile.
struct SubgameAnalysis {
  StrategicGame utilities;
  double kappa = 0.0;
  std::vector<ProfileIndex> pure;
  std::vector<MixedProfile> mixed;  // two-player games only
  std::vector<double> min_equilibrium_utility;
  bool approximate = false;  // no equilibrium found, min-max fallback used
};

SubgameAnalysis analyze_subgame(const EndogenousGame& e, const TransferFunction& t);

struct SoloPayoffResult {
  double value = 0.0;
  TransferFunction best_transfer;
  std::string worst_equilibrium;
  bool approximate = false;
};

/// Best utility `player` can secure with a unilateral grid transfer when
/// everyone else transfers nothing and the worst equilibrium (over those
/// found) of the resulting subgame is played.
SoloPayoffResult solo_payoff(const EndogenousGame& e, int player, const TransferGrid& grid);

struct SurvivalRow {
  double utility_at_profile = 0.0;
  double solo = 0.0;
  std::string best_deviation;
  std::string worst_equilibrium;
};

struct SurvivalCheck {
  bool certified = false;
  bool shareability_required = false;
  bool shareable = false;
  std::vector<SurvivalRow> rows;
  TransferFunction on_path;  // trigger transfers played on the equilibrium path
  double on_path_kappa = 0.0;
  bool on_path_is_ne = false;
  bool approximate = false;
};

/// Sufficient condition for `sigma` to survive the pre-play phase: every
/// player's utility at sigma covers their solo payoff (boolean-derived games
/// additionally need sigma's outcome to be shareable). The certificate
/// describes the trigger strategy: the stated transfers on path, and after a
/// unilateral pre-play deviation the worst equilibrium for the deviator.
/// Requires sigma to be a pure equilibrium of the instantiated game.
SurvivalCheck check_survival_sufficient(const EndogenousGame& e, ProfileIndex sigma,
                                        const TransferGrid& grid);

struct NonSurvivalCertificate {
  int deviating_player = -1;
  TransferFunction deviation;
  double guaranteed_value = 0.0;
  double utility_at_zero_transfers = 0.0;
  std::int64_t candidates_scanned = 0;
  std::int64_t viable_candidates = 0;
  bool approximate = false;
};

/// Grid argument that `sigma` cannot be played on any pre-play equilibrium
/// path: every candidate on-path transfer profile (product of the per-player
/// families) under which sigma is still an equilibrium is defeated by some
/// player whose solo guarantee exceeds their utility there. Returns nothing
/// if some candidate stands, which leaves sigma undecided at this grid.
std::optional<NonSurvivalCertificate> find_nonsurvival_certificate(const EndogenousGame& e,
                                                                   ProfileIndex sigma,
                                                                   const TransferGrid& grid);

enum class SurvivalStatus { SurvivingCertified, NonSurvivingCertified, Undecided };

struct TwoPhaseSolution {
  TransferFunction transfer;
  ProfileIndex profile = 0;
  SurvivalStatus status = SurvivalStatus::Undecided;
  std::string certificate;
};

TwoPhaseSolution classify_profile(const EndogenousGame& e, ProfileIndex sigma,
                                  const TransferGrid& grid);

struct ShareableAssignment {
  std::vector<int> goal_players;
  std::vector<int> assigned_valuation;  // parallel to goal_players
};

/// An outcome is shareable if each player whose goal holds there can be given
/// a distinct cost-maximal outcome that is at least two unilateral moves away.
std::optional<ShareableAssignment> is_shareable(const BooleanGame& b, int valuation);

/// Shareable for some choice of cost function: enough far-away outcomes exist.
bool is_potentially_shareable(const BooleanGame& b, int valuation);

struct TaxSynthesis {
  bool success = false;
  TaxationMechanism tax;
  int iterations = 0;
  int blocking_player = -1;  // player still short of their solo payoff on failure
  bool shareable_at_exit = true;
};

/// Iteratively raises taxes on every outcome other than `sigma` (one unit per
/// round for each player whose utility at sigma trails their solo payoff in
/// the taxed game) until the survival condition holds or the cap is hit.
/// Input guard: every player either achieves a goal at sigma or cannot reach
/// one by unilateral deviation; boolean-derived outcomes must additionally be
/// potentially shareable.
TaxSynthesis synth_tax(const EndogenousGame& e, ProfileIndex sigma, const TransferGrid& grid,
                       int iteration_cap);

struct ImprovingDeviation {
  TransferFunction deviation;  // full profile: opponents keep their components
  double payoff_before = 0.0;
  double payoff_after = 0.0;
  double total_paid_before = 0.0;
  double total_paid_after = 0.0;
};

/// Looks for a cheaper grid offer for `player` than their component of `t`
/// such that `sigma` stays a pure equilibrium of the deviated subgame and the
/// player's raw payoff at sigma strictly improves (goal membership is
/// unaffected by transfers, so this is a lexicographic improvement).
std::optional<ImprovingDeviation> find_parsimonious_improvement(const EndogenousGame& e,
                                                                const TransferFunction& t,
                                                                ProfileIndex sigma, int player,
                                                                const TransferGrid& grid);

}  // namespace egg

#endif
