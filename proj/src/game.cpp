#include "egg/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "egg/numeric.hpp"

namespace egg {

StrategicGame::StrategicGame(std::vector<std::vector<std::string>> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.empty()) throw std::invalid_argument("game needs at least one player");
  strides_.resize(strategies_.size());
  profile_count_ = 1;
  for (int i = players() - 1; i >= 0; --i) {
    if (strategies_[i].empty())
      throw std::invalid_argument("player " + std::to_string(i) + " has no strategies");
    strides_[i] = profile_count_;
    profile_count_ *= static_cast<ProfileIndex>(strategies_[i].size());
    if (profile_count_ > (std::int64_t{1} << 40))
      throw std::invalid_argument("profile space too large");
  }
  payoffs_.assign(static_cast<std::size_t>(profile_count_) * players(), 0.0);
}

StrategicGame StrategicGame::with_shape(const std::vector<int>& counts) {
  std::vector<std::vector<std::string>> labels(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] <= 0) throw std::invalid_argument("strategy counts must be positive");
    for (int s = 0; s < counts[i]; ++s) labels[i].push_back("s" + std::to_string(s));
  }
  return StrategicGame(std::move(labels));
}

ProfileIndex StrategicGame::index_of(std::span<const int> profile) const {
  if (static_cast<int>(profile.size()) != players())
    throw std::invalid_argument("profile arity mismatch");
  ProfileIndex idx = 0;
  for (int i = 0; i < players(); ++i) {
    if (profile[i] < 0 || profile[i] >= strategy_count(i))
      throw std::out_of_range("strategy index out of range");
    idx += strides_[i] * profile[i];
  }
  return idx;
}

std::vector<int> StrategicGame::profile_at(ProfileIndex index) const {
  std::vector<int> profile(players());
  for (int i = 0; i < players(); ++i)
    profile[i] = static_cast<int>((index / strides_[i]) % strategy_count(i));
  return profile;
}

int StrategicGame::strategy_at(ProfileIndex index, int player) const {
  return static_cast<int>((index / strides_[player]) % strategy_count(player));
}

ProfileIndex StrategicGame::replace(ProfileIndex index, int player, int strategy) const {
  int current = strategy_at(index, player);
  return index + strides_[player] * (strategy - current);
}

bool StrategicGame::same_shape(const StrategicGame& other) const {
  if (players() != other.players()) return false;
  for (int i = 0; i < players(); ++i)
    if (strategy_count(i) != other.strategy_count(i)) return false;
  return true;
}

std::string StrategicGame::profile_label(ProfileIndex index) const {
  std::string out;
  for (int i = 0; i < players(); ++i) {
    if (i) out += ',';
    out += strategies_[i][strategy_at(index, i)];
  }
  return out;
}

std::optional<int> StrategicGame::strategy_from_label(int player, const std::string& label) const {
  const auto& labels = strategies_[player];
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<int>(it - labels.begin());
}

std::optional<ProfileIndex> StrategicGame::profile_from_label(const std::string& label) const {
  std::vector<int> profile;
  std::size_t start = 0;
  for (int i = 0; i < players(); ++i) {
    std::size_t end = i + 1 < players() ? label.find(',', start) : label.size();
    if (end == std::string::npos) return std::nullopt;
    auto s = strategy_from_label(i, label.substr(start, end - start));
    if (!s) return std::nullopt;
    profile.push_back(*s);
    start = end + 1;
  }
  return index_of(profile);
}

GoalAssignment::GoalAssignment(const StrategicGame& game)
    : mask_(game.players(),
            std::vector<char>(static_cast<std::size_t>(game.profile_count()), 0)) {}

bool GoalAssignment::any_goal(int player) const {
  for (char c : mask_[player])
    if (c) return true;
  return false;
}

bool GoalAssignment::all_goals(int player) const {
  for (char c : mask_[player])
    if (!c) return false;
  return true;
}

bool GoalAssignment::empty() const {
  for (int i = 0; i < players(); ++i)
    if (any_goal(i)) return false;
  return true;
}

std::vector<ProfileIndex> GoalAssignment::goal_profiles(int player) const {
  std::vector<ProfileIndex> out;
  for (ProfileIndex p = 0; p < profiles(); ++p)
    if (is_goal(player, p)) out.push_back(p);
  return out;
}

BoostSpec BoostSpec::offset(double delta) {
  if (!(delta > 0)) throw std::invalid_argument("offset boost needs delta > 0");
  return BoostSpec{Family::Offset, delta};
}

BoostSpec BoostSpec::regret(double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("regret boost needs epsilon > 0");
  return BoostSpec{Family::Regret, epsilon};
}

std::vector<BoostSpec> uniform_boost(int players, BoostSpec spec) {
  return std::vector<BoostSpec>(static_cast<std::size_t>(players), spec);
}

BudgetConstraints::BudgetConstraints(const StrategicGame& shape, double fill)
    : players_(shape.players()),
      bound_(static_cast<std::size_t>(shape.profile_count()) * shape.players(), fill) {}

BudgetConstraints BudgetConstraints::from_payoffs(const StrategicGame& game) {
  BudgetConstraints b(game, 0.0);
  for (ProfileIndex p = 0; p < game.profile_count(); ++p)
    for (int i = 0; i < game.players(); ++i) b.set_bound(p, i, game.payoff(p, i));
  return b;
}

MixedProfile MixedProfile::pure(const StrategicGame& game, ProfileIndex profile) {
  MixedProfile d;
  d.probs.resize(game.players());
  for (int i = 0; i < game.players(); ++i) {
    d.probs[i].assign(game.strategy_count(i), 0.0);
    d.probs[i][game.strategy_at(profile, i)] = 1.0;
  }
  return d;
}

double MixedProfile::probability(const StrategicGame& game, ProfileIndex profile) const {
  double prob = 1.0;
  for (int i = 0; i < game.players(); ++i) prob *= probs[i][game.strategy_at(profile, i)];
  return prob;
}

bool MixedProfile::valid_for(const StrategicGame& game) const {
  if (static_cast<int>(probs.size()) != game.players()) return false;
  for (int i = 0; i < game.players(); ++i) {
    if (static_cast<int>(probs[i].size()) != game.strategy_count(i)) return false;
    double sum = 0.0;
    for (double p : probs[i]) {
      if (p < -kEps) return false;
      sum += p;
    }
    if (!approx_eq(sum, 1.0)) return false;
  }
  return true;
}

bool MixedProfile::is_pure() const {
  for (const auto& v : probs)
    for (double p : v)
      if (p > kEps && p < 1.0 - kEps) return false;
  return true;
}

std::string MixedProfile::to_string(const StrategicGame& game) const {
  std::string out;
  for (int i = 0; i < game.players(); ++i) {
    if (i) out += " x ";
    out += '(';
    for (int s = 0; s < game.strategy_count(i); ++s) {
      if (s) out += ' ';
      out += num_to_string(probs[i][s]);
    }
    out += ')';
  }
  return out;
}

BoostContext BoostContext::from(const StrategicGame& game, const GoalAssignment& goals,
                                std::span<const BoostSpec> boost) {
  if (static_cast<int>(boost.size()) != game.players())
    throw std::invalid_argument("boost profile arity mismatch");
  BoostContext ctx;
  ctx.shift_.assign(game.players(), 0.0);
  for (int i = 0; i < game.players(); ++i) {
    if (!goals.any_goal(i)) continue;  // boost never consulted
    const BoostSpec& spec = boost[i];
    if (spec.family == BoostSpec::Family::Offset) {
      double min_goal = std::numeric_limits<double>::infinity();
      double max_nongoal = -std::numeric_limits<double>::infinity();
      bool has_nongoal = false;
      for (ProfileIndex p = 0; p < game.profile_count(); ++p) {
        double x = game.payoff(p, i);
        if (goals.is_goal(i, p)) {
          min_goal = std::min(min_goal, x);
        } else {
          max_nongoal = std::max(max_nongoal, x);
          has_nongoal = true;
        }
      }
      if (!has_nongoal) max_nongoal = 0.0;  // degenerate all-goal convention
      ctx.shift_[i] = -min_goal + max_nongoal + spec.amount;
    } else {
      // Worst effective cost across all profiles.
      double mu = -std::numeric_limits<double>::infinity();
      for (ProfileIndex p = 0; p < game.profile_count(); ++p)
        mu = std::max(mu, -game.payoff(p, i));
      ctx.shift_[i] = spec.amount + mu;
    }
  }
  return ctx;
}

double boost_value(const StrategicGame& game, const GoalAssignment& goals, const BoostSpec& spec,
                   int player, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("boost_value: non-finite payoff");
  if (!goals.any_goal(player))
    throw std::invalid_argument("boost_value: player has no goal profiles");
  auto ctx = BoostContext::from(game, goals, uniform_boost(game.players(), spec));
  return ctx.boost(player, x);
}

StrategicGame instantiate(const StrategicGame& game, const GoalAssignment& goals,
                          std::span<const BoostSpec> boost) {
  auto ctx = BoostContext::from(game, goals, boost);
  StrategicGame induced = game;
  for (ProfileIndex p = 0; p < game.profile_count(); ++p)
    for (int i = 0; i < game.players(); ++i)
      if (goals.is_goal(i, p)) induced.set_payoff(p, i, ctx.boost(i, game.payoff(p, i)));
  return induced;
}

StrategicGame instantiate(const StrategicGame& game, const GoalAssignment& goals,
                          const BoostSpec& spec) {
  auto boost = uniform_boost(game.players(), spec);
  return instantiate(game, goals, boost);
}

PenalizedUtility penalized_utility(const StrategicGame& updated, const StrategicGame& base,
                                   const GoalAssignment& goals, std::span<const BoostSpec> boost,
                                   const BudgetConstraints& budgets) {
  if (!updated.same_shape(base))
    throw std::invalid_argument("penalized_utility: shape mismatch");
  if (budgets.players() != base.players() || budgets.profiles() != base.profile_count())
    throw std::invalid_argument("penalized_utility: budget shape mismatch");

  double kappa = 0.0;
  for (ProfileIndex p = 0; p < updated.profile_count(); ++p)
    for (int i = 0; i < updated.players(); ++i)
      kappa = std::max(kappa, updated.payoff(p, i) - budgets.bound(p, i));

  PenalizedUtility out;
  out.kappa = kappa;
  if (kappa > kEps) {
    for (int i = 0; i < updated.players(); ++i) {
      for (ProfileIndex p = 0; p < updated.profile_count(); ++p) {
        if (approx_eq(updated.payoff(p, i) - budgets.bound(p, i), kappa)) {
          out.violators.push_back(i);
          break;
        }
      }
    }
  } else {
    out.kappa = 0.0;
  }

  double charge = static_cast<double>(out.violators.size()) * out.kappa;
  out.utilities = instantiate(updated, goals, boost);
  if (charge != 0.0) {
    for (ProfileIndex p = 0; p < updated.profile_count(); ++p)
      for (int i = 0; i < updated.players(); ++i)
        out.utilities.set_payoff(p, i, out.utilities.payoff(p, i) - charge);
  }
  return out;
}

double expected_utility(const StrategicGame& game, const MixedProfile& delta, int player) {
  if (!delta.valid_for(game)) throw std::invalid_argument("expected_utility: invalid profile");
  double total = 0.0;
  for (ProfileIndex p = 0; p < game.profile_count(); ++p) {
    double prob = delta.probability(game, p);
    if (prob > 0.0) total += game.payoff(p, player) * prob;
  }
  return total;
}

StrategicGame affine_transform(const StrategicGame& game, std::span<const double> scale,
                               std::span<const double> shift) {
  if (static_cast<int>(scale.size()) != game.players() ||
      static_cast<int>(shift.size()) != game.players())
    throw std::invalid_argument("affine_transform: arity mismatch");
  for (double s : scale)
    if (!(s > 0)) throw std::invalid_argument("affine_transform: scale must be positive");
  StrategicGame out = game;
  for (ProfileIndex p = 0; p < game.profile_count(); ++p)
    for (int i = 0; i < game.players(); ++i)
      out.set_payoff(p, i, scale[i] * game.payoff(p, i) + shift[i]);
  return out;
}

}  // namespace egg
