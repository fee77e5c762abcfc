#include "egg/endogenous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "egg/equilibria.hpp"
#include "egg/numeric.hpp"

namespace egg {

EndogenousGame from_boolean(const BooleanGame& b, BudgetMode mode) {
  GoalGameTranslation t = to_goal_game(b, mode);
  EndogenousGame e;
  e.base = std::move(t.game);
  e.goals = std::move(t.goals);
  e.boost = uniform_boost(e.base.players(), t.boost);
  e.budgets = std::move(t.budgets);
  auto ctx = std::make_shared<BooleanContext>();
  ctx->game = b;
  ctx->profile_of_valuation = std::move(t.profile_of_valuation);
  ctx->valuation_of_profile = std::move(t.valuation_of_profile);
  e.boolean = std::move(ctx);
  return e;
}

EndogenousGame with_tax(const EndogenousGame& e, const TaxationMechanism& tax) {
  EndogenousGame out = e;
  out.base = apply_tax(e.base, tax);
  if (e.boolean) {
    auto ctx = std::make_shared<BooleanContext>(*e.boolean);
    for (int v = 0; v < ctx->game.valuation_count(); ++v) {
      ProfileIndex p = ctx->profile_of_valuation[v];
      for (int i = 0; i < ctx->game.players(); ++i)
        ctx->game.set_cost(v, i, ctx->game.cost_of(v, i) + tax.tax(p, i));
    }
    out.boolean = std::move(ctx);
  }
  return out;
}

double full_grid_cardinality(const EndogenousGame& e, const TransferGrid& grid) {
  double levels = std::floor(grid.bound / grid.step + kEps) + 1.0;
  double cells = static_cast<double>(e.base.profile_count()) * (e.base.players() - 1);
  return std::pow(levels, cells);
}

namespace {

std::vector<int> receivers_of(const EndogenousGame& e, int player) {
  std::vector<int> out;
  for (int j = 0; j < e.base.players(); ++j)
    if (j != player) out.push_back(j);
  return out;
}

int amount_levels(const TransferGrid& grid) {
  if (!(grid.step > 0) || grid.bound < grid.step - kEps)
    throw std::invalid_argument("transfer grid needs step > 0 and bound >= step");
  return static_cast<int>(std::floor(grid.bound / grid.step + kEps));
}

}  // namespace

std::vector<TransferFunction> transfer_family(const EndogenousGame& e, int player,
                                              const TransferGrid& grid) {
  const StrategicGame& game = e.base;
  const int k = amount_levels(grid);
  const auto receivers = receivers_of(e, player);
  const int r = static_cast<int>(receivers.size());
  const double pc = static_cast<double>(game.profile_count());

  double single = pc * (std::pow(static_cast<double>(k) + 1.0, r) - 1.0);
  double contingent = 1.0;
  for (int j : receivers) contingent *= static_cast<double>(game.strategy_count(j)) * k + 1.0;
  contingent -= 1.0;
  double total = 1.0 + single + contingent;
  if (total > static_cast<double>(grid.family_cap))
    throw std::invalid_argument("transfer grid too large (family of " + num_to_string(total) +
                                " exceeds cap " + std::to_string(grid.family_cap) + ")");

  std::vector<TransferFunction> family;
  family.reserve(static_cast<std::size_t>(total));
  family.push_back(TransferFunction::zero(game));

  // One outcome, any non-zero amount vector over the receivers.
  std::vector<int> combo(r, 0);
  for (ProfileIndex p = 0; p < game.profile_count(); ++p) {
    std::fill(combo.begin(), combo.end(), 0);
    while (true) {
      int dim = r - 1;
      while (dim >= 0 && ++combo[dim] > k) combo[dim--] = 0;
      if (dim < 0) break;
      TransferFunction t = TransferFunction::zero(game);
      for (int idx = 0; idx < r; ++idx)
        if (combo[idx] > 0) t.set_pay(p, player, receivers[idx], combo[idx] * grid.step);
      family.push_back(std::move(t));
    }
  }

  // Per receiver: nothing, or a fixed amount whenever the receiver plays a
  // chosen strategy. Option o > 0 encodes (strategy, amount).
  std::vector<int> option(r, 0);
  std::vector<int> option_count(r);
  for (int idx = 0; idx < r; ++idx) option_count[idx] = game.strategy_count(receivers[idx]) * k;
  while (true) {
    int dim = r - 1;
    while (dim >= 0 && ++option[dim] > option_count[dim]) option[dim--] = 0;
    if (dim < 0) break;
    TransferFunction t = TransferFunction::zero(game);
    for (int idx = 0; idx < r; ++idx) {
      if (option[idx] == 0) continue;
      int strategy = (option[idx] - 1) / k;
      double amount = ((option[idx] - 1) % k + 1) * grid.step;
      int j = receivers[idx];
      for (ProfileIndex p = 0; p < game.profile_count(); ++p)
        if (game.strategy_at(p, j) == strategy) t.set_pay(p, player, j, amount);
    }
    family.push_back(std::move(t));
  }
  return family;
}

namespace {

// Boost shifts and punishment charge for payoffs base + net, in one pass.
struct LightEvaluation {
  std::vector<double> shift;
  double charge = 0.0;

  void compute(const EndogenousGame& e, const std::vector<double>& net) {
    const StrategicGame& g = e.base;
    const int n = g.players();
    shift.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
      if (!e.goals.any_goal(i)) continue;
      if (e.boost[i].family == BoostSpec::Family::Offset) {
        double min_goal = std::numeric_limits<double>::infinity();
        double max_nongoal = -std::numeric_limits<double>::infinity();
        bool has_nongoal = false;
        for (ProfileIndex p = 0; p < g.profile_count(); ++p) {
          double x = g.payoff(p, i) + net[static_cast<std::size_t>(p) * n + i];
          if (e.goals.is_goal(i, p)) {
            min_goal = std::min(min_goal, x);
          } else {
            max_nongoal = std::max(max_nongoal, x);
            has_nongoal = true;
          }
        }
        if (!has_nongoal) max_nongoal = 0.0;
        shift[i] = -min_goal + max_nongoal + e.boost[i].amount;
      } else {
        double mu = -std::numeric_limits<double>::infinity();
        for (ProfileIndex p = 0; p < g.profile_count(); ++p)
          mu = std::max(mu, -(g.payoff(p, i) + net[static_cast<std::size_t>(p) * n + i]));
        shift[i] = e.boost[i].amount + mu;
      }
    }
    charge = 0.0;
    if (e.budgets) {
      double kappa = 0.0;
      for (ProfileIndex p = 0; p < g.profile_count(); ++p)
        for (int i = 0; i < n; ++i)
          kappa = std::max(kappa, g.payoff(p, i) + net[static_cast<std::size_t>(p) * n + i] -
                                      e.budgets->bound(p, i));
      if (kappa > kEps) {
        int violators = 0;
        for (int i = 0; i < n; ++i) {
          for (ProfileIndex p = 0; p < g.profile_count(); ++p) {
            double excess = g.payoff(p, i) + net[static_cast<std::size_t>(p) * n + i] -
                            e.budgets->bound(p, i);
            if (approx_eq(excess, kappa)) {
              ++violators;
              break;
            }
          }
        }
        charge = violators * kappa;
      }
    }
  }

  double utility(const EndogenousGame& e, const std::vector<double>& net, ProfileIndex p,
                 int i) const {
    const int n = e.base.players();
    double x = e.base.payoff(p, i) + net[static_cast<std::size_t>(p) * n + i];
    if (e.goals.is_goal(i, p)) x += shift[i];
    return x - charge;
  }

  bool profile_is_ne(const EndogenousGame& e, const std::vector<double>& net,
                     ProfileIndex sigma) const {
    for (int i = 0; i < e.base.players(); ++i) {
      double here = utility(e, net, sigma, i);
      int current = e.base.strategy_at(sigma, i);
      for (int s = 0; s < e.base.strategy_count(i); ++s) {
        if (s == current) continue;
        if (strictly_greater(utility(e, net, e.base.replace(sigma, i, s), i), here)) return false;
      }
    }
    return true;
  }
};

std::vector<double> minmax_values(const StrategicGame& u) {
  std::vector<double> out(u.players());
  for (int i = 0; i < u.players(); ++i) {
    double best_worst = std::numeric_limits<double>::infinity();
    for (ProfileIndex p = 0; p < u.profile_count(); ++p) {
      if (u.strategy_at(p, i) != 0) continue;  // one visit per opponent combination
      double best = -std::numeric_limits<double>::infinity();
      for (int s = 0; s < u.strategy_count(i); ++s)
        best = std::max(best, u.payoff(u.replace(p, i, s), i));
      best_worst = std::min(best_worst, best);
    }
    out[i] = best_worst;
  }
  return out;
}

}  // namespace

SubgameAnalysis analyze_subgame(const EndogenousGame& e, const TransferFunction& t) {
  SubgameAnalysis a;
  StrategicGame updated = apply_transfers(e.base, t);
  if (e.budgets) {
    PenalizedUtility pen = penalized_utility(updated, e.base, e.goals, e.boost, *e.budgets);
    a.utilities = std::move(pen.utilities);
    a.kappa = pen.kappa;
  } else {
    a.utilities = instantiate(updated, e.goals, e.boost);
  }
  a.pure = pure_ne(a.utilities);
  if (e.base.players() == 2) a.mixed = mixed_ne_2p(a.utilities);

  const int n = e.base.players();
  a.min_equilibrium_utility.assign(n, std::numeric_limits<double>::infinity());
  bool any = false;
  for (ProfileIndex p : a.pure) {
    any = true;
    for (int i = 0; i < n; ++i)
      a.min_equilibrium_utility[i] = std::min(a.min_equilibrium_utility[i], a.utilities.payoff(p, i));
  }
  for (const MixedProfile& m : a.mixed) {
    any = true;
    for (int i = 0; i < n; ++i)
      a.min_equilibrium_utility[i] =
          std::min(a.min_equilibrium_utility[i], expected_utility(a.utilities, m, i));
  }
  if (!any) {
    a.approximate = true;
    a.min_equilibrium_utility = minmax_values(a.utilities);
  }
  return a;
}

namespace {

// Shared machinery for solo payoffs and candidate scans over the product of
// the per-player transfer families.
class TwoPhaseEngine {
 public:
  TwoPhaseEngine(const EndogenousGame& e, const TransferGrid& grid) : e_(e), grid_(grid) {
    const int n = e.base.players();
    family_.resize(n);
    effect_.resize(n);
    for (int i = 0; i < n; ++i) {
      family_[i] = transfer_family(e, i, grid);
      effect_[i].reserve(family_[i].size());
      for (const TransferFunction& t : family_[i]) effect_[i].push_back(net_effect(t, i));
    }
    solo_.resize(n);
  }

  const std::vector<TransferFunction>& family(int player) const { return family_[player]; }

  const SoloPayoffResult& solo(int player) {
    if (solo_[player]) return *solo_[player];
    SoloPayoffResult best;
    best.value = -std::numeric_limits<double>::infinity();
    for (const TransferFunction& t : family_[player]) {
      SubgameAnalysis a = analyze_subgame(e_, t);
      double guaranteed = a.min_equilibrium_utility[player];
      if (guaranteed > best.value + kEps) {
        best.value = guaranteed;
        best.best_transfer = t;
        best.approximate = a.approximate;
        best.worst_equilibrium = worst_equilibrium_label(a, player, guaranteed);
      } else if (a.approximate && approx_eq(guaranteed, best.value)) {
        // keep the flag honest when the binding subgame was approximate
      }
    }
    solo_[player] = std::move(best);
    return *solo_[player];
  }

  struct ScanOutcome {
    bool all_defeated = true;
    std::int64_t viable = 0;
    std::int64_t scanned = 0;
  };

  // Walks every candidate transfer profile once and checks, for each sigma,
  // whether each candidate keeping sigma an equilibrium is defeated by some
  // player's solo guarantee.
  std::vector<ScanOutcome> scan(const std::vector<ProfileIndex>& sigmas) {
    const int n = e_.base.players();
    double product = 1.0;
    for (int i = 0; i < n; ++i) product *= static_cast<double>(family_[i].size());
    if (product > static_cast<double>(grid_.family_cap))
      throw std::invalid_argument("transfer grid too large (candidate profiles " +
                                  num_to_string(product) + " exceed cap)");
    for (int i = 0; i < n; ++i) solo(i);

    std::vector<ScanOutcome> out(sigmas.size());
    std::vector<char> alive(sigmas.size(), 1);
    std::size_t alive_count = sigmas.size();

    const std::size_t cells = static_cast<std::size_t>(e_.base.profile_count()) * n;
    std::vector<std::vector<double>> net(n + 1, std::vector<double>(cells, 0.0));
    LightEvaluation eval;

    std::vector<std::size_t> pick(n, 0);
    std::int64_t scanned = 0;
    while (alive_count > 0) {
      for (int level = 0; level < n; ++level) {
        const auto& eff = effect_[level][pick[level]];
        for (std::size_t c = 0; c < cells; ++c) net[level + 1][c] = net[level][c] + eff[c];
      }
      ++scanned;
      const std::vector<double>& total = net[n];
      eval.compute(e_, total);
      for (std::size_t s = 0; s < sigmas.size(); ++s) {
        if (!alive[s]) continue;
        if (!eval.profile_is_ne(e_, total, sigmas[s])) continue;
        ++out[s].viable;
        bool defeated = false;
        for (int i = 0; i < n; ++i) {
          if (strictly_greater(solo_[i]->value, eval.utility(e_, total, sigmas[s], i))) {
            defeated = true;
            break;
          }
        }
        if (!defeated) {
          out[s].all_defeated = false;
          alive[s] = 0;
          --alive_count;
        }
      }

      int dim = n - 1;
      while (dim >= 0 && ++pick[dim] == family_[dim].size()) pick[dim--] = 0;
      if (dim < 0) break;
      // Levels above `dim` were reset; partial sums refresh lazily above.
    }
    for (auto& o : out) o.scanned = scanned;
    return out;
  }

  bool any_solo_approximate() const {
    for (const auto& s : solo_)
      if (s && s->approximate) return true;
    return false;
  }

 private:
  std::vector<double> net_effect(const TransferFunction& t, int giver) const {
    const int n = e_.base.players();
    std::vector<double> eff(static_cast<std::size_t>(e_.base.profile_count()) * n, 0.0);
    for (ProfileIndex p = 0; p < e_.base.profile_count(); ++p) {
      double paid = 0.0;
      for (int j = 0; j < n; ++j) {
        double x = t.pay(p, giver, j);
        if (x != 0.0) {
          eff[static_cast<std::size_t>(p) * n + j] += x;
          paid += x;
        }
      }
      eff[static_cast<std::size_t>(p) * n + giver] -= paid;
    }
    return eff;
  }

  std::string worst_equilibrium_label(const SubgameAnalysis& a, int player,
                                      double guaranteed) const {
    for (ProfileIndex p : a.pure)
      if (approx_eq(a.utilities.payoff(p, player), guaranteed))
        return a.utilities.profile_label(p);
    for (const MixedProfile& m : a.mixed)
      if (approx_eq(expected_utility(a.utilities, m, player), guaranteed))
        return m.to_string(a.utilities);
    return a.approximate ? "(no equilibrium found; min-max fallback)" : "(unknown)";
  }

  const EndogenousGame& e_;
  TransferGrid grid_;
  std::vector<std::vector<TransferFunction>> family_;
  std::vector<std::vector<std::vector<double>>> effect_;
  std::vector<std::optional<SoloPayoffResult>> solo_;
};

}  // namespace

SoloPayoffResult solo_payoff(const EndogenousGame& e, int player, const TransferGrid& grid) {
  TwoPhaseEngine engine(e, grid);
  return engine.solo(player);
}

SurvivalCheck check_survival_sufficient(const EndogenousGame& e, ProfileIndex sigma,
                                        const TransferGrid& grid) {
  SubgameAnalysis zero = analyze_subgame(e, TransferFunction::zero(e.base));
  if (std::find(zero.pure.begin(), zero.pure.end(), sigma) == zero.pure.end())
    throw std::invalid_argument("check_survival_sufficient: profile is not a pure equilibrium "
                                "of the instantiated game");

  TwoPhaseEngine engine(e, grid);
  SurvivalCheck check;
  check.certified = true;
  for (int i = 0; i < e.base.players(); ++i) {
    const SoloPayoffResult& solo = engine.solo(i);
    SurvivalRow row;
    row.utility_at_profile = zero.utilities.payoff(sigma, i);
    row.solo = solo.value;
    row.best_deviation = solo.best_transfer.describe(e.base);
    row.worst_equilibrium = solo.worst_equilibrium;
    if (strictly_less(row.utility_at_profile, row.solo)) check.certified = false;
    check.rows.push_back(std::move(row));
  }
  check.approximate = engine.any_solo_approximate();

  check.on_path = TransferFunction::zero(e.base);
  if (e.boolean_derived()) {
    check.shareability_required = true;
    const BooleanContext& ctx = *e.boolean;
    int v = ctx.valuation_of_profile[static_cast<std::size_t>(sigma)];
    auto assignment = is_shareable(ctx.game, v);
    check.shareable = assignment.has_value();
    if (!check.shareable) check.certified = false;
    if (assignment) {
      // Trigger transfers: each goal achiever covers everyone's cost at their
      // assigned far-away outcome.
      for (std::size_t idx = 0; idx < assignment->goal_players.size(); ++idx) {
        int j = assignment->goal_players[idx];
        int w = assignment->assigned_valuation[idx];
        ProfileIndex wp = ctx.profile_of_valuation[w];
        for (int kplayer = 0; kplayer < e.base.players(); ++kplayer)
          if (kplayer != j)
            check.on_path.add_pay(wp, j, kplayer, ctx.game.cost_of(w, kplayer));
      }
    }
  }

  SubgameAnalysis on_path = analyze_subgame(e, check.on_path);
  check.on_path_kappa = on_path.kappa;
  check.on_path_is_ne =
      std::find(on_path.pure.begin(), on_path.pure.end(), sigma) != on_path.pure.end();
  return check;
}

std::optional<NonSurvivalCertificate> find_nonsurvival_certificate(const EndogenousGame& e,
                                                                   ProfileIndex sigma,
                                                                   const TransferGrid& grid) {
  TwoPhaseEngine engine(e, grid);
  auto outcomes = engine.scan({sigma});
  const auto& outcome = outcomes[0];
  if (!outcome.all_defeated) return std::nullopt;

  SubgameAnalysis zero = analyze_subgame(e, TransferFunction::zero(e.base));
  NonSurvivalCertificate cert;
  cert.candidates_scanned = outcome.scanned;
  cert.viable_candidates = outcome.viable;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < e.base.players(); ++i) {
    double margin = engine.solo(i).value - zero.utilities.payoff(sigma, i);
    if (margin > best_margin + kEps) {
      best_margin = margin;
      cert.deviating_player = i;
    }
  }
  const SoloPayoffResult& solo = engine.solo(cert.deviating_player);
  cert.deviation = solo.best_transfer;
  cert.guaranteed_value = solo.value;
  cert.utility_at_zero_transfers = zero.utilities.payoff(sigma, cert.deviating_player);
  cert.approximate = engine.any_solo_approximate();
  return cert;
}

TwoPhaseSolution classify_profile(const EndogenousGame& e, ProfileIndex sigma,
                                  const TransferGrid& grid) {
  TwoPhaseSolution solution;
  solution.profile = sigma;
  solution.transfer = TransferFunction::zero(e.base);

  bool is_ne = is_pure_ne(analyze_subgame(e, solution.transfer).utilities, sigma);
  if (is_ne) {
    SurvivalCheck survival = check_survival_sufficient(e, sigma, grid);
    if (survival.certified) {
      solution.status = SurvivalStatus::SurvivingCertified;
      solution.transfer = survival.on_path;
      solution.certificate = "on-path transfers: " + survival.on_path.describe(e.base) +
                             "; off-path: worst equilibrium for the deviator";
      return solution;
    }
  }
  auto cert = find_nonsurvival_certificate(e, sigma, grid);
  if (cert) {
    solution.status = SurvivalStatus::NonSurvivingCertified;
    solution.transfer = cert->deviation;
    solution.certificate =
        "player " + std::to_string(cert->deviating_player) + " deviates (" +
        cert->deviation.describe(e.base) + ") guaranteeing " +
        num_to_string(cert->guaranteed_value) + " against " +
        num_to_string(cert->utility_at_zero_transfers) + " at the profile";
    return solution;
  }
  solution.status = SurvivalStatus::Undecided;
  solution.certificate = "no grid certificate either way";
  return solution;
}

std::optional<ShareableAssignment> is_shareable(const BooleanGame& b, int valuation) {
  ShareableAssignment assignment;
  for (int i = 0; i < b.players(); ++i)
    if (b.satisfies_goal(valuation, i)) assignment.goal_players.push_back(i);
  if (assignment.goal_players.empty()) return assignment;  // vacuously shareable

  double max_aggregate = -std::numeric_limits<double>::infinity();
  for (int w = 0; w < b.valuation_count(); ++w) {
    double agg = 0.0;
    for (int j = 0; j < b.players(); ++j) agg += b.cost_of(w, j);
    max_aggregate = std::max(max_aggregate, agg);
  }

  std::vector<int> candidates;
  for (int w = 0; w < b.valuation_count(); ++w) {
    int differing = 0;
    for (int j = 0; j < b.players(); ++j)
      if (b.choice_of(w, j) != b.choice_of(valuation, j)) ++differing;
    if (differing < 2) continue;
    double agg = 0.0;
    for (int j = 0; j < b.players(); ++j) agg += b.cost_of(w, j);
    if (approx_eq(agg, max_aggregate)) candidates.push_back(w);
  }
  if (candidates.size() < assignment.goal_players.size()) return std::nullopt;
  assignment.assigned_valuation.assign(candidates.begin(),
                                       candidates.begin() + assignment.goal_players.size());
  return assignment;
}

bool is_potentially_shareable(const BooleanGame& b, int valuation) {
  std::size_t goal_players = 0;
  for (int i = 0; i < b.players(); ++i)
    if (b.satisfies_goal(valuation, i)) ++goal_players;
  std::size_t far = 0;
  for (int w = 0; w < b.valuation_count(); ++w) {
    int differing = 0;
    for (int j = 0; j < b.players(); ++j)
      if (b.choice_of(w, j) != b.choice_of(valuation, j)) ++differing;
    if (differing >= 2) ++far;
  }
  return far >= goal_players;
}

TaxSynthesis synth_tax(const EndogenousGame& e, ProfileIndex sigma, const TransferGrid& grid,
                       int iteration_cap) {
  // Input guard: goal at sigma, or no goal reachable by unilateral deviation.
  for (int i = 0; i < e.base.players(); ++i) {
    if (e.goals.is_goal(i, sigma)) continue;
    for (int s = 0; s < e.base.strategy_count(i); ++s)
      if (e.goals.is_goal(i, e.base.replace(sigma, i, s)))
        throw std::invalid_argument("synth_tax: player " + std::to_string(i) +
                                    " can reach a goal by unilateral deviation");
  }
  if (e.boolean_derived()) {
    int v = e.boolean->valuation_of_profile[static_cast<std::size_t>(sigma)];
    if (!is_potentially_shareable(e.boolean->game, v))
      throw std::invalid_argument("synth_tax: outcome is not potentially shareable");
  }

  TaxSynthesis result;
  result.tax = TaxationMechanism::zero(e.base);
  for (result.iterations = 0;; ++result.iterations) {
    EndogenousGame taxed = with_tax(e, result.tax);
    SubgameAnalysis zero = analyze_subgame(taxed, TransferFunction::zero(taxed.base));
    TwoPhaseEngine engine(taxed, grid);
    std::vector<int> lagging;
    for (int i = 0; i < taxed.base.players(); ++i)
      if (strictly_less(zero.utilities.payoff(sigma, i), engine.solo(i).value))
        lagging.push_back(i);

    if (lagging.empty()) {
      result.success = true;
      if (e.boolean_derived()) {
        int v = taxed.boolean->valuation_of_profile[static_cast<std::size_t>(sigma)];
        result.shareable_at_exit = is_shareable(taxed.boolean->game, v).has_value();
        if (!result.shareable_at_exit) result.success = false;
      }
      return result;
    }
    if (result.iterations >= iteration_cap) {
      result.success = false;
      result.blocking_player = lagging.front();
      return result;
    }
    for (int i : lagging)
      for (ProfileIndex p = 0; p < e.base.profile_count(); ++p)
        if (p != sigma) result.tax.add_tax(p, i, 1.0);
  }
}

std::optional<ImprovingDeviation> find_parsimonious_improvement(const EndogenousGame& e,
                                                                const TransferFunction& t,
                                                                ProfileIndex sigma, int player,
                                                                const TransferGrid& grid) {
  StrategicGame updated = apply_transfers(e.base, t);
  ImprovingDeviation best;
  best.payoff_before = updated.payoff(sigma, player);
  best.total_paid_before = [&] {
    double total = 0.0;
    for (ProfileIndex p = 0; p < e.base.profile_count(); ++p)
      for (int j = 0; j < e.base.players(); ++j) total += t.pay(p, player, j);
    return total;
  }();

  bool found = false;
  for (const TransferFunction& candidate : transfer_family(e, player, grid)) {
    TransferFunction deviated = t;
    deviated.overwrite_giver(player, candidate);
    double total_paid = 0.0;
    for (ProfileIndex p = 0; p < e.base.profile_count(); ++p)
      for (int j = 0; j < e.base.players(); ++j) total_paid += deviated.pay(p, player, j);
    if (!strictly_less(total_paid, best.total_paid_before)) continue;

    SubgameAnalysis a = analyze_subgame(e, deviated);
    if (std::find(a.pure.begin(), a.pure.end(), sigma) == a.pure.end()) continue;
    double payoff_after = apply_transfers(e.base, deviated).payoff(sigma, player);
    if (!strictly_greater(payoff_after, best.payoff_before)) continue;

    bool better = !found || strictly_less(total_paid, best.total_paid_after) ||
                  (approx_eq(total_paid, best.total_paid_after) &&
                   strictly_greater(payoff_after, best.payoff_after));
    if (better) {
      best.deviation = deviated;
      best.payoff_after = payoff_after;
      best.total_paid_after = total_paid;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace egg
