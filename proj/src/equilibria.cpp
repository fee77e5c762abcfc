#include "egg/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "egg/numeric.hpp"

namespace egg {

bool is_pure_ne(const StrategicGame& game, ProfileIndex profile) {
  for (int i = 0; i < game.players(); ++i) {
    double here = game.payoff(profile, i);
    for (int s = 0; s < game.strategy_count(i); ++s) {
      if (s == game.strategy_at(profile, i)) continue;
      if (strictly_greater(game.payoff(game.replace(profile, i, s), i), here)) return false;
    }
  }
  return true;
}

std::vector<ProfileIndex> pure_ne(const StrategicGame& game) {
  std::vector<ProfileIndex> out;
  for (ProfileIndex p = 0; p < game.profile_count(); ++p)
    if (is_pure_ne(game, p)) out.push_back(p);
  return out;
}

namespace {

// Gaussian elimination with partial pivoting; false on (near-)singular systems.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> rhs,
                  std::vector<double>& x) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (std::fabs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return true;
}

// Mix for the opponent of `player` that makes `player` indifferent across
// `support`, found by solving the indifference system with the probabilities
// summing to one.
bool opponent_mix_for_indifference(const StrategicGame& game, int player,
                                   const std::vector<int>& support,
                                   const std::vector<int>& opp_support,
                                   std::vector<double>& mix) {
  const int other = 1 - player;
  const int k = static_cast<int>(opp_support.size());
  if (static_cast<int>(support.size()) != k) return false;

  std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
  std::vector<double> rhs(k, 0.0);
  std::vector<int> profile(2);
  auto payoff = [&](int own, int opp) {
    profile[player] = own;
    profile[other] = opp;
    return game.payoff(game.index_of(profile), player);
  };
  for (int row = 0; row + 1 < k; ++row)
    for (int col = 0; col < k; ++col)
      a[row][col] = payoff(support[row], opp_support[col]) -
                    payoff(support[row + 1], opp_support[col]);
  for (int col = 0; col < k; ++col) a[k - 1][col] = 1.0;
  rhs[k - 1] = 1.0;

  std::vector<double> x;
  if (!solve_square(std::move(a), std::move(rhs), x)) return false;
  mix.assign(game.strategy_count(other), 0.0);
  for (int col = 0; col < k; ++col) {
    if (x[col] < kEps) return false;  // interior solutions only
    mix[opp_support[col]] = x[col];
  }
  return true;
}

bool passes_best_response(const StrategicGame& game, const MixedProfile& delta) {
  for (int i = 0; i < game.players(); ++i) {
    double value = expected_utility(game, delta, i);
    for (int s = 0; s < game.strategy_count(i); ++s) {
      MixedProfile dev = delta;
      dev.probs[i].assign(game.strategy_count(i), 0.0);
      dev.probs[i][s] = 1.0;
      if (expected_utility(game, dev, i) > value + kBestResponseEps) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(pick);
      return;
    }
    for (int s = next; s < n; ++s) {
      pick.push_back(s);
      self(self, s + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<MixedProfile> mixed_ne_2p(const StrategicGame& game) {
  if (game.players() != 2) throw std::invalid_argument("mixed_ne_2p: exactly two players");
  std::vector<MixedProfile> found;

  const int n0 = game.strategy_count(0);
  const int n1 = game.strategy_count(1);
  for (int size = 1; size <= std::min(n0, n1); ++size) {
    for (const auto& s0 : subsets_of_size(n0, size)) {
      for (const auto& s1 : subsets_of_size(n1, size)) {
        MixedProfile delta;
        delta.probs.resize(2);
        if (size == 1) {
          delta.probs[0].assign(n0, 0.0);
          delta.probs[1].assign(n1, 0.0);
          delta.probs[0][s0[0]] = 1.0;
          delta.probs[1][s1[0]] = 1.0;
        } else {
          // player 0's indifference pins player 1's mix and vice versa
          if (!opponent_mix_for_indifference(game, 0, s0, s1, delta.probs[1])) continue;
          if (!opponent_mix_for_indifference(game, 1, s1, s0, delta.probs[0])) continue;
        }
        if (!passes_best_response(game, delta)) continue;
        bool duplicate = false;
        for (const auto& seen : found) {
          double dist = 0.0;
          for (int i = 0; i < 2; ++i)
            for (std::size_t s = 0; s < seen.probs[i].size(); ++s)
              dist = std::max(dist, std::fabs(seen.probs[i][s] - delta.probs[i][s]));
          if (dist < kBestResponseEps) {
            duplicate = true;
            break;
          }
        }
        if (!duplicate) found.push_back(std::move(delta));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const MixedProfile& a, const MixedProfile& b) {
    return a.probs < b.probs;
  });
  return found;
}

LexValue lex_value(const StrategicGame& game, const GoalAssignment& goals,
                   const MixedProfile& delta, int player) {
  LexValue v;
  for (ProfileIndex p = 0; p < game.profile_count(); ++p) {
    double prob = delta.probability(game, p);
    if (prob == 0.0) continue;
    if (goals.is_goal(player, p)) v.goal_prob += prob;
    v.exp_payoff += prob * game.payoff(p, player);
  }
  return v;
}

static Ordering compare_lex(const LexValue& a, const LexValue& b) {
  if (!approx_eq(a.goal_prob, b.goal_prob))
    return a.goal_prob < b.goal_prob ? Ordering::Less : Ordering::Greater;
  if (!approx_eq(a.exp_payoff, b.exp_payoff))
    return a.exp_payoff < b.exp_payoff ? Ordering::Less : Ordering::Greater;
  return Ordering::Equal;
}

Ordering lex_compare(const StrategicGame& game, const GoalAssignment& goals,
                     const MixedProfile& a, const MixedProfile& b, int player) {
  return compare_lex(lex_value(game, goals, a, player), lex_value(game, goals, b, player));
}

std::vector<std::vector<double>> simplex_grid(int dims, int k) {
  if (dims <= 0 || k <= 0) throw std::invalid_argument("simplex_grid: bad arguments");
  std::vector<std::vector<double>> out;
  std::vector<int> counts(dims, 0);
  auto rec = [&](auto&& self, int dim, int left) -> void {
    if (dim == dims - 1) {
      counts[dim] = left;
      std::vector<double> probs(dims);
      for (int d = 0; d < dims; ++d) probs[d] = static_cast<double>(counts[d]) / k;
      out.push_back(std::move(probs));
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[dim] = c;
      self(self, dim + 1, left - c);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<MixedProfile> lex_ne_search(const StrategicGame& game, const GoalAssignment& goals,
                                        int resolution) {
  if (resolution < 2) throw std::invalid_argument("lex_ne_search: resolution must be >= 2");
  const int n = game.players();
  std::vector<std::vector<std::vector<double>>> grids(n);
  for (int i = 0; i < n; ++i) grids[i] = simplex_grid(game.strategy_count(i), resolution);

  std::vector<MixedProfile> result;
  std::vector<std::size_t> pick(n, 0);

  // Per-strategy goal mass and expected payoff of player i against the
  // opponents' current mixes; a deviation's lex value is a dot product.
  std::vector<double> goal_of(0), pay_of(0);

  auto evaluate_candidate = [&](const MixedProfile& delta) {
    for (int i = 0; i < n; ++i) {
      const int count = game.strategy_count(i);
      goal_of.assign(count, 0.0);
      pay_of.assign(count, 0.0);
      for (ProfileIndex p = 0; p < game.profile_count(); ++p) {
        double opp_prob = 1.0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          opp_prob *= delta.probs[j][game.strategy_at(p, j)];
          if (opp_prob == 0.0) break;
        }
        if (opp_prob == 0.0) continue;
        int s = game.strategy_at(p, i);
        if (goals.is_goal(i, p)) goal_of[s] += opp_prob;
        pay_of[s] += opp_prob * game.payoff(p, i);
      }
      LexValue current;
      for (int s = 0; s < count; ++s) {
        current.goal_prob += delta.probs[i][s] * goal_of[s];
        current.exp_payoff += delta.probs[i][s] * pay_of[s];
      }
      for (const auto& alt : grids[i]) {
        LexValue dev;
        for (int s = 0; s < count; ++s) {
          dev.goal_prob += alt[s] * goal_of[s];
          dev.exp_payoff += alt[s] * pay_of[s];
        }
        if (compare_lex(dev, current) == Ordering::Greater) return false;
      }
    }
    return true;
  };

  while (true) {
    MixedProfile delta;
    delta.probs.resize(n);
    for (int i = 0; i < n; ++i) delta.probs[i] = grids[i][pick[i]];
    if (evaluate_candidate(delta)) result.push_back(std::move(delta));

    int dim = n - 1;
    while (dim >= 0 && ++pick[dim] == grids[dim].size()) pick[dim--] = 0;
    if (dim < 0) break;
  }
  return result;
}

std::vector<ProfileIndex> pure_lex_ne(const StrategicGame& game, const GoalAssignment& goals) {
  std::vector<ProfileIndex> out;
  for (ProfileIndex p = 0; p < game.profile_count(); ++p) {
    bool stable = true;
    for (int i = 0; i < game.players() && stable; ++i) {
      LexValue here{goals.is_goal(i, p) ? 1.0 : 0.0, game.payoff(p, i)};
      for (int s = 0; s < game.strategy_count(i); ++s) {
        if (s == game.strategy_at(p, i)) continue;
        ProfileIndex q = game.replace(p, i, s);
        LexValue dev{goals.is_goal(i, q) ? 1.0 : 0.0, game.payoff(q, i)};
        if (compare_lex(dev, here) == Ordering::Greater) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(p);
  }
  return out;
}

namespace {

struct SurvivorState {
  std::vector<std::vector<int>> kept;  // original strategy indices per player

  StrategicGame restricted(const StrategicGame& game, const GoalAssignment& goals,
                           GoalAssignment* out_goals) const {
    std::vector<std::vector<std::string>> labels(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (int s : kept[i]) labels[i].push_back(game.strategy_labels(static_cast<int>(i))[s]);
    StrategicGame sub{std::move(labels)};
    GoalAssignment sub_goals(sub);
    std::vector<int> original(kept.size());
    for (ProfileIndex p = 0; p < sub.profile_count(); ++p) {
      for (std::size_t i = 0; i < kept.size(); ++i)
        original[i] = kept[i][sub.strategy_at(p, static_cast<int>(i))];
      ProfileIndex src = game.index_of(original);
      for (int i = 0; i < sub.players(); ++i) {
        sub.set_payoff(p, i, game.payoff(src, i));
        if (goals.is_goal(i, src)) sub_goals.add_goal(i, p);
      }
    }
    if (out_goals) *out_goals = sub_goals;
    return sub;
  }
};

// Lex value of playing `mix` (over the restricted strategy list of `player`)
// against a pure opponent profile of the restricted game.
LexValue mix_value_at(const StrategicGame& sub, const GoalAssignment& sub_goals, int player,
                      const std::vector<double>& mix, ProfileIndex opp_profile) {
  LexValue v;
  for (int s = 0; s < sub.strategy_count(player); ++s) {
    if (mix[s] == 0.0) continue;
    ProfileIndex p = sub.replace(opp_profile, player, s);
    if (sub_goals.is_goal(player, p)) v.goal_prob += mix[s];
    v.exp_payoff += mix[s] * sub.payoff(p, player);
  }
  return v;
}

}  // namespace

DominanceResult dominance_eliminate(const StrategicGame& game, const GoalAssignment& goals,
                                    DominanceMode mode, DominatorKind dominators) {
  SurvivorState state;
  state.kept.resize(game.players());
  for (int i = 0; i < game.players(); ++i)
    for (int s = 0; s < game.strategy_count(i); ++s) state.kept[i].push_back(s);

  std::vector<EliminationStep> trace;
  bool changed = true;
  while (changed) {
    changed = false;
    GoalAssignment sub_goals;
    StrategicGame sub = state.restricted(game, goals, &sub_goals);

    for (int i = 0; i < sub.players() && !changed; ++i) {
      if (sub.strategy_count(i) <= 1) continue;

      // Candidate dominators: surviving pure strategies, plus grid mixes.
      std::vector<std::vector<double>> candidates;
      for (int s = 0; s < sub.strategy_count(i); ++s) {
        std::vector<double> pure(sub.strategy_count(i), 0.0);
        pure[s] = 1.0;
        candidates.push_back(std::move(pure));
      }
      if (dominators.grid) {
        auto grid = simplex_grid(sub.strategy_count(i), dominators.resolution);
        candidates.insert(candidates.end(), grid.begin(), grid.end());
      }

      for (int victim = 0; victim < sub.strategy_count(i) && !changed; ++victim) {
        std::vector<double> victim_mix(sub.strategy_count(i), 0.0);
        victim_mix[victim] = 1.0;
        for (const auto& dom : candidates) {
          if (dom[victim] > 1.0 - kEps) continue;  // the victim itself
          bool weakly_better = true;
          bool strictly_somewhere = false;
          bool strictly_everywhere = true;
          // Visit each opponent combination once: fix player i to strategy 0.
          for (ProfileIndex opp = 0; opp < sub.profile_count() && weakly_better; ++opp) {
            if (sub.strategy_at(opp, i) != 0) continue;
            LexValue dv = mix_value_at(sub, sub_goals, i, dom, opp);
            LexValue vv = mix_value_at(sub, sub_goals, i, victim_mix, opp);
            switch (compare_lex(dv, vv)) {
              case Ordering::Less:
                weakly_better = false;
                break;
              case Ordering::Equal:
                strictly_everywhere = false;
                break;
              case Ordering::Greater:
                strictly_somewhere = true;
                break;
            }
          }
          bool dominated = mode == DominanceMode::Strict
                               ? (weakly_better && strictly_everywhere)
                               : (weakly_better && strictly_somewhere);
          if (!dominated) continue;

          std::string dom_label;
          for (int s = 0; s < sub.strategy_count(i); ++s) {
            if (dom[s] == 0.0) continue;
            if (!dom_label.empty()) dom_label += " + ";
            if (dom[s] != 1.0) dom_label += num_to_string(dom[s]) + "*";
            dom_label += sub.strategy_labels(i)[s];
          }
          trace.push_back({i, sub.strategy_labels(i)[victim], dom_label});
          state.kept[i].erase(state.kept[i].begin() + victim);
          changed = true;
          break;
        }
      }
    }
  }

  DominanceResult result;
  result.kept = state.kept;
  result.game = state.restricted(game, goals, &result.goals);
  result.trace = std::move(trace);
  return result;
}

}  // namespace egg
