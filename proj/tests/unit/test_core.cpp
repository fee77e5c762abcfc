#include <doctest.h>

#include "helpers.hpp"

using namespace eggtest;

namespace {

// fig2 payoffs, profile order (U,L) (U,R) (D,L) (D,R); player 0 = Row.
StrategicGame fig2_game() {
  return make_game({2, 2}, {{-3, -3}, {0, -5}, {-5, 0}, {-1, -1}});
}

GoalAssignment fig2_goals(const StrategicGame& g) {
  // Row wants (D,R); Column wants (D,L) and (D,R).
  return goals_at(g, {{3}, {2, 3}});
}

}  // namespace

TEST_CASE("offset boost on the negated dilemma") {
  StrategicGame g = fig2_game();
  GoalAssignment goals = fig2_goals(g);
  BoostSpec spec = BoostSpec::offset(3);

  // Column's worst goal payoff (-1) lands delta above the best non-goal (-3).
  CHECK(boost_value(g, goals, spec, 1, -1) == doctest::Approx(0.0));
  CHECK(boost_value(g, goals, spec, 1, 0) == doctest::Approx(1.0));
  // Row: single goal at payoff -1, best non-goal 0.
  CHECK(boost_value(g, goals, spec, 0, -1) == doctest::Approx(3.0));
}

TEST_CASE("offset boost when every profile is a goal") {
  StrategicGame g = make_game({2, 2}, {{1, 0}, {2, 0}, {4, 0}, {5, 0}});
  GoalAssignment goals = goals_at(g, {{0, 1, 2, 3}, {}});
  // No non-goal states: reference drops to zero, so x - min_goal + delta.
  CHECK(boost_value(g, goals, BoostSpec::offset(3), 0, 5.0) == doctest::Approx(5.0 - 1.0 + 3.0));
}

TEST_CASE("boost_value rejects goalless players and non-finite input") {
  StrategicGame g = fig2_game();
  GoalAssignment none(g);
  CHECK_THROWS_AS(boost_value(g, none, BoostSpec::offset(1), 0, 0.0), std::invalid_argument);
  GoalAssignment goals = fig2_goals(g);
  CHECK_THROWS_AS(boost_value(g, goals, BoostSpec::offset(1), 0,
                              std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("instantiating the negated dilemma") {
  StrategicGame g = fig2_game();
  StrategicGame u = instantiate(g, fig2_goals(g), BoostSpec::offset(3));
  std::vector<std::vector<double>> expected = {{-3, -3}, {0, -5}, {-5, 1}, {3, 0}};
  for (ProfileIndex p = 0; p < 4; ++p)
    for (int i = 0; i < 2; ++i) CHECK(u.payoff(p, i) == expected[p][i]);
}

TEST_CASE("instantiate with no goals is the identity") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    StrategicGame g = random_game(rng, 2);
    GoalAssignment goals(g);
    StrategicGame u = instantiate(g, goals, BoostSpec::offset(2));
    for (ProfileIndex p = 0; p < g.profile_count(); ++p)
      for (int i = 0; i < g.players(); ++i) CHECK(u.payoff(p, i) == g.payoff(p, i));
  }
}

TEST_CASE("instantiate agrees with per-profile boost recomputation") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    StrategicGame g = random_game(rng, 2, 2);
    GoalAssignment goals = random_goals(rng, g, 0.4);
    BoostSpec spec = BoostSpec::offset(rng.uniform(1, 4));
    StrategicGame u = instantiate(g, goals, spec);
    for (ProfileIndex p = 0; p < g.profile_count(); ++p)
      for (int i = 0; i < g.players(); ++i) {
        double expected = goals.is_goal(i, p) && goals.any_goal(i)
                              ? boost_value(g, goals, spec, i, g.payoff(p, i))
                              : g.payoff(p, i);
        CHECK(u.payoff(p, i) == doctest::Approx(expected));
      }
  }
}

TEST_CASE("quasi-dichotomy of instantiated games") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    bool regret = rng.flip();
    // The regret boost models cost games; keep payoffs non-positive there.
    StrategicGame g = regret ? random_game(rng, 2, 3, -6, 0) : random_game(rng, 2, 3);
    GoalAssignment goals = random_goals(rng, g, 0.4);
    BoostSpec spec = regret ? BoostSpec::regret(1) : BoostSpec::offset(2);
    StrategicGame u = instantiate(g, goals, spec);
    for (int i = 0; i < g.players(); ++i)
      for (ProfileIndex a = 0; a < g.profile_count(); ++a)
        for (ProfileIndex b = 0; b < g.profile_count(); ++b)
          if (goals.is_goal(i, a) && !goals.is_goal(i, b))
            CHECK(u.payoff(a, i) > u.payoff(b, i));
  }
}

TEST_CASE("boost monotonicity") {
  StrategicGame g = fig2_game();
  GoalAssignment goals = fig2_goals(g);
  for (BoostSpec spec : {BoostSpec::offset(2), BoostSpec::regret(1)}) {
    double prev = -1e9;
    for (double x : {-4.0, -1.0, 0.0, 0.5, 3.0}) {
      double bx = boost_value(g, goals, spec, 1, x);
      CHECK(bx > prev);
      prev = bx;
    }
  }
}

TEST_CASE("offset boosts track non-goal payoffs exactly, regret boosts inversely") {
  StrategicGame g = fig2_game();
  GoalAssignment goals = fig2_goals(g);
  const double c = 2.5;

  StrategicGame raised = g;
  for (ProfileIndex p = 0; p < g.profile_count(); ++p)
    if (!goals.is_goal(1, p)) raised.set_payoff(p, 1, g.payoff(p, 1) + c);
  CHECK(boost_value(raised, goals, BoostSpec::offset(3), 1, 0.0) ==
        doctest::Approx(boost_value(g, goals, BoostSpec::offset(3), 1, 0.0) + c));

  StrategicGame all_raised = g;
  for (ProfileIndex p = 0; p < g.profile_count(); ++p)
    for (int i = 0; i < 2; ++i) all_raised.set_payoff(p, i, g.payoff(p, i) + c);
  CHECK(boost_value(all_raised, goals, BoostSpec::regret(1), 1, 0.0) <=
        boost_value(g, goals, BoostSpec::regret(1), 1, 0.0));
}

TEST_CASE("penalized utilities without excess reduce to instantiation") {
  StrategicGame g = fig2_game();
  GoalAssignment goals = fig2_goals(g);
  auto boost = uniform_boost(2, BoostSpec::offset(3));
  BudgetConstraints budgets = BudgetConstraints::from_payoffs(g);
  PenalizedUtility pen = penalized_utility(g, g, goals, boost, budgets);
  CHECK(pen.kappa == 0.0);
  CHECK(pen.violators.empty());
  StrategicGame u = instantiate(g, goals, boost);
  for (ProfileIndex p = 0; p < 4; ++p)
    for (int i = 0; i < 2; ++i) CHECK(pen.utilities.payoff(p, i) == u.payoff(p, i));
}

TEST_CASE("punishment factor on a one-profile game") {
  StrategicGame base = make_game({1, 1}, {{1, 3}});
  StrategicGame updated = make_game({1, 1}, {{4, 0}});
  BudgetConstraints budgets(base, 0.0);
  budgets.set_bound(0, 0, 1);
  budgets.set_bound(0, 1, 5);
  GoalAssignment goals(base);
  auto boost = uniform_boost(2, BoostSpec::offset(1));
  PenalizedUtility pen = penalized_utility(updated, base, goals, boost, budgets);
  CHECK(pen.kappa == doctest::Approx(3.0));
  CHECK(pen.violators == std::vector<int>{0});
  CHECK(pen.utilities.payoff(0, 0) == doctest::Approx(1.0));
  CHECK(pen.utilities.payoff(0, 1) == doctest::Approx(-3.0));
}

TEST_CASE("motivating example: accepted transfer stays within effective-cost budgets") {
  EndogenousGame e = from_boolean(load_fixture("motivating.bool").boolean.value());
  TransferFunction t = TransferFunction::zero(e.base);
  ProfileIndex on_on = e.base.profile_from_label("sa1,sb1").value();
  t.set_pay(on_on, 1, 0, 3);
  StrategicGame updated = apply_transfers(e.base, t);
  PenalizedUtility pen = penalized_utility(updated, e.base, e.goals, e.boost, *e.budgets);
  CHECK(pen.kappa == 0.0);

  // Brute force over the four valuations with the cost-game utility rule.
  const BooleanGame& b = e.boolean->game;
  std::vector<double> eff_a = {4, 4, 5, 2}, eff_b = {2, 2, 2, 5};
  double mu_a = 5, mu_b = 5;
  for (int v = 0; v < 4; ++v) {
    ProfileIndex p = e.boolean->profile_of_valuation[v];
    double expect_a = b.satisfies_goal(v, 0) ? 1 + mu_a - eff_a[v] : -eff_a[v];
    double expect_b = b.satisfies_goal(v, 1) ? 1 + mu_b - eff_b[v] : -eff_b[v];
    CHECK(pen.utilities.payoff(p, 0) == doctest::Approx(expect_a));
    CHECK(pen.utilities.payoff(p, 1) == doctest::Approx(expect_b));
  }
  CHECK(pen.utilities.payoff(on_on, 0) == doctest::Approx(4.0));
  CHECK(pen.utilities.payoff(on_on, 1) == doctest::Approx(1.0));
}

TEST_CASE("expected utility") {
  StrategicGame fig1 = make_game({2, 2}, {{3, 3}, {0, 5}, {5, 0}, {1, 1}});
  SUBCASE("pure profile") {
    MixedProfile pure = MixedProfile::pure(fig1, 3);
    CHECK(expected_utility(fig1, pure, 0) == doctest::Approx(1.0));
  }
  SUBCASE("uniform profile") {
    MixedProfile uniform{{{0.5, 0.5}, {0.5, 0.5}}};
    CHECK(expected_utility(fig1, uniform, 1) == doctest::Approx(2.25));
  }
  SUBCASE("constant payoffs") {
    StrategicGame constant = make_game({2, 2}, {{7, 0}, {7, 0}, {7, 0}, {7, 0}});
    MixedProfile d{{{0.3, 0.7}, {0.9, 0.1}}};
    CHECK(expected_utility(constant, d, 0) == doctest::Approx(7.0));
  }
  SUBCASE("linearity in one player's vector") {
    Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
      StrategicGame g = random_game(rng, 2, 2);
      MixedProfile a{{{0.2, 0.8}, {0.6, 0.4}}};
      MixedProfile b{{{0.9, 0.1}, {0.6, 0.4}}};
      double lambda = 0.25;
      MixedProfile mix = a;
      for (int s = 0; s < 2; ++s)
        mix.probs[0][s] = lambda * a.probs[0][s] + (1 - lambda) * b.probs[0][s];
      CHECK(expected_utility(g, mix, 0) ==
            doctest::Approx(lambda * expected_utility(g, a, 0) +
                            (1 - lambda) * expected_utility(g, b, 0)));
    }
  }
}

TEST_CASE("affine transforms") {
  SUBCASE("identity") {
    StrategicGame g = fig2_game();
    std::vector<double> one{1, 1}, zero{0, 0};
    StrategicGame t = affine_transform(g, one, zero);
    for (ProfileIndex p = 0; p < 4; ++p)
      for (int i = 0; i < 2; ++i) CHECK(t.payoff(p, i) == g.payoff(p, i));
  }
  SUBCASE("coordination game shifted by one") {
    StrategicGame g = make_game({2, 2}, {{2, 2}, {0, 0}, {0, 0}, {1, 1}});
    std::vector<double> one{1, 1}, shift{1, 1};
    StrategicGame t = affine_transform(g, one, shift);
    CHECK(t.payoff(0, 0) == 3);
    CHECK(t.payoff(1, 0) == 1);
    CHECK(t.payoff(3, 1) == 2);
  }
  SUBCASE("non-positive scale is rejected") {
    StrategicGame g = fig2_game();
    std::vector<double> bad{1, 0}, zero{0, 0};
    CHECK_THROWS_AS(affine_transform(g, bad, zero), std::invalid_argument);
  }
}
