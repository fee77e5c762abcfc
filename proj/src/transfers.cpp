#include "egg/transfers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "egg/numeric.hpp"

namespace egg {

TransferFunction TransferFunction::zero(const StrategicGame& shape) {
  TransferFunction t;
  t.players_ = shape.players();
  t.profiles_ = shape.profile_count();
  t.pay_.assign(static_cast<std::size_t>(t.profiles_) * t.players_ * t.players_, 0.0);
  return t;
}

void TransferFunction::set_pay(ProfileIndex profile, int giver, int receiver, double amount) {
  if (giver == receiver && amount != 0.0)
    throw std::invalid_argument("transfers to self must be zero");
  if (!(amount >= 0) || !std::isfinite(amount))
    throw std::invalid_argument("transfer amounts must be finite and >= 0");
  pay_[(static_cast<std::size_t>(profile) * players_ + giver) * players_ + receiver] = amount;
}

void TransferFunction::add_pay(ProfileIndex profile, int giver, int receiver, double amount) {
  set_pay(profile, giver, receiver, pay(profile, giver, receiver) + amount);
}

double TransferFunction::net_receipt(ProfileIndex profile, int player) const {
  double net = 0.0;
  for (int j = 0; j < players_; ++j)
    net += pay(profile, j, player) - pay(profile, player, j);
  return net;
}

double TransferFunction::total_paid_by(int player) const {
  double total = 0.0;
  for (ProfileIndex p = 0; p < profiles_; ++p)
    for (int j = 0; j < players_; ++j) total += pay(p, player, j);
  return total;
}

bool TransferFunction::is_zero() const {
  for (double x : pay_)
    if (x != 0.0) return false;
  return true;
}

void TransferFunction::overwrite_giver(int giver, const TransferFunction& other) {
  for (ProfileIndex p = 0; p < profiles_; ++p)
    for (int j = 0; j < players_; ++j)
      pay_[(static_cast<std::size_t>(p) * players_ + giver) * players_ + j] =
          other.pay(p, giver, j);
}

std::string TransferFunction::describe(const StrategicGame& game) const {
  std::string out;
  for (ProfileIndex p = 0; p < profiles_; ++p)
    for (int i = 0; i < players_; ++i)
      for (int j = 0; j < players_; ++j)
        if (pay(p, i, j) != 0.0) {
          if (!out.empty()) out += "; ";
          out += std::to_string(i) + " pays " + num_to_string(pay(p, i, j)) + " to " +
                 std::to_string(j) + " at " + game.profile_label(p);
        }
  return out.empty() ? "none" : out;
}

TaxationMechanism TaxationMechanism::zero(const StrategicGame& shape) {
  TaxationMechanism a;
  a.players_ = shape.players();
  a.profiles_ = shape.profile_count();
  a.tax_.assign(static_cast<std::size_t>(a.profiles_) * a.players_, 0.0);
  return a;
}

void TaxationMechanism::set_tax(ProfileIndex profile, int player, double amount) {
  if (!(amount >= 0) || !std::isfinite(amount))
    throw std::invalid_argument("taxes must be finite and >= 0");
  tax_[static_cast<std::size_t>(profile) * players_ + player] = amount;
}

void TaxationMechanism::add_tax(ProfileIndex profile, int player, double amount) {
  set_tax(profile, player, tax(profile, player) + amount);
}

bool TaxationMechanism::is_zero() const {
  for (double x : tax_)
    if (x != 0.0) return false;
  return true;
}

std::string TaxationMechanism::describe(const StrategicGame& game) const {
  std::string out;
  for (ProfileIndex p = 0; p < profiles_; ++p)
    for (int i = 0; i < players_; ++i)
      if (tax(p, i) != 0.0) {
        if (!out.empty()) out += "; ";
        out += std::to_string(i) + " taxed " + num_to_string(tax(p, i)) + " at " +
               game.profile_label(p);
      }
  return out.empty() ? "none" : out;
}

static void check_shape(const StrategicGame& game, int players, ProfileIndex profiles,
                        const char* what) {
  if (game.players() != players || game.profile_count() != profiles)
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

StrategicGame apply_transfers(const StrategicGame& game, const TransferFunction& t) {
  check_shape(game, t.players(), t.profiles(), "apply_transfers");
  StrategicGame out = game;
  for (ProfileIndex p = 0; p < game.profile_count(); ++p)
    for (int i = 0; i < game.players(); ++i)
      out.set_payoff(p, i, game.payoff(p, i) + t.net_receipt(p, i));
  return out;
}

StrategicGame apply_tax(const StrategicGame& game, const TaxationMechanism& a) {
  check_shape(game, a.players(), a.profiles(), "apply_tax");
  StrategicGame out = game;
  for (ProfileIndex p = 0; p < game.profile_count(); ++p)
    for (int i = 0; i < game.players(); ++i)
      out.set_payoff(p, i, game.payoff(p, i) - a.tax(p, i));
  return out;
}

// The folded game subtracts the full punishment charge |D|*kappa rather than
// kappa alone: that is what the penalized utilities actually lose, and it is
// what makes the zero-transfer utilities of the output match the t-utilities
// of the input entry for entry (offset boosts track uniform payoff shifts,
// and the output's own punishment factor vanishes).
StrategicGame normalize(const StrategicGame& base, const TransferFunction& t,
                        const BudgetConstraints& budgets, const GoalAssignment& goals,
                        std::span<const BoostSpec> boost) {
  StrategicGame updated = apply_transfers(base, t);
  PenalizedUtility pen = penalized_utility(updated, base, goals, boost, budgets);
  double charge = static_cast<double>(pen.violators.size()) * pen.kappa;
  StrategicGame out = updated;
  if (charge != 0.0) {
    for (ProfileIndex p = 0; p < base.profile_count(); ++p)
      for (int i = 0; i < base.players(); ++i)
        out.set_payoff(p, i, updated.payoff(p, i) - charge);
  }
  return out;
}

TaxationMechanism tax_from_transfers(const StrategicGame& game, const TransferFunction& t) {
  StrategicGame updated = apply_transfers(game, t);
  TaxationMechanism a = TaxationMechanism::zero(game);
  for (int i = 0; i < game.players(); ++i) {
    double max_gain = 0.0;
    for (ProfileIndex p = 0; p < game.profile_count(); ++p)
      max_gain = std::max(max_gain, updated.payoff(p, i) - game.payoff(p, i));
    for (ProfileIndex p = 0; p < game.profile_count(); ++p)
      a.set_tax(p, i, game.payoff(p, i) - updated.payoff(p, i) + max_gain);
  }
  return a;
}

}  // namespace egg
