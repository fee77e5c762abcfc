#ifndef EGG_TRANSFERS_HPP
#define EGG_TRANSFERS_HPP

#include <span>
#include <string>
#include <vector>

#include "egg/game.hpp"

namespace egg {

/// Pre-play commitment: pay(giver, profile, receiver) >= 0, nothing to self.
class TransferFunction {
 public:
  TransferFunction() = default;
  static TransferFunction zero(const StrategicGame& shape);

  double pay(ProfileIndex profile, int giver, int receiver) const {
    return pay_[(static_cast<std::size_t>(profile) * players_ + giver) * players_ + receiver];
  }
  void set_pay(ProfileIndex profile, int giver, int receiver, double amount);
  void add_pay(ProfileIndex profile, int giver, int receiver, double amount);

  double net_receipt(ProfileIndex profile, int player) const;
  double total_paid_by(int player) const;
  bool is_zero() const;
  // Replace one player's payments with those from `other` (same shape).
  void overwrite_giver(int giver, const TransferFunction& other);

  int players() const { return players_; }
  ProfileIndex profiles() const { return profiles_; }
  std::string describe(const StrategicGame& game) const;

 private:
  int players_ = 0;
  ProfileIndex profiles_ = 0;
  std::vector<double> pay_;
};

/// Principal-imposed sanction per player per outcome.
class TaxationMechanism {
 public:
  TaxationMechanism() = default;
  static TaxationMechanism zero(const StrategicGame& shape);

  double tax(ProfileIndex profile, int player) const {
    return tax_[static_cast<std::size_t>(profile) * players_ + player];
  }
  void set_tax(ProfileIndex profile, int player, double amount);
  void add_tax(ProfileIndex profile, int player, double amount);
  bool is_zero() const;

  int players() const { return players_; }
  ProfileIndex profiles() const { return profiles_; }
  std::string describe(const StrategicGame& game) const;

 private:
  int players_ = 0;
  ProfileIndex profiles_ = 0;
  std::vector<double> tax_;
};

/// Payoff update: each player gains what they receive and loses what they pay.
StrategicGame apply_transfers(const StrategicGame& game, const TransferFunction& t);

/// Entrywise subtraction of the sanctions.
StrategicGame apply_tax(const StrategicGame& game, const TaxationMechanism& a);

/// Folds a transfer function into the payoffs: the result carries the net
/// receipts minus the punishment charge of t(base), so playing it without
/// transfers yields the same penalized utilities as playing t on `base`.
/// The equality is exact for offset boosts; see notes in the implementation.
StrategicGame normalize(const StrategicGame& base, const TransferFunction& t,
                        const BudgetConstraints& budgets, const GoalAssignment& goals,
                        std::span<const BoostSpec> boost);

/// Taxation mechanism whose pure equilibria coincide with those of
/// apply_transfers(game, t): tax away the net receipt, shifted per player so
/// all sanctions stay non-negative.
TaxationMechanism tax_from_transfers(const StrategicGame& game, const TransferFunction& t);

}  // namespace egg

#endif
