#include "egg/game_file.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include "egg/numeric.hpp"

namespace egg {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

double parse_number(const std::string& tok, int line) {
  char* end = nullptr;
  double x = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty() || !std::isfinite(x))
    throw ParseError(line, "expected a number, got '" + tok + "'");
  return x;
}

int parse_int(const std::string& tok, int line) {
  double x = parse_number(tok, line);
  if (std::floor(x) != x) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return static_cast<int>(x);
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '#' || c == '"')
      return false;
  return true;
}

struct RawLine {
  int number;
  std::vector<std::string> tokens;
  std::string text;
};

std::vector<RawLine> tokenize(std::string_view text) {
  std::vector<RawLine> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    line = strip_comment(line);
    auto tokens = split_ws(line);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens), line});
  }
  return lines;
}

// ---- boolean documents -----------------------------------------------------

struct CostLine {
  int line;
  int player;
  std::string pattern;
  double value;
};

bool pattern_matches(const BooleanGame& b, const std::string& pattern, int valuation, int line) {
  if (pattern == "*") return true;
  std::size_t start = 0;
  while (start <= pattern.size()) {
    std::size_t end = pattern.find(',', start);
    std::string part =
        pattern.substr(start, end == std::string::npos ? pattern.size() - start : end - start);
    std::size_t eq = part.find('=');
    if (eq == std::string::npos) throw ParseError(line, "bad cost pattern item '" + part + "'");
    std::string atom = part.substr(0, eq);
    std::string val = part.substr(eq + 1);
    auto it = std::find(b.atoms.begin(), b.atoms.end(), atom);
    if (it == b.atoms.end()) throw ParseError(line, "undeclared atom '" + atom + "' in pattern");
    if (val != "0" && val != "1") throw ParseError(line, "atom value must be 0 or 1");
    bool want = val == "1";
    if (b.atom_value(valuation, static_cast<int>(it - b.atoms.begin())) != want) return false;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return true;
}

int outcome_from_token(const BooleanGame& b, const std::string& token, int line) {
  std::vector<int> seen(b.atom_count(), -1);
  std::size_t start = 0;
  while (start <= token.size()) {
    std::size_t end = token.find(',', start);
    std::string part =
        token.substr(start, end == std::string::npos ? token.size() - start : end - start);
    std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw ParseError(line, "bad outcome item '" + part + "' (want atom=0|1)");
    std::string atom = part.substr(0, eq);
    std::string val = part.substr(eq + 1);
    auto it = std::find(b.atoms.begin(), b.atoms.end(), atom);
    if (it == b.atoms.end()) throw ParseError(line, "undeclared atom '" + atom + "'");
    if (val != "0" && val != "1") throw ParseError(line, "atom value must be 0 or 1");
    int idx = static_cast<int>(it - b.atoms.begin());
    if (seen[idx] != -1) throw ParseError(line, "atom '" + atom + "' assigned twice");
    seen[idx] = val == "1" ? 1 : 0;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  int v = 0;
  for (int a = 0; a < b.atom_count(); ++a) {
    if (seen[a] == -1) throw ParseError(line, "outcome misses atom '" + b.atoms[a] + "'");
    v |= seen[a] << (b.atom_count() - 1 - a);
  }
  return v;
}

// ---- stanza collection ------------------------------------------------------

struct TransferLine {
  int line;
  int giver;
  std::string profile;
  int receiver;
  double amount;
};

struct TaxLine {
  int line;
  int player;
  std::string profile;
  double amount;
};

struct Collected {
  std::vector<TransferLine> transfers;
  std::vector<TaxLine> taxes;
};

bool collect_stanza(const RawLine& raw, Collected& out) {
  const auto& t = raw.tokens;
  if (t[0] == "transfer") {
    if (t.size() != 7 || t[3] != "->" || t[5] != ":")
      throw ParseError(raw.number, "want: transfer <giver> <profile> -> <receiver> : <amount>");
    out.transfers.push_back({raw.number, parse_int(t[1], raw.number), t[2],
                             parse_int(t[4], raw.number), parse_number(t[6], raw.number)});
    return true;
  }
  if (t[0] == "tax") {
    if (t.size() != 5 || t[3] != ":")
      throw ParseError(raw.number, "want: tax <player> <profile> : <amount>");
    out.taxes.push_back(
        {raw.number, parse_int(t[1], raw.number), t[2], parse_number(t[4], raw.number)});
    return true;
  }
  return false;
}

void resolve_stanzas(ParsedGame& g, const Collected& collected) {
  const int n = g.game.players();
  auto check_player = [&](int p, int line) {
    if (p < 0 || p >= n) throw ParseError(line, "player " + std::to_string(p) + " out of range");
  };
  if (!collected.transfers.empty()) {
    TransferFunction t = TransferFunction::zero(g.game);
    for (const auto& line : collected.transfers) {
      check_player(line.giver, line.line);
      check_player(line.receiver, line.line);
      if (line.giver == line.receiver)
        throw ParseError(line.line, "transfers to self are not allowed");
      if (line.amount < 0) throw ParseError(line.line, "transfer amounts must be >= 0");
      ProfileIndex p;
      try {
        p = resolve_profile_token(g, line.profile);
      } catch (const std::exception& ex) {
        throw ParseError(line.line, ex.what());
      }
      t.add_pay(p, line.giver, line.receiver, line.amount);
    }
    g.transfers = std::move(t);
  }
  if (!collected.taxes.empty()) {
    TaxationMechanism a = TaxationMechanism::zero(g.game);
    for (const auto& line : collected.taxes) {
      check_player(line.player, line.line);
      if (line.amount < 0) throw ParseError(line.line, "taxes must be >= 0");
      ProfileIndex p;
      try {
        p = resolve_profile_token(g, line.profile);
      } catch (const std::exception& ex) {
        throw ParseError(line.line, ex.what());
      }
      a.add_tax(p, line.player, line.amount);
    }
    g.taxes = std::move(a);
  }
}

ParsedGame parse_strategic(const std::vector<RawLine>& lines) {
  int players = -1;
  std::vector<std::vector<std::string>> strategies;
  struct PayoffLine {
    int line;
    std::string profile;
    std::vector<double> values;
  };
  std::vector<PayoffLine> payoffs;
  struct GoalLine {
    int line;
    int player;
    std::string profile;
  };
  std::vector<GoalLine> goal_lines;
  struct BoostLine {
    int line;
    int player;  // -1 = all
    BoostSpec spec;
  };
  std::vector<BoostLine> boost_lines;
  struct BudgetLine {
    int line;
    int player;
    std::string profile;
    double bound;
  };
  std::vector<BudgetLine> budget_lines;
  Collected collected;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const RawLine& raw = lines[li];
    const auto& t = raw.tokens;
    const std::string& kw = t[0];
    if (kw == "players") {
      if (players != -1) throw ParseError(raw.number, "duplicate players line");
      if (t.size() != 2) throw ParseError(raw.number, "want: players <n>");
      players = parse_int(t[1], raw.number);
      if (players < 1) throw ParseError(raw.number, "need at least one player");
      strategies.assign(players, {});
    } else if (kw == "strategy") {
      if (players == -1) throw ParseError(raw.number, "players line must come first");
      if (t.size() != 3) throw ParseError(raw.number, "want: strategy <player> <label>");
      int p = parse_int(t[1], raw.number);
      if (p < 0 || p >= players) throw ParseError(raw.number, "player out of range");
      if (!valid_label(t[2])) throw ParseError(raw.number, "bad strategy label '" + t[2] + "'");
      if (std::find(strategies[p].begin(), strategies[p].end(), t[2]) != strategies[p].end())
        throw ParseError(raw.number, "duplicate strategy label '" + t[2] + "'");
      strategies[p].push_back(t[2]);
    } else if (kw == "payoff") {
      if (t.size() < 3) throw ParseError(raw.number, "want: payoff <profile> <x0> <x1> ...");
      PayoffLine pl{raw.number, t[1], {}};
      for (std::size_t i = 2; i < t.size(); ++i) pl.values.push_back(parse_number(t[i], raw.number));
      payoffs.push_back(std::move(pl));
    } else if (kw == "goal") {
      if (t.size() != 3) throw ParseError(raw.number, "want: goal <player> <profile>");
      goal_lines.push_back({raw.number, parse_int(t[1], raw.number), t[2]});
    } else if (kw == "boost") {
      if (t.size() != 4) throw ParseError(raw.number, "want: boost <player|all> offset|regret <x>");
      int p = t[1] == "all" ? -1 : parse_int(t[1], raw.number);
      double amount = parse_number(t[3], raw.number);
      BoostSpec spec;
      if (t[2] == "offset") {
        spec = BoostSpec::offset(amount);
      } else if (t[2] == "regret") {
        spec = BoostSpec::regret(amount);
      } else {
        throw ParseError(raw.number, "boost family must be offset or regret");
      }
      boost_lines.push_back({raw.number, p, spec});
    } else if (kw == "budget") {
      if (t.size() != 4) throw ParseError(raw.number, "want: budget <player> <profile> <bound>");
      budget_lines.push_back(
          {raw.number, parse_int(t[1], raw.number), t[2], parse_number(t[3], raw.number)});
    } else if (!collect_stanza(raw, collected)) {
      throw ParseError(raw.number, "unknown keyword '" + kw + "'");
    }
  }

  if (players == -1) throw ParseError(1, "strategic games need a players line");
  for (int p = 0; p < players; ++p)
    if (strategies[p].empty())
      throw ParseError(1, "player " + std::to_string(p) + " has no strategies");

  ParsedGame g;
  g.game = StrategicGame(strategies);
  g.goals = GoalAssignment(g.game);

  std::vector<char> seen(static_cast<std::size_t>(g.game.profile_count()), 0);
  for (const auto& pl : payoffs) {
    auto idx = g.game.profile_from_label(pl.profile);
    if (!idx) throw ParseError(pl.line, "unknown profile '" + pl.profile + "'");
    if (static_cast<int>(pl.values.size()) != players)
      throw ParseError(pl.line, "expected " + std::to_string(players) + " payoff values");
    if (seen[static_cast<std::size_t>(*idx)])
      throw ParseError(pl.line, "duplicate payoff line for '" + pl.profile + "'");
    seen[static_cast<std::size_t>(*idx)] = 1;
    for (int i = 0; i < players; ++i) g.game.set_payoff(*idx, i, pl.values[i]);
  }
  for (ProfileIndex p = 0; p < g.game.profile_count(); ++p)
    if (!seen[static_cast<std::size_t>(p)])
      throw ParseError(1, "incomplete payoff tensor: missing '" + g.game.profile_label(p) + "'");

  for (const auto& gl : goal_lines) {
    if (gl.player < 0 || gl.player >= players) throw ParseError(gl.line, "player out of range");
    auto idx = g.game.profile_from_label(gl.profile);
    if (!idx) throw ParseError(gl.line, "unknown profile '" + gl.profile + "'");
    g.goals.add_goal(gl.player, *idx);
  }

  if (!boost_lines.empty()) {
    g.boost.assign(players, BoostSpec::offset(1.0));
    std::vector<char> have(players, 0);
    for (const auto& bl : boost_lines) {
      if (bl.player == -1) {
        for (int i = 0; i < players; ++i) {
          g.boost[i] = bl.spec;
          have[i] = 1;
        }
      } else {
        if (bl.player < 0 || bl.player >= players)
          throw ParseError(bl.line, "player out of range");
        g.boost[bl.player] = bl.spec;
        have[bl.player] = 1;
      }
    }
    for (int i = 0; i < players; ++i)
      if (!have[i])
        throw ParseError(boost_lines.front().line,
                         "boost missing for player " + std::to_string(i));
  }

  if (!budget_lines.empty()) {
    BudgetConstraints b = BudgetConstraints::from_payoffs(g.game);
    for (const auto& bl : budget_lines) {
      if (bl.player < 0 || bl.player >= players) throw ParseError(bl.line, "player out of range");
      auto idx = g.game.profile_from_label(bl.profile);
      if (!idx) throw ParseError(bl.line, "unknown profile '" + bl.profile + "'");
      if (bl.bound < g.game.payoff(*idx, bl.player) - kEps)
        throw ParseError(bl.line, "budget below payoff at '" + bl.profile + "'");
      b.set_bound(*idx, bl.player, bl.bound);
    }
    g.budgets = std::move(b);
  }

  resolve_stanzas(g, collected);
  return g;
}

ParsedGame parse_boolean(const std::vector<RawLine>& lines) {
  BooleanGame b;
  std::map<int, std::vector<int>> control;
  std::map<int, std::pair<int, std::string>> goal_text;  // player -> (line, text)
  std::vector<CostLine> cost_lines;
  bool have_epsilon = false;
  Collected collected;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const RawLine& raw = lines[li];
    const auto& t = raw.tokens;
    const std::string& kw = t[0];
    if (kw == "atoms") {
      if (!b.atoms.empty()) throw ParseError(raw.number, "duplicate atoms line");
      if (t.size() < 2) throw ParseError(raw.number, "want: atoms <a> <b> ...");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!valid_identifier(t[i])) throw ParseError(raw.number, "bad atom name '" + t[i] + "'");
        if (std::find(b.atoms.begin(), b.atoms.end(), t[i]) != b.atoms.end())
          throw ParseError(raw.number, "duplicate atom '" + t[i] + "'");
        b.atoms.push_back(t[i]);
      }
      if (b.atoms.size() > 24) throw ParseError(raw.number, "too many atoms");
    } else if (kw == "control") {
      if (t.size() < 3) throw ParseError(raw.number, "want: control <player> <atom> ...");
      int p = parse_int(t[1], raw.number);
      if (p < 0) throw ParseError(raw.number, "player out of range");
      if (control.count(p)) throw ParseError(raw.number, "duplicate control line for player");
      std::vector<int> owned;
      for (std::size_t i = 2; i < t.size(); ++i) {
        auto it = std::find(b.atoms.begin(), b.atoms.end(), t[i]);
        if (it == b.atoms.end())
          throw ParseError(raw.number, "undeclared atom '" + t[i] + "'");
        owned.push_back(static_cast<int>(it - b.atoms.begin()));
      }
      std::sort(owned.begin(), owned.end());
      control[p] = std::move(owned);
    } else if (kw == "goalformula") {
      if (t.size() < 3) throw ParseError(raw.number, "want: goalformula <player> \"<formula>\"");
      int p = parse_int(t[1], raw.number);
      std::size_t open = raw.text.find('"');
      std::size_t close = raw.text.rfind('"');
      if (open == std::string::npos || close <= open)
        throw ParseError(raw.number, "goal formula must be quoted");
      if (goal_text.count(p)) throw ParseError(raw.number, "duplicate goal for player");
      goal_text[p] = {raw.number, raw.text.substr(open + 1, close - open - 1)};
    } else if (kw == "cost") {
      if (t.size() != 4) throw ParseError(raw.number, "want: cost <player> <pattern> <c>");
      cost_lines.push_back(
          {raw.number, parse_int(t[1], raw.number), t[2], parse_number(t[3], raw.number)});
    } else if (kw == "epsilon") {
      if (t.size() != 2) throw ParseError(raw.number, "want: epsilon <e>");
      b.epsilon = parse_number(t[1], raw.number);
      if (!(b.epsilon > 0)) throw ParseError(raw.number, "epsilon must be positive");
      have_epsilon = true;
    } else if (!collect_stanza(raw, collected)) {
      throw ParseError(raw.number, "unknown keyword '" + kw + "'");
    }
  }
  (void)have_epsilon;  // epsilon defaults to 1

  if (b.atoms.empty()) throw ParseError(1, "boolean games need an atoms line");
  if (control.empty()) throw ParseError(1, "boolean games need control lines");
  int players = control.rbegin()->first + 1;
  for (int p = 0; p < players; ++p) {
    auto it = control.find(p);
    if (it == control.end())
      throw ParseError(1, "missing control line for player " + std::to_string(p));
    b.control.push_back(it->second);
  }

  for (int p = 0; p < players; ++p) {
    auto it = goal_text.find(p);
    if (it == goal_text.end())
      throw ParseError(1, "missing goalformula for player " + std::to_string(p));
    try {
      b.goal.push_back(parse_formula(it->second.second, b.atoms));
    } catch (const FormulaError& ex) {
      throw ParseError(it->second.first, std::string("goal formula: ") + ex.what());
    }
  }
  for (auto& [p, txt] : goal_text)
    if (p < 0 || p >= players) throw ParseError(txt.first, "goalformula player out of range");

  b.cost.assign(static_cast<std::size_t>(b.valuation_count()) * players, 0.0);
  for (const auto& cl : cost_lines) {
    if (cl.player < 0 || cl.player >= players) throw ParseError(cl.line, "player out of range");
    if (cl.value < 0) throw ParseError(cl.line, "costs must be >= 0");
    for (int v = 0; v < b.valuation_count(); ++v)
      if (pattern_matches(b, cl.pattern, v, cl.line)) b.set_cost(v, cl.player, cl.value);
  }
  b.validate();

  ParsedGame g;
  g.boolean = std::move(b);
  GoalGameTranslation tr = to_goal_game(*g.boolean);
  g.game = std::move(tr.game);
  g.goals = std::move(tr.goals);
  resolve_stanzas(g, collected);
  return g;
}

}  // namespace

ParsedGame parse_game_file(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty game file");
  const RawLine& head = lines[0];
  if (head.tokens[0] != "game" || head.tokens.size() != 2)
    throw ParseError(head.number, "first directive must be 'game strategic' or 'game boolean'");
  if (head.tokens[1] == "strategic") return parse_strategic(lines);
  if (head.tokens[1] == "boolean") return parse_boolean(lines);
  throw ParseError(head.number, "unknown game kind '" + head.tokens[1] + "'");
}

AuxiliaryStanzas parse_auxiliary_file(std::string_view text, const ParsedGame& context) {
  Collected collected;
  for (const RawLine& raw : tokenize(text))
    if (!collect_stanza(raw, collected))
      throw ParseError(raw.number, "unknown keyword '" + raw.tokens[0] + "' (want transfer/tax)");
  ParsedGame scratch;
  scratch.boolean = context.boolean;
  scratch.game = context.game;
  scratch.goals = context.goals;
  resolve_stanzas(scratch, collected);
  return {std::move(scratch.transfers), std::move(scratch.taxes)};
}

ProfileIndex resolve_profile_token(const ParsedGame& g, const std::string& token) {
  if (g.is_boolean()) {
    int v = outcome_from_token(*g.boolean, token, 0);
    GoalGameTranslation tr = to_goal_game(*g.boolean);
    return tr.profile_of_valuation[v];
  }
  auto idx = g.game.profile_from_label(token);
  if (!idx) throw std::invalid_argument("unknown profile '" + token + "'");
  return *idx;
}

std::string profile_token(const ParsedGame& g, ProfileIndex profile) {
  if (g.is_boolean()) {
    GoalGameTranslation tr = to_goal_game(*g.boolean);
    int v = tr.valuation_of_profile[static_cast<std::size_t>(profile)];
    std::string out;
    for (int a = 0; a < g.boolean->atom_count(); ++a) {
      if (a) out += ',';
      out += g.boolean->atoms[a];
      out += '=';
      out += g.boolean->atom_value(v, a) ? '1' : '0';
    }
    return out;
  }
  return g.game.profile_label(profile);
}

EndogenousGame ParsedGame::to_endogenous(BudgetMode mode) const {
  if (is_boolean()) return from_boolean(*boolean, mode);
  EndogenousGame e;
  e.base = game;
  e.goals = goals;
  if (has_boost()) {
    e.boost = boost;
  } else if (goals.empty()) {
    e.boost = uniform_boost(game.players(), BoostSpec::offset(1.0));  // never consulted
  } else {
    throw std::invalid_argument("game has goals but no boost directive");
  }
  e.budgets = budgets;
  return e;
}

StrategicGame ParsedGame::analysis_game() const {
  EndogenousGame e = to_endogenous();
  return instantiate(e.base, e.goals, e.boost);
}

std::string print_game_file(const ParsedGame& g) {
  std::ostringstream out;
  if (g.is_boolean()) {
    const BooleanGame& b = *g.boolean;
    out << "game boolean\n";
    out << "atoms";
    for (const auto& a : b.atoms) out << ' ' << a;
    out << '\n';
    for (int p = 0; p < b.players(); ++p) {
      out << "control " << p;
      for (int a : b.control[p]) out << ' ' << b.atoms[a];
      out << '\n';
    }
    for (int p = 0; p < b.players(); ++p)
      out << "goalformula " << p << " \"" << b.goal[p].to_string() << "\"\n";
    for (int p = 0; p < b.players(); ++p) {
      // Base value: the most common cost (smallest on ties), exceptions after.
      std::map<double, int> freq;
      for (int v = 0; v < b.valuation_count(); ++v) ++freq[b.cost_of(v, p)];
      double base = 0.0;
      int best = -1;
      for (const auto& [value, count] : freq)
        if (count > best) {
          best = count;
          base = value;
        }
      out << "cost " << p << " * " << num_to_string(base) << '\n';
      for (int v = 0; v < b.valuation_count(); ++v) {
        if (b.cost_of(v, p) == base) continue;
        out << "cost " << p << ' ';
        for (int a = 0; a < b.atom_count(); ++a) {
          if (a) out << ',';
          out << b.atoms[a] << '=' << (b.atom_value(v, a) ? '1' : '0');
        }
        out << ' ' << num_to_string(b.cost_of(v, p)) << '\n';
      }
    }
    out << "epsilon " << num_to_string(b.epsilon) << '\n';
  } else {
    const StrategicGame& game = g.game;
    out << "game strategic\n";
    out << "players " << game.players() << '\n';
    for (int p = 0; p < game.players(); ++p)
      for (const auto& label : game.strategy_labels(p))
        out << "strategy " << p << ' ' << label << '\n';
    for (ProfileIndex i = 0; i < game.profile_count(); ++i) {
      out << "payoff " << game.profile_label(i);
      for (int p = 0; p < game.players(); ++p) out << ' ' << num_to_string(game.payoff(i, p));
      out << '\n';
    }
    for (int p = 0; p < game.players(); ++p)
      for (ProfileIndex i = 0; i < game.profile_count(); ++i)
        if (g.goals.players() > 0 && g.goals.is_goal(p, i))
          out << "goal " << p << ' ' << game.profile_label(i) << '\n';
    if (g.has_boost()) {
      bool all_same = std::all_of(g.boost.begin(), g.boost.end(), [&](const BoostSpec& s) {
        return s.family == g.boost[0].family && s.amount == g.boost[0].amount;
      });
      auto emit = [&](const std::string& who, const BoostSpec& s) {
        out << "boost " << who << ' '
            << (s.family == BoostSpec::Family::Offset ? "offset" : "regret") << ' '
            << num_to_string(s.amount) << '\n';
      };
      if (all_same) {
        emit("all", g.boost[0]);
      } else {
        for (int p = 0; p < game.players(); ++p) emit(std::to_string(p), g.boost[p]);
      }
    }
    if (g.budgets) {
      for (int p = 0; p < game.players(); ++p)
        for (ProfileIndex i = 0; i < game.profile_count(); ++i)
          if (!approx_eq(g.budgets->bound(i, p), game.payoff(i, p)))
            out << "budget " << p << ' ' << game.profile_label(i) << ' '
                << num_to_string(g.budgets->bound(i, p)) << '\n';
    }
  }
  if (g.transfers) {
    const TransferFunction& t = *g.transfers;
    for (ProfileIndex p = 0; p < t.profiles(); ++p)
      for (int i = 0; i < t.players(); ++i)
        for (int j = 0; j < t.players(); ++j)
          if (t.pay(p, i, j) != 0.0)
            out << "transfer " << i << ' ' << profile_token(g, p) << " -> " << j << " : "
                << num_to_string(t.pay(p, i, j)) << '\n';
  }
  if (g.taxes) {
    const TaxationMechanism& a = *g.taxes;
    for (ProfileIndex p = 0; p < a.profiles(); ++p)
      for (int i = 0; i < a.players(); ++i)
        if (a.tax(p, i) != 0.0)
          out << "tax " << i << ' ' << profile_token(g, p) << " : "
              << num_to_string(a.tax(p, i)) << '\n';
  }
  return out.str();
}

}  // namespace egg
