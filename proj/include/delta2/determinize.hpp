#pragma once

#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "delta2/alternating.hpp"
#include "delta2/normalize.hpp"
#include "delta2/posbool.hpp"
#include "delta2/word.hpp"

namespace delta2 {

// ---------------------------------------------------------------------------
// Deterministic automata with one of five acceptance variants.

struct BuchiAcc {
  std::vector<StateId> acc;  // visit infinitely often
};
struct CoBuchiAcc {
  std::vector<StateId> rej;  // visit finitely often
};
struct RabinPair {
  std::vector<StateId> fin;
  std::vector<StateId> inf;
};
struct RabinAcc {
  std::vector<RabinPair> pairs;  // non-empty
};
struct TerminalAcc {
  bool accepting_sink = true;       // terminal-accepting vs terminal-rejecting
  std::optional<StateId> sink;      // absent when the sink is unreachable
};
struct WeakAcc {
  std::vector<StateId> acc;
  std::vector<int> scc_of;  // witness: each SCC lies inside or outside acc
};

using Acceptance =
    std::variant<BuchiAcc, CoBuchiAcc, RabinAcc, TerminalAcc, WeakAcc>;

struct DetAutomaton {
  Alphabet alphabet;
  std::vector<std::string> state_names;  // canonical construction keys
  StateId initial = 0;                   // BFS numbering starts here
  std::vector<std::vector<StateId>> delta;  // [state][letter], total
  Acceptance acceptance;

  std::size_t num_states() const { return delta.size(); }
};

namespace detail {

constexpr std::size_t kMaxDetStates = 1u << 20;

inline bool in_sorted(const std::vector<StateId>& set, StateId q) {
  return std::binary_search(set.begin(), set.end(), q);
}

}  // namespace detail

// Runs the automaton on the lasso: through the prefix, then around the cycle
// until (state, cycle position) repeats; the visited loop decides acceptance.
inline bool det_membership(const DetAutomaton& d, const LassoWord& w) {
  if (!(d.alphabet == w.alphabet))
    throw std::invalid_argument("det_membership: alphabet mismatch");
  StateId q = d.initial;
  for (Letter a : w.prefix) q = d.delta[q][a];

  std::map<std::pair<StateId, std::size_t>, std::size_t> seen;
  std::vector<StateId> trail;
  std::size_t pos = 0;
  while (true) {
    auto key = std::make_pair(q, pos);
    auto it = seen.find(key);
    if (it != seen.end()) {
      std::vector<StateId> loop(trail.begin() + it->second, trail.end());
      std::sort(loop.begin(), loop.end());
      loop.erase(std::unique(loop.begin(), loop.end()), loop.end());
      const auto& acc = d.acceptance;
      if (std::holds_alternative<BuchiAcc>(acc)) {
        for (StateId s : loop)
          if (detail::in_sorted(std::get<BuchiAcc>(acc).acc, s)) return true;
        return false;
      }
      if (std::holds_alternative<CoBuchiAcc>(acc)) {
        for (StateId s : loop)
          if (detail::in_sorted(std::get<CoBuchiAcc>(acc).rej, s)) return false;
        return true;
      }
      if (std::holds_alternative<RabinAcc>(acc)) {
        for (const RabinPair& pair : std::get<RabinAcc>(acc).pairs) {
          bool fin_clean = true, inf_hit = false;
          for (StateId s : loop) {
            if (detail::in_sorted(pair.fin, s)) fin_clean = false;
            if (detail::in_sorted(pair.inf, s)) inf_hit = true;
          }
          if (fin_clean && inf_hit) return true;
        }
        return false;
      }
      if (std::holds_alternative<TerminalAcc>(acc)) {
        const auto& t = std::get<TerminalAcc>(acc);
        bool hit = t.sink && detail::in_sorted(loop, *t.sink);
        return t.accepting_sink ? hit : !hit;
      }
      const auto& wk = std::get<WeakAcc>(acc);
      for (StateId s : loop)
        if (detail::in_sorted(wk.acc, s)) return true;
      return false;
    }
    seen.emplace(key, trail.size());
    trail.push_back(q);
    q = d.delta[q][w.cycle[pos]];
    pos = (pos + 1) % w.cycle.size();
  }
}

// ---------------------------------------------------------------------------
// Breakpoint determinisation of AWW[2,R] into a deterministic co-Buchi
// automaton.  A state is a pair (Levels, Promising) of canonical antichains;
// Promising lives over the accepting states.  Reading a letter:
//
//   (q, p)  ->  (delta(q,a), delta(p,a))                   if p != ff
//   (q, p)  ->  (delta(q,a), delta(q,a)[ff / Q\alpha])     otherwise
//
// The rejecting set holds the states with Promising == ff.  Promising is
// kept inside B+(alpha) by erasing models that leave alpha; on automata that
// satisfy the class precondition this never changes anything (accepting
// states only lead to accepting states), while on out-of-class inputs the
// tracked obligation collapses -- see the regression test around the
// height-3 example automaton.

namespace detail {

inline PosBool delta_lift(const AlternatingAutomaton& a, const PosBool& theta,
                          Letter sigma) {
  PosBool out = PosBool::ff();
  for (const auto& model : theta.minimal_models()) {
    PosBool conj = PosBool::tt();
    for (StateId q : model) conj = conj & a.delta[q][sigma];
    out = out | conj;
  }
  return out;
}

inline DetAutomaton breakpoint_cobuchi_unchecked(const AlternatingAutomaton& a) {
  const StateSet non_alpha = a.non_alpha();
  using Key = std::pair<PosBool, PosBool>;
  std::map<Key, StateId> ids;
  std::vector<Key> work;

  DetAutomaton d;
  d.alphabet = a.alphabet;
  const std::size_t letters = a.alphabet.letter_count();

  auto intern = [&](const PosBool& levels, const PosBool& promising) {
    Key key{levels, promising};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const StateId id = static_cast<StateId>(work.size());
    if (work.size() >= detail::kMaxDetStates)
      throw std::runtime_error("breakpoint: state space too large");
    ids.emplace(key, id);
    work.push_back(key);
    d.state_names.push_back("L=" + levels.to_string() +
                            " P=" + promising.to_string());
    return id;
  };

  intern(a.initial, PosBool::ff());
  for (StateId q = 0; q < work.size(); ++q) {
    const Key current = work[q];  // copy: work may reallocate
    std::vector<StateId> row;
    row.reserve(letters);
    for (Letter sigma = 0; sigma < letters; ++sigma) {
      PosBool levels = delta_lift(a, current.first, sigma);
      PosBool promising =
          current.second.is_ff()
              ? levels.substitute_ff(non_alpha)
              : delta_lift(a, current.second, sigma).substitute_ff(non_alpha);
      row.push_back(intern(levels, promising));
    }
    d.delta.push_back(std::move(row));
  }

  CoBuchiAcc acc;
  for (StateId q = 0; q < work.size(); ++q)
    if (work[q].second.is_ff()) acc.rej.push_back(q);
  d.acceptance = std::move(acc);
  return d;
}

inline AlternatingAutomaton dualize(const AlternatingAutomaton& a) {
  AlternatingAutomaton out;
  out.alphabet = a.alphabet;
  out.states = a.states;
  out.constructed_states = a.constructed_states;
  for (auto& s : out.states) s.accepting = !s.accepting;
  out.initial = a.initial.dual();
  out.delta.reserve(a.delta.size());
  for (const auto& row : a.delta) {
    std::vector<PosBool> drow;
    drow.reserve(row.size());
    for (const auto& theta : row) drow.push_back(theta.dual());
    out.delta.push_back(std::move(drow));
  }
  return out;
}

inline void require_class(const AlternatingAutomaton& a, bool want_accepting,
                          int max_height, const char* who) {
  auto cls = try_classify(a);
  if (!cls) throw std::invalid_argument(std::string(who) + ": not weak");
  if (cls->height > max_height)
    throw std::invalid_argument(std::string(who) + ": height " +
                                std::to_string(cls->height) + " exceeds " +
                                std::to_string(max_height));
  const bool ok = want_accepting ? cls->initial_only_accepting
                                 : cls->initial_only_rejecting;
  if (!ok)
    throw std::invalid_argument(std::string(who) +
                                ": initial condition has the wrong polarity");
}

}  // namespace detail

// AWW[2,R] -> deterministic co-Buchi.
inline DetAutomaton breakpoint_cobuchi(const AlternatingAutomaton& a_in) {
  AlternatingAutomaton a = restrict_to_reachable(a_in, a_in.initial);
  detail::require_class(a, /*want_accepting=*/false, 2, "breakpoint_cobuchi");
  return detail::breakpoint_cobuchi_unchecked(a);
}

// AWW[2,A] -> deterministic Buchi, via the dual automaton: complementing the
// alternation structure yields an AWW[2,R] for the complement language; the
// co-Buchi construction runs on it and the acceptance condition is swapped
// back (Fin <-> Inf on the same deterministic structure).
inline DetAutomaton breakpoint_buchi(const AlternatingAutomaton& a_in) {
  AlternatingAutomaton a = restrict_to_reachable(a_in, a_in.initial);
  detail::require_class(a, /*want_accepting=*/true, 2, "breakpoint_buchi");
  DetAutomaton d = detail::breakpoint_cobuchi_unchecked(detail::dualize(a));
  BuchiAcc acc{std::move(std::get<CoBuchiAcc>(d.acceptance).rej)};
  d.acceptance = std::move(acc);
  return d;
}

// ---------------------------------------------------------------------------
// Products.

namespace detail {

struct Product {
  DetAutomaton automaton;                        // skeleton, acceptance unset
  std::vector<std::pair<StateId, StateId>> origin;  // product state -> pair
};

inline Product product_skeleton(const DetAutomaton& d1, const DetAutomaton& d2) {
  if (!(d1.alphabet == d2.alphabet))
    throw std::invalid_argument("product: alphabet mismatch");
  Product p;
  p.automaton.alphabet = d1.alphabet;
  const std::size_t letters = d1.alphabet.letter_count();

  std::map<std::pair<StateId, StateId>, StateId> ids;
  auto intern = [&](StateId a, StateId b) {
    auto key = std::make_pair(a, b);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const StateId id = static_cast<StateId>(p.origin.size());
    if (p.origin.size() >= kMaxDetStates)
      throw std::runtime_error("product: state space too large");
    ids.emplace(key, id);
    p.origin.push_back(key);
    p.automaton.state_names.push_back("(" + d1.state_names[a] + " , " +
                                      d2.state_names[b] + ")");
    return id;
  };

  intern(d1.initial, d2.initial);
  for (StateId q = 0; q < p.origin.size(); ++q) {
    const auto [a, b] = p.origin[q];
    std::vector<StateId> row;
    row.reserve(letters);
    for (Letter sigma = 0; sigma < letters; ++sigma)
      row.push_back(intern(d1.delta[a][sigma], d2.delta[b][sigma]));
    p.automaton.delta.push_back(std::move(row));
  }
  return p;
}

}  // namespace detail

// DBW x DCW -> DRW with a single pair: Fin(states whose co-Buchi component
// is rejecting) & Inf(states whose Buchi component is accepting).
inline DetAutomaton intersect_dbw_dcw(const DetAutomaton& buchi,
                                      const DetAutomaton& cobuchi) {
  const auto& bacc = std::get<BuchiAcc>(buchi.acceptance);
  const auto& cacc = std::get<CoBuchiAcc>(cobuchi.acceptance);
  detail::Product p = detail::product_skeleton(buchi, cobuchi);
  RabinPair pair;
  for (StateId q = 0; q < p.origin.size(); ++q) {
    if (detail::in_sorted(cacc.rej, p.origin[q].second)) pair.fin.push_back(q);
    if (detail::in_sorted(bacc.acc, p.origin[q].first)) pair.inf.push_back(q);
  }
  p.automaton.acceptance = RabinAcc{{std::move(pair)}};
  return p.automaton;
}

// DRW union: product states, pairs of both operands lifted through the
// projections.
inline DetAutomaton union_rabin(const DetAutomaton& d1, const DetAutomaton& d2) {
  const auto& r1 = std::get<RabinAcc>(d1.acceptance);
  const auto& r2 = std::get<RabinAcc>(d2.acceptance);
  detail::Product p = detail::product_skeleton(d1, d2);
  RabinAcc acc;
  for (const RabinPair& pair : r1.pairs) {
    RabinPair lifted;
    for (StateId q = 0; q < p.origin.size(); ++q) {
      if (detail::in_sorted(pair.fin, p.origin[q].first)) lifted.fin.push_back(q);
      if (detail::in_sorted(pair.inf, p.origin[q].first)) lifted.inf.push_back(q);
    }
    acc.pairs.push_back(std::move(lifted));
  }
  for (const RabinPair& pair : r2.pairs) {
    RabinPair lifted;
    for (StateId q = 0; q < p.origin.size(); ++q) {
      if (detail::in_sorted(pair.fin, p.origin[q].second)) lifted.fin.push_back(q);
      if (detail::in_sorted(pair.inf, p.origin[q].second)) lifted.inf.push_back(q);
    }
    acc.pairs.push_back(std::move(lifted));
  }
  p.automaton.acceptance = std::move(acc);
  return p.automaton;
}

// Canonical empty-language DRW (one dead pair keeps the pair list non-empty).
inline DetAutomaton empty_rabin(const Alphabet& alphabet) {
  DetAutomaton d;
  d.alphabet = alphabet;
  d.state_names = {"dead"};
  d.delta = {std::vector<StateId>(alphabet.letter_count(), 0)};
  d.acceptance = RabinAcc{{RabinPair{}}};
  return d;
}

// ---------------------------------------------------------------------------
// Full AWW[2] determinisation: split every minimal model S of the initial
// condition into its accepting part (Buchi breakpoint) and rejecting part
// (co-Buchi breakpoint), intersect into a one-pair DRW, and union the
// results; at most |M_theta0| pairs.
inline DetAutomaton determinize_aww2(const AlternatingAutomaton& a_in) {
  AlternatingAutomaton a = restrict_to_reachable(a_in, a_in.initial);
  auto cls = try_classify(a);
  if (!cls) throw std::invalid_argument("determinize_aww2: not weak");
  if (cls->height > 2)
    throw std::invalid_argument("determinize_aww2: height exceeds 2");

  std::optional<DetAutomaton> result;
  for (const StateSet& model : a.initial.minimal_models()) {
    StateSet acc_part, rej_part;
    for (StateId q : model)
      (a.states[q].accepting ? acc_part : rej_part).push_back(q);
    DetAutomaton b = breakpoint_buchi(
        with_initial(a, PosBool::from_models({acc_part})));
    DetAutomaton c = breakpoint_cobuchi(
        with_initial(a, PosBool::from_models({rej_part})));
    DetAutomaton d = intersect_dbw_dcw(b, c);
    result = result ? union_rabin(*result, d) : std::move(d);
  }
  if (!result) return empty_rabin(a.alphabet);
  return *result;
}

// ---------------------------------------------------------------------------
// AWW[1] determinisation.  Tracking Levels alone suffices: with a rejecting
// initial condition every infinite branch is rejecting, so acceptance means
// the level formula reaches tt (all obligations discharged); dually with an
// accepting initial condition rejection means reaching ff.  Mixed initial
// conditions split per minimal model and combine with weak products.

namespace detail {

// Subset automaton over level formulas with a terminal acceptance keyed on
// reaching tt (accepting_sink) or ff (rejecting sink).
inline DetAutomaton levels_terminal(const AlternatingAutomaton& a,
                                    const PosBool& initial,
                                    bool accepting_sink) {
  DetAutomaton d;
  d.alphabet = a.alphabet;
  const std::size_t letters = a.alphabet.letter_count();
  std::map<PosBool, StateId> ids;
  std::vector<PosBool> work;
  auto intern = [&](const PosBool& theta) {
    auto it = ids.find(theta);
    if (it != ids.end()) return it->second;
    const StateId id = static_cast<StateId>(work.size());
    if (work.size() >= kMaxDetStates)
      throw std::runtime_error("aww1_to_weak: state space too large");
    ids.emplace(theta, id);
    work.push_back(theta);
    d.state_names.push_back("L=" + theta.to_string());
    return id;
  };
  intern(initial);
  for (StateId q = 0; q < work.size(); ++q) {
    const PosBool current = work[q];
    std::vector<StateId> row;
    row.reserve(letters);
    for (Letter sigma = 0; sigma < letters; ++sigma)
      row.push_back(intern(delta_lift(a, current, sigma)));
    d.delta.push_back(std::move(row));
  }
  TerminalAcc acc;
  acc.accepting_sink = accepting_sink;
  const PosBool target = accepting_sink ? PosBool::tt() : PosBool::ff();
  auto it = ids.find(target);
  if (it != ids.end()) acc.sink = it->second;
  d.acceptance = std::move(acc);
  return d;
}

// Loop-acceptance predicate per state; sound for terminal and weak automata
// because a deterministic loop never mixes acceptance classes.
inline std::vector<bool> loop_accepting_flags(const DetAutomaton& d) {
  std::vector<bool> out(d.num_states(), false);
  if (std::holds_alternative<TerminalAcc>(d.acceptance)) {
    const auto& t = std::get<TerminalAcc>(d.acceptance);
    for (StateId q = 0; q < out.size(); ++q) {
      const bool hit = t.sink && q == *t.sink;
      out[q] = t.accepting_sink ? hit : !hit;
    }
  } else if (std::holds_alternative<WeakAcc>(d.acceptance)) {
    const auto& w = std::get<WeakAcc>(d.acceptance);
    for (StateId q : w.acc) out[q] = true;
  } else {
    throw std::invalid_argument("weak product: unsupported operand acceptance");
  }
  return out;
}

inline std::vector<int> det_scc_partition(const DetAutomaton& d) {
  std::vector<std::vector<StateId>> succ(d.num_states());
  for (StateId q = 0; q < d.num_states(); ++q) {
    succ[q] = d.delta[q];
    std::sort(succ[q].begin(), succ[q].end());
    succ[q].erase(std::unique(succ[q].begin(), succ[q].end()), succ[q].end());
  }
  return scc_decompose(succ).comp_of;
}

inline DetAutomaton weak_product(const DetAutomaton& d1, const DetAutomaton& d2,
                                 bool is_union) {
  const std::vector<bool> f1 = loop_accepting_flags(d1);
  const std::vector<bool> f2 = loop_accepting_flags(d2);
  Product p = product_skeleton(d1, d2);
  WeakAcc acc;
  for (StateId q = 0; q < p.origin.size(); ++q) {
    const bool a = f1[p.origin[q].first];
    const bool b = f2[p.origin[q].second];
    if (is_union ? (a || b) : (a && b)) acc.acc.push_back(q);
  }
  acc.scc_of = det_scc_partition(p.automaton);
  // witness check: acceptance constant on every SCC
  std::map<int, bool> seen;
  for (StateId q = 0; q < p.origin.size(); ++q) {
    const bool in_acc = in_sorted(acc.acc, q);
    auto [it, fresh] = seen.emplace(acc.scc_of[q], in_acc);
    if (!fresh && it->second != in_acc)
      throw std::logic_error("weak product: acceptance not SCC-homogeneous");
  }
  p.automaton.acceptance = std::move(acc);
  return p.automaton;
}

}  // namespace detail

// AWW[1] -> deterministic weak automaton (terminal for pure polarities).
inline DetAutomaton aww1_to_weak(const AlternatingAutomaton& a_in) {
  AlternatingAutomaton a = restrict_to_reachable(a_in, a_in.initial);
  auto cls = try_classify(a);
  if (!cls) throw std::invalid_argument("aww1_to_weak: not weak");
  if (cls->height > 1)
    throw std::invalid_argument("aww1_to_weak: height exceeds 1");

  if (cls->initial_only_rejecting)
    return detail::levels_terminal(a, a.initial, /*accepting_sink=*/true);
  if (cls->initial_only_accepting)
    return detail::levels_terminal(a, a.initial, /*accepting_sink=*/false);

  // mixed: per-minimal-model split, intersect, union
  std::optional<DetAutomaton> result;
  for (const StateSet& model : a.initial.minimal_models()) {
    StateSet acc_part, rej_part;
    for (StateId q : model)
      (a.states[q].accepting ? acc_part : rej_part).push_back(q);
    DetAutomaton da = detail::levels_terminal(
        a, PosBool::from_models({acc_part}), /*accepting_sink=*/false);
    DetAutomaton dr = detail::levels_terminal(
        a, PosBool::from_models({rej_part}), /*accepting_sink=*/true);
    DetAutomaton d = detail::weak_product(da, dr, /*is_union=*/false);
    result = result ? detail::weak_product(*result, d, /*is_union=*/true)
                    : std::move(d);
  }
  if (!result) {
    // initial == ff: rejects everything
    return detail::levels_terminal(a, PosBool::ff(), /*accepting_sink=*/true);
  }
  return *result;
}

// ---------------------------------------------------------------------------
// LTL -> DRW.  The formula is normalised with the dual procedure; every
// non-pruned disjunct splits into its Pi_2 part (the flattened core plus the
// GF conjuncts) and its Sigma_2 part (the FG conjuncts).  Each part gets a
// polarised A1W; their conjunction has a single-model initial condition, so
// the AWW[2] determinisation yields exactly one Rabin pair per disjunct, and
// the union across disjuncts has at most 2^(|mu|+|nu|) pairs.
inline DetAutomaton ltl_to_drw(Formula phi, const Alphabet& alphabet) {
  NormalizationReport rep = normalize(phi, NormalizeVariant::Dual);
  std::optional<DetAutomaton> result;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const Disjunct& d : rep.disjuncts) {
    if (d.pruned) continue;
    Formula pi_part = simplify(Formula::conj(
        flatten_pi(phi, d.n_set), conj_fold(gf_conjuncts(d.m_set, d.n_set))));
    Formula sigma_part = simplify(conj_fold(fg_conjuncts(d.m_set, d.n_set)));
    if (pi_part == Formula::ff() || sigma_part == Formula::ff()) continue;
    const auto key = std::make_pair(pi_part.id(), sigma_part.id());
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    if (pi_part.pi_level() > 2 || sigma_part.sigma_level() > 2)
      throw std::logic_error("ltl_to_drw: disjunct part outside Delta_2");

    AlternatingAutomaton a_pi = ltl_to_a1w(pi_part, alphabet, ClassKind::Pi);
    AlternatingAutomaton a_sigma =
        ltl_to_a1w(sigma_part, alphabet, ClassKind::Sigma);
    AlternatingAutomaton a = conjoin(a_pi, a_sigma);
    auto cls = try_classify(a);
    if (!cls || cls->height > 2)
      throw std::logic_error("ltl_to_drw: disjunct automaton not in A1W[2]");
    DetAutomaton drw = determinize_aww2(a);
    result = result ? union_rabin(*result, drw) : std::move(drw);
  }
  if (!result) return empty_rabin(alphabet);
  return *result;
}

inline DetAutomaton ltl_to_drw(Formula phi) {
  return ltl_to_drw(phi, default_alphabet(phi));
}

// ---------------------------------------------------------------------------
// Serialization.

inline nlohmann::json det_to_json(const DetAutomaton& d) {
  nlohmann::json j;
  j["alphabet"] = d.alphabet.props();
  j["initial"] = d.initial;
  j["states"] = d.state_names;
  j["delta"] = d.delta;
  nlohmann::json acc;
  if (std::holds_alternative<BuchiAcc>(d.acceptance)) {
    acc["type"] = "buchi";
    acc["inf"] = std::get<BuchiAcc>(d.acceptance).acc;
  } else if (std::holds_alternative<CoBuchiAcc>(d.acceptance)) {
    acc["type"] = "co-buchi";
    acc["fin"] = std::get<CoBuchiAcc>(d.acceptance).rej;
  } else if (std::holds_alternative<RabinAcc>(d.acceptance)) {
    acc["type"] = "rabin";
    nlohmann::json pairs = nlohmann::json::array();
    for (const RabinPair& p : std::get<RabinAcc>(d.acceptance).pairs)
      pairs.push_back({{"fin", p.fin}, {"inf", p.inf}});
    acc["pairs"] = pairs;
  } else if (std::holds_alternative<TerminalAcc>(d.acceptance)) {
    const auto& t = std::get<TerminalAcc>(d.acceptance);
    acc["type"] = "terminal";
    acc["kind"] = t.accepting_sink ? "accepting-sink" : "rejecting-sink";
    if (t.sink) acc["sink"] = *t.sink;
  } else {
    acc["type"] = "weak";
    acc["acc"] = std::get<WeakAcc>(d.acceptance).acc;
  }
  j["acceptance"] = acc;
  return j;
}

}  // namespace delta2
