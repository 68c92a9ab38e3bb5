#pragma once

#include <sstream>
#include <string>
#include <variant>

#include "delta2/alternating.hpp"
#include "delta2/determinize.hpp"

namespace delta2 {

namespace detail {

// Minterm over all AP indices: "0&!1&2".
inline std::string letter_label(const Alphabet& alphabet, Letter sigma) {
  if (alphabet.size() == 0) return "t";
  std::string out;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i) out += '&';
    if (!((sigma >> i) & 1u)) out += '!';
    out += std::to_string(i);
  }
  return out;
}

inline std::string quoted_ap_list(const Alphabet& alphabet) {
  std::string out = std::to_string(alphabet.size());
  for (const auto& p : alphabet.props()) out += " \"" + p + "\"";
  return out;
}

}  // namespace detail

// HOA v1 for deterministic automata.  State-based acceptance; one edge per
// letter, so `deterministic complete` holds by construction.
inline std::string emit_hoa(const DetAutomaton& d) {
  std::ostringstream os;
  os << "HOA: v1\n";
  os << "tool: \"delta2\"\n";
  os << "States: " << d.num_states() << "\n";
  os << "Start: " << d.initial << "\n";
  os << "AP: " << detail::quoted_ap_list(d.alphabet) << "\n";

  // acceptance header + per-state set membership
  std::vector<std::vector<int>> sets_of(d.num_states());
  if (std::holds_alternative<BuchiAcc>(d.acceptance) ||
      std::holds_alternative<WeakAcc>(d.acceptance) ||
      (std::holds_alternative<TerminalAcc>(d.acceptance) &&
       std::get<TerminalAcc>(d.acceptance).accepting_sink)) {
    os << "acc-name: Buchi\n";
    os << "Acceptance: 1 Inf(0)\n";
    if (std::holds_alternative<BuchiAcc>(d.acceptance)) {
      for (StateId q : std::get<BuchiAcc>(d.acceptance).acc)
        sets_of[q].push_back(0);
    } else if (std::holds_alternative<WeakAcc>(d.acceptance)) {
      for (StateId q : std::get<WeakAcc>(d.acceptance).acc)
        sets_of[q].push_back(0);
    } else if (std::get<TerminalAcc>(d.acceptance).sink) {
      sets_of[*std::get<TerminalAcc>(d.acceptance).sink].push_back(0);
    }
  } else if (std::holds_alternative<CoBuchiAcc>(d.acceptance) ||
             std::holds_alternative<TerminalAcc>(d.acceptance)) {
    os << "acc-name: co-Buchi\n";
    os << "Acceptance: 1 Fin(0)\n";
    if (std::holds_alternative<CoBuchiAcc>(d.acceptance)) {
      for (StateId q : std::get<CoBuchiAcc>(d.acceptance).rej)
        sets_of[q].push_back(0);
    } else if (std::get<TerminalAcc>(d.acceptance).sink) {
      sets_of[*std::get<TerminalAcc>(d.acceptance).sink].push_back(0);
    }
  } else {
    const auto& pairs = std::get<RabinAcc>(d.acceptance).pairs;
    os << "acc-name: Rabin " << pairs.size() << "\n";
    os << "Acceptance: " << 2 * pairs.size() << " ";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i) os << "|";
      if (pairs.size() > 1) os << "(";
      os << "Fin(" << 2 * i << ")&Inf(" << 2 * i + 1 << ")";
      if (pairs.size() > 1) os << ")";
    }
    os << "\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (StateId q : pairs[i].fin) sets_of[q].push_back(static_cast<int>(2 * i));
      for (StateId q : pairs[i].inf)
        sets_of[q].push_back(static_cast<int>(2 * i + 1));
    }
  }
  os << "properties: trans-labels explicit-labels state-acc deterministic "
        "complete\n";
  os << "--BODY--\n";
  for (StateId q = 0; q < d.num_states(); ++q) {
    os << "State: " << q;
    if (!sets_of[q].empty()) {
      std::sort(sets_of[q].begin(), sets_of[q].end());
      os << " {";
      for (std::size_t i = 0; i < sets_of[q].size(); ++i) {
        if (i) os << ' ';
        os << sets_of[q][i];
      }
      os << "}";
    }
    os << "\n";
    for (Letter sigma = 0; sigma < d.alphabet.letter_count(); ++sigma)
      os << "[" << detail::letter_label(d.alphabet, sigma) << "] "
         << d.delta[q][sigma] << "\n";
  }
  os << "--END--\n";
  return os.str();
}

// HOA v1.1 with universal branching for alternating automata; emit-only.
// tt-transitions target a synthetic accepting sink (conjunctions cannot be
// empty in the format); ff-transitions are simply absent.
inline std::string emit_hoa_alternating(const AlternatingAutomaton& a) {
  bool needs_sink = a.initial.is_tt();
  for (const auto& row : a.delta)
    for (const auto& theta : row)
      if (theta.is_tt()) needs_sink = true;
  const std::size_t sink = a.states.size();

  auto dest = [&](const StateSet& model) {
    if (model.empty()) return std::to_string(sink);
    std::string out;
    for (std::size_t i = 0; i < model.size(); ++i) {
      if (i) out += '&';
      out += std::to_string(model[i]);
    }
    return out;
  };

  std::ostringstream os;
  os << "HOA: v1.1\n";
  os << "tool: \"delta2\"\n";
  os << "States: " << (a.states.size() + (needs_sink ? 1 : 0)) << "\n";
  for (const auto& model : a.initial.minimal_models())
    os << "Start: " << dest(model) << "\n";
  os << "AP: " << detail::quoted_ap_list(a.alphabet) << "\n";
  os << "acc-name: Buchi\n";
  os << "Acceptance: 1 Inf(0)\n";
  os << "properties: trans-labels explicit-labels state-acc univ-branch\n";
  os << "--BODY--\n";
  for (StateId q = 0; q < a.states.size(); ++q) {
    os << "State: " << q << " \"" << a.states[q].name << "\"";
    if (a.states[q].accepting) os << " {0}";
    os << "\n";
    for (Letter sigma = 0; sigma < a.alphabet.letter_count(); ++sigma) {
      for (const auto& model : a.delta[q][sigma].minimal_models())
        os << "[" << detail::letter_label(a.alphabet, sigma) << "] "
           << dest(model) << "\n";
    }
  }
  if (needs_sink) {
    os << "State: " << sink << " \"true\" {0}\n";
    os << "[t] " << sink << "\n";
  }
  os << "--END--\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// DOT dumps for human inspection.

inline std::string emit_dot(const DetAutomaton& d) {
  std::ostringstream os;
  os << "digraph det {\n  rankdir=LR;\n  init [shape=point];\n";
  auto marked = [&](StateId q) {
    if (std::holds_alternative<BuchiAcc>(d.acceptance))
      return detail::in_sorted(std::get<BuchiAcc>(d.acceptance).acc, q);
    if (std::holds_alternative<CoBuchiAcc>(d.acceptance))
      return detail::in_sorted(std::get<CoBuchiAcc>(d.acceptance).rej, q);
    if (std::holds_alternative<WeakAcc>(d.acceptance))
      return detail::in_sorted(std::get<WeakAcc>(d.acceptance).acc, q);
    if (std::holds_alternative<TerminalAcc>(d.acceptance)) {
      const auto& t = std::get<TerminalAcc>(d.acceptance);
      return t.sink && q == *t.sink;
    }
    return false;
  };
  for (StateId q = 0; q < d.num_states(); ++q) {
    os << "  s" << q << " [shape=" << (marked(q) ? "doublecircle" : "circle")
       << " label=\"" << q << "\"];\n";
  }
  os << "  init -> s" << d.initial << ";\n";
  for (StateId q = 0; q < d.num_states(); ++q)
    for (Letter sigma = 0; sigma < d.alphabet.letter_count(); ++sigma)
      os << "  s" << q << " -> s" << d.delta[q][sigma] << " [label=\""
         << d.alphabet.letter_to_string(sigma) << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string emit_dot(const AlternatingAutomaton& a) {
  std::ostringstream os;
  os << "digraph a1w {\n  rankdir=LR;\n  init [shape=point];\n";
  for (StateId q = 0; q < a.states.size(); ++q)
    os << "  s" << q << " [shape="
       << (a.states[q].accepting ? "doublecircle" : "circle") << " label=\""
       << a.states[q].name << "\"];\n";
  int joint = 0;
  auto emit_theta = [&](const std::string& from, const PosBool& theta,
                        const std::string& label) {
    for (const auto& model : theta.minimal_models()) {
      if (model.empty()) {
        os << "  t" << joint << " [shape=plaintext label=\"tt\"];\n";
        os << "  " << from << " -> t" << joint++ << " [label=\"" << label
           << "\"];\n";
      } else if (model.size() == 1) {
        os << "  " << from << " -> s" << model[0] << " [label=\"" << label
           << "\"];\n";
      } else {
        os << "  j" << joint << " [shape=point label=\"\"];\n";
        os << "  " << from << " -> j" << joint << " [label=\"" << label
           << "\" arrowhead=none];\n";
        for (StateId r : model) os << "  j" << joint << " -> s" << r << ";\n";
        ++joint;
      }
    }
  };
  emit_theta("init", a.initial, "");
  for (StateId q = 0; q < a.states.size(); ++q)
    for (Letter sigma = 0; sigma < a.alphabet.letter_count(); ++sigma)
      emit_theta("s" + std::to_string(q), a.delta[q][sigma],
                 a.alphabet.letter_to_string(sigma));
  os << "}\n";
  return os.str();
}

}  // namespace delta2
