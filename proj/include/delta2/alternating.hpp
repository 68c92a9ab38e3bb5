#pragma once

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "delta2/formula.hpp"
#include "delta2/hierarchy.hpp"
#include "delta2/normalize.hpp"
#include "delta2/posbool.hpp"
#include "delta2/word.hpp"

namespace delta2 {

struct A1wState {
  std::string name;
  bool accepting = false;
  // set for states produced by the LTL translation
  std::optional<Formula> formula;
  std::optional<HierarchyClass> cls;
};

// Alternating automaton with a positive-Boolean initial condition and
// transition table; delta is total on states x letters.
struct AlternatingAutomaton {
  Alphabet alphabet;
  std::vector<A1wState> states;
  PosBool initial;
  std::vector<std::vector<PosBool>> delta;  // [state][letter]

  // state count of the construction before unreachable pruning; the
  // 2|sf(phi)| bound is stated for this set
  std::size_t constructed_states = 0;

  StateSet alpha() const {
    StateSet out;
    for (StateId q = 0; q < states.size(); ++q)
      if (states[q].accepting) out.push_back(q);
    return out;
  }
  StateSet non_alpha() const {
    StateSet out;
    for (StateId q = 0; q < states.size(); ++q)
      if (!states[q].accepting) out.push_back(q);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Weakness classification and height.

enum class Polarity { Accepting, Rejecting, Mixed };

struct A1wClassification {
  bool very_weak = false;
  int height = 0;
  Polarity initial_polarity = Polarity::Rejecting;
  bool initial_only_accepting = false;  // theta0 in B+(alpha)
  bool initial_only_rejecting = false;  // theta0 in B+(Q \ alpha)
};

namespace detail {

inline std::vector<std::vector<StateId>> successor_lists(
    const AlternatingAutomaton& a) {
  std::vector<std::set<StateId>> succ(a.states.size());
  for (StateId q = 0; q < a.states.size(); ++q)
    for (const auto& theta : a.delta[q])
      for (const auto& model : theta.minimal_models())
        for (StateId r : model) succ[q].insert(r);
  std::vector<std::vector<StateId>> out(a.states.size());
  for (StateId q = 0; q < a.states.size(); ++q)
    out[q].assign(succ[q].begin(), succ[q].end());
  return out;
}

// Tarjan SCC; components are emitted in reverse topological order.
struct SccResult {
  std::vector<int> comp_of;
  std::vector<std::vector<StateId>> comps;
};

inline SccResult scc_decompose(const std::vector<std::vector<StateId>>& succ) {
  const std::size_t n = succ.size();
  SccResult res;
  res.comp_of.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  int counter = 0;

  // iterative Tarjan
  struct Frame {
    StateId v;
    std::size_t next_edge;
  };
  for (StateId root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_edge < succ[f.v].size()) {
        StateId w = succ[f.v][f.next_edge++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<StateId> comp;
          while (true) {
            StateId w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.comp_of[w] = static_cast<int>(res.comps.size());
            comp.push_back(w);
            if (w == f.v) break;
          }
          res.comps.push_back(std::move(comp));
        }
        StateId v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return res;
}

}  // namespace detail

// Returns nullopt when the automaton is not weak (some strongly connected
// component mixes accepting and rejecting states).
inline std::optional<A1wClassification> try_classify(
    const AlternatingAutomaton& a) {
  auto succ = detail::successor_lists(a);
  auto scc = detail::scc_decompose(succ);

  A1wClassification out;
  out.very_weak = true;
  for (const auto& comp : scc.comps) {
    bool acc = a.states[comp[0]].accepting;
    for (StateId q : comp)
      if (a.states[q].accepting != acc) return std::nullopt;  // not weak
    if (comp.size() > 1) out.very_weak = false;
  }

  // longest alternation count over the component DAG (components arrive in
  // reverse topological order, so successors are already solved)
  std::vector<int> alt(scc.comps.size(), 0);
  for (std::size_t c = 0; c < scc.comps.size(); ++c) {
    const bool pol = a.states[scc.comps[c][0]].accepting;
    for (StateId q : scc.comps[c]) {
      for (StateId r : succ[q]) {
        const int rc = scc.comp_of[r];
        if (static_cast<std::size_t>(rc) == c) continue;
        const bool rpol = a.states[scc.comps[rc][0]].accepting;
        alt[c] = std::max(alt[c], alt[rc] + (rpol != pol ? 1 : 0));
      }
    }
  }
  int max_alt = -1;
  for (std::size_t c = 0; c < scc.comps.size(); ++c)
    max_alt = std::max(max_alt, alt[c]);
  out.height = a.states.empty() ? 0 : 1 + max_alt;

  const StateSet mentioned = a.initial.mentioned_states();
  bool any_acc = false, any_rej = false;
  for (StateId q : mentioned) (a.states[q].accepting ? any_acc : any_rej) = true;
  out.initial_only_accepting = !any_rej;
  out.initial_only_rejecting = !any_acc;
  out.initial_polarity = any_acc && any_rej ? Polarity::Mixed
                         : any_acc          ? Polarity::Accepting
                                            : Polarity::Rejecting;
  return out;
}

inline A1wClassification classify(const AlternatingAutomaton& a) {
  auto c = try_classify(a);
  if (!c) throw std::invalid_argument("classify: automaton is not weak");
  return *c;
}

inline int height(const AlternatingAutomaton& a) { return classify(a).height; }

// Restricts to the states reachable from the given initial condition,
// renumbering in ascending original order.
inline AlternatingAutomaton restrict_to_reachable(const AlternatingAutomaton& a,
                                                  const PosBool& initial) {
  std::vector<bool> reach(a.states.size(), false);
  std::queue<StateId> todo;
  for (StateId q : initial.mentioned_states()) {
    if (!reach[q]) {
      reach[q] = true;
      todo.push(q);
    }
  }
  auto succ = detail::successor_lists(a);
  while (!todo.empty()) {
    StateId q = todo.front();
    todo.pop();
    for (StateId r : succ[q]) {
      if (!reach[r]) {
        reach[r] = true;
        todo.push(r);
      }
    }
  }
  std::vector<StateId> remap(a.states.size(), 0);
  AlternatingAutomaton out;
  out.alphabet = a.alphabet;
  out.constructed_states = a.constructed_states;
  for (StateId q = 0; q < a.states.size(); ++q) {
    if (!reach[q]) continue;
    remap[q] = static_cast<StateId>(out.states.size());
    out.states.push_back(a.states[q]);
  }
  auto rn = [&](StateId q) { return remap[q]; };
  out.initial = initial.rename(rn);
  out.delta.resize(out.states.size());
  for (StateId q = 0; q < a.states.size(); ++q) {
    if (!reach[q]) continue;
    out.delta[remap[q]].reserve(a.delta[q].size());
    for (const auto& theta : a.delta[q])
      out.delta[remap[q]].push_back(theta.rename(rn));
  }
  return out;
}

// Same automaton with a replacement initial condition, restricted to the
// part reachable from it.
inline AlternatingAutomaton with_initial(const AlternatingAutomaton& a,
                                         const PosBool& initial) {
  return restrict_to_reachable(a, initial);
}

// ---------------------------------------------------------------------------
// LTL -> A1W (subformula states annotated with their smallest class).
//
// States are pairs <psi>_Gamma with psi a proper subformula and Gamma a
// smallest non-zero class of psi bounded by Delta_i, where i is the least
// (non-zero) Delta level of the input.  [psi]_{<=Gamma} maps tt/ff to
// themselves, and/or homomorphically, and a proper psi to the disjunction of
// its states with annotation <= Gamma.  The U/W/R/M transitions unfold
// through the one-step expansion laws; the X-guarded copy of the node always
// resolves to a self-loop because the expansion has the same smallest class
// as the node itself.

namespace detail {

class LtlToA1w {
 public:
  LtlToA1w(Formula phi, const Alphabet& alphabet,
           std::optional<ClassKind> polarize)
      : phi_(phi), alphabet_(alphabet) {
    for (const std::string& name : atom_names(phi))
      if (!alphabet_.index_of(name))
        throw std::invalid_argument("ltl_to_a1w: unknown atom '" + name + "'");
    level_ = std::max(1, phi.delta_level());
    if (polarize) {
      level_ = std::max(1, *polarize == ClassKind::Sigma ? phi.sigma_level()
                                                         : phi.pi_level());
    }
    const HierarchyClass bound = delta_class(level_);
    for (Formula psi : proper_subformulas(phi)) {
      for (HierarchyClass c : smallest_classes(psi, /*exclude_level0=*/true)) {
        // a proper formula's smallest non-zero classes are Sigma/Pi, never
        // Delta; the state labelling relies on it, so check rather than assume
        if (c.kind == ClassKind::Delta || c.level < 1)
          throw std::logic_error("ltl_to_a1w: unexpected state annotation");
        if (!leq(c, bound)) continue;
        index_[{psi.id(), key_of(c)}] = static_cast<StateId>(aut_.states.size());
        aut_.states.push_back(A1wState{
            "<" + delta2::to_string(psi) + ">@" + delta2::to_string(c),
            c.kind == ClassKind::Pi, psi, c});
      }
    }
    if (polarize) {
      const HierarchyClass pc{*polarize, level_};
      polar_state_ = static_cast<StateId>(aut_.states.size());
      aut_.states.push_back(
          A1wState{"<" + delta2::to_string(phi) + ">@init:" +
                       delta2::to_string(pc),
                   pc.kind == ClassKind::Pi, phi, pc});
    }

    aut_.alphabet = alphabet_;
    aut_.constructed_states = aut_.states.size();
    aut_.delta.resize(aut_.states.size());
    const std::size_t letters = alphabet_.letter_count();
    for (StateId q = 0; q < aut_.states.size(); ++q) {
      aut_.delta[q].reserve(letters);
      for (Letter sigma = 0; sigma < letters; ++sigma) {
        if (polar_state_ && q == *polar_state_) {
          aut_.delta[q].push_back(
              trans(phi_, HierarchyClass{*polarize, level_}, sigma));
        } else {
          aut_.delta[q].push_back(
              dstate(*aut_.states[q].formula, *aut_.states[q].cls, sigma));
        }
      }
    }
    aut_.initial = polar_state_ ? PosBool::state(*polar_state_)
                                : bracket(phi_, delta_class(level_));
  }

  AlternatingAutomaton take() {
    return restrict_to_reachable(aut_, aut_.initial);
  }

 private:
  static int key_of(const HierarchyClass& c) {
    return c.level * 4 + static_cast<int>(c.kind);
  }

  StateId state_of(Formula psi, const HierarchyClass& c) const {
    return index_.at({psi.id(), key_of(c)});
  }

  // [psi]_{<=bound}
  PosBool bracket(Formula psi, const HierarchyClass& bound) const {
    switch (psi.op()) {
      case Op::TT: return PosBool::tt();
      case Op::FF: return PosBool::ff();
      case Op::And:
        return bracket(psi.lhs(), bound) & bracket(psi.rhs(), bound);
      case Op::Or:
        return bracket(psi.lhs(), bound) | bracket(psi.rhs(), bound);
      default: {
        PosBool out = PosBool::ff();
        for (HierarchyClass c : smallest_classes(psi, true))
          if (leq(c, bound)) out = out | PosBool::state(state_of(psi, c));
        return out;
      }
    }
  }

  // delta([psi]_{<=bound}, sigma)
  PosBool trans(Formula psi, const HierarchyClass& bound, Letter sigma) const {
    switch (psi.op()) {
      case Op::TT: return PosBool::tt();
      case Op::FF: return PosBool::ff();
      case Op::And:
        return trans(psi.lhs(), bound, sigma) & trans(psi.rhs(), bound, sigma);
      case Op::Or:
        return trans(psi.lhs(), bound, sigma) | trans(psi.rhs(), bound, sigma);
      default: {
        PosBool out = PosBool::ff();
        for (HierarchyClass c : smallest_classes(psi, true))
          if (leq(c, bound)) out = out | dstate(psi, c, sigma);
        return out;
      }
    }
  }

  // delta(<psi>_cls, sigma)
  PosBool dstate(Formula psi, const HierarchyClass& cls, Letter sigma) const {
    switch (psi.op()) {
      case Op::Atom: {
        auto bit = alphabet_.index_of(psi.atom_name());
        return ((sigma >> *bit) & 1u) ? PosBool::tt() : PosBool::ff();
      }
      case Op::NegAtom: {
        auto bit = alphabet_.index_of(psi.atom_name());
        return ((sigma >> *bit) & 1u) ? PosBool::ff() : PosBool::tt();
      }
      case Op::Next:
        return bracket(psi.child(), cls);
      case Op::Until:
      case Op::WeakUntil: {
        // [rhs | (lhs & X psi)]: the X part is the self-loop
        PosBool self = PosBool::state(state_of(psi, cls));
        return trans(psi.rhs(), cls, sigma) |
               (trans(psi.lhs(), cls, sigma) & self);
      }
      case Op::Release:
      case Op::StrongRelease: {
        // [rhs & (lhs | X psi)]
        PosBool self = PosBool::state(state_of(psi, cls));
        return trans(psi.rhs(), cls, sigma) &
               (trans(psi.lhs(), cls, sigma) | self);
      }
      default:
        throw std::logic_error("dstate: not a proper formula");
    }
  }

  Formula phi_;
  Alphabet alphabet_;
  int level_;
  AlternatingAutomaton aut_;
  std::map<std::pair<std::uint32_t, int>, StateId> index_;
  std::optional<StateId> polar_state_;
};

}  // namespace detail

inline Alphabet default_alphabet(Formula phi) {
  return Alphabet(atom_names(phi));
}

// Translation of an NNF formula into a very weak alternating automaton.  For
// phi in Delta_i the result has height <= i and at most 2|sf(phi)| states
// before pruning.  With polarize set, a fresh initial state annotated
// Sigma_i (rejecting) or Pi_i (accepting) is added, landing the automaton in
// A1W[i,R] / A1W[i,A] respectively; phi must belong to the chosen class.
inline AlternatingAutomaton ltl_to_a1w(
    Formula phi, const Alphabet& alphabet,
    std::optional<ClassKind> polarize = std::nullopt) {
  if (polarize && *polarize == ClassKind::Delta)
    throw std::invalid_argument("ltl_to_a1w: polarize must be Sigma or Pi");
  return detail::LtlToA1w(phi, alphabet, polarize).take();
}

inline AlternatingAutomaton ltl_to_a1w(Formula phi) {
  return ltl_to_a1w(phi, default_alphabet(phi));
}

// ---------------------------------------------------------------------------
// A1W -> LTL (chi-translation).  Requires a very weak automaton; states are
// processed bottom-up along the state order.  For each state and letter the
// transition splits as delta(q, sigma) = (q & theta) | theta' with theta the
// models through the self-loop (q removed) and theta' the ones without it:
//
//   chi(q) = phi_q U phi'_q   (q rejecting)      phi_q  = OR ps_sigma & X chi(theta)
//            phi_q W phi'_q   (q accepting)      phi'_q = OR ps_sigma & X chi(theta')
//
// where ps_sigma is the conjunction of literals describing the letter.
inline Formula a1w_to_ltl(const AlternatingAutomaton& a) {
  auto cls = try_classify(a);
  if (!cls || !cls->very_weak)
    throw std::invalid_argument("a1w_to_ltl: automaton is not very weak");

  const std::size_t letters = a.alphabet.letter_count();
  auto succ = detail::successor_lists(a);

  // process states so that all non-self successors come first
  std::vector<Formula> chi(a.states.size(), Formula::ff());
  std::vector<bool> done(a.states.size(), false);

  auto letter_formula = [&](Letter sigma) {
    Formula out = Formula::tt();
    for (std::size_t i = a.alphabet.size(); i-- > 0;) {
      Formula lit = (sigma >> i) & 1u ? Formula::atom(a.alphabet.prop(i))
                                      : Formula::neg_atom(a.alphabet.prop(i));
      out = out == Formula::tt() ? lit : Formula::conj(lit, out);
    }
    return out;
  };

  auto subst = [&](const PosBool& theta) {
    Formula out = Formula::ff();
    bool first = true;
    for (const auto& model : theta.minimal_models()) {
      Formula conj = Formula::tt();
      bool cfirst = true;
      for (StateId q : model) {
        conj = cfirst ? chi[q] : Formula::conj(conj, chi[q]);
        cfirst = false;
      }
      out = first ? conj : Formula::disj(out, conj);
      first = false;
    }
    return out;
  };

  std::size_t remaining = a.states.size();
  while (remaining > 0) {
    bool progressed = false;
    for (StateId q = 0; q < a.states.size(); ++q) {
      if (done[q]) continue;
      bool ready = true;
      for (StateId r : succ[q])
        if (r != q && !done[r]) ready = false;
      if (!ready) continue;

      Formula body = Formula::ff(), exit = Formula::ff();
      bool bfirst = true, efirst = true;
      for (Letter sigma = 0; sigma < letters; ++sigma) {
        std::vector<StateSet> via_self, without;
        for (const auto& model : a.delta[q][sigma].minimal_models()) {
          if (std::binary_search(model.begin(), model.end(), q)) {
            StateSet rest;
            for (StateId r : model)
              if (r != q) rest.push_back(r);
            via_self.push_back(std::move(rest));
          } else {
            without.push_back(model);
          }
        }
        Formula ps = letter_formula(sigma);
        Formula b = simplify(Formula::conj(
            ps, Formula::next(subst(PosBool::from_models(via_self)))));
        Formula e = simplify(Formula::conj(
            ps, Formula::next(subst(PosBool::from_models(without)))));
        if (b != Formula::ff()) {
          body = bfirst ? b : Formula::disj(body, b);
          bfirst = false;
        }
        if (e != Formula::ff()) {
          exit = efirst ? e : Formula::disj(exit, e);
          efirst = false;
        }
      }
      chi[q] = simplify(a.states[q].accepting ? Formula::weak_until(body, exit)
                                              : Formula::until(body, exit));
      done[q] = true;
      --remaining;
      progressed = true;
    }
    if (!progressed)
      throw std::logic_error("a1w_to_ltl: no topological order (not very weak?)");
  }
  return simplify(subst(a.initial));
}

// A1W normalisation via the LTL round trip; the result has height <= 2 and
// recognises the same language.
inline AlternatingAutomaton normalize_a1w(const AlternatingAutomaton& a) {
  Formula chi = a1w_to_ltl(a);
  NormalizationReport rep = normalize(chi);
  AlternatingAutomaton out = ltl_to_a1w(rep.result, a.alphabet);
  auto cls = try_classify(out);
  if (!cls || cls->height > 2)
    throw std::logic_error("normalize_a1w: result not in A1W[2]");
  return out;
}

// Disjoint union with conjoined initial conditions; used to pair a Pi-part
// automaton with a Sigma-part automaton for one normal-form disjunct.
inline AlternatingAutomaton conjoin(const AlternatingAutomaton& a,
                                    const AlternatingAutomaton& b) {
  if (!(a.alphabet == b.alphabet))
    throw std::invalid_argument("conjoin: alphabet mismatch");
  AlternatingAutomaton out;
  out.alphabet = a.alphabet;
  out.states = a.states;
  out.states.insert(out.states.end(), b.states.begin(), b.states.end());
  out.constructed_states = a.constructed_states + b.constructed_states;
  const StateId shift = static_cast<StateId>(a.states.size());
  auto shifted = [&](StateId q) { return q + shift; };
  out.delta = a.delta;
  for (const auto& row : b.delta) {
    std::vector<PosBool> shifted_row;
    shifted_row.reserve(row.size());
    for (const auto& theta : row) shifted_row.push_back(theta.rename(shifted));
    out.delta.push_back(std::move(shifted_row));
  }
  out.initial = a.initial & b.initial.rename(shifted);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization.

inline nlohmann::json posbool_to_json(const PosBool& b) {
  if (b.is_tt()) return true;
  if (b.is_ff()) return false;
  nlohmann::json ors = nlohmann::json::array();
  for (const auto& model : b.minimal_models()) {
    if (model.size() == 1) {
      ors.push_back(nlohmann::json{{"state", model[0]}});
    } else {
      nlohmann::json ands = nlohmann::json::array();
      for (StateId q : model) ands.push_back(nlohmann::json{{"state", q}});
      ors.push_back(nlohmann::json{{"and", ands}});
    }
  }
  if (ors.size() == 1) return ors[0];
  return nlohmann::json{{"or", ors}};
}

inline PosBool posbool_from_json(const nlohmann::json& j) {
  if (j.is_boolean()) return j.get<bool>() ? PosBool::tt() : PosBool::ff();
  if (j.contains("state")) return PosBool::state(j["state"].get<StateId>());
  if (j.contains("and")) {
    PosBool out = PosBool::tt();
    for (const auto& item : j["and"]) out = out & posbool_from_json(item);
    return out;
  }
  if (j.contains("or")) {
    PosBool out = PosBool::ff();
    for (const auto& item : j["or"]) out = out | posbool_from_json(item);
    return out;
  }
  throw std::invalid_argument("posbool_from_json: bad node");
}

inline nlohmann::json a1w_to_json(const AlternatingAutomaton& a) {
  nlohmann::json j;
  j["alphabet"] = a.alphabet.props();
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : a.states)
    states.push_back({{"name", s.name}, {"accepting", s.accepting}});
  j["states"] = states;
  j["initial"] = posbool_to_json(a.initial);
  nlohmann::json delta = nlohmann::json::array();
  for (const auto& row : a.delta) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& theta : row) jrow.push_back(posbool_to_json(theta));
    delta.push_back(jrow);
  }
  j["delta"] = delta;  // letter index: bit i = alphabet[i] present
  return j;
}

inline AlternatingAutomaton a1w_from_json(const nlohmann::json& j) {
  AlternatingAutomaton a;
  a.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
  for (const auto& s : j.at("states"))
    a.states.push_back(
        A1wState{s.at("name").get<std::string>(), s.at("accepting").get<bool>(),
                 std::nullopt, std::nullopt});
  a.initial = posbool_from_json(j.at("initial"));
  const std::size_t letters = a.alphabet.letter_count();
  for (const auto& jrow : j.at("delta")) {
    std::vector<PosBool> row;
    for (const auto& item : jrow) row.push_back(posbool_from_json(item));
    if (row.size() != letters)
      throw std::invalid_argument("a1w_from_json: delta row arity mismatch");
    a.delta.push_back(std::move(row));
  }
  if (a.delta.size() != a.states.size())
    throw std::invalid_argument("a1w_from_json: delta incomplete");
  for (StateId q : a.initial.mentioned_states())
    if (q >= a.states.size())
      throw std::invalid_argument("a1w_from_json: initial state out of range");
  a.constructed_states = a.states.size();
  return a;
}

}  // namespace delta2
