#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "delta2/formula.hpp"
#include "delta2/hierarchy.hpp"

namespace delta2 {

// ---------------------------------------------------------------------------
// simplify: bottom-up rewriting to fixpoint with a fixed, finite rule table.
// Every rule is individually sound on all words (oracle-checked by the test
// suite) and never raises the syntactic-future class of the formula.  The
// F/G idempotence entries exist to reach the compact forms of the worked
// normalisation examples (GF(F x) and G(G x) collapse); they are ordinary
// members of the table, not special cases of the engine.

struct RewriteRule {
  const char* name;
  const char* lhs;  // pattern over the metavariable atom x
  const char* rhs;
};

inline const std::vector<RewriteRule>& simplify_rule_table() {
  static const std::vector<RewriteRule> rules = {
      {"and-true-l", "tt & x", "x"},
      {"and-true-r", "x & tt", "x"},
      {"and-false-l", "ff & x", "ff"},
      {"and-false-r", "x & ff", "ff"},
      {"and-idem", "x & x", "x"},
      {"or-true-l", "tt | x", "tt"},
      {"or-true-r", "x | tt", "tt"},
      {"or-false-l", "ff | x", "x"},
      {"or-false-r", "x | ff", "x"},
      {"or-idem", "x | x", "x"},
      {"next-true", "X tt", "tt"},
      {"next-false", "X ff", "ff"},
      {"until-true-r", "x U tt", "tt"},
      {"until-false-r", "x U ff", "ff"},
      {"until-false-l", "ff U x", "x"},
      {"until-idem", "x U x", "x"},
      {"eventually-idem", "F (F x)", "F x"},  // tt U (tt U x) -> tt U x
      {"wuntil-true-r", "x W tt", "tt"},
      {"wuntil-true-l", "tt W x", "tt"},
      {"wuntil-false-l", "ff W x", "x"},
      {"wuntil-false-r", "x W ff", "G x"},  // x W ff -> ff R x
      {"wuntil-idem", "x W x", "x"},
      {"release-true-r", "x R tt", "tt"},
      {"release-true-l", "tt R x", "x"},
      {"release-false-r", "x R ff", "ff"},
      {"release-idem", "x R x", "x"},
      {"always-idem", "G (G x)", "G x"},  // ff R (ff R x) -> ff R x
      {"srelease-false-l", "ff M x", "ff"},
      {"srelease-false-r", "x M ff", "ff"},
      {"srelease-true-l", "tt M x", "x"},
      {"srelease-true-r", "x M tt", "F x"},  // x M tt -> tt U x
      {"srelease-idem", "x M x", "x"},
  };
  return rules;
}

namespace detail {

inline Formula apply_rules_here(Formula f) {
  const Formula tt = Formula::tt();
  const Formula ff = Formula::ff();
  switch (f.op()) {
    case Op::And: {
      Formula l = f.lhs(), r = f.rhs();
      if (l == tt) return r;
      if (r == tt) return l;
      if (l == ff || r == ff) return ff;
      if (l == r) return l;
      break;
    }
    case Op::Or: {
      Formula l = f.lhs(), r = f.rhs();
      if (l == tt || r == tt) return tt;
      if (l == ff) return r;
      if (r == ff) return l;
      if (l == r) return l;
      break;
    }
    case Op::Next: {
      if (f.child() == tt) return tt;
      if (f.child() == ff) return ff;
      break;
    }
    case Op::Until: {
      Formula l = f.lhs(), r = f.rhs();
      if (r == tt) return tt;
      if (r == ff) return ff;
      if (l == ff) return r;
      if (l == r) return l;
      if (l == tt && r.op() == Op::Until && r.lhs() == tt) return r;
      break;
    }
    case Op::WeakUntil: {
      Formula l = f.lhs(), r = f.rhs();
      if (r == tt || l == tt) return tt;
      if (l == ff) return r;
      if (r == ff) return Formula::release(ff, l);
      if (l == r) return l;
      break;
    }
    case Op::Release: {
      Formula l = f.lhs(), r = f.rhs();
      if (r == tt) return tt;
      if (r == ff) return ff;
      if (l == tt) return r;
      if (l == r) return l;
      if (l == ff && r.op() == Op::Release && r.lhs() == ff) return r;
      break;
    }
    case Op::StrongRelease: {
      Formula l = f.lhs(), r = f.rhs();
      if (l == ff || r == ff) return ff;
      if (l == tt) return r;
      if (r == tt) return Formula::until(tt, l);
      if (l == r) return l;
      break;
    }
    default:
      break;
  }
  return f;
}

inline Formula simplify_rec(Formula f,
                            std::map<std::uint32_t, Formula>& memo) {
  auto it = memo.find(f.id());
  if (it != memo.end()) return it->second;
  Formula out = f;
  if (f.is_binary()) {
    Formula l = simplify_rec(f.lhs(), memo);
    Formula r = simplify_rec(f.rhs(), memo);
    switch (f.op()) {
      case Op::And: out = Formula::conj(l, r); break;
      case Op::Or: out = Formula::disj(l, r); break;
      case Op::Until: out = Formula::until(l, r); break;
      case Op::WeakUntil: out = Formula::weak_until(l, r); break;
      case Op::Release: out = Formula::release(l, r); break;
      default: out = Formula::strong_release(l, r); break;
    }
  } else if (f.is_unary()) {
    out = Formula::next(simplify_rec(f.child(), memo));
  }
  for (int round = 0; round < 64; ++round) {
    Formula next = apply_rules_here(out);
    if (next == out) break;
    // a rewrite may expose a redex below the new root; re-run bottom-up
    out = next.is_constant() || next.is_literal() ? next
                                                  : simplify_rec(next, memo);
  }
  memo.emplace(f.id(), out);
  return out;
}

}  // namespace detail

inline Formula simplify(Formula f) {
  std::map<std::uint32_t, Formula> memo;
  return detail::simplify_rec(f, memo);
}

// ---------------------------------------------------------------------------
// eval-nu / eval-mu.  Membership tests use structural equality; supplying a
// set with extraneous formulas is harmless since only U/M (resp. W/R)
// subformula membership is consulted, which realises the identity
// eval(psi, S) = eval(psi, S intersect mu(psi)).

// U -> W, M -> R when the node is in M, otherwise ff; homomorphic elsewhere.
// Every U/M node is eliminated, so the output always lies in Pi_1.
inline Formula eval_nu(Formula phi, const std::vector<Formula>& m_set) {
  switch (phi.op()) {
    case Op::TT:
    case Op::FF:
    case Op::Atom:
    case Op::NegAtom:
      return phi;
    case Op::And:
      return Formula::conj(eval_nu(phi.lhs(), m_set),
                           eval_nu(phi.rhs(), m_set));
    case Op::Or:
      return Formula::disj(eval_nu(phi.lhs(), m_set),
                           eval_nu(phi.rhs(), m_set));
    case Op::Next:
      return Formula::next(eval_nu(phi.child(), m_set));
    case Op::Until:
      if (!contains(m_set, phi)) return Formula::ff();
      return Formula::weak_until(eval_nu(phi.lhs(), m_set),
                                 eval_nu(phi.rhs(), m_set));
    case Op::StrongRelease:
      if (!contains(m_set, phi)) return Formula::ff();
      return Formula::release(eval_nu(phi.lhs(), m_set),
                              eval_nu(phi.rhs(), m_set));
    case Op::WeakUntil:
      return Formula::weak_until(eval_nu(phi.lhs(), m_set),
                                 eval_nu(phi.rhs(), m_set));
    case Op::Release:
      return Formula::release(eval_nu(phi.lhs(), m_set),
                              eval_nu(phi.rhs(), m_set));
  }
  throw std::logic_error("eval_nu: bad op");
}

// R -> tt if in N else M, W -> tt if in N else U; homomorphic elsewhere.
// Every W/R node is eliminated, so the output always lies in Sigma_1.
inline Formula eval_mu(Formula phi, const std::vector<Formula>& n_set) {
  switch (phi.op()) {
    case Op::TT:
    case Op::FF:
    case Op::Atom:
    case Op::NegAtom:
      return phi;
    case Op::And:
      return Formula::conj(eval_mu(phi.lhs(), n_set),
                           eval_mu(phi.rhs(), n_set));
    case Op::Or:
      return Formula::disj(eval_mu(phi.lhs(), n_set),
                           eval_mu(phi.rhs(), n_set));
    case Op::Next:
      return Formula::next(eval_mu(phi.child(), n_set));
    case Op::Release:
      if (contains(n_set, phi)) return Formula::tt();
      return Formula::strong_release(eval_mu(phi.lhs(), n_set),
                                     eval_mu(phi.rhs(), n_set));
    case Op::WeakUntil:
      if (contains(n_set, phi)) return Formula::tt();
      return Formula::until(eval_mu(phi.lhs(), n_set),
                            eval_mu(phi.rhs(), n_set));
    case Op::Until:
      return Formula::until(eval_mu(phi.lhs(), n_set),
                            eval_mu(phi.rhs(), n_set));
    case Op::StrongRelease:
      return Formula::strong_release(eval_mu(phi.lhs(), n_set),
                                     eval_mu(phi.rhs(), n_set));
  }
  throw std::logic_error("eval_mu: bad op");
}

inline Formula conj_fold(const std::vector<Formula>& conjuncts) {
  if (conjuncts.empty()) return Formula::tt();
  Formula out = conjuncts.back();
  for (std::size_t i = conjuncts.size() - 1; i-- > 0;)
    out = Formula::conj(conjuncts[i], out);
  return out;
}

// GF(eval_mu(psi, N)) for psi in M, in structural formula order.
inline std::vector<Formula> gf_conjuncts(const std::vector<Formula>& m_set,
                                         const std::vector<Formula>& n_set) {
  std::vector<Formula> m_sorted = m_set;
  std::sort(m_sorted.begin(), m_sorted.end(), FormulaLess{});
  std::vector<Formula> out;
  for (Formula psi : m_sorted)
    out.push_back(Formula::always(Formula::eventually(eval_mu(psi, n_set))));
  return out;
}

// FG(eval_nu(psi, M)) for psi in N, in structural formula order.
inline std::vector<Formula> fg_conjuncts(const std::vector<Formula>& m_set,
                                         const std::vector<Formula>& n_set) {
  std::vector<Formula> n_sorted = n_set;
  std::sort(n_sorted.begin(), n_sorted.end(), FormulaLess{});
  std::vector<Formula> out;
  for (Formula psi : n_sorted)
    out.push_back(Formula::eventually(Formula::always(eval_nu(psi, m_set))));
  return out;
}

// Phi(M, N): GF(eval_mu(psi, N)) for psi in M and FG(eval_nu(psi, M)) for
// psi in N, conjoined right-to-left with M-conjuncts first, each group in
// structural formula order.  Empty conjunction is tt.
inline Formula phi_conjunct(const std::vector<Formula>& m_set,
                            const std::vector<Formula>& n_set) {
  std::vector<Formula> conjuncts = gf_conjuncts(m_set, n_set);
  for (Formula f : fg_conjuncts(m_set, n_set)) conjuncts.push_back(f);
  return conj_fold(conjuncts);
}

// ---------------------------------------------------------------------------
// flatten: rewrites W/R nodes through their until/strong-release expansions,
// producing a Sigma_2 formula.
//
//   (phi R psi)  ->  (flatten(phi) | G eval_nu(psi))  M  flatten(psi)
//   (phi W psi)  ->  flatten(phi)  U  (flatten(psi) | G eval_nu(phi))
//
// G-nodes (ff R psi) go through the W-form of the same law,
//   G psi  ->  flatten(psi) U (ff | G eval_nu(psi)),
// which is how the worked examples unfold them; both forms are sound.
inline Formula flatten_sigma(Formula phi, const std::vector<Formula>& m_set) {
  switch (phi.op()) {
    case Op::TT:
    case Op::FF:
    case Op::Atom:
    case Op::NegAtom:
      return phi;
    case Op::And:
      return Formula::conj(flatten_sigma(phi.lhs(), m_set),
                           flatten_sigma(phi.rhs(), m_set));
    case Op::Or:
      return Formula::disj(flatten_sigma(phi.lhs(), m_set),
                           flatten_sigma(phi.rhs(), m_set));
    case Op::Next:
      return Formula::next(flatten_sigma(phi.child(), m_set));
    case Op::Until:
      return Formula::until(flatten_sigma(phi.lhs(), m_set),
                            flatten_sigma(phi.rhs(), m_set));
    case Op::StrongRelease:
      return Formula::strong_release(flatten_sigma(phi.lhs(), m_set),
                                     flatten_sigma(phi.rhs(), m_set));
    case Op::Release: {
      if (phi.lhs() == Formula::ff()) {  // G psi as psi W ff
        Formula psi = phi.rhs();
        return Formula::until(
            flatten_sigma(psi, m_set),
            Formula::disj(Formula::ff(),
                          Formula::always(eval_nu(psi, m_set))));
      }
      return Formula::strong_release(
          Formula::disj(flatten_sigma(phi.lhs(), m_set),
                        Formula::always(eval_nu(phi.rhs(), m_set))),
          flatten_sigma(phi.rhs(), m_set));
    }
    case Op::WeakUntil:
      return Formula::until(
          flatten_sigma(phi.lhs(), m_set),
          Formula::disj(flatten_sigma(phi.rhs(), m_set),
                        Formula::always(eval_nu(phi.lhs(), m_set))));
  }
  throw std::logic_error("flatten_sigma: bad op");
}

// Dual form, rewriting U/M nodes and producing a Pi_2 formula:
//   (phi U psi)  ->  (flatten(phi) & F eval_mu(psi))  W  flatten(psi)
//   (phi M psi)  ->  flatten(phi)  R  (flatten(psi) & F eval_mu(phi))
inline Formula flatten_pi(Formula phi, const std::vector<Formula>& n_set) {
  switch (phi.op()) {
    case Op::TT:
    case Op::FF:
    case Op::Atom:
    case Op::NegAtom:
      return phi;
    case Op::And:
      return Formula::conj(flatten_pi(phi.lhs(), n_set),
                           flatten_pi(phi.rhs(), n_set));
    case Op::Or:
      return Formula::disj(flatten_pi(phi.lhs(), n_set),
                           flatten_pi(phi.rhs(), n_set));
    case Op::Next:
      return Formula::next(flatten_pi(phi.child(), n_set));
    case Op::WeakUntil:
      return Formula::weak_until(flatten_pi(phi.lhs(), n_set),
                                 flatten_pi(phi.rhs(), n_set));
    case Op::Release:
      return Formula::release(flatten_pi(phi.lhs(), n_set),
                              flatten_pi(phi.rhs(), n_set));
    case Op::Until:
      return Formula::weak_until(
          Formula::conj(flatten_pi(phi.lhs(), n_set),
                        Formula::eventually(eval_mu(phi.rhs(), n_set))),
          flatten_pi(phi.rhs(), n_set));
    case Op::StrongRelease:
      return Formula::release(
          flatten_pi(phi.lhs(), n_set),
          Formula::conj(flatten_pi(phi.rhs(), n_set),
                        Formula::eventually(eval_mu(phi.lhs(), n_set))));
  }
  throw std::logic_error("flatten_pi: bad op");
}

// ---------------------------------------------------------------------------
// Normalisation into Delta_2.

enum class NormalizeVariant { Primary, Dual };

struct Disjunct {
  std::vector<Formula> m_set;
  std::vector<Formula> n_set;
  Formula formula;  // simplified (or raw when simplification is off)
  bool pruned;      // simplified to ff
};

struct NormalizationReport {
  Formula input;
  NormalizeVariant variant;
  std::vector<Disjunct> disjuncts;  // all (M, N) pairs, binary-counter order
  Formula result;                   // disjunction of the non-pruned formulas
  std::uint64_t input_length;
  std::uint64_t result_length;
};

namespace detail {

inline std::vector<Formula> subset_of(const std::vector<Formula>& base,
                                      std::uint64_t bits) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (bits & (std::uint64_t{1} << i)) out.push_back(base[i]);
  return out;
}

}  // namespace detail

// Enumerates all M subset mu(phi), N subset nu(phi) in binary-counter order over the
// structurally sorted subformula lists, forms the disjunct
//   flatten_sigma(phi, M) & Phi(M, N)        (primary)
//   flatten_pi(phi, N)    & Phi(M, N)        (dual)
// simplifies it, prunes the ones equal to ff, and returns the disjunction.
inline NormalizationReport normalize(Formula phi,
                                     NormalizeVariant variant =
                                         NormalizeVariant::Primary,
                                     bool do_simplify = true) {
  const std::vector<Formula> mu = mu_subformulas(phi);
  const std::vector<Formula> nu = nu_subformulas(phi);
  if (mu.size() > 20 || nu.size() > 20)
    throw std::invalid_argument("normalize: too many fixpoint subformulas");

  NormalizationReport report{phi, variant, {}, Formula::ff(), phi.length(), 0};
  std::vector<Formula> kept;
  for (std::uint64_t mb = 0; mb < (std::uint64_t{1} << mu.size()); ++mb) {
    const std::vector<Formula> m_set = detail::subset_of(mu, mb);
    for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << nu.size()); ++nb) {
      const std::vector<Formula> n_set = detail::subset_of(nu, nb);
      Formula core = variant == NormalizeVariant::Primary
                         ? flatten_sigma(phi, m_set)
                         : flatten_pi(phi, n_set);
      Formula disjunct = Formula::conj(core, phi_conjunct(m_set, n_set));
      if (do_simplify) disjunct = simplify(disjunct);
      const bool pruned = disjunct == Formula::ff();
      report.disjuncts.push_back({m_set, n_set, disjunct, pruned});
      if (!pruned) kept.push_back(disjunct);
    }
  }
  if (!kept.empty()) {
    Formula out = kept.back();
    for (std::size_t i = kept.size() - 1; i-- > 0;)
      out = Formula::disj(kept[i], out);
    report.result = out;
  }
  report.result_length = report.result.length();
  if (do_simplify && phi.length() > 5) {
    // single-exponential bound from the complexity analysis
    const std::uint64_t n = phi.length();
    if (n <= 30 && report.result_length > (std::uint64_t{1} << (2 * n + 2)))
      throw std::logic_error("normalize: size bound exceeded");
  }
  return report;
}

// Stable-word normal form: eval_nu(phi, M) replaces flatten; the result is
// equivalent to phi on stable words only.
inline NormalizationReport normalize_stable(Formula phi,
                                            bool do_simplify = true) {
  const std::vector<Formula> mu = mu_subformulas(phi);
  const std::vector<Formula> nu = nu_subformulas(phi);
  if (mu.size() > 20 || nu.size() > 20)
    throw std::invalid_argument("normalize_stable: too many fixpoint subformulas");
  NormalizationReport report{phi, NormalizeVariant::Primary, {}, Formula::ff(),
                             phi.length(), 0};
  std::vector<Formula> kept;
  for (std::uint64_t mb = 0; mb < (std::uint64_t{1} << mu.size()); ++mb) {
    const std::vector<Formula> m_set = detail::subset_of(mu, mb);
    for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << nu.size()); ++nb) {
      const std::vector<Formula> n_set = detail::subset_of(nu, nb);
      Formula disjunct =
          Formula::conj(eval_nu(phi, m_set), phi_conjunct(m_set, n_set));
      if (do_simplify) disjunct = simplify(disjunct);
      const bool pruned = disjunct == Formula::ff();
      report.disjuncts.push_back({m_set, n_set, disjunct, pruned});
      if (!pruned) kept.push_back(disjunct);
    }
  }
  if (!kept.empty()) {
    Formula out = kept.back();
    for (std::size_t i = kept.size() - 1; i-- > 0;)
      out = Formula::disj(kept[i], out);
    report.result = out;
  }
  report.result_length = report.result.length();
  return report;
}

// ---------------------------------------------------------------------------
// JSON report serialization.

inline nlohmann::json report_to_json(const NormalizationReport& report) {
  nlohmann::json j;
  j["input"] = to_string(report.input);
  j["variant"] =
      report.variant == NormalizeVariant::Primary ? "primary" : "dual";
  j["input_length"] = report.input_length;
  j["result_length"] = report.result_length;
  j["result"] = to_string(report.result);
  nlohmann::json disjuncts = nlohmann::json::array();
  for (const Disjunct& d : report.disjuncts) {
    nlohmann::json entry;
    entry["M"] = nlohmann::json::array();
    for (Formula f : d.m_set) entry["M"].push_back(to_string(f));
    entry["N"] = nlohmann::json::array();
    for (Formula f : d.n_set) entry["N"].push_back(to_string(f));
    entry["formula"] = to_string(d.formula);
    entry["pruned"] = d.pruned;
    disjuncts.push_back(entry);
  }
  j["disjuncts"] = disjuncts;
  return j;
}

}  // namespace delta2
