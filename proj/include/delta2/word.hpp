#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "delta2/formula.hpp"

namespace delta2 {

// Ordered list of atomic propositions.  A letter is a subset of it, stored as
// a bitmask over the proposition order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> props) : props_(std::move(props)) {
    std::vector<std::string> sorted = props_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("alphabet: duplicate proposition");
    if (props_.size() > 20)
      throw std::invalid_argument("alphabet: too many propositions");
  }

  std::size_t size() const { return props_.size(); }
  std::size_t letter_count() const { return std::size_t{1} << props_.size(); }
  const std::vector<std::string>& props() const { return props_; }
  const std::string& prop(std::size_t i) const { return props_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < props_.size(); ++i)
      if (props_[i] == name) return i;
    return std::nullopt;
  }

  std::string letter_to_string(std::uint32_t letter) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < props_.size(); ++i) {
      if (letter & (1u << i)) {
        if (!first) out += ',';
        out += props_[i];
        first = false;
      }
    }
    out += '}';
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.props_ == b.props_;
  }

 private:
  std::vector<std::string> props_;
};

using Letter = std::uint32_t;

// Ultimately periodic word u . v^omega.
struct LassoWord {
  Alphabet alphabet;
  std::vector<Letter> prefix;  // u
  std::vector<Letter> cycle;   // v, non-empty

  LassoWord(Alphabet a, std::vector<Letter> u, std::vector<Letter> v)
      : alphabet(std::move(a)), prefix(std::move(u)), cycle(std::move(v)) {
    if (cycle.empty()) throw std::invalid_argument("lasso: empty cycle");
  }

  std::size_t period_positions() const { return prefix.size() + cycle.size(); }

  Letter letter_at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return cycle[(i - prefix.size()) % cycle.size()];
  }

  // The suffix w_i as a lasso.
  LassoWord suffix(std::size_t i) const {
    if (i <= prefix.size()) {
      return LassoWord(alphabet,
                       std::vector<Letter>(prefix.begin() + i, prefix.end()),
                       cycle);
    }
    const std::size_t k = (i - prefix.size()) % cycle.size();
    std::vector<Letter> rotated(cycle.begin() + k, cycle.end());
    rotated.insert(rotated.end(), cycle.begin(), cycle.begin() + k);
    return LassoWord(alphabet, {}, rotated);
  }
};

// Text form: "<prefix letters> ; <cycle letters>", letters like {a,b} or {}.
inline std::string to_string(const LassoWord& w) {
  std::string out;
  for (Letter l : w.prefix) out += w.alphabet.letter_to_string(l);
  out += out.empty() ? "; " : " ; ";
  for (Letter l : w.cycle) out += w.alphabet.letter_to_string(l);
  return out;
}

namespace detail {

inline std::vector<std::vector<std::string>> parse_letter_names(
    std::string_view text, std::size_t base_pos) {
  std::vector<std::vector<std::string>> letters;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("lasso: " + msg, base_pos + i);
  };
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] != '{') fail("expected '{'");
    ++i;
    std::vector<std::string> props;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size()) fail("unterminated letter");
      if (text[i] == '}') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != '}' &&
             text[i] != ' ')
        ++i;
      props.emplace_back(text.substr(start, i - start));
    }
    letters.push_back(std::move(props));
  }
  return letters;
}

}  // namespace detail

// Parses "prefix ; cycle"; the alphabet is the sorted set of mentioned
// propositions unless one is supplied.
inline LassoWord parse_lasso(std::string_view text,
                             std::optional<Alphabet> alphabet = std::nullopt) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("lasso: expected ';' between prefix and cycle", 0);
  auto prefix_names = detail::parse_letter_names(text.substr(0, semi), 0);
  auto cycle_names =
      detail::parse_letter_names(text.substr(semi + 1), semi + 1);
  if (cycle_names.empty())
    throw ParseError("lasso: cycle must be non-empty", text.size());

  Alphabet ab;
  if (alphabet) {
    ab = *alphabet;
  } else {
    std::vector<std::string> props;
    for (const auto& letter : prefix_names)
      props.insert(props.end(), letter.begin(), letter.end());
    for (const auto& letter : cycle_names)
      props.insert(props.end(), letter.begin(), letter.end());
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
    ab = Alphabet(props);
  }

  auto encode = [&](const std::vector<std::string>& names) {
    Letter letter = 0;
    for (const auto& name : names) {
      auto idx = ab.index_of(name);
      if (!idx) throw ParseError("lasso: unknown proposition '" + name + "'", 0);
      letter |= 1u << *idx;
    }
    return letter;
  };
  std::vector<Letter> u, v;
  for (const auto& l : prefix_names) u.push_back(encode(l));
  for (const auto& l : cycle_names) v.push_back(encode(l));
  return LassoWord(std::move(ab), std::move(u), std::move(v));
}

// ---------------------------------------------------------------------------
// Exact evaluation on lassos.
//
// Satisfaction of every subformula is computed at each of the |u|+|v|
// distinct positions.  Propositional and X cases are direct (X wraps from the
// last position back to |u|).  On the cycle, U/M are least fixpoints of their
// one-step expansion laws (start false, iterate to convergence) and W/R are
// greatest fixpoints (start true); a single backward pass then fills the
// prefix.

class LassoEvaluator {
 public:
  LassoEvaluator(Formula f, const Alphabet& alphabet) : root_(f) {
    std::vector<Formula> subs = subformulas(f);
    std::sort(subs.begin(), subs.end(),
              [](Formula a, Formula b) { return a.id() < b.id(); });
    dense_.reserve(subs.size());
    std::unordered_map<std::uint32_t, std::uint32_t> pos;
    for (Formula g : subs) {
      NodeInfo info{};
      info.op = g.op();
      if (g.is_literal()) {
        auto idx = alphabet.index_of(g.atom_name());
        if (!idx)
          throw std::invalid_argument("evaluate: unknown atom '" +
                                      g.atom_name() + "'");
        info.atom_bit = static_cast<std::uint32_t>(*idx);
      } else if (g.is_unary()) {
        info.a = pos.at(g.child().id());
      } else if (g.is_binary()) {
        info.a = pos.at(g.lhs().id());
        info.b = pos.at(g.rhs().id());
      }
      pos.emplace(g.id(), static_cast<std::uint32_t>(dense_.size()));
      dense_.push_back(info);
    }
    root_index_ = pos.at(f.id());
    index_ = std::move(pos);
  }

  // Dense row index of a subformula of the root, if it is one.
  std::optional<std::size_t> index_of(Formula g) const {
    auto it = index_.find(g.id());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Truth of every subformula at every position; row i = dense node i.
  std::vector<std::vector<bool>> tables(const LassoWord& w) const {
    const std::size_t n = w.period_positions();
    const std::size_t ofs = w.prefix.size();
    std::vector<std::vector<bool>> val(dense_.size(),
                                       std::vector<bool>(n, false));
    auto next_pos = [&](std::size_t p) { return p + 1 < n ? p + 1 : ofs; };
    for (std::size_t i = 0; i < dense_.size(); ++i) {
      const NodeInfo& nd = dense_[i];
      auto& row = val[i];
      switch (nd.op) {
        case Op::TT:
          row.assign(n, true);
          break;
        case Op::FF:
          break;
        case Op::Atom:
          for (std::size_t p = 0; p < n; ++p)
            row[p] = (w.letter_at(p) >> nd.atom_bit) & 1u;
          break;
        case Op::NegAtom:
          for (std::size_t p = 0; p < n; ++p)
            row[p] = !((w.letter_at(p) >> nd.atom_bit) & 1u);
          break;
        case Op::And:
          for (std::size_t p = 0; p < n; ++p)
            row[p] = val[nd.a][p] && val[nd.b][p];
          break;
        case Op::Or:
          for (std::size_t p = 0; p < n; ++p)
            row[p] = val[nd.a][p] || val[nd.b][p];
          break;
        case Op::Next:
          for (std::size_t p = 0; p < n; ++p) row[p] = val[nd.a][next_pos(p)];
          break;
        case Op::Until:
        case Op::StrongRelease:
        case Op::WeakUntil:
        case Op::Release: {
          const bool least = nd.op == Op::Until || nd.op == Op::StrongRelease;
          const auto& l = val[nd.a];
          const auto& r = val[nd.b];
          auto step = [&](std::size_t p, bool cont) {
            switch (nd.op) {
              case Op::Until: return r[p] || (l[p] && cont);
              case Op::WeakUntil: return r[p] || (l[p] && cont);
              case Op::StrongRelease: return r[p] && (l[p] || cont);
              default: return r[p] && (l[p] || cont);  // Release
            }
          };
          // fixpoint on the cycle
          for (std::size_t p = ofs; p < n; ++p) row[p] = !least;
          bool changed = true;
          while (changed) {
            changed = false;
            for (std::size_t p = n; p-- > ofs;) {
              bool v = step(p, row[next_pos(p)]);
              if (v != row[p]) {
                row[p] = v;
                changed = true;
              }
            }
          }
          // backward pass through the prefix
          for (std::size_t p = ofs; p-- > 0;) row[p] = step(p, row[p + 1]);
          break;
        }
      }
    }
    return val;
  }

  bool evaluate(const LassoWord& w) const {
    return tables(w)[root_index_][0];
  }

  std::size_t root_index() const { return root_index_; }

 private:
  struct NodeInfo {
    Op op;
    std::uint32_t a = 0, b = 0;
    std::uint32_t atom_bit = 0;
  };
  Formula root_;
  std::vector<NodeInfo> dense_;
  std::uint32_t root_index_;
  std::unordered_map<std::uint32_t, std::uint32_t> index_;
};

// w |= phi, exactly.
inline bool evaluate(Formula phi, const LassoWord& w) {
  return LassoEvaluator(phi, w.alphabet).evaluate(w);
}

// ---------------------------------------------------------------------------
// GF/FG/F/G sets and stability.

struct LimitSets {
  std::vector<Formula> gf;  // {psi in mu(phi) : w |= GF psi}
  std::vector<Formula> fg;  // {psi in nu(phi) : w |= FG psi}
  std::vector<Formula> f;   // {psi in mu(phi) : w |= F psi}
  std::vector<Formula> g;   // {psi in nu(phi) : w |= G psi}
};

// Variant for bulk use: the evaluator and mu/nu lists are built once per
// formula and reused across words.
inline LimitSets limit_sets(const LassoEvaluator& ev,
                            const std::vector<Formula>& mu,
                            const std::vector<Formula>& nu,
                            const LassoWord& w) {
  auto tables = ev.tables(w);
  const std::size_t ofs = w.prefix.size();
  const std::size_t n = w.period_positions();

  auto row_of = [&](Formula g) -> const std::vector<bool>& {
    return tables[*ev.index_of(g)];
  };

  LimitSets out;
  for (Formula psi : mu) {
    const auto& row = row_of(psi);
    bool somewhere = false, in_cycle = false;
    for (std::size_t p = 0; p < n; ++p) somewhere |= row[p];
    for (std::size_t p = ofs; p < n; ++p) in_cycle |= row[p];
    if (in_cycle) out.gf.push_back(psi);   // holds at a cycle position
    if (somewhere) out.f.push_back(psi);
  }
  for (Formula psi : nu) {
    const auto& row = row_of(psi);
    bool everywhere = true, whole_cycle = true;
    for (std::size_t p = 0; p < n; ++p) everywhere &= row[p];
    for (std::size_t p = ofs; p < n; ++p) whole_cycle &= row[p];
    if (whole_cycle) out.fg.push_back(psi);
    if (everywhere) out.g.push_back(psi);
  }
  return out;
}

inline LimitSets limit_sets(Formula phi, const LassoWord& w) {
  LassoEvaluator ev(phi, w.alphabet);
  return limit_sets(ev, mu_subformulas(phi), nu_subformulas(phi), w);
}

inline std::vector<Formula> gf_set(Formula phi, const LassoWord& w) {
  return limit_sets(phi, w).gf;
}
inline std::vector<Formula> fg_set(Formula phi, const LassoWord& w) {
  return limit_sets(phi, w).fg;
}
inline std::vector<Formula> f_set(Formula phi, const LassoWord& w) {
  return limit_sets(phi, w).f;
}
inline std::vector<Formula> g_set(Formula phi, const LassoWord& w) {
  return limit_sets(phi, w).g;
}

// Stable: F-truth equals GF-truth on mu-subformulas and G-truth equals
// FG-truth on nu-subformulas.
inline bool is_stable(Formula phi, const LassoWord& w) {
  LimitSets s = limit_sets(phi, w);
  return s.f == s.gf && s.g == s.fg;
}

// ---------------------------------------------------------------------------
// Enumeration.  Total order: by prefix length, then cycle length, then the
// letter sequences read as base-|Sigma| numbers (prefix first, most
// significant letter first).

inline std::vector<LassoWord> enumerate_lassos(const Alphabet& alphabet,
                                               std::size_t max_prefix,
                                               std::size_t max_cycle) {
  if (max_cycle < 1) throw std::invalid_argument("enumerate_lassos: max_cycle");
  const std::uint64_t letters = alphabet.letter_count();
  std::vector<LassoWord> out;
  for (std::size_t lu = 0; lu <= max_prefix; ++lu) {
    for (std::size_t lv = 1; lv <= max_cycle; ++lv) {
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < lu + lv; ++i) combos *= letters;
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::vector<Letter> seq(lu + lv);
        std::uint64_t rest = code;
        for (std::size_t i = lu + lv; i-- > 0;) {
          seq[i] = static_cast<Letter>(rest % letters);
          rest /= letters;
        }
        out.emplace_back(
            alphabet, std::vector<Letter>(seq.begin(), seq.begin() + lu),
            std::vector<Letter>(seq.begin() + lu, seq.end()));
      }
    }
  }
  return out;
}

inline std::vector<LassoWord> random_lassos(const Alphabet& alphabet,
                                            std::size_t count,
                                            std::size_t max_prefix,
                                            std::size_t max_cycle,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t letters = alphabet.letter_count();
  std::vector<LassoWord> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t lu = rng() % (max_prefix + 1);
    const std::size_t lv = 1 + rng() % max_cycle;
    std::vector<Letter> u(lu), v(lv);
    for (auto& l : u) l = static_cast<Letter>(rng() % letters);
    for (auto& l : v) l = static_cast<Letter>(rng() % letters);
    out.emplace_back(alphabet, std::move(u), std::move(v));
  }
  return out;
}

// First enumerated lasso where the formulas disagree, if any.
inline std::optional<LassoWord> equivalent_on_lassos(Formula phi, Formula psi,
                                                     const Alphabet& alphabet,
                                                     std::size_t max_prefix,
                                                     std::size_t max_cycle) {
  LassoEvaluator ep(phi, alphabet), eq(psi, alphabet);
  for (const LassoWord& w : enumerate_lassos(alphabet, max_prefix, max_cycle)) {
    if (ep.evaluate(w) != eq.evaluate(w)) return w;
  }
  return std::nullopt;
}

inline std::optional<LassoWord> equivalent_on_words(
    Formula phi, Formula psi, const Alphabet& alphabet,
    const std::vector<LassoWord>& words) {
  LassoEvaluator ep(phi, alphabet), eq(psi, alphabet);
  for (const LassoWord& w : words) {
    if (ep.evaluate(w) != eq.evaluate(w)) return w;
  }
  return std::nullopt;
}

}  // namespace delta2
