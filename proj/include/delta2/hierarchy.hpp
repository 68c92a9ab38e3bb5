#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

#include "delta2/formula.hpp"

namespace delta2 {

// Classes of the syntactic-future hierarchy.  Sigma_0 = Pi_0 = Delta_0 holds
// the propositional formulas; Sigma_{i+1} adds X/U/M over Pi_i, Pi_{i+1} adds
// X/R/W over Sigma_i, Delta_{i+1} closes Sigma_{i+1} u Pi_{i+1} under and/or.
enum class ClassKind : std::uint8_t { Sigma, Pi, Delta };

struct HierarchyClass {
  ClassKind kind;
  int level;

  friend bool operator==(const HierarchyClass& a, const HierarchyClass& b) {
    return a.kind == b.kind && a.level == b.level;
  }
  friend bool operator!=(const HierarchyClass& a, const HierarchyClass& b) {
    return !(a == b);
  }
  friend bool operator<(const HierarchyClass& a, const HierarchyClass& b) {
    return a.level != b.level ? a.level < b.level : a.kind < b.kind;
  }
};

inline HierarchyClass sigma_class(int level) {
  return {ClassKind::Sigma, level};
}
inline HierarchyClass pi_class(int level) { return {ClassKind::Pi, level}; }
inline HierarchyClass delta_class(int level) {
  return {ClassKind::Delta, level};
}

inline std::string to_string(const HierarchyClass& c) {
  const char* base = c.kind == ClassKind::Sigma ? "Sigma"
                     : c.kind == ClassKind::Pi  ? "Pi"
                                                : "Delta";
  return base + std::to_string(c.level);
}

// Partial order generated by Sigma_j <= Delta_j, Pi_j <= Delta_j,
// Delta_j <= Sigma_{j+1}, Delta_j <= Pi_{j+1}; Sigma_j and Pi_j incomparable.
inline bool leq(const HierarchyClass& a, const HierarchyClass& b) {
  if (a.level < b.level) return true;
  if (a.level > b.level) return false;
  if (a.kind == b.kind) return true;
  return b.kind == ClassKind::Delta;  // same level: Sigma/Pi below Delta only
}

// Least hierarchy levels, read off the per-node caches (see formula.hpp).
inline int sigma_level(Formula f) { return f.sigma_level(); }
inline int pi_level(Formula f) { return f.pi_level(); }
inline int delta_level(Formula f) { return f.delta_level(); }

// Direct membership decision following the inductive class definition.  Kept
// separate from the level computation so the two can cross-check each other.
namespace detail {

using ClassMemo = std::map<std::tuple<std::uint32_t, int, int>, bool>;

inline bool in_class_rec(Formula f, const HierarchyClass& c, ClassMemo& memo) {
  const auto key =
      std::make_tuple(f.id(), static_cast<int>(c.kind), c.level);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool result = false;
  if (c.level == 0) {
    // propositional formulas only
    switch (f.op()) {
      case Op::TT:
      case Op::FF:
      case Op::Atom:
      case Op::NegAtom:
        result = true;
        break;
      case Op::And:
      case Op::Or:
        result = in_class_rec(f.lhs(), c, memo) && in_class_rec(f.rhs(), c, memo);
        break;
      default:
        result = false;
    }
  } else {
    switch (c.kind) {
      case ClassKind::Sigma: {
        if (in_class_rec(f, pi_class(c.level - 1), memo)) {
          result = true;
          break;
        }
        switch (f.op()) {
          case Op::And:
          case Op::Or:
          case Op::Until:
          case Op::StrongRelease:
            result = in_class_rec(f.lhs(), c, memo) &&
                     in_class_rec(f.rhs(), c, memo);
            break;
          case Op::Next:
            result = in_class_rec(f.child(), c, memo);
            break;
          default:
            result = false;
        }
        break;
      }
      case ClassKind::Pi: {
        if (in_class_rec(f, sigma_class(c.level - 1), memo)) {
          result = true;
          break;
        }
        switch (f.op()) {
          case Op::And:
          case Op::Or:
          case Op::WeakUntil:
          case Op::Release:
            result = in_class_rec(f.lhs(), c, memo) &&
                     in_class_rec(f.rhs(), c, memo);
            break;
          case Op::Next:
            result = in_class_rec(f.child(), c, memo);
            break;
          default:
            result = false;
        }
        break;
      }
      case ClassKind::Delta: {
        if (in_class_rec(f, sigma_class(c.level), memo) ||
            in_class_rec(f, pi_class(c.level), memo)) {
          result = true;
        } else if (f.op() == Op::And || f.op() == Op::Or) {
          result = in_class_rec(f.lhs(), c, memo) &&
                   in_class_rec(f.rhs(), c, memo);
        }
        break;
      }
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace detail

inline bool in_class(Formula f, const HierarchyClass& c) {
  detail::ClassMemo memo;
  return detail::in_class_rec(f, c, memo);
}

// The <=-minimal classes containing f: {Sigma_s} if s < p, {Pi_p} if p < s,
// both when s == p.  Level-0 formulas classify as both Sigma_0 and Pi_0.
// With exclude_level0 the levels are clamped to >= 1 (the automaton modules
// label states with non-zero classes only).
inline std::vector<HierarchyClass> smallest_classes(Formula f,
                                                    bool exclude_level0 = false) {
  int s = f.sigma_level();
  int p = f.pi_level();
  if (exclude_level0) {
    s = std::max(s, 1);
    p = std::max(p, 1);
  }
  std::vector<HierarchyClass> out;
  if (s < p) {
    out.push_back(sigma_class(s));
  } else if (p < s) {
    out.push_back(pi_class(p));
  } else {
    out.push_back(sigma_class(s));
    out.push_back(pi_class(p));
  }
  return out;
}

}  // namespace delta2
