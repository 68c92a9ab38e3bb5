#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace delta2 {

using StateId = std::uint32_t;
using StateSet = std::vector<StateId>;  // sorted, unique

inline bool is_subset(const StateSet& a, const StateSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline StateSet set_union(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// Positive Boolean formula over an opaque state set, kept eagerly in
// canonical form: the antichain of its subset-minimal models.  tt has the
// single model {} and ff has none; two formulas are equivalent iff their
// antichains coincide, which here is plain equality.
class PosBool {
 public:
  PosBool() = default;  // ff

  static PosBool tt() {
    PosBool b;
    b.models_.push_back({});
    return b;
  }
  static PosBool ff() { return PosBool(); }
  static PosBool state(StateId q) {
    PosBool b;
    b.models_.push_back({q});
    return b;
  }
  static PosBool from_models(std::vector<StateSet> models) {
    PosBool b;
    b.models_ = std::move(models);
    for (auto& m : b.models_) {
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    b.canonicalize();
    return b;
  }

  bool is_tt() const { return models_.size() == 1 && models_[0].empty(); }
  bool is_ff() const { return models_.empty(); }

  const std::vector<StateSet>& minimal_models() const { return models_; }

  // S |= theta iff S contains some minimal model.
  bool satisfied_by(const StateSet& s) const {
    for (const auto& m : models_)
      if (is_subset(m, s)) return true;
    return false;
  }

  friend PosBool operator|(const PosBool& a, const PosBool& b) {
    PosBool out;
    out.models_ = a.models_;
    out.models_.insert(out.models_.end(), b.models_.begin(), b.models_.end());
    out.canonicalize();
    return out;
  }

  friend PosBool operator&(const PosBool& a, const PosBool& b) {
    PosBool out;
    out.models_.reserve(a.models_.size() * b.models_.size());
    for (const auto& ma : a.models_)
      for (const auto& mb : b.models_)
        out.models_.push_back(set_union(ma, mb));
    out.canonicalize();
    return out;
  }

  // theta[ff / kill]: models intersecting the killed set disappear.
  PosBool substitute_ff(const StateSet& kill) const {
    PosBool out;
    for (const auto& m : models_) {
      StateSet inter;
      std::set_intersection(m.begin(), m.end(), kill.begin(), kill.end(),
                            std::back_inserter(inter));
      if (inter.empty()) out.models_.push_back(m);
    }
    // the surviving models still form an antichain
    std::sort(out.models_.begin(), out.models_.end());
    return out;
  }

  // Renames states; the map must be injective on the mentioned states.
  template <typename Fn>
  PosBool rename(Fn&& fn) const {
    std::vector<StateSet> models;
    models.reserve(models_.size());
    for (const auto& m : models_) {
      StateSet renamed;
      renamed.reserve(m.size());
      for (StateId q : m) renamed.push_back(fn(q));
      std::sort(renamed.begin(), renamed.end());
      models.push_back(std::move(renamed));
    }
    return from_models(std::move(models));
  }

  // De Morgan dual: swaps and/or (and tt/ff).  In antichain terms the models
  // of the dual are the minimal transversals of the model antichain.
  PosBool dual() const {
    PosBool out = tt();
    for (const auto& m : models_) {
      PosBool clause;  // disjunction of the states of m
      for (StateId q : m) clause.models_.push_back({q});
      out = out & clause;
    }
    return out;  // dual(ff) = empty product = tt; dual(tt) = tt & empty-or = ff
  }

  StateSet mentioned_states() const {
    StateSet out;
    for (const auto& m : models_) out = set_union(out, m);
    return out;
  }

  friend bool operator==(const PosBool& a, const PosBool& b) {
    return a.models_ == b.models_;
  }
  friend bool operator!=(const PosBool& a, const PosBool& b) {
    return !(a == b);
  }
  friend bool operator<(const PosBool& a, const PosBool& b) {
    return a.models_ < b.models_;
  }

  std::string to_string() const {
    if (is_tt()) return "tt";
    if (is_ff()) return "ff";
    std::ostringstream os;
    for (std::size_t i = 0; i < models_.size(); ++i) {
      if (i) os << " | ";
      if (models_[i].size() > 1) os << '(';
      for (std::size_t j = 0; j < models_[i].size(); ++j) {
        if (j) os << " & ";
        os << 'q' << models_[i][j];
      }
      if (models_[i].size() > 1) os << ')';
    }
    return os.str();
  }

 private:
  void canonicalize() {
    std::sort(models_.begin(), models_.end());
    models_.erase(std::unique(models_.begin(), models_.end()), models_.end());
    std::vector<StateSet> keep;
    for (std::size_t i = 0; i < models_.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < models_.size() && minimal; ++j) {
        if (i == j) continue;
        if (is_subset(models_[j], models_[i]) && models_[j] != models_[i])
          minimal = false;
      }
      if (minimal) keep.push_back(models_[i]);
    }
    models_ = std::move(keep);
  }

  std::vector<StateSet> models_;
};

}  // namespace delta2
