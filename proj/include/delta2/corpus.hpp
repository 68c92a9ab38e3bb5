#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "delta2/formula.hpp"

namespace delta2 {

// Seeded random NNF formulas; generation is deterministic for fixed
// parameters (std::mt19937_64 has a fixed, portable output sequence).
struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_props = 2;
  std::size_t max_size = 10;  // formula length bound
  // relative operator weights
  unsigned w_atom = 4;
  unsigned w_neg_atom = 2;
  unsigned w_tt = 1;
  unsigned w_ff = 1;
  unsigned w_and = 3;
  unsigned w_or = 3;
  unsigned w_next = 2;
  unsigned w_until = 3;
  unsigned w_weak_until = 2;
  unsigned w_release = 2;
  unsigned w_strong_release = 1;
  unsigned w_eventually = 3;
  unsigned w_always = 3;
};

namespace detail {

class CorpusGen {
 public:
  explicit CorpusGen(const CorpusSpec& spec) : spec_(spec), rng_(spec.seed) {
    for (std::size_t i = 0; i < spec.max_props; ++i)
      props_.push_back(std::string(1, static_cast<char>('a' + i % 26)) +
                       (i >= 26 ? std::to_string(i / 26) : ""));
  }

  Formula generate() {
    const std::size_t budget =
        1 + rng_() % spec_.max_size;  // target length in [1, max_size]
    return gen(budget);
  }

  const std::vector<std::string>& props() const { return props_; }

 private:
  Formula leaf() {
    const unsigned total =
        spec_.w_atom + spec_.w_neg_atom + spec_.w_tt + spec_.w_ff;
    unsigned pick = static_cast<unsigned>(rng_() % total);
    if (pick < spec_.w_atom) return Formula::atom(random_prop());
    pick -= spec_.w_atom;
    if (pick < spec_.w_neg_atom) return Formula::neg_atom(random_prop());
    pick -= spec_.w_neg_atom;
    if (pick < spec_.w_tt) return Formula::tt();
    return Formula::ff();
  }

  const std::string& random_prop() {
    return props_[rng_() % props_.size()];
  }

  // budget = maximum number of AST nodes to spend
  Formula gen(std::size_t budget) {
    if (budget <= 1) return leaf();
    struct Entry {
      unsigned weight;
      int kind;  // 0 and,1 or,2 X,3 U,4 W,5 R,6 M,7 F,8 G
      std::size_t min_size;
    };
    const Entry entries[] = {
        {spec_.w_and, 0, 3},     {spec_.w_or, 1, 3},
        {spec_.w_next, 2, 2},    {spec_.w_until, 3, 3},
        {spec_.w_weak_until, 4, 3}, {spec_.w_release, 5, 3},
        {spec_.w_strong_release, 6, 3}, {spec_.w_eventually, 7, 3},
        {spec_.w_always, 8, 3},
    };
    unsigned total = 0;
    for (const Entry& e : entries)
      if (budget >= e.min_size) total += e.weight;
    if (total == 0) return leaf();
    unsigned pick = static_cast<unsigned>(rng_() % total);
    int kind = -1;
    for (const Entry& e : entries) {
      if (budget < e.min_size) continue;
      if (pick < e.weight) {
        kind = e.kind;
        break;
      }
      pick -= e.weight;
    }
    switch (kind) {
      case 2: return Formula::next(gen(budget - 1));
      case 7: return Formula::eventually(gen(budget - 2));
      case 8: return Formula::always(gen(budget - 2));
      default: {
        const std::size_t left = 1 + rng_() % (budget - 2);
        Formula l = gen(left);
        Formula r = gen(budget - 1 - left);
        switch (kind) {
          case 0: return Formula::conj(l, r);
          case 1: return Formula::disj(l, r);
          case 3: return Formula::until(l, r);
          case 4: return Formula::weak_until(l, r);
          case 5: return Formula::release(l, r);
          default: return Formula::strong_release(l, r);
        }
      }
    }
  }

  CorpusSpec spec_;
  std::mt19937_64 rng_;
  std::vector<std::string> props_;
};

}  // namespace detail

inline std::vector<Formula> generate_corpus(const CorpusSpec& spec) {
  detail::CorpusGen gen(spec);
  std::vector<Formula> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(gen.generate());
  return out;
}

inline std::vector<std::string> corpus_props(const CorpusSpec& spec) {
  return detail::CorpusGen(spec).props();
}

}  // namespace delta2
