#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "delta2/alternating.hpp"
#include "delta2/corpus.hpp"
#include "delta2/determinize.hpp"
#include "delta2/normalize.hpp"
#include "delta2/word.hpp"

namespace delta2 {

// Differential-test battery: for every generated formula, checks both
// normalisation variants against the word oracle, the class and size
// guarantees, the A1W state bound, and DRW membership.
struct XCheckOptions {
  CorpusSpec corpus;
  std::size_t max_prefix = 2;
  std::size_t max_cycle = 3;
  bool with_drw = true;
  // test fixture: deliberately mis-simplify (x U y -> x W y) to prove the
  // oracle-soundness check catches a corrupted rule table
  bool corrupt_simplify = false;
};

struct XCheckReport {
  std::size_t formulas = 0;
  std::size_t failures = 0;
  std::string text;
};

namespace detail {

inline Formula corrupted_simplify(Formula f) {
  // wrong on purpose: drops the eventuality of every until
  if (f.is_binary()) {
    Formula l = corrupted_simplify(f.lhs());
    Formula r = corrupted_simplify(f.rhs());
    switch (f.op()) {
      case Op::And: f = Formula::conj(l, r); break;
      case Op::Or: f = Formula::disj(l, r); break;
      case Op::Until: f = Formula::weak_until(l, r); break;
      case Op::WeakUntil: f = Formula::weak_until(l, r); break;
      case Op::Release: f = Formula::release(l, r); break;
      default: f = Formula::strong_release(l, r); break;
    }
    return simplify(f);
  }
  if (f.is_unary()) return simplify(Formula::next(corrupted_simplify(f.child())));
  return f;
}

}  // namespace detail

inline XCheckReport xcheck(const XCheckOptions& opt) {
  XCheckReport report;
  std::ostringstream out;
  const std::vector<Formula> corpus = generate_corpus(opt.corpus);
  const Alphabet alphabet{corpus_props(opt.corpus)};
  const std::vector<LassoWord> lassos =
      enumerate_lassos(alphabet, opt.max_prefix, opt.max_cycle);

  out << "xcheck: seed=" << opt.corpus.seed << " count=" << opt.corpus.count
      << " max_props=" << opt.corpus.max_props
      << " max_size=" << opt.corpus.max_size << " prefix<=" << opt.max_prefix
      << " cycle<=" << opt.max_cycle << " (" << lassos.size() << " lassos)\n";

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Formula phi = corpus[i];
    std::vector<std::string> problems;
    auto check_equiv = [&](Formula other, const char* what) {
      if (auto cex = equivalent_on_words(phi, other, alphabet, lassos))
        problems.push_back(std::string(what) +
                           ": counterexample " + to_string(*cex));
    };

    try {
      const NormalizationReport primary = normalize(phi);
      const NormalizationReport dual = normalize(phi, NormalizeVariant::Dual);
      if (primary.result.delta_level() > 2)
        problems.push_back("primary result outside Delta_2");
      if (dual.result.delta_level() > 2)
        problems.push_back("dual result outside Delta_2");
      check_equiv(primary.result, "primary normalization");
      check_equiv(dual.result, "dual normalization");

      if (phi.length() > 5 && phi.length() <= 30 &&
          primary.result_length >
              (std::uint64_t{1} << (2 * phi.length() + 2)))
        problems.push_back("size bound violated");

      Formula simplified = opt.corrupt_simplify
                               ? detail::corrupted_simplify(phi)
                               : simplify(phi);
      check_equiv(simplified, "simplify soundness");

      AlternatingAutomaton a1w = ltl_to_a1w(phi, alphabet);
      if (a1w.constructed_states > 2 * proper_subformulas(phi).size())
        problems.push_back("A1W state bound violated");
      AlternatingAutomaton norm_a1w = ltl_to_a1w(primary.result, alphabet);
      auto cls = try_classify(norm_a1w);
      if (!cls || cls->height > 2)
        problems.push_back("normalized A1W height exceeds 2");

      if (opt.with_drw) {
        const DetAutomaton drw = ltl_to_drw(phi, alphabet);
        const std::size_t mu = mu_subformulas(phi).size();
        const std::size_t nu = nu_subformulas(phi).size();
        if (std::get<RabinAcc>(drw.acceptance).pairs.size() >
            (std::size_t{1} << (mu + nu)))
          problems.push_back("DRW pair bound violated");
        LassoEvaluator ev(phi, alphabet);
        for (const LassoWord& w : lassos) {
          if (det_membership(drw, w) != ev.evaluate(w)) {
            problems.push_back("DRW membership mismatch: " + to_string(w));
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }

    if (problems.empty()) {
      out << "ok " << to_string(phi) << "\n";
    } else {
      ++report.failures;
      for (const auto& p : problems)
        out << "FAIL " << to_string(phi) << ": " << p << "\n";
    }
  }
  report.formulas = corpus.size();
  out << "xcheck: " << report.formulas << " formulas, " << report.failures
      << " failures\n";
  report.text = out.str();
  return report;
}

}  // namespace delta2
