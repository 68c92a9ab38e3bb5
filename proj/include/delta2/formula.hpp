#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace delta2 {

// Negation-normal-form LTL over atomic propositions.  Negation appears only
// on atoms; F/G are parse/print sugar for (tt U x) and (ff R x).
enum class Op : std::uint8_t {
  TT,
  FF,
  Atom,
  NegAtom,
  And,
  Or,
  Next,
  Until,
  WeakUntil,
  Release,
  StrongRelease,
};

inline bool is_temporal_binary(Op op) {
  return op == Op::Until || op == Op::WeakUntil || op == Op::Release ||
         op == Op::StrongRelease;
}

namespace detail {

struct FormulaNode {
  Op op;
  std::uint32_t a;  // atom-name index, or lhs node id
  std::uint32_t b;  // rhs node id
  std::uint64_t length;
  // Least i with the formula in Sigma_i / Pi_i / Delta_i (syntactic-future
  // hierarchy).  Maintained at interning time from the children's values.
  std::uint16_t sigma_level;
  std::uint16_t pi_level;
  std::uint16_t delta_level;
};

class FormulaStore {
 public:
  static FormulaStore& instance() {
    static FormulaStore store;
    return store;
  }

  std::uint32_t intern(Op op, std::uint32_t a, std::uint32_t b) {
    std::lock_guard<std::mutex> lock(mutex_);
    const std::uint64_t key = pack(op, a, b);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    FormulaNode node{op, a, b, 1, 0, 0, 0};
    fill_derived(node);
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(node);
    index_.emplace(key, id);
    return id;
  }

  std::uint32_t intern_name(std::string_view name) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = name_index_.find(std::string(name));
    if (it != name_index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    name_index_.emplace(names_.back(), id);
    return id;
  }

  const FormulaNode& node(std::uint32_t id) const { return nodes_[id]; }
  const std::string& name(std::uint32_t id) const { return names_[id]; }

 private:
  FormulaStore() {
    // ids 0/1 are pinned so Formula's default constructor is cheap
    nodes_.push_back(FormulaNode{Op::TT, 0, 0, 1, 0, 0, 0});
    index_.emplace(pack(Op::TT, 0, 0), 0);
    nodes_.push_back(FormulaNode{Op::FF, 0, 0, 1, 0, 0, 0});
    index_.emplace(pack(Op::FF, 0, 0), 1);
  }

  static std::uint64_t pack(Op op, std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(op) << 58) |
           (static_cast<std::uint64_t>(a) << 29) | static_cast<std::uint64_t>(b);
  }

  static std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) {
    const std::uint64_t cap = UINT64_MAX / 4;
    std::uint64_t s = x + y;
    return (s < x || s > cap) ? cap : s;
  }

  void fill_derived(FormulaNode& n) {
    auto lvl = [&](std::uint32_t id) { return nodes_[id]; };
    switch (n.op) {
      case Op::TT:
      case Op::FF:
      case Op::Atom:
      case Op::NegAtom:
        n.length = 1;
        n.sigma_level = n.pi_level = n.delta_level = 0;
        break;
      case Op::And:
      case Op::Or: {
        const auto& l = lvl(n.a);
        const auto& r = lvl(n.b);
        n.length = sat_add(1, sat_add(l.length, r.length));
        n.sigma_level = std::max(l.sigma_level, r.sigma_level);
        n.pi_level = std::max(l.pi_level, r.pi_level);
        n.delta_level = std::max(l.delta_level, r.delta_level);
        break;
      }
      case Op::Next: {
        const auto& c = lvl(n.a);
        n.length = sat_add(1, c.length);
        n.sigma_level = std::max<std::uint16_t>(1, c.sigma_level);
        n.pi_level = std::max<std::uint16_t>(1, c.pi_level);
        n.delta_level = std::min(n.sigma_level, n.pi_level);
        break;
      }
      case Op::Until:
      case Op::StrongRelease: {
        const auto& l = lvl(n.a);
        const auto& r = lvl(n.b);
        n.length = sat_add(1, sat_add(l.length, r.length));
        n.sigma_level = std::max<std::uint16_t>(
            1, std::max(l.sigma_level, r.sigma_level));
        n.pi_level = static_cast<std::uint16_t>(n.sigma_level + 1);
        n.delta_level = n.sigma_level;
        break;
      }
      case Op::WeakUntil:
      case Op::Release: {
        const auto& l = lvl(n.a);
        const auto& r = lvl(n.b);
        n.length = sat_add(1, sat_add(l.length, r.length));
        n.pi_level =
            std::max<std::uint16_t>(1, std::max(l.pi_level, r.pi_level));
        n.sigma_level = static_cast<std::uint16_t>(n.pi_level + 1);
        n.delta_level = n.pi_level;
        break;
      }
    }
  }

  std::mutex mutex_;
  std::deque<FormulaNode> nodes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> name_index_;
};

}  // namespace detail

// Immutable, interned formula handle.  Structural equality coincides with
// handle equality; ids are topologically ordered (children precede parents).
class Formula {
 public:
  Formula() : id_(0) {}  // tt

  static Formula tt() { return Formula(0); }
  static Formula ff() { return Formula(1); }
  static Formula atom(std::string_view name) {
    auto& s = detail::FormulaStore::instance();
    return Formula(s.intern(Op::Atom, s.intern_name(name), 0));
  }
  static Formula neg_atom(std::string_view name) {
    auto& s = detail::FormulaStore::instance();
    return Formula(s.intern(Op::NegAtom, s.intern_name(name), 0));
  }
  static Formula conj(Formula l, Formula r) { return make(Op::And, l, r); }
  static Formula disj(Formula l, Formula r) { return make(Op::Or, l, r); }
  static Formula next(Formula c) {
    return Formula(detail::FormulaStore::instance().intern(Op::Next, c.id_, 0));
  }
  static Formula until(Formula l, Formula r) { return make(Op::Until, l, r); }
  static Formula weak_until(Formula l, Formula r) {
    return make(Op::WeakUntil, l, r);
  }
  static Formula release(Formula l, Formula r) {
    return make(Op::Release, l, r);
  }
  static Formula strong_release(Formula l, Formula r) {
    return make(Op::StrongRelease, l, r);
  }
  // F x == tt U x, G x == ff R x
  static Formula eventually(Formula c) { return until(tt(), c); }
  static Formula always(Formula c) { return release(ff(), c); }

  Op op() const { return node().op; }
  const std::string& atom_name() const {
    return detail::FormulaStore::instance().name(node().a);
  }
  Formula lhs() const { return Formula(node().a); }
  Formula rhs() const { return Formula(node().b); }
  Formula child() const { return Formula(node().a); }

  std::uint32_t id() const { return id_; }
  std::uint64_t length() const { return node().length; }
  int sigma_level() const { return node().sigma_level; }
  int pi_level() const { return node().pi_level; }
  int delta_level() const { return node().delta_level; }

  bool is_constant() const { return op() == Op::TT || op() == Op::FF; }
  bool is_literal() const { return op() == Op::Atom || op() == Op::NegAtom; }
  bool is_boolean_connective() const {
    return op() == Op::And || op() == Op::Or;
  }
  // Neither a constant nor a conjunction/disjunction.
  bool is_proper() const { return !is_constant() && !is_boolean_connective(); }
  bool is_unary() const { return op() == Op::Next; }
  bool is_binary() const {
    return is_boolean_connective() || is_temporal_binary(op());
  }

  friend bool operator==(Formula a, Formula b) { return a.id_ == b.id_; }
  friend bool operator!=(Formula a, Formula b) { return a.id_ != b.id_; }

 private:
  explicit Formula(std::uint32_t id) : id_(id) {}
  static Formula make(Op op, Formula l, Formula r) {
    return Formula(detail::FormulaStore::instance().intern(op, l.id_, r.id_));
  }
  const detail::FormulaNode& node() const {
    return detail::FormulaStore::instance().node(id_);
  }

  std::uint32_t id_;
};

inline std::uint64_t formula_length(Formula f) { return f.length(); }

// Deterministic structural order, independent of interning order.
inline int compare(Formula a, Formula b) {
  if (a == b) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  switch (a.op()) {
    case Op::TT:
    case Op::FF:
      return 0;
    case Op::Atom:
    case Op::NegAtom:
      return a.atom_name().compare(b.atom_name());
    case Op::Next:
      return compare(a.child(), b.child());
    default: {
      int c = compare(a.lhs(), b.lhs());
      return c != 0 ? c : compare(a.rhs(), b.rhs());
    }
  }
}

struct FormulaLess {
  bool operator()(Formula a, Formula b) const { return compare(a, b) < 0; }
};

// NNF negation via the usual dualities.
inline Formula negate(Formula f) {
  switch (f.op()) {
    case Op::TT: return Formula::ff();
    case Op::FF: return Formula::tt();
    case Op::Atom: return Formula::neg_atom(f.atom_name());
    case Op::NegAtom: return Formula::atom(f.atom_name());
    case Op::And: return Formula::disj(negate(f.lhs()), negate(f.rhs()));
    case Op::Or: return Formula::conj(negate(f.lhs()), negate(f.rhs()));
    case Op::Next: return Formula::next(negate(f.child()));
    case Op::Until:
      return Formula::release(negate(f.lhs()), negate(f.rhs()));
    case Op::Release:
      return Formula::until(negate(f.lhs()), negate(f.rhs()));
    case Op::WeakUntil:
      return Formula::strong_release(negate(f.lhs()), negate(f.rhs()));
    case Op::StrongRelease:
      return Formula::weak_until(negate(f.lhs()), negate(f.rhs()));
  }
  throw std::logic_error("negate: bad op");
}

namespace detail {

template <typename Pred>
void collect_subformulas(Formula f, std::vector<Formula>& out,
                         std::vector<bool>& seen, const Pred& keep) {
  if (f.id() < seen.size() && seen[f.id()]) return;
  if (f.id() >= seen.size()) seen.resize(f.id() + 1, false);
  seen[f.id()] = true;
  if (keep(f)) out.push_back(f);
  if (f.is_binary()) {
    collect_subformulas(f.lhs(), out, seen, keep);
    collect_subformulas(f.rhs(), out, seen, keep);
  } else if (f.is_unary()) {
    collect_subformulas(f.child(), out, seen, keep);
  }
}

template <typename Pred>
std::vector<Formula> subformulas_matching(Formula f, const Pred& keep) {
  std::vector<Formula> out;
  std::vector<bool> seen;
  collect_subformulas(f, out, seen, keep);
  std::sort(out.begin(), out.end(), FormulaLess{});
  return out;
}

}  // namespace detail

inline std::vector<Formula> subformulas(Formula f) {
  return detail::subformulas_matching(f, [](Formula) { return true; });
}

inline std::vector<Formula> proper_subformulas(Formula f) {
  return detail::subformulas_matching(f,
                                      [](Formula g) { return g.is_proper(); });
}

// mu-subformulas: top operator U or M ("least fixpoint"-like).
inline std::vector<Formula> mu_subformulas(Formula f) {
  return detail::subformulas_matching(f, [](Formula g) {
    return g.op() == Op::Until || g.op() == Op::StrongRelease;
  });
}

// nu-subformulas: top operator W or R ("greatest fixpoint"-like).
inline std::vector<Formula> nu_subformulas(Formula f) {
  return detail::subformulas_matching(f, [](Formula g) {
    return g.op() == Op::WeakUntil || g.op() == Op::Release;
  });
}

inline std::vector<std::string> atom_names(Formula f) {
  std::vector<std::string> out;
  for (Formula g : detail::subformulas_matching(
           f, [](Formula g) { return g.is_literal(); })) {
    out.push_back(g.atom_name());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool contains(const std::vector<Formula>& set, Formula f) {
  for (Formula g : set)
    if (g == f) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Printing.  Precedence: ! > X,F,G > U,W,R,M (right-assoc) > & > |.
// (tt U x) prints as F x and (ff R x) as G x; parentheses are inserted so the
// printed text reparses to the identical tree.

namespace detail {

inline int precedence_of(Op op) {
  switch (op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Until:
    case Op::WeakUntil:
    case Op::Release:
    case Op::StrongRelease: return 3;
    default: return 5;
  }
}

inline void print_formula(std::ostream& os, Formula f, int min_prec) {
  const Op op = f.op();
  // Sugared unary forms bind like X.
  if (op == Op::Until && f.lhs() == Formula::tt()) {
    os << "F ";
    print_formula(os, f.rhs(), 4);
    return;
  }
  if (op == Op::Release && f.lhs() == Formula::ff()) {
    os << "G ";
    print_formula(os, f.rhs(), 4);
    return;
  }
  switch (op) {
    case Op::TT: os << "tt"; return;
    case Op::FF: os << "ff"; return;
    case Op::Atom: os << f.atom_name(); return;
    case Op::NegAtom: os << '!' << f.atom_name(); return;
    case Op::Next:
      os << "X ";
      print_formula(os, f.child(), 4);
      return;
    default: break;
  }
  const int prec = precedence_of(op);
  const bool parens = prec < min_prec;
  if (parens) os << '(';
  const char* sym = op == Op::And    ? "&"
                    : op == Op::Or   ? "|"
                    : op == Op::Until ? "U"
                    : op == Op::WeakUntil ? "W"
                    : op == Op::Release   ? "R"
                                          : "M";
  if (op == Op::And || op == Op::Or) {
    // Left-associative chains print flat; right nesting keeps parens.
    print_formula(os, f.lhs(), prec);
    os << ' ' << sym << ' ';
    print_formula(os, f.rhs(), prec + 1);
  } else {
    // U/W/R/M parse right-associatively.
    print_formula(os, f.lhs(), prec + 1);
    os << ' ' << sym << ' ';
    print_formula(os, f.rhs(), prec);
  }
  if (parens) os << ')';
}

}  // namespace detail

inline std::ostream& operator<<(std::ostream& os, Formula f) {
  detail::print_formula(os, f, 0);
  return os;
}

inline std::string to_string(Formula f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing.

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  Formula parse_or() {
    Formula f = parse_and();
    while (peek() == '|') {
      ++pos_;
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_binop();
    while (peek() == '&') {
      ++pos_;
      f = Formula::conj(f, parse_binop());
    }
    return f;
  }

  Formula parse_binop() {
    Formula l = parse_unary();
    skip_ws();
    const std::size_t save = pos_;
    std::string word = peek_word();
    Formula (*make)(Formula, Formula) = nullptr;
    if (word == "U") make = &Formula::until;
    else if (word == "W") make = &Formula::weak_until;
    else if (word == "R") make = &Formula::release;
    else if (word == "M") make = &Formula::strong_release;
    if (!make) {
      pos_ = save;
      return l;
    }
    return make(l, parse_binop());  // right-assoc
  }

  Formula parse_unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (peek_raw() == '!') {
      ++pos_;
      return negate(parse_unary());
    }
    if (peek_raw() == '(') {
      ++pos_;
      Formula f = parse_or();
      skip_ws();
      if (peek_raw() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return f;
    }
    std::string word = peek_word();
    if (word.empty()) throw ParseError("expected formula", at);
    if (word == "X") return Formula::next(parse_unary());
    if (word == "F") return Formula::eventually(parse_unary());
    if (word == "G") return Formula::always(parse_unary());
    if (word == "U" || word == "W" || word == "R" || word == "M")
      throw ParseError("operator '" + word + "' needs a left operand", at);
    if (word == "tt" || word == "1") return Formula::tt();
    if (word == "ff" || word == "0") return Formula::ff();
    if (!is_ident_start(word[0]))
      throw ParseError("unknown token '" + word + "'", at);
    return Formula::atom(word);
  }

  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return peek_raw();
  }
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  // Consumes and returns the next identifier-ish token ("" if none).
  std::string peek_word() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '1' || text_[pos_] == '0') &&
        (pos_ + 1 == text_.size() || !is_ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return std::string(text_.substr(start, 1));
    }
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) return "";
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  return detail::FormulaParser(text).parse();
}

}  // namespace delta2
