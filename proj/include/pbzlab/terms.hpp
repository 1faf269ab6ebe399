#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbzlab/algebra.hpp"
#include "pbzlab/error.hpp"

namespace pbz {

enum class op { var, zero, one, meet, join, kleene, brouwer };

/// Immutable term over {^, v, ', ~, 0, 1}. Nodes are shared.
class term {
 public:
  static term var(std::string name) { return term(node{op::var, std::move(name), nullptr, nullptr}); }
  static term zero() { return term(node{op::zero, {}, nullptr, nullptr}); }
  static term one() { return term(node{op::one, {}, nullptr, nullptr}); }
  static term meet(const term& a, const term& b) { return term(node{op::meet, {}, a.n_, b.n_}); }
  static term join(const term& a, const term& b) { return term(node{op::join, {}, a.n_, b.n_}); }
  static term kleene(const term& a) { return term(node{op::kleene, {}, a.n_, nullptr}); }
  static term brouwer(const term& a) { return term(node{op::brouwer, {}, a.n_, nullptr}); }

  op kind() const { return n_->kind; }
  const std::string& name() const { return n_->name; }
  term left() const { return term(n_->a); }
  term right() const { return term(n_->b); }
  /// Operand of ' and ~.
  term arg() const { return term(n_->a); }
  bool is_binary() const { return kind() == op::meet || kind() == op::join; }
  bool is_unary() const { return kind() == op::kleene || kind() == op::brouwer; }

  /// Variables in order of first appearance (left to right).
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    collect(out);
    return out;
  }

  void collect(std::vector<std::string>& out) const {
    switch (kind()) {
      case op::var:
        for (const auto& v : out)
          if (v == name()) return;
        out.push_back(name());
        return;
      case op::zero:
      case op::one: return;
      case op::meet:
      case op::join:
        left().collect(out);
        right().collect(out);
        return;
      case op::kleene:
      case op::brouwer: arg().collect(out); return;
    }
  }

  bool uses(op o) const {
    if (kind() == o) return true;
    if (is_binary()) return left().uses(o) || right().uses(o);
    if (is_unary()) return arg().uses(o);
    return false;
  }

  int depth() const {
    if (is_binary()) return 1 + std::max(left().depth(), right().depth());
    if (is_unary()) return 1 + arg().depth();
    return 1;
  }

  friend bool operator==(const term& a, const term& b) {
    if (a.n_ == b.n_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case op::var: return a.name() == b.name();
      case op::zero:
      case op::one: return true;
      case op::meet:
      case op::join: return a.left() == b.left() && a.right() == b.right();
      case op::kleene:
      case op::brouwer: return a.arg() == b.arg();
    }
    return false;
  }

 private:
  struct node {
    op kind;
    std::string name;
    std::shared_ptr<const node> a, b;
  };
  explicit term(node n) : n_(std::make_shared<const node>(std::move(n))) {}
  explicit term(std::shared_ptr<const node> n) : n_(std::move(n)) {}

  std::shared_ptr<const node> n_;
};

struct identity {
  term lhs;
  term rhs;

  /// Variables of lhs then rhs, in order of first appearance.
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    lhs.collect(out);
    rhs.collect(out);
    return out;
  }
  friend bool operator==(const identity&, const identity&) = default;
};

// ---------------------------------------------------------------- printing

namespace detail {

enum class ctx { top, join_left, join_right, meet_left, meet_right, postfix };

inline std::string print(const term& t, ctx c) {
  switch (t.kind()) {
    case op::var: return t.name();
    case op::zero: return "0";
    case op::one: return "1";
    case op::kleene: return print(t.arg(), ctx::postfix) + "'";
    case op::brouwer: return print(t.arg(), ctx::postfix) + "~";
    case op::join: {
      std::string s = print(t.left(), ctx::join_left) + " v " + print(t.right(), ctx::join_right);
      return (c == ctx::top || c == ctx::join_left) ? s : "(" + s + ")";
    }
    case op::meet: {
      std::string s = print(t.left(), ctx::meet_left) + " ^ " + print(t.right(), ctx::meet_right);
      return (c == ctx::top || c == ctx::meet_left) ? s : "(" + s + ")";
    }
  }
  return "?";
}

}  // namespace detail

/// Text form accepted back by parse_term. Meets inside joins are
/// parenthesised for readability.
inline std::string to_string(const term& t) { return detail::print(t, detail::ctx::top); }

inline std::string to_string(const identity& id) { return to_string(id.lhs) + " = " + to_string(id.rhs); }

// ----------------------------------------------------------------- parsing

namespace detail {

class term_parser {
 public:
  explicit term_parser(std::string_view text) : s_(text) {}

  term parse_whole_term() {
    term t = parse_term();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return t;
  }

  identity parse_whole_identity() {
    term l = parse_term();
    skip();
    if (!eat('=')) fail("expected '='");
    term r = parse_term();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return {l, r};
  }

 private:
  [[noreturn]] void fail(std::string_view what) const {
    throw error(errc::syntax_error, std::to_string(pos_), what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Length of the identifier starting at pos_ (0 when none).
  std::size_t ident_length() const {
    std::size_t i = pos_;
    if (i >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[i]))) return 0;
    while (i < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i]))) ++i;
    return i - pos_;
  }

  bool at_join_operator() {
    skip();
    return ident_length() == 1 && s_[pos_] == 'v';
  }

  term parse_term() {
    term t = parse_factor();
    while (at_join_operator()) {
      ++pos_;
      t = term::join(t, parse_factor());
    }
    return t;
  }

  term parse_factor() {
    term t = parse_atom();
    while (eat('^')) t = term::meet(t, parse_atom());
    return t;
  }

  term parse_atom() {
    term t = parse_primary();
    for (;;) {
      if (eat('\'')) t = term::kleene(t);
      else if (eat('~')) t = term::brouwer(t);
      else return t;
    }
  }

  term parse_primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      term t = parse_term();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c == '0') {
      ++pos_;
      return term::zero();
    }
    if (c == '1') {
      ++pos_;
      return term::one();
    }
    std::size_t len = ident_length();
    if (len == 0) fail("expected a variable, 0, 1 or '('");
    if (len == 1 && c == 'v') fail("'v' is the join operator");
    std::string name(s_.substr(pos_, len));
    pos_ += len;
    return term::var(std::move(name));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws SyntaxError whose witness is the 0-based character offset.
inline term parse_term(std::string_view text) { return detail::term_parser(text).parse_whole_term(); }
inline identity parse_identity(std::string_view text) { return detail::term_parser(text).parse_whole_identity(); }

// -------------------------------------------------------------- evaluation

namespace detail {

// Terms flattened into a straight-line program; slot i holds node i's value.
struct program {
  struct step {
    op kind;
    int a = -1, b = -1;  // operand slots, or the variable index for op::var
  };
  std::vector<step> steps;
  int lhs = -1, rhs = -1;

  int emit(const term& t, const std::vector<std::string>& vars) {
    step s{t.kind()};
    switch (t.kind()) {
      case op::var:
        for (std::size_t i = 0; i < vars.size(); ++i)
          if (vars[i] == t.name()) s.a = static_cast<int>(i);
        break;
      case op::zero:
      case op::one: break;
      case op::meet:
      case op::join:
        s.a = emit(t.left(), vars);
        s.b = emit(t.right(), vars);
        break;
      case op::kleene:
      case op::brouwer: s.a = emit(t.arg(), vars); break;
    }
    steps.push_back(s);
    return static_cast<int>(steps.size()) - 1;
  }

  void run(const finite_algebra& A, const element* valuation, std::vector<element>& slot) const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const step& s = steps[i];
      element v = 0;
      switch (s.kind) {
        case op::var: v = valuation[s.a]; break;
        case op::zero: v = A.bottom(); break;
        case op::one: v = A.top(); break;
        case op::meet: v = A.meet(slot[s.a], slot[s.b]); break;
        case op::join: v = A.join(slot[s.a], slot[s.b]); break;
        case op::kleene: v = A.kleene(slot[s.a]); break;
        case op::brouwer: v = A.brouwer(slot[s.a]); break;
      }
      slot[i] = v;
    }
  }
};

inline void require_ops(const finite_algebra& A, const term& t) {
  if (t.uses(op::kleene) && !A.has_kleene()) throw error(errc::missing_operation, "'", "the term uses ' but the algebra has none");
  if (t.uses(op::brouwer) && !A.has_brouwer()) throw error(errc::missing_operation, "~", "the term uses ~ but the algebra has none");
}

}  // namespace detail

inline constexpr long long default_sweep_guard = 10'000'000;

/// The valuation guard: PBZLAB_GUARD when set to a positive integer,
/// otherwise 10^7.
inline long long sweep_guard() {
  if (const char* env = std::getenv("PBZLAB_GUARD")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return default_sweep_guard;
}

/// Value of `t` under `valuation` (variable name -> element).
inline element evaluate(const finite_algebra& A, const term& t, const std::map<std::string, element>& valuation) {
  detail::require_ops(A, t);
  auto vars = t.variables();
  std::vector<element> vals;
  for (const auto& v : vars) {
    auto it = valuation.find(v);
    if (it == valuation.end()) throw error(errc::missing_param, v, "variable has no value");
    if (it->second < 0 || it->second >= A.size()) throw error(errc::invalid_input, v, "value out of range");
    vals.push_back(it->second);
  }
  detail::program p;
  int root = p.emit(t, vars);
  std::vector<element> slot(p.steps.size());
  p.run(A, vals.data(), slot);
  return slot[root];
}

struct sat_result {
  bool holds = true;
  std::vector<std::string> variables;
  /// First falsifying valuation, aligned with `variables`.
  std::optional<std::vector<element>> witness;
  long long valuations = 0;
};

/// Sweep over the product of `ranges` (aligned with id.variables()) in
/// lexicographic order, first variable outermost.
inline sat_result satisfies_restricted(const finite_algebra& A, const identity& id,
                                       const std::vector<element_set>& ranges) {
  detail::require_ops(A, id.lhs);
  detail::require_ops(A, id.rhs);
  sat_result r;
  r.variables = id.variables();
  const std::size_t k = r.variables.size();
  if (ranges.size() != k) {
    throw error(errc::missing_param, std::to_string(ranges.size()), "one range per variable is required");
  }
  const long long guard = sweep_guard();
  long long total = 1;
  for (const auto& rg : ranges) {
    for (element x : rg)
      if (x < 0 || x >= A.size()) throw error(errc::invalid_input, std::to_string(x), "range element out of range");
    total *= static_cast<long long>(rg.size());
    if (total > guard) {
      throw error(errc::guard_exceeded, std::to_string(total),
                  "more than " + std::to_string(guard) + " valuations");
    }
  }
  if (total == 0) return r;
  detail::program p;
  p.lhs = p.emit(id.lhs, r.variables);
  p.rhs = p.emit(id.rhs, r.variables);
  std::vector<element> slot(p.steps.size());
  std::vector<std::size_t> digit(k, 0);
  std::vector<element> val(k);
  for (std::size_t i = 0; i < k; ++i) val[i] = ranges[i][0];
  for (;;) {
    ++r.valuations;
    p.run(A, val.data(), slot);
    if (slot[p.lhs] != slot[p.rhs]) {
      r.holds = false;
      r.witness = val;
      return r;
    }
    // Odometer: the last variable varies fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digit[i] < ranges[i].size()) {
        val[i] = ranges[i][digit[i]];
        break;
      }
      digit[i] = 0;
      val[i] = ranges[i][0];
      if (i == 0) return r;
    }
    if (k == 0) return r;
  }
}

/// Ranges given by variable name. Throws MissingParam for an uncovered variable.
inline sat_result satisfies_restricted(const finite_algebra& A, const identity& id,
                                       const std::map<std::string, element_set>& ranges) {
  std::vector<element_set> aligned;
  for (const auto& v : id.variables()) {
    auto it = ranges.find(v);
    if (it == ranges.end()) throw error(errc::missing_param, v, "no range given for variable");
    aligned.push_back(it->second);
  }
  return satisfies_restricted(A, id, aligned);
}

/// Exhaustive check of A |= id. Throws MissingOperation, GuardExceeded.
inline sat_result satisfies(const finite_algebra& A, const identity& id) {
  std::vector<element_set> full(id.variables().size(), A.lattice().elements());
  return satisfies_restricted(A, id, full);
}

// --------------------------------------------------------------- m(t, u)

struct m_pair {
  term m_tu;
  term m_ut;
  std::vector<std::string> x_vars, y_vars, z_vars;

  identity as_identity() const { return {m_tu, m_ut}; }
};

/// m(t,u) = V(x_i ^ x_i')~ v V(y_j ^ y_j')~ v V(z_h ^ z_h')~ v t, joins
/// associated to the left; m(u,t) has u as its last joinand.
inline m_pair m_transform(const term& t, const term& u) {
  std::vector<std::string> xs, ys, zs;
  auto tv = t.variables(), uv = u.variables();
  auto contains = [](const std::vector<std::string>& vs, const std::string& v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  };
  for (const auto& v : tv) (contains(uv, v) ? zs : xs).push_back(v);
  for (const auto& v : uv)
    if (!contains(tv, v)) ys.push_back(v);
  std::optional<term> prefix;
  for (const auto* group : {&xs, &ys, &zs})
    for (const auto& v : *group) {
      term x = term::var(v);
      term piece = term::brouwer(term::meet(x, term::kleene(x)));
      prefix = prefix ? term::join(*prefix, piece) : piece;
    }
  term m_tu = prefix ? term::join(*prefix, t) : t;
  term m_ut = prefix ? term::join(*prefix, u) : u;
  return {m_tu, m_ut, xs, ys, zs};
}

/// Flattens nested joins and meets into operand lists, so that terms equal
/// up to the associativity of ^ and v compare equal.
inline bool equal_up_to_association(const term& a, const term& b) {
  auto flatten = [](const term& t, op o) {
    std::vector<term> out, stack{t};
    while (!stack.empty()) {
      term s = stack.back();
      stack.pop_back();
      if (s.kind() == o) {
        stack.push_back(s.right());
        stack.push_back(s.left());
      } else {
        out.push_back(s);
      }
    }
    return out;
  };
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case op::var: return a.name() == b.name();
    case op::zero:
    case op::one: return true;
    case op::kleene:
    case op::brouwer: return equal_up_to_association(a.arg(), b.arg());
    case op::meet:
    case op::join: {
      auto fa = flatten(a, a.kind()), fb = flatten(b, b.kind());
      if (fa.size() != fb.size()) return false;
      for (std::size_t i = 0; i < fa.size(); ++i)
        if (!equal_up_to_association(fa[i], fb[i])) return false;
      return true;
    }
  }
  return false;
}

// -------------------------------------------------------- named identities

namespace detail {

inline term join_all(const std::vector<term>& ts) {
  term out = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) out = term::join(out, ts[i]);
  return out;
}

inline term meet_all(const std::vector<term>& ts) {
  term out = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) out = term::meet(out, ts[i]);
  return out;
}

inline std::vector<term> indexed_vars(int n) {
  std::vector<term> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(term::var("x" + std::to_string(i)));
  return xs;
}

// The meet of (x_i ^ x_j)~ over i < j.
inline term pairwise_brouwer_meet(const std::vector<term>& xs) {
  std::vector<term> parts;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) parts.push_back(term::brouwer(term::meet(xs[i], xs[j])));
  return meet_all(parts);
}

inline identity c_identity(int n) {
  auto xs = indexed_vars(n);
  std::vector<term> tildes, primes;
  for (const auto& x : xs) {
    tildes.push_back(term::brouwer(x));
    primes.push_back(term::kleene(x));
  }
  term head = join_all(tildes);
  term pw = pairwise_brouwer_meet(xs);
  term lhs = term::join(head, term::meet(pw, join_all(xs)));
  std::vector<term> right{pw};
  right.insert(right.end(), primes.begin(), primes.end());
  return {lhs, term::join(head, meet_all(right))};
}

// With literal set, the bare ((x v x~) ^ pw ^ (x_1 v ... v x_n~))~ = 0, which
// fails in every nontrivial antiortholattice once x_1 = x_2 != 0. The default
// form meets that term with pw, so only pairwise disjoint tuples are constrained.
inline identity d_identity(int n, bool literal = false) {
  term x = term::var("x");
  auto xs = indexed_vars(n);
  std::vector<term> big = xs;
  for (const auto& xi : xs) big.push_back(term::brouwer(xi));
  term pw = pairwise_brouwer_meet(xs);
  term inner = meet_all({term::join(x, term::brouwer(x)), pw, join_all(big)});
  if (literal) return {term::brouwer(inner), term::zero()};
  return {term::meet(term::brouwer(inner), pw), term::zero()};
}

}  // namespace detail

/// Names accepted by named_identity.
inline std::vector<std::string> identity_names() {
  return {"STAR", "SDM", "SK", "J0", "DIST", "MOD", "R", "RV", "O", "C", "D"};
}

/// Throws UnknownName, MissingParam (C and D need n), ParamOutOfRange (n < 2).
inline identity named_identity(std::string_view name, std::optional<int> n = std::nullopt) {
  static const std::map<std::string, std::string, std::less<>> fixed{
      {"STAR", "(x ^ x')~ = x~ v x'~"},
      {"SDM", "(x ^ y)~ = x~ v y~"},
      {"SK", "x ^ y~~ = (x ^ y~~) ^ (x'~ v y)"},
      {"J0", "(x ^ y~) v (x ^ y~~) = x"},
      {"DIST", "x ^ (y v z) = (x ^ y) v (x ^ z)"},
      {"MOD", "x v (y ^ (x v z)) = (x v y) ^ (x v z)"},
      {"R", "(x ^ x')~ v (y ^ y')~ v (x ^ x') = (x ^ x')~ v (y ^ y')~ v (y ^ y')"},
      {"RV", "(x ^ x')~ v (y ^ y')~ v x v x' = (x ^ x')~ v (y ^ y')~ v y v y'"},
      {"O", "(x ^ x')~ v (y ^ y')~ v x v (x' ^ (x v y)) = (x ^ x')~ v (y ^ y')~ v x v y"},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return parse_identity(it->second);
  if (name == "C" || name == "D") {
    if (!n) throw error(errc::missing_param, name, "needs the arity n >= 2");
    if (*n < 2) throw error(errc::param_out_of_range, std::to_string(*n), "n must be at least 2");
    if (*n > 12) throw error(errc::param_out_of_range, std::to_string(*n), "n must be at most 12");
    return name == "C" ? detail::c_identity(*n) : detail::d_identity(*n, false);
  }
  throw error(errc::unknown_name, name, "not a named identity");
}

/// "SDM", "C:3", "D:2".
inline identity named_identity_from(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return named_identity(spec);
  auto digits = std::string(spec.substr(colon + 1));
  char* end = nullptr;
  long v = std::strtol(digits.c_str(), &end, 10);
  if (digits.empty() || *end != '\0') throw error(errc::param_out_of_range, spec, "arity is not an integer");
  return named_identity(spec.substr(0, colon), static_cast<int>(v));
}

}  // namespace pbz
