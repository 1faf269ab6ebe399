#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbzlab/error.hpp"
#include "pbzlab/lattice.hpp"

namespace pbz {

/// Signature level of an algebra or of a congruence/embedding question:
/// bounded lattice, plus involution (BI), plus Brouwer complement (BZ).
enum class flavor { lattice = 0, bi = 1, bz = 2 };

inline std::string_view to_string(flavor f) {
  switch (f) {
    case flavor::lattice: return "Lattice";
    case flavor::bi: return "BI";
    case flavor::bz: return "BZ";
  }
  return "?";
}

inline flavor parse_flavor(std::string_view s) {
  if (s == "Lattice" || s == "lattice" || s == "L") return flavor::lattice;
  if (s == "BI" || s == "bi") return flavor::bi;
  if (s == "BZ" || s == "bz") return flavor::bz;
  throw error(errc::unknown_name, s, "flavor must be Lattice, BI or BZ");
}

/// A bounded lattice with an optional Kleene complement (') and an optional
/// Brouwer complement (~). Only obtainable through attach_involution and
/// attach_brouwer, which verify every axiom of the resulting flavor.
class finite_algebra {
 public:
  explicit finite_algebra(bounded_lattice L) : lattice_(std::move(L)) {}

  const bounded_lattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  element bottom() const { return lattice_.bottom(); }
  element top() const { return lattice_.top(); }
  element meet(element a, element b) const { return lattice_.meet(a, b); }
  element join(element a, element b) const { return lattice_.join(a, b); }
  bool leq(element a, element b) const { return lattice_.leq(a, b); }
  std::string label(element x) const { return lattice_.label(x); }

  flavor kind() const {
    if (!brouwer_.empty()) return flavor::bz;
    if (!kleene_.empty()) return flavor::bi;
    return flavor::lattice;
  }
  bool has_kleene() const { return !kleene_.empty(); }
  bool has_brouwer() const { return !brouwer_.empty(); }
  element kleene(element a) const { return kleene_[a]; }
  element brouwer(element a) const { return brouwer_[a]; }
  std::span<const element> kleene_table() const { return kleene_; }
  std::span<const element> brouwer_table() const { return brouwer_; }

  /// Forgets the operations above `f`. Throws MissingOperation when `f`
  /// asks for more than the algebra carries.
  finite_algebra reduct(flavor f) const {
    if (f > kind()) {
      throw error(errc::missing_operation, to_string(f),
                  std::string("algebra only has flavor ") + std::string(to_string(kind())));
    }
    finite_algebra r(lattice_);
    if (f >= flavor::bi) r.kleene_ = kleene_;
    if (f >= flavor::bz) r.brouwer_ = brouwer_;
    return r;
  }

  finite_algebra with_labels(std::vector<std::string> labels) const {
    finite_algebra r = *this;
    r.lattice_ = lattice_.with_labels(std::move(labels));
    return r;
  }

  /// Flattened operation tables at flavor `f`, for the embedding search.
  detail::structure_view view(flavor f) const {
    std::vector<std::span<const element>> unary;
    if (f >= flavor::bi) unary.push_back(kleene_);
    if (f >= flavor::bz) unary.push_back(brouwer_);
    return lattice_.view(std::move(unary));
  }

  friend bool operator==(const finite_algebra&, const finite_algebra&) = default;

 private:
  friend finite_algebra attach_involution(bounded_lattice L, std::vector<element> table);
  template <class Table>
  friend finite_algebra detail_attach_brouwer(const finite_algebra& A, Table&& table);

  bounded_lattice lattice_;
  std::vector<element> kleene_;
  std::vector<element> brouwer_;
};

namespace detail {

inline void check_table(const bounded_lattice& L, const std::vector<element>& table, std::string_view what) {
  if (static_cast<int>(table.size()) != L.size()) {
    throw error(errc::invalid_input, what, "table size differs from element count");
  }
  for (element v : table)
    if (v < 0 || v >= L.size()) throw error(errc::invalid_input, what, "table value out of range");
}

inline std::string witness(element a) { return std::to_string(a); }
inline std::string witness(element a, element b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace detail

/// Turns a bounded lattice into a BI-lattice: `table` must be an
/// order-reversing involution. Throws NotInvolutive(a) or NotAntitone(a,b).
inline finite_algebra attach_involution(bounded_lattice L, std::vector<element> table) {
  detail::check_table(L, table, "kleene");
  const int n = L.size();
  for (element a = 0; a < n; ++a)
    if (table[table[a]] != a) throw error(errc::not_involutive, detail::witness(a), "a'' != a");
  for (element a = 0; a < n; ++a)
    for (element b = 0; b < n; ++b)
      if (L.leq(a, b) && !L.leq(table[b], table[a])) {
        throw error(errc::not_antitone, detail::witness(a, b), "a <= b but b' is not below a'");
      }
  finite_algebra A(std::move(L));
  A.kleene_ = std::move(table);
  return A;
}

struct trivial_brouwer_t {};
/// Selects the trivial Brouwer complement: 0~ = 1 and a~ = 0 otherwise.
inline constexpr trivial_brouwer_t trivial_brouwer{};

template <class Table>
finite_algebra detail_attach_brouwer(const finite_algebra& A, Table&& table) {
  if (!A.has_kleene()) throw error(errc::missing_operation, "kleene", "a Brouwer complement needs a BI-lattice");
  const bounded_lattice& L = A.lattice();
  detail::check_table(L, table, "brouwer");
  const int n = L.size();
  auto fail = [](std::string_view axiom, const std::string& w) {
    throw error(errc::bz_axiom_failure, std::string(axiom) + ":" + w);
  };
  auto b = [&](element x) { return table[x]; };
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y)
      if (L.leq(x, y) && !L.leq(b(y), b(x))) fail("antitone", detail::witness(x, y));
  for (element x = 0; x < n; ++x) {
    if (L.meet(x, b(x)) != L.bottom()) fail("a^a~=0", detail::witness(x));
    if (!L.leq(x, b(b(x)))) fail("a<=a~~", detail::witness(x));
    if (b(b(x)) != A.kleene(b(x))) fail("a~~=a~'", detail::witness(x));
  }
  // Consequences of the three axioms; a failure here means a broken table
  // slipped through the checks above.
  for (element x = 0; x < n; ++x) {
    if (b(b(b(x))) != b(x) || !L.leq(b(x), A.kleene(x))) fail("a~~~=a~<=a'", detail::witness(x));
    for (element y = 0; y < n; ++y) {
      if (b(L.join(x, y)) != L.meet(b(x), b(y))) fail("(a v b)~=a~^b~", detail::witness(x, y));
      if (!L.leq(L.join(b(x), b(y)), b(L.meet(x, y)))) fail("(a^b)~>=a~ v b~", detail::witness(x, y));
    }
  }
  finite_algebra out = A.reduct(flavor::bi);
  out.brouwer_.assign(table.begin(), table.end());
  return out;
}

/// Adds a Brouwer complement to a BI-lattice (replacing any existing one).
/// Throws BZAxiomFailure("axiom:witness").
inline finite_algebra attach_brouwer(const finite_algebra& A, std::vector<element> table) {
  return detail_attach_brouwer(A, std::move(table));
}

inline finite_algebra attach_brouwer(const finite_algebra& A, trivial_brouwer_t) {
  std::vector<element> table(A.size(), A.bottom());
  table[A.bottom()] = A.top();
  return detail_attach_brouwer(A, std::move(table));
}

/// Sharp elements: S = {x : x v x' = 1}.
inline element_set sharp_elements_raw(const finite_algebra& A) {
  if (!A.has_kleene()) throw error(errc::missing_operation, "kleene", "sharp elements need an involution");
  element_set out;
  for (element x = 0; x < A.size(); ++x)
    if (A.join(x, A.kleene(x)) == A.top()) out.push_back(x);
  return out;
}

/// Per-algebra axiom-class flags. Flags needing ' or ~ are nullopt
/// ("not applicable") when the algebra lacks that operation.
struct classification_report {
  std::optional<bool> pseudo_kleene;
  std::optional<bool> ortholattice;
  std::optional<bool> orthomodular;
  std::optional<bool> paraorthomodular;
  std::optional<bool> star;
  std::optional<bool> bz;
  std::optional<bool> pbz;
  std::optional<bool> antiortholattice;
  std::optional<bool> sdm;
  std::optional<bool> sk;
  std::optional<bool> j0;
  bool distributive = false;
  bool modular = false;
  std::optional<bool> boolean_algebra;
  bool zero_meet_irreducible = false;
  bool sandwich_shape = false;

  friend bool operator==(const classification_report&, const classification_report&) = default;
};

namespace detail {

template <class Pred>
bool all_pairs(int n, Pred&& pred) {
  for (element a = 0; a < n; ++a)
    for (element b = 0; b < n; ++b)
      if (!pred(a, b)) return false;
  return true;
}

template <class Pred>
bool all_elements(int n, Pred&& pred) {
  for (element a = 0; a < n; ++a)
    if (!pred(a)) return false;
  return true;
}

}  // namespace detail

/// Computes every flag by exhaustive sweep.
inline classification_report classify(const finite_algebra& A) {
  const bounded_lattice& L = A.lattice();
  const int n = A.size();
  const element zero = L.bottom();
  const element one = L.top();
  classification_report r;

  auto laws = lattice_laws(L);
  r.distributive = laws.distributive;
  r.modular = laws.modular;
  r.zero_meet_irreducible = detail::all_pairs(n, [&](element a, element b) {
    return L.meet(a, b) != zero || a == zero || b == zero;
  });
  r.sandwich_shape = n >= 3 && L.atoms().size() == 1 && L.coatoms().size() == 1;

  if (A.has_kleene()) {
    auto k = [&](element x) { return A.kleene(x); };
    r.pseudo_kleene = detail::all_pairs(n, [&](element a, element b) {
      return L.leq(L.meet(a, k(a)), L.join(b, k(b)));
    });
    r.ortholattice = detail::all_elements(n, [&](element a) { return L.join(a, k(a)) == one; });
    r.orthomodular = detail::all_pairs(n, [&](element a, element b) {
      return !L.leq(a, b) || b == L.join(L.meet(b, k(a)), a);
    });
    r.paraorthomodular = detail::all_pairs(n, [&](element a, element b) {
      return !(L.leq(a, b) && L.meet(k(a), b) == zero) || a == b;
    });
    r.boolean_algebra = *r.ortholattice && r.distributive;
  }
  if (A.has_brouwer()) {
    auto k = [&](element x) { return A.kleene(x); };
    auto b = [&](element x) { return A.brouwer(x); };
    r.star = detail::all_elements(n, [&](element x) {
      return b(L.meet(x, k(x))) == L.join(b(x), b(k(x)));
    });
    // attach_brouwer has already enforced the three ~ axioms.
    r.bz = *r.pseudo_kleene;
    r.pbz = *r.bz && *r.paraorthomodular && *r.star;
    auto sharp = sharp_elements_raw(A);
    bool only_bounds = std::all_of(sharp.begin(), sharp.end(), [&](element x) { return x == zero || x == one; });
    r.antiortholattice = *r.pbz && only_bounds;
    r.sdm = detail::all_pairs(n, [&](element x, element y) {
      return b(L.meet(x, y)) == L.join(b(x), b(y));
    });
    // x ^ y~~ <= x'~ v y
    r.sk = detail::all_pairs(n, [&](element x, element y) {
      return L.leq(L.meet(x, b(b(y))), L.join(b(k(x)), y));
    });
    r.j0 = detail::all_pairs(n, [&](element x, element y) {
      return L.join(L.meet(x, b(y)), L.meet(x, b(b(y)))) == x;
    });
  }

  if (r.ortholattice.value_or(false) && r.paraorthomodular.value_or(false) && !r.orthomodular.value_or(false)) {
    throw std::logic_error("classify: paraorthomodular ortholattice that is not orthomodular");
  }
  if (r.orthomodular.value_or(false) && !r.paraorthomodular.value_or(false)) {
    throw std::logic_error("classify: orthomodular but not paraorthomodular");
  }
  if (r.antiortholattice.value_or(false) && !r.pbz.value_or(false)) {
    throw std::logic_error("classify: antiortholattice that is not PBZ*");
  }
  return r;
}

/// Sharp elements. For PBZ*-lattices additionally checks
/// S = {a : a' = a~} = {a~ : a in L}.
inline element_set sharp_elements(const finite_algebra& A) {
  element_set s = sharp_elements_raw(A);
  if (A.has_brouwer() && classify(A).pbz.value_or(false)) {
    element_set fixed, images;
    for (element x = 0; x < A.size(); ++x) {
      if (A.kleene(x) == A.brouwer(x)) fixed.push_back(x);
      images.push_back(A.brouwer(x));
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    if (s != fixed || s != images) throw std::logic_error("sharp_elements: PBZ* sharp-set identities fail");
  }
  return s;
}

struct dense_report {
  element_set dense;  // D = {x : x~ = 0}
  element_set t;      // T = {x : x~ in {0,1}}
};

inline dense_report dense_and_t(const finite_algebra& A) {
  if (!A.has_brouwer()) throw error(errc::missing_operation, "brouwer", "dense elements need a Brouwer complement");
  const bounded_lattice& L = A.lattice();
  dense_report r;
  for (element x = 0; x < A.size(); ++x) {
    element b = A.brouwer(x);
    if (b == L.bottom()) r.dense.push_back(x);
    if (b == L.bottom() || b == L.top()) r.t.push_back(x);
  }
  element_set expected = r.dense;
  expected.push_back(L.bottom());
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  if (expected != r.t) throw std::logic_error("dense_and_t: T != D u {0}");
  auto in_t = [&](element x) { return std::binary_search(r.t.begin(), r.t.end(), x); };
  if (!in_t(L.top())) throw std::logic_error("dense_and_t: 1 not in T");
  for (element x : r.t)
    for (element y : r.t)
      if (!in_t(L.join(x, y))) throw std::logic_error("dense_and_t: T not closed under join");
  if (classify(A).antiortholattice.value_or(false)) {
    element_set nonzero;
    for (element x = 0; x < A.size(); ++x)
      if (x != L.bottom()) nonzero.push_back(x);
    if (r.dense != nonzero) throw std::logic_error("dense_and_t: antiortholattice with D != L \\ {0}");
  }
  return r;
}

/// The subalgebra on `universe` at flavor `f`, renumbered in increasing index
/// order. Throws InvalidInput when the subset is not closed.
inline finite_algebra induced_subalgebra(const finite_algebra& A, const element_set& universe, flavor f) {
  std::vector<element> index(A.size(), -1);
  for (std::size_t i = 0; i < universe.size(); ++i) index[universe[i]] = static_cast<element>(i);
  auto closed = [&](element x) {
    if (index[x] < 0) throw error(errc::invalid_input, std::to_string(x), "subset is not a subuniverse");
    return index[x];
  };
  closed(A.bottom());
  closed(A.top());
  for (element x : universe)
    for (element y : universe) {
      closed(A.meet(x, y));
      closed(A.join(x, y));
    }
  std::vector<std::string> labels;
  if (A.lattice().has_labels())
    for (element x : universe) labels.push_back(A.label(x));
  auto L = bounded_lattice::from_order(
      static_cast<int>(universe.size()), index[A.bottom()], index[A.top()],
      [&](element a, element b) { return A.leq(universe[a], universe[b]); }, std::move(labels));
  if (f == flavor::lattice) return finite_algebra(std::move(L));
  std::vector<element> kl;
  for (element x : universe) kl.push_back(closed(A.kleene(x)));
  auto B = attach_involution(std::move(L), std::move(kl));
  if (f == flavor::bi) return B;
  std::vector<element> br;
  for (element x : universe) br.push_back(closed(A.brouwer(x)));
  return attach_brouwer(B, std::move(br));
}

}  // namespace pbz
