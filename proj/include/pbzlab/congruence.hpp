#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pbzlab/algebra.hpp"
#include "pbzlab/error.hpp"
#include "pbzlab/lattice.hpp"

namespace pbz {

/// An equivalence on the carrier, stored as element -> block id with block
/// ids numbered by first appearance (so two equal partitions have equal
/// vectors). Tagged with the flavor it was computed or validated for.
class congruence {
 public:
  congruence(std::vector<int> block_of, flavor f) : block_(std::move(block_of)), flavor_(f) { canonicalize(); }

  static congruence identity(int n, flavor f) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 0);
    return congruence(std::move(b), f);
  }
  static congruence total(int n, flavor f) { return congruence(std::vector<int>(n, 0), f); }

  int size() const { return static_cast<int>(block_.size()); }
  int block_count() const { return count_; }
  int block(element x) const { return block_[x]; }
  bool related(element a, element b) const { return block_[a] == block_[b]; }
  bool is_identity() const { return count_ == size(); }
  bool is_total() const { return count_ <= 1; }
  flavor kind() const { return flavor_; }
  const std::vector<int>& block_ids() const { return block_; }

  std::vector<element_set> blocks() const {
    std::vector<element_set> out(count_);
    for (element x = 0; x < size(); ++x) out[block_[x]].push_back(x);
    return out;
  }

  /// this is contained in `other` (as sets of pairs).
  bool refines(const congruence& other) const {
    // Each block of this must map into a single block of other.
    std::vector<int> image(count_, -1);
    for (element x = 0; x < size(); ++x) {
      int& slot = image[block_[x]];
      if (slot == -1) slot = other.block_[x];
      else if (slot != other.block_[x]) return false;
    }
    return true;
  }

  congruence with_flavor(flavor f) const { return congruence(block_, f); }

  /// Equality compares the partitions only.
  friend bool operator==(const congruence& a, const congruence& b) { return a.block_ == b.block_; }

  /// Canonical order: finer partitions (more blocks) first, then by block ids.
  friend std::strong_ordering operator<=>(const congruence& a, const congruence& b) {
    if (a.count_ != b.count_) return b.count_ <=> a.count_;
    return a.block_ <=> b.block_;
  }

 private:
  void canonicalize() {
    std::vector<int> renumber;
    int next = 0;
    for (int& id : block_) {
      if (id >= static_cast<int>(renumber.size())) renumber.resize(id + 1, -1);
      if (renumber[id] < 0) renumber[id] = next++;
      id = renumber[id];
    }
    count_ = next;
  }

  std::vector<int> block_;
  flavor flavor_;
  int count_ = 0;
};

namespace detail {

class union_find {
 public:
  explicit union_find(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  std::vector<int> labels() {
    std::vector<int> out(parent_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = find(static_cast<int>(i));
    return out;
  }

 private:
  std::vector<int> parent_;
};

/// The basic translations of the signature at flavor f applied to a pair.
template <class Emit>
void translations(const finite_algebra& A, flavor f, element x, element y, Emit&& emit) {
  for (element c = 0; c < A.size(); ++c) {
    emit(A.meet(x, c), A.meet(y, c));
    emit(A.join(x, c), A.join(y, c));
  }
  if (f >= flavor::bi) emit(A.kleene(x), A.kleene(y));
  if (f >= flavor::bz) emit(A.brouwer(x), A.brouwer(y));
}

inline void require_flavor(const finite_algebra& A, flavor f) {
  if (f > A.kind()) {
    throw error(errc::missing_operation, to_string(f),
                std::string("algebra only has flavor ") + std::string(to_string(A.kind())));
  }
}

}  // namespace detail

/// True when `theta` is compatible with every operation of flavor f.
inline bool is_congruence(const finite_algebra& A, const congruence& theta, flavor f) {
  detail::require_flavor(A, f);
  if (theta.size() != A.size()) return false;
  bool ok = true;
  for (element x = 0; x < A.size() && ok; ++x)
    for (element y = x + 1; y < A.size() && ok; ++y)
      if (theta.related(x, y)) {
        detail::translations(A, f, x, y, [&](element p, element q) {
          if (!theta.related(p, q)) ok = false;
        });
      }
  return ok;
}

inline congruence meet(const congruence& a, const congruence& b) {
  std::vector<int> ids(a.size());
  for (element x = 0; x < a.size(); ++x) ids[x] = a.block(x) * (b.block_count() + 1) + b.block(x);
  return congruence(std::move(ids), std::min(a.kind(), b.kind()));
}

/// Join in the partition lattice (transitive closure of the union); for
/// congruences of the same flavor this is again a congruence.
inline congruence join(const congruence& a, const congruence& b) {
  detail::union_find uf(a.size());
  for (const auto* t : {&a, &b})
    for (const auto& blk : t->blocks())
      for (element x : blk) uf.unite(x, blk.front());
  return congruence(uf.labels(), std::min(a.kind(), b.kind()));
}

/// a o b = b o a = nabla exactly when every block of a meets every block of b.
inline bool permute_to_total(const congruence& a, const congruence& b) {
  std::vector<char> seen(static_cast<std::size_t>(a.block_count()) * b.block_count(), 0);
  for (element x = 0; x < a.size(); ++x) seen[a.block(x) * b.block_count() + b.block(x)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

/// Smallest flavor-f congruence identifying a and b: closure of {(a,b)} under
/// the translations x -> x^c, x -> x v c, x -> x', x -> x~ and transitivity.
inline congruence principal_congruence(const finite_algebra& A, element a, element b, flavor f) {
  detail::require_flavor(A, f);
  detail::union_find uf(A.size());
  std::vector<std::pair<element, element>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    detail::translations(A, f, x, y, [&](element p, element q) {
      if (p != q) work.emplace_back(p, q);
    });
  }
  return congruence(uf.labels(), f);
}

inline constexpr int default_congruence_guard = 24;

/// Every flavor-f congruence, sorted canonically (identity first, total last).
/// Computed as the join-closure of the principal congruences.
/// `size_guard` < 0 disables the size guard.
inline std::vector<congruence> all_congruences(const finite_algebra& A, flavor f,
                                               int size_guard = default_congruence_guard) {
  detail::require_flavor(A, f);
  const int n = A.size();
  if (size_guard >= 0 && n > size_guard) {
    throw error(errc::size_guard_exceeded, std::to_string(n),
                "congruence enumeration limited to " + std::to_string(size_guard) + " elements");
  }
  std::set<congruence> found{congruence::identity(n, f)};
  std::vector<congruence> principals;
  for (element a = 0; a < n; ++a)
    for (element b = a + 1; b < n; ++b) {
      auto p = principal_congruence(A, a, b, f);
      if (found.insert(p).second) principals.push_back(p);
    }
  std::vector<congruence> work(found.begin(), found.end());
  while (!work.empty()) {
    congruence theta = work.back();
    work.pop_back();
    for (const auto& p : principals) {
      if (p.refines(theta)) continue;
      auto j = join(theta, p);
      if (found.insert(j).second) work.push_back(j);
    }
  }
  return {found.begin(), found.end()};
}

/// Congruences whose classes of 0 and 1 are singletons.
inline std::vector<congruence> con_01(const finite_algebra& A, flavor f, int size_guard = default_congruence_guard) {
  auto all = all_congruences(A, f, size_guard);
  std::vector<congruence> out;
  const element zero = A.bottom();
  const element one = A.top();
  auto singleton = [&](const congruence& t, element e) {
    for (element x = 0; x < A.size(); ++x)
      if (x != e && t.related(x, e)) return false;
    return true;
  };
  for (const auto& t : all)
    if (singleton(t, zero) && singleton(t, one)) out.push_back(t);
  if (f == flavor::bz && classify(A).antiortholattice.value_or(false)) {
    // Con_BZ = Con_BI01 u {nabla} for antiortholattices.
    auto bi01 = con_01(A, flavor::bi, size_guard);
    std::vector<congruence> expected;
    for (const auto& t : bi01) expected.push_back(t.with_flavor(flavor::bz));
    if (A.size() > 1) expected.push_back(congruence::total(A.size(), flavor::bz));
    std::sort(expected.begin(), expected.end());
    if (expected != all) throw std::logic_error("con_01: Con_BZ != Con_BI01 u {nabla} on an antiortholattice");
  }
  return out;
}

/// Congruences whose class of 0 is a singleton. For M = D_3 this is
/// {Delta, eq({0},{m,1})}, while con_01 keeps only Delta.
inline std::vector<congruence> con_0(const finite_algebra& A, flavor f, int size_guard = default_congruence_guard) {
  std::vector<congruence> out;
  for (const auto& t : all_congruences(A, f, size_guard)) {
    bool single = true;
    for (element x = 0; x < A.size() && single; ++x) single = x == A.bottom() || !t.related(x, A.bottom());
    if (single) out.push_back(t);
  }
  return out;
}

/// Lattice of a set of congruences ordered by refinement (the set must be
/// closed under meet and join, as Con and Con_01 are).
inline bounded_lattice lattice_of_congruences(const std::vector<congruence>& cons) {
  const int m = static_cast<int>(cons.size());
  if (m == 0) throw error(errc::empty_subset, "", "no congruences");
  element bottom = -1, top = -1;
  for (element i = 0; i < m; ++i) {
    bool below_all = true, above_all = true;
    for (element j = 0; j < m; ++j) {
      below_all = below_all && cons[i].refines(cons[j]);
      above_all = above_all && cons[j].refines(cons[i]);
    }
    if (below_all) bottom = i;
    if (above_all) top = i;
  }
  if (bottom < 0 || top < 0) throw error(errc::not_bounded, "", "congruence set has no least or greatest member");
  return bounded_lattice::from_order(m, bottom, top,
                                     [&](element a, element b) { return cons[a].refines(cons[b]); });
}

inline bounded_lattice congruence_lattice(const finite_algebra& A, flavor f, int size_guard = default_congruence_guard) {
  return lattice_of_congruences(all_congruences(A, f, size_guard));
}

/// A/theta at the flavor theta was computed for. Elements of the quotient are
/// the blocks, numbered by the canonical block ids.
inline finite_algebra quotient(const finite_algebra& A, const congruence& theta) {
  const flavor f = theta.kind();
  if (!is_congruence(A, theta, f)) {
    throw error(errc::not_a_congruence, to_string(f), "partition is not compatible with the operations");
  }
  const int m = theta.block_count();
  std::vector<element> rep(m, -1);
  for (element x = A.size() - 1; x >= 0; --x) rep[theta.block(x)] = x;
  std::vector<std::string> labels;
  if (A.lattice().has_labels())
    for (element b = 0; b < m; ++b) labels.push_back(A.label(rep[b]));
  auto L = bounded_lattice::from_order(
      m, theta.block(A.bottom()), theta.block(A.top()),
      [&](element a, element b) { return theta.block(A.meet(rep[a], rep[b])) == a; }, std::move(labels));
  if (f == flavor::lattice) return finite_algebra(std::move(L));
  std::vector<element> kl(m);
  for (element b = 0; b < m; ++b) kl[b] = theta.block(A.kleene(rep[b]));
  auto B = attach_involution(std::move(L), std::move(kl));
  if (f == flavor::bi) return B;
  std::vector<element> br(m);
  for (element b = 0; b < m; ++b) br[b] = theta.block(A.brouwer(rep[b]));
  return attach_brouwer(B, std::move(br));
}

struct irreducibility_report {
  bool simple = false;
  bool subdirectly_irreducible = false;
  std::optional<congruence> monolith;
  bool directly_irreducible = false;
};

/// Simple: Con = {delta, nabla}. Subdirectly irreducible: a unique minimal
/// nontrivial congruence (the monolith). Directly irreducible: no pair of
/// nontrivial congruences with meet delta that permute to nabla. The trivial
/// algebra is none of these.
inline irreducibility_report irreducibility(const finite_algebra& A, flavor f,
                                            int size_guard = default_congruence_guard) {
  auto cons = all_congruences(A, f, size_guard);
  irreducibility_report r;
  if (A.size() < 2) return r;
  r.simple = cons.size() == 2;
  std::vector<congruence> nontrivial;
  for (const auto& c : cons)
    if (!c.is_identity()) nontrivial.push_back(c);
  std::vector<congruence> minimal;
  for (const auto& c : nontrivial) {
    bool is_min = std::none_of(nontrivial.begin(), nontrivial.end(),
                               [&](const congruence& d) { return d != c && d.refines(c); });
    if (is_min) minimal.push_back(c);
  }
  if (minimal.size() == 1) {
    r.subdirectly_irreducible = true;
    r.monolith = minimal.front();
  }
  r.directly_irreducible = true;
  for (std::size_t i = 0; i < cons.size() && r.directly_irreducible; ++i) {
    const auto& a = cons[i];
    if (a.is_identity() || a.is_total()) continue;
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const auto& b = cons[j];
      if (b.is_identity() || b.is_total()) continue;
      if (meet(a, b).is_identity() && permute_to_total(a, b)) {
        r.directly_irreducible = false;
        break;
      }
    }
  }
  return r;
}

/// "{a,c,a'} {b,b'}" listing of nontrivial blocks; delta and nabla by name.
inline std::string describe(const finite_algebra& A, const congruence& t) {
  if (t.is_identity()) return "Δ";
  if (t.is_total()) return "∇";
  std::string s;
  for (const auto& blk : t.blocks()) {
    if (blk.size() < 2) continue;
    if (!s.empty()) s += ' ';
    s += '{';
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) s += ',';
      s += A.label(blk[i]);
    }
    s += '}';
  }
  return s;
}

}  // namespace pbz
