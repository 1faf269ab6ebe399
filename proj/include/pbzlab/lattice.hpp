#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbzlab/detail/search.hpp"
#include "pbzlab/error.hpp"

namespace pbz {

/// Sorted, duplicate-free list of element indices.
using element_set = std::vector<element>;
using cover_pair = std::pair<element, element>;

/// A finite bounded lattice on the carrier 0..n-1.
///
/// The order is stored densely and meet/join are precomputed tables, so all
/// queries are table lookups. Bottom and top are arbitrary indices: sums and
/// products renumber elements and do not force 0 and n-1 to be the bounds.
/// Values are immutable once constructed; construction rejects any relation
/// that is not a bounded lattice.
class bounded_lattice {
 public:
  /// Builds the lattice whose Hasse diagram is `covers` (pairs a < b with b
  /// covering a). Throws NotAPoset on cycles, NotBounded when `bottom`/`top`
  /// are not the extremes, NotALattice naming a pair without glb or lub.
  static bounded_lattice from_covers(int n, element bottom, element top,
                                     std::span<const cover_pair> covers,
                                     std::vector<std::string> labels = {}) {
    if (n < 1) throw error(errc::invalid_input, std::to_string(n), "element count must be positive");
    auto in_range = [n](element x) { return x >= 0 && x < n; };
    if (!in_range(bottom) || !in_range(top)) {
      throw error(errc::invalid_input, std::to_string(bottom) + "," + std::to_string(top),
                  "bottom/top out of range");
    }
    std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
    for (auto [a, b] : covers) {
      if (!in_range(a) || !in_range(b)) {
        throw error(errc::invalid_input, std::to_string(a) + "," + std::to_string(b),
                    "cover endpoint out of range");
      }
      if (a == b) throw error(errc::not_a_poset, pair_witness(a, b), "element covers itself");
      reach[a * n + b] = 1;
    }
    // Warshall closure of the strict order.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (reach[i * n + k])
          for (int j = 0; j < n; ++j)
            if (reach[k * n + j]) reach[i * n + j] = 1;
    for (auto [a, b] : covers) {
      if (reach[b * n + a]) throw error(errc::not_a_poset, pair_witness(a, b), "cover relation has a cycle");
    }
    return from_order(
        n, bottom, top, [&](element a, element b) { return a == b || reach[a * n + b] != 0; },
        std::move(labels));
  }

  /// Builds a lattice from a full order predicate. The predicate must be a
  /// partial order; this is checked.
  static bounded_lattice from_order(int n, element bottom, element top,
                                    const std::function<bool(element, element)>& leq,
                                    std::vector<std::string> labels = {}) {
    bounded_lattice L;
    L.n_ = n;
    L.bottom_ = bottom;
    L.top_ = top;
    L.leq_.assign(static_cast<std::size_t>(n) * n, 0);
    for (element a = 0; a < n; ++a)
      for (element b = 0; b < n; ++b) L.leq_[a * n + b] = leq(a, b) ? 1 : 0;
    for (element a = 0; a < n; ++a) {
      if (!L.leq(a, a)) throw error(errc::not_a_poset, pair_witness(a, a), "order is not reflexive");
      for (element b = a + 1; b < n; ++b) {
        if (L.leq(a, b) && L.leq(b, a)) {
          throw error(errc::not_a_poset, pair_witness(a, b), "order is not antisymmetric");
        }
      }
    }
    for (element a = 0; a < n; ++a)
      for (element b = 0; b < n; ++b)
        if (L.leq(a, b))
          for (element c = 0; c < n; ++c)
            if (L.leq(b, c) && !L.leq(a, c)) {
              throw error(errc::not_a_poset, pair_witness(a, c), "order is not transitive");
            }
    for (element x = 0; x < n; ++x) {
      if (!L.leq(bottom, x)) {
        throw error(errc::not_bounded, std::to_string(bottom) + "," + std::to_string(x),
                    "designated bottom is not below every element");
      }
      if (!L.leq(x, top)) {
        throw error(errc::not_bounded, std::to_string(x) + "," + std::to_string(top),
                    "designated top is not above every element");
      }
    }
    L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
    L.join_.assign(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> down(n, 0), up(n, 0);
    for (element a = 0; a < n; ++a)
      for (element b = 0; b < n; ++b)
        if (L.leq(a, b)) {
          ++down[b];
          ++up[a];
        }
    for (element a = 0; a < n; ++a) {
      for (element b = a; b < n; ++b) {
        element glb = L.extremal_bound(a, b, /*lower=*/true, down);
        if (glb < 0) throw error(errc::not_a_lattice, pair_witness(a, b), "no greatest lower bound");
        element lub = L.extremal_bound(a, b, /*lower=*/false, up);
        if (lub < 0) throw error(errc::not_a_lattice, pair_witness(a, b), "no least upper bound");
        L.meet_[a * n + b] = L.meet_[b * n + a] = glb;
        L.join_[a * n + b] = L.join_[b * n + a] = lub;
      }
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
      throw error(errc::invalid_input, std::to_string(labels.size()), "label count differs from element count");
    }
    L.labels_ = std::move(labels);
    return L;
  }

  int size() const { return n_; }
  element bottom() const { return bottom_; }
  element top() const { return top_; }
  bool leq(element a, element b) const { return leq_[a * n_ + b] != 0; }
  bool lt(element a, element b) const { return a != b && leq(a, b); }
  element meet(element a, element b) const { return meet_[a * n_ + b]; }
  element join(element a, element b) const { return join_[a * n_ + b]; }
  std::span<const element> meet_table() const { return meet_; }
  std::span<const element> join_table() const { return join_; }

  /// b covers a: a < b with nothing strictly between.
  bool is_cover(element a, element b) const {
    if (!lt(a, b)) return false;
    for (element c = 0; c < n_; ++c)
      if (lt(a, c) && lt(c, b)) return false;
    return true;
  }

  std::vector<cover_pair> covers() const {
    std::vector<cover_pair> out;
    for (element a = 0; a < n_; ++a)
      for (element b = 0; b < n_; ++b)
        if (is_cover(a, b)) out.emplace_back(a, b);
    return out;
  }

  element_set elements() const {
    element_set all(n_);
    for (element x = 0; x < n_; ++x) all[x] = x;
    return all;
  }

  element_set atoms() const {
    element_set out;
    for (element x = 0; x < n_; ++x)
      if (is_cover(bottom_, x)) out.push_back(x);
    return out;
  }

  element_set coatoms() const {
    element_set out;
    for (element x = 0; x < n_; ++x)
      if (is_cover(x, top_)) out.push_back(x);
    return out;
  }

  bool is_chain() const {
    for (element a = 0; a < n_; ++a)
      for (element b = 0; b < n_; ++b)
        if (!leq(a, b) && !leq(b, a)) return false;
    return true;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(element x) const { return labels_.empty() ? std::to_string(x) : labels_[x]; }

  bounded_lattice with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
      throw error(errc::invalid_input, std::to_string(labels.size()), "label count differs from element count");
    }
    bounded_lattice copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
  }

  /// Order dual: same carrier, reversed order, meet and join swapped.
  bounded_lattice dual() const {
    bounded_lattice d = *this;
    std::swap(d.bottom_, d.top_);
    std::swap(d.meet_, d.join_);
    for (element a = 0; a < n_; ++a)
      for (element b = 0; b < n_; ++b) d.leq_[a * n_ + b] = leq_[b * n_ + a];
    return d;
  }

  /// Flattened view for the homomorphism search.
  detail::structure_view view(std::vector<std::span<const element>> unary = {}) const {
    detail::structure_view v;
    v.n = n_;
    v.bottom = bottom_;
    v.top = top_;
    v.meet = meet_;
    v.join = join_;
    v.unary = std::move(unary);
    v.down.assign(n_, 0);
    v.up.assign(n_, 0);
    v.lower_covers.assign(n_, 0);
    v.upper_covers.assign(n_, 0);
    for (element a = 0; a < n_; ++a)
      for (element b = 0; b < n_; ++b)
        if (leq(a, b)) {
          ++v.down[b];
          ++v.up[a];
        }
    for (auto [a, b] : covers()) {
      ++v.upper_covers[a];
      ++v.lower_covers[b];
    }
    return v;
  }

  friend bool operator==(const bounded_lattice&, const bounded_lattice&) = default;

 private:
  bounded_lattice() = default;

  static std::string pair_witness(element a, element b) {
    return std::to_string(a) + "," + std::to_string(b);
  }

  // Greatest common lower bound (lower=true) or least common upper bound.
  // The candidate is the common bound with the largest down-set (up-set),
  // which is then checked against every other common bound.
  element extremal_bound(element a, element b, bool lower, const std::vector<int>& rank) const {
    auto rel = [&](element x, element y) { return lower ? leq(x, y) : leq(y, x); };
    element best = -1;
    for (element c = 0; c < n_; ++c)
      if (rel(c, a) && rel(c, b) && (best < 0 || rank[c] > rank[best])) best = c;
    if (best < 0) return -1;
    for (element d = 0; d < n_; ++d)
      if (rel(d, a) && rel(d, b) && !rel(d, best)) return -1;
    return best;
  }

  int n_ = 0;
  element bottom_ = 0;
  element top_ = 0;
  std::vector<char> leq_;
  std::vector<element> meet_;
  std::vector<element> join_;
  std::vector<std::string> labels_;
};

struct lattice_law_report {
  bool distributive = false;
  bool modular = false;
};

/// Exhaustive sweep over all triples.
inline lattice_law_report lattice_laws(const bounded_lattice& L) {
  lattice_law_report r{true, true};
  const int n = L.size();
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y)
      for (element z = 0; z < n; ++z) {
        if (r.distributive && L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
          r.distributive = false;
        }
        if (r.modular && L.join(x, L.meet(y, L.join(x, z))) != L.meet(L.join(x, y), L.join(x, z))) {
          r.modular = false;
        }
        if (!r.distributive && !r.modular) return r;
      }
  return r;
}

/// Number of elements in the longest chain contained in `subset`.
inline int length_of(const bounded_lattice& L, const element_set& subset) {
  if (subset.empty()) throw error(errc::empty_subset, "", "length of an empty subset");
  // Sorting by down-set size gives a linear extension of the order.
  std::vector<std::pair<int, element>> ranked;
  for (element x : subset) {
    int down = 0;
    for (element y = 0; y < L.size(); ++y) down += L.leq(y, x) ? 1 : 0;
    ranked.emplace_back(down, x);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<int> best(ranked.size(), 1);
  int longest = 1;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (L.lt(ranked[j].second, ranked[i].second)) best[i] = std::max(best[i], best[j] + 1);
    longest = std::max(longest, best[i]);
  }
  return longest;
}

inline int length_of(const bounded_lattice& L) { return length_of(L, L.elements()); }

/// (x, y) is a splitting pair: y is not below x and every element lies in
/// (x] or in [y).
inline bool is_splitting_pair(const bounded_lattice& L, element x, element y) {
  if (L.leq(y, x)) return false;
  for (element z = 0; z < L.size(); ++z)
    if (!L.leq(z, x) && !L.leq(y, z)) return false;
  return true;
}

/// Elements having a bounded-lattice complement.
inline element_set complemented_elements(const bounded_lattice& L) {
  element_set out;
  for (element a = 0; a < L.size(); ++a)
    for (element b = 0; b < L.size(); ++b)
      if (L.meet(a, b) == L.bottom() && L.join(a, b) == L.top()) {
        out.push_back(a);
        break;
      }
  return out;
}

/// First bounded-lattice isomorphism L -> M in the search order (elements by
/// rank then degree, candidates by index), or nullopt.
inline std::optional<std::vector<element>> lattice_isomorphic(const bounded_lattice& L,
                                                              const bounded_lattice& M) {
  if (L.size() != M.size()) return std::nullopt;
  auto lv = L.view();
  auto mv = M.view();
  detail::embedding_search search(lv, mv, /*bijective=*/true);
  auto found = search.first();
  if (found.empty()) return std::nullopt;
  return found;
}

}  // namespace pbz
