#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace pbz {

using element = int;

namespace detail {

/// Flat view of a finite bounded lattice-ordered structure, as consumed by
/// the backtracking homomorphism search. Tables are row-major n*n for the
/// binary operations and length-n for each unary operation.
struct structure_view {
  int n = 0;
  element bottom = 0;
  element top = 0;
  std::span<const element> meet;
  std::span<const element> join;
  std::vector<std::span<const element>> unary;
  std::vector<int> down;    // |(x]|
  std::vector<int> up;      // |[x)|
  std::vector<int> lower_covers;
  std::vector<int> upper_covers;
};

/// Enumerates injective maps source -> target preserving 0, 1, meet, join and
/// every unary operation (paired by position). With `bijective` set the
/// target must have the same size and the maps found are isomorphisms.
///
/// Elements of the source are branched on in increasing (rank, degree) order
/// and candidates are tried in increasing index order, so the enumeration
/// order is fully deterministic. Each assignment is propagated through the
/// operations: once x -> y and z -> w are fixed, x^z -> y^w is forced.
class embedding_search {
 public:
  embedding_search(const structure_view& source, const structure_view& target, bool bijective)
      : s_(source), t_(target), bijective_(bijective),
        map_(source.n, -1), inv_(target.n, -1) {
    order_.resize(s_.n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](element a, element b) {
      return std::tuple(s_.down[a], s_.lower_covers[a] + s_.upper_covers[a]) <
             std::tuple(s_.down[b], s_.lower_covers[b] + s_.upper_covers[b]);
    });
  }

  /// Calls `visit(map)` for every solution until it returns false.
  /// Returns true when the enumeration was stopped by the visitor.
  template <class Visitor>
  bool for_each(Visitor&& visit) {
    if (s_.n > t_.n || (bijective_ && s_.n != t_.n)) return false;
    if (s_.unary.size() != t_.unary.size()) return false;
    std::fill(map_.begin(), map_.end(), -1);
    std::fill(inv_.begin(), inv_.end(), -1);
    trail_.clear();
    if (!assign(s_.bottom, t_.bottom) || !assign(s_.top, t_.top)) return false;
    bool stopped = false;
    recurse(0, visit, stopped);
    return stopped;
  }

  std::vector<element> first() {
    std::vector<element> found;
    for_each([&](const std::vector<element>& m) {
      found = m;
      return false;
    });
    return found;
  }

 private:
  bool compatible(element x, element y) const {
    if (bijective_) {
      return s_.down[x] == t_.down[y] && s_.up[x] == t_.up[y] &&
             s_.lower_covers[x] == t_.lower_covers[y] &&
             s_.upper_covers[x] == t_.upper_covers[y];
    }
    return t_.down[y] >= s_.down[x] && t_.up[y] >= s_.up[x];
  }

  bool assign(element x, element y) {
    pending_.clear();
    pending_.emplace_back(x, y);
    while (!pending_.empty()) {
      auto [p, q] = pending_.back();
      pending_.pop_back();
      if (map_[p] == q) continue;
      if (map_[p] != -1 || inv_[q] != -1 || !compatible(p, q)) return false;
      map_[p] = q;
      inv_[q] = p;
      for (std::size_t k = 0; k < s_.unary.size(); ++k) {
        pending_.emplace_back(s_.unary[k][p], t_.unary[k][q]);
      }
      for (element z : trail_) {
        element w = map_[z];
        pending_.emplace_back(s_.meet[p * s_.n + z], t_.meet[q * t_.n + w]);
        pending_.emplace_back(s_.join[p * s_.n + z], t_.join[q * t_.n + w]);
      }
      trail_.push_back(p);
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      element p = trail_.back();
      trail_.pop_back();
      inv_[map_[p]] = -1;
      map_[p] = -1;
    }
  }

  template <class Visitor>
  void recurse(std::size_t pos, Visitor& visit, bool& stopped) {
    while (pos < order_.size() && map_[order_[pos]] != -1) ++pos;
    if (pos == order_.size()) {
      if (!visit(static_cast<const std::vector<element>&>(map_))) stopped = true;
      return;
    }
    element x = order_[pos];
    for (element y = 0; y < t_.n && !stopped; ++y) {
      if (inv_[y] != -1) continue;
      std::size_t mark = trail_.size();
      if (assign(x, y)) recurse(pos + 1, visit, stopped);
      undo(mark);
    }
  }

  const structure_view& s_;
  const structure_view& t_;
  bool bijective_;
  std::vector<element> map_;
  std::vector<element> inv_;
  std::vector<element> order_;
  std::vector<element> trail_;
  std::vector<std::pair<element, element>> pending_;
};

}  // namespace detail
}  // namespace pbz
