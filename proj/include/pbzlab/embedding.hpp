#pragma once

#include <optional>
#include <vector>

#include "pbzlab/algebra.hpp"
#include "pbzlab/detail/search.hpp"

namespace pbz {

/// First injective map A -> B preserving 0, 1, meet, join and the unary
/// operations of flavor f, in the deterministic search order.
inline std::optional<std::vector<element>> embeds(const finite_algebra& A, const finite_algebra& B, flavor f) {
  if (f > A.kind() || f > B.kind()) return std::nullopt;
  auto av = A.view(f);
  auto bv = B.view(f);
  detail::embedding_search search(av, bv, /*bijective=*/false);
  auto found = search.first();
  if (found.empty()) return std::nullopt;
  return found;
}

inline std::optional<std::vector<element>> isomorphic(const finite_algebra& A, const finite_algebra& B, flavor f) {
  if (A.size() != B.size() || f > A.kind() || f > B.kind()) return std::nullopt;
  auto av = A.view(f);
  auto bv = B.view(f);
  detail::embedding_search search(av, bv, /*bijective=*/true);
  auto found = search.first();
  if (found.empty()) return std::nullopt;
  return found;
}

/// Visits every flavor-f embedding A -> B until `visit` returns false.
template <class Visitor>
void for_each_embedding(const finite_algebra& A, const finite_algebra& B, flavor f, bool bijective, Visitor&& visit) {
  if (f > A.kind() || f > B.kind()) return;
  auto av = A.view(f);
  auto bv = B.view(f);
  detail::embedding_search search(av, bv, bijective);
  search.for_each(visit);
}

/// Direct check, independent of the search: `map` is injective and preserves
/// 0, 1, meet, join and the flavor's unary operations.
inline bool is_embedding(const finite_algebra& A, const finite_algebra& B, const std::vector<element>& map, flavor f) {
  if (static_cast<int>(map.size()) != A.size() || f > A.kind() || f > B.kind()) return false;
  std::vector<char> used(B.size(), 0);
  for (element y : map) {
    if (y < 0 || y >= B.size() || used[y]) return false;
    used[y] = 1;
  }
  if (map[A.bottom()] != B.bottom() || map[A.top()] != B.top()) return false;
  for (element x = 0; x < A.size(); ++x) {
    if (f >= flavor::bi && map[A.kleene(x)] != B.kleene(map[x])) return false;
    if (f >= flavor::bz && map[A.brouwer(x)] != B.brouwer(map[x])) return false;
    for (element y = 0; y < A.size(); ++y) {
      if (map[A.meet(x, y)] != B.meet(map[x], map[y])) return false;
      if (map[A.join(x, y)] != B.join(map[x], map[y])) return false;
    }
  }
  return true;
}

}  // namespace pbz
