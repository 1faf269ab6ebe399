#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbzlab/pbzlab.hpp"

namespace pbz::testing {

inline element at(const finite_algebra& A, const std::string& label) {
  for (element x = 0; x < A.size(); ++x)
    if (A.label(x) == label) return x;
  throw std::out_of_range("no element labelled " + label);
}

inline element_set labelled(const finite_algebra& A, const std::vector<std::string>& labels) {
  element_set out;
  for (const auto& l : labels) out.push_back(at(A, l));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> labels_of(const finite_algebra& A, const element_set& xs) {
  std::vector<std::string> out;
  for (element x : xs) out.push_back(A.label(x));
  return out;
}

template <class Fn>
errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  throw std::logic_error("expected a pbz::error");
}

// Restricted growth strings: every set partition of {0..n-1} exactly once.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      visit(rgs);
      return;
    }
    for (int b = 0; b <= blocks && b < n; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) visit(rgs);
  else rec(1, 1);
}

// Compatibility checked pair by pair straight from the operation tables.
inline bool compatible_partition(const finite_algebra& A, const std::vector<int>& p, flavor f) {
  const int n = A.size();
  for (element a = 0; a < n; ++a)
    for (element b = 0; b < n; ++b) {
      if (p[a] != p[b]) continue;
      if (f >= flavor::bi && p[A.kleene(a)] != p[A.kleene(b)]) return false;
      if (f >= flavor::bz && p[A.brouwer(a)] != p[A.brouwer(b)]) return false;
      for (element c = 0; c < n; ++c) {
        if (p[A.meet(a, c)] != p[A.meet(b, c)]) return false;
        if (p[A.join(a, c)] != p[A.join(b, c)]) return false;
      }
    }
  return true;
}

inline std::vector<std::vector<int>> brute_force_congruences(const finite_algebra& A, flavor f) {
  std::vector<std::vector<int>> out;
  for_each_partition(A.size(), [&](const std::vector<int>& p) {
    if (compatible_partition(A, p, f)) out.push_back(p);
  });
  return out;
}

// Subsets containing 0 and 1 closed under the operations of flavor f.
inline std::vector<element_set> brute_force_subuniverses(const finite_algebra& A, flavor f) {
  std::vector<element_set> out;
  const int n = A.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    auto in = [&](element x) { return (mask >> x & 1u) != 0; };
    if (!in(A.bottom()) || !in(A.top())) continue;
    bool closed = true;
    for (element a = 0; a < n && closed; ++a) {
      if (!in(a)) continue;
      if (f >= flavor::bi && !in(A.kleene(a))) closed = false;
      if (f >= flavor::bz && !in(A.brouwer(a))) closed = false;
      for (element b = 0; b < n && closed; ++b)
        if (in(b) && (!in(A.meet(a, b)) || !in(A.join(a, b)))) closed = false;
    }
    if (!closed) continue;
    element_set s;
    for (element x = 0; x < n; ++x)
      if (in(x)) s.push_back(x);
    out.push_back(s);
  }
  return out;
}

// Tries every injective map; fine for carriers up to about 8 elements.
inline bool brute_force_embeds(const finite_algebra& A, const finite_algebra& B, flavor f) {
  std::vector<element> map(A.size(), -1);
  std::vector<char> used(B.size(), 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == A.size()) {
      for (element a = 0; a < A.size(); ++a) {
        if (f >= flavor::bi && map[A.kleene(a)] != B.kleene(map[a])) return false;
        if (f >= flavor::bz && map[A.brouwer(a)] != B.brouwer(map[a])) return false;
        for (element b = 0; b < A.size(); ++b) {
          if (map[A.meet(a, b)] != B.meet(map[a], map[b])) return false;
          if (map[A.join(a, b)] != B.join(map[a], map[b])) return false;
        }
      }
      return map[A.bottom()] == B.bottom() && map[A.top()] == B.top();
    }
    for (element y = 0; y < B.size(); ++y) {
      if (used[y]) continue;
      used[y] = 1;
      map[i] = y;
      if (rec(i + 1)) return true;
      used[y] = 0;
    }
    map[i] = -1;
    return false;
  };
  return rec(0);
}

}  // namespace pbz::testing
