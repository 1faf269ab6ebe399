#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pbzlab/algebra.hpp"
#include "pbzlab/congruence.hpp"
#include "pbzlab/embedding.hpp"
#include "pbzlab/error.hpp"
#include "pbzlab/lattice.hpp"

namespace pbz {

namespace detail {

// Position of each element of M inside L (+) M: M's bottom sits on L's top,
// the remaining elements of M follow L in index order.
inline std::vector<element> upper_positions(const bounded_lattice& L, const bounded_lattice& M) {
  std::vector<element> pos(M.size());
  element next = L.size();
  for (element y = 0; y < M.size(); ++y) pos[y] = (y == M.bottom()) ? L.top() : next++;
  return pos;
}

inline std::string composite_label(const std::vector<std::string>& parts) {
  bool short_parts = std::all_of(parts.begin(), parts.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out = short_parts ? "" : "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!short_parts && i > 0) out += ",";
    out += parts[i];
  }
  if (!short_parts) out += ")";
  return out;
}

}  // namespace detail

/// Relabels the bounds "0" and "1" and renames any other element whose label
/// is "0", "1", empty or already taken.
inline std::vector<std::string> finalize_labels(std::vector<std::string> labels, element bottom, element top) {
  labels[bottom] = "0";
  labels[top] = "1";
  std::set<std::string> used{"0", "1"};
  for (element x = 0; x < static_cast<element>(labels.size()); ++x) {
    if (x == bottom || x == top) continue;
    std::string& s = labels[x];
    if (s.empty() || used.count(s)) s = "e" + std::to_string(x);
    while (used.count(s)) s += "_";
    used.insert(s);
  }
  return labels;
}

/// The chain 0 < 1 < ... < n-1.
inline bounded_lattice chain(int n) {
  if (n < 1) throw error(errc::param_out_of_range, std::to_string(n), "chain length must be at least 1");
  return bounded_lattice::from_order(n, 0, n - 1, [](element a, element b) { return a <= b; });
}

/// L (+) M: the top of L glued to the bottom of M. L keeps its numbering and
/// the non-bottom elements of M follow in their index order.
inline bounded_lattice ordinal_sum(const bounded_lattice& L, const bounded_lattice& M) {
  const int n = L.size() + M.size() - 1;
  auto pos = detail::upper_positions(L, M);
  // side[z] = index in M for the upper part (including the glue point), -1 otherwise
  std::vector<element> in_m(n, -1);
  for (element y = 0; y < M.size(); ++y) in_m[pos[y]] = y;
  auto leq = [&](element a, element b) {
    bool a_low = a < L.size(), b_low = b < L.size();
    if (a_low && b_low) return L.leq(a, b);
    if (in_m[a] >= 0 && in_m[b] >= 0) return M.leq(in_m[a], in_m[b]);
    return a_low;
  };
  std::vector<std::string> labels;
  if (L.has_labels() || M.has_labels()) {
    labels.resize(n);
    for (element x = 0; x < L.size(); ++x) labels[x] = L.label(x);
    for (element y = 0; y < M.size(); ++y)
      if (y != M.bottom()) labels[pos[y]] = M.label(y);
  }
  return bounded_lattice::from_order(n, L.bottom(), pos[M.top()], leq, std::move(labels));
}

/// Where each part of M (+) K_l (+) M^d lives in the result.
struct sum_layout {
  std::vector<element> lower;   // x in M
  std::vector<element> middle;  // y in K
  std::vector<element> upper;   // x in M^d
  int size = 0;
};

inline sum_layout layout_of(const bounded_lattice& M, const bounded_lattice& K) {
  sum_layout out;
  out.lower = M.elements();
  out.middle = detail::upper_positions(M, K);
  const int first = M.size() + K.size() - 1;
  element next = first;
  out.upper.resize(M.size());
  // M^d has bottom M.top, glued to the top of K.
  for (element x = 0; x < M.size(); ++x) out.upper[x] = (x == M.top()) ? out.middle[K.top()] : next++;
  out.size = first + M.size() - 1;
  return out;
}

namespace detail {

inline std::vector<element> checked_dual_map(const bounded_lattice& M, const std::optional<std::vector<element>>& f) {
  if (!f) return M.elements();
  const auto& g = *f;
  if (static_cast<int>(g.size()) != M.size()) {
    throw error(errc::not_dual_iso, std::to_string(g.size()), "map size differs from |M|");
  }
  std::vector<char> hit(M.size(), 0);
  for (element x = 0; x < M.size(); ++x) {
    if (g[x] < 0 || g[x] >= M.size() || hit[g[x]]) throw error(errc::not_dual_iso, std::to_string(x), "not a bijection");
    hit[g[x]] = 1;
  }
  for (element x = 0; x < M.size(); ++x)
    for (element y = 0; y < M.size(); ++y)
      if (M.leq(x, y) != M.leq(g[x], g[y])) {
        throw error(errc::not_dual_iso, std::to_string(x) + "," + std::to_string(y),
                    "map is not an order automorphism of M");
      }
  return g;
}

inline std::string fresh_glue_label(const bounded_lattice& M, const bounded_lattice& K) {
  std::string top = M.label(M.top());
  if (top != "1" && top != "0") return top;
  std::set<std::string> taken;
  for (element y = 0; y < K.size(); ++y) taken.insert(K.label(y));
  for (const char* c : {"u", "w", "p", "q", "r"})
    if (!taken.count(c)) return c;
  return "g";
}

}  // namespace detail

/// The BI-lattice M (+) K_l (+) M^d. A lower element x is sent to the upper
/// copy of f(x), K keeps its own involution. `f` must be an order
/// automorphism of M (the identity by default); composed with the copy map
/// M -> M^d it is the dual isomorphism of the construction.
/// Throws NotDualIso.
inline finite_algebra ordinal_sum_bi(const bounded_lattice& M, const finite_algebra& K,
                                     const std::optional<std::vector<element>>& f = std::nullopt) {
  if (!K.has_kleene()) throw error(errc::missing_operation, "kleene", "the middle part must be a BI-lattice");
  auto g = detail::checked_dual_map(M, f);
  const bounded_lattice& KL = K.lattice();
  auto lay = layout_of(M, KL);
  bounded_lattice L = ordinal_sum(ordinal_sum(M.with_labels({}), KL.with_labels({})), M.dual().with_labels({}));

  std::vector<element> kl(lay.size, -1);
  for (element x = 0; x < M.size(); ++x) {
    kl[lay.lower[x]] = lay.upper[g[x]];
    kl[lay.upper[g[x]]] = lay.lower[x];
  }
  for (element y = 0; y < KL.size(); ++y) kl[lay.middle[y]] = lay.middle[K.kleene(y)];

  std::vector<std::string> labels(lay.size);
  std::string glue = detail::fresh_glue_label(M, KL);
  for (element x = 0; x < M.size(); ++x) {
    std::string name = (x == M.top()) ? glue : M.label(x);
    labels[lay.lower[x]] = name;
    labels[lay.upper[g[x]]] = name + "'";
  }
  // With K trivial the two glue points coincide in a fixed point of '.
  if (KL.size() == 1) labels[lay.middle[KL.bottom()]] = "c";
  for (element y = 0; y < KL.size(); ++y)
    if (y != KL.bottom() && y != KL.top()) labels[lay.middle[y]] = K.label(y);
  element bottom = L.bottom(), top = L.top();
  auto A = attach_involution(L.with_labels(finalize_labels(std::move(labels), bottom, top)), std::move(kl));
  if (classify(K).pseudo_kleene.value_or(false) && !classify(A).pseudo_kleene.value_or(false)) {
    throw std::logic_error("ordinal_sum_bi: pseudo-Kleene middle part but the sum is not pseudo-Kleene");
  }
  return A;
}

/// M (+) K (+) M^d with the trivial Brouwer complement.
/// Throws TrivialLowerPart when |M| = 1, NotPseudoKleene when K is not.
inline finite_algebra aol(const bounded_lattice& M, const finite_algebra& K) {
  if (M.size() < 2) throw error(errc::trivial_lower_part, std::to_string(M.size()), "the lower part must be nontrivial");
  if (!K.has_kleene()) throw error(errc::missing_operation, "kleene", "the middle part must be a BI-lattice");
  if (!classify(K).pseudo_kleene.value_or(false)) {
    throw error(errc::not_pseudo_kleene, "K", "the middle part is not pseudo-Kleene");
  }
  auto A = attach_brouwer(ordinal_sum_bi(M, K), trivial_brouwer);
  if (!classify(A).antiortholattice.value_or(false)) throw std::logic_error("aol: result is not an antiortholattice");
  return A;
}

/// Lattice horizontal sum: bottom first, then the interior of A, then the
/// interior of B, top last.
inline bounded_lattice horizontal_sum(const bounded_lattice& A, const bounded_lattice& B) {
  if (A.size() < 2 || B.size() < 2) {
    throw error(errc::invalid_input, std::to_string(A.size()) + "," + std::to_string(B.size()),
                "horizontal sum operands must be nontrivial");
  }
  const int n = A.size() + B.size() - 2;
  std::vector<element> from_a(A.size()), from_b(B.size());
  // side[z]: 0 bound, 1 from A, 2 from B; orig[z]: index in that operand
  std::vector<int> side(n, 0);
  std::vector<element> orig(n, -1);
  element next = 1;
  for (element x = 0; x < A.size(); ++x) {
    if (x == A.bottom()) from_a[x] = 0;
    else if (x == A.top()) from_a[x] = n - 1;
    else {
      side[next] = 1;
      orig[next] = x;
      from_a[x] = next++;
    }
  }
  for (element x = 0; x < B.size(); ++x) {
    if (x == B.bottom()) from_b[x] = 0;
    else if (x == B.top()) from_b[x] = n - 1;
    else {
      side[next] = 2;
      orig[next] = x;
      from_b[x] = next++;
    }
  }
  auto leq = [&](element a, element b) {
    if (a == 0 || b == n - 1) return true;
    if (a == n - 1 || b == 0) return a == b;
    if (side[a] != side[b]) return false;
    return side[a] == 1 ? A.leq(orig[a], orig[b]) : B.leq(orig[a], orig[b]);
  };
  std::vector<std::string> labels(n);
  for (element z = 1; z < n - 1; ++z) labels[z] = side[z] == 1 ? A.label(orig[z]) : B.label(orig[z]);
  return bounded_lattice::from_order(n, 0, n - 1, leq, finalize_labels(std::move(labels), 0, n - 1));
}

/// Which structure a horizontal sum of algebras is asked to have.
enum class sum_flavor { bi, pk, bz, pbz };

inline std::string_view to_string(sum_flavor f) {
  switch (f) {
    case sum_flavor::bi: return "BI";
    case sum_flavor::pk: return "PK";
    case sum_flavor::bz: return "BZ";
    case sum_flavor::pbz: return "PBZ";
  }
  return "?";
}

inline sum_flavor parse_sum_flavor(std::string_view s) {
  if (s == "BI") return sum_flavor::bi;
  if (s == "PK") return sum_flavor::pk;
  if (s == "BZ") return sum_flavor::bz;
  if (s == "PBZ") return sum_flavor::pbz;
  throw error(errc::unknown_name, s, "sum flavor must be BI, PK, BZ or PBZ");
}

/// A (+) B as an algebra of the requested kind. Side conditions are checked:
/// PK and BZ need both operands of that kind and one of them an
/// ortholattice, PBZ needs both PBZ* and one orthomodular. The operands are
/// verified to be subalgebras of the result.
inline finite_algebra horizontal_sum(const finite_algebra& A, const finite_algebra& B, sum_flavor kind) {
  auto violated = [&](const std::string& reason) {
    return error(errc::side_condition_violated, to_string(kind), reason);
  };
  if (A.size() < 2 || B.size() < 2) throw violated("operands must be nontrivial");
  const bool needs_bz = kind == sum_flavor::bz || kind == sum_flavor::pbz;
  if (!A.has_kleene() || !B.has_kleene()) throw violated("operands must be BI-lattices");
  if (needs_bz && (!A.has_brouwer() || !B.has_brouwer())) throw violated("operands must be BZ-lattices");
  auto ca = classify(A), cb = classify(B);
  if (kind == sum_flavor::pk && !(*ca.pseudo_kleene && *cb.pseudo_kleene)) {
    throw violated("operands must be pseudo-Kleene");
  }
  if ((kind == sum_flavor::pk || kind == sum_flavor::bz) && !(*ca.ortholattice || *cb.ortholattice)) {
    throw violated("neither operand is an ortholattice");
  }
  if (kind == sum_flavor::bz && !(ca.bz.value_or(false) && cb.bz.value_or(false))) {
    throw violated("operands must be BZ-lattices");
  }
  if (kind == sum_flavor::pbz) {
    if (!(ca.pbz.value_or(false) && cb.pbz.value_or(false))) throw violated("operands must be PBZ*-lattices");
    if (!(*ca.orthomodular || *cb.orthomodular)) throw violated("neither operand is orthomodular");
  }

  bounded_lattice L = horizontal_sum(A.lattice(), B.lattice());
  const int n = L.size();
  // Inclusion maps, following the numbering of the lattice horizontal sum.
  std::vector<element> in_a(A.size()), in_b(B.size());
  element next = 1;
  for (element x = 0; x < A.size(); ++x)
    in_a[x] = x == A.bottom() ? 0 : x == A.top() ? n - 1 : next++;
  for (element x = 0; x < B.size(); ++x)
    in_b[x] = x == B.bottom() ? 0 : x == B.top() ? n - 1 : next++;

  std::vector<element> kl(n), br(n);
  for (element x = 0; x < A.size(); ++x) {
    kl[in_a[x]] = in_a[A.kleene(x)];
    if (needs_bz) br[in_a[x]] = in_a[A.brouwer(x)];
  }
  for (element x = 0; x < B.size(); ++x) {
    kl[in_b[x]] = in_b[B.kleene(x)];
    if (needs_bz) br[in_b[x]] = in_b[B.brouwer(x)];
  }
  finite_algebra S = attach_involution(std::move(L), std::move(kl));
  flavor level = flavor::bi;
  if (needs_bz) {
    S = attach_brouwer(S, std::move(br));
    level = flavor::bz;
  }
  if (!is_embedding(A, S, in_a, level) || !is_embedding(B, S, in_b, level)) {
    throw std::logic_error("horizontal_sum: an operand is not a subalgebra of the sum");
  }
  auto cs = classify(S);
  if (kind == sum_flavor::pk && !*cs.pseudo_kleene) throw std::logic_error("horizontal_sum: result is not pseudo-Kleene");
  if (kind == sum_flavor::bz && !cs.bz.value_or(false)) throw std::logic_error("horizontal_sum: result is not BZ");
  if (kind == sum_flavor::pbz && !cs.pbz.value_or(false)) throw std::logic_error("horizontal_sum: result is not PBZ*");
  return S;
}

/// Direct product of lattices; elements are tuples in lexicographic order
/// (the first factor varies slowest).
inline bounded_lattice direct_product(const std::vector<bounded_lattice>& factors) {
  if (factors.empty()) throw error(errc::invalid_input, "0", "product needs at least one factor");
  int n = 1;
  for (const auto& F : factors) n *= F.size();
  auto digits = [&](element z) {
    std::vector<element> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = z % factors[i].size();
      z /= factors[i].size();
    }
    return d;
  };
  auto encode = [&](const std::vector<element>& d) {
    element z = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) z = z * factors[i].size() + d[i];
    return z;
  };
  std::vector<std::vector<element>> tuple(n);
  for (element z = 0; z < n; ++z) tuple[z] = digits(z);
  auto leq = [&](element a, element b) {
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (!factors[i].leq(tuple[a][i], tuple[b][i])) return false;
    return true;
  };
  std::vector<element> lo, hi;
  for (const auto& F : factors) {
    lo.push_back(F.bottom());
    hi.push_back(F.top());
  }
  std::vector<std::string> labels;
  bool any_labels = std::any_of(factors.begin(), factors.end(), [](const bounded_lattice& F) { return F.has_labels(); });
  if (any_labels) {
    for (element z = 0; z < n; ++z) {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < factors.size(); ++i) parts.push_back(factors[i].label(tuple[z][i]));
      labels.push_back(detail::composite_label(parts));
    }
  }
  return bounded_lattice::from_order(n, encode(lo), encode(hi), leq, std::move(labels));
}

/// Componentwise product at flavor `f`. Throws MixedFlavors when some factor
/// lacks an operation of `f`.
inline finite_algebra direct_product(const std::vector<finite_algebra>& factors, flavor f) {
  if (factors.empty()) throw error(errc::invalid_input, "0", "product needs at least one factor");
  std::vector<bounded_lattice> lats;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].kind() < f) {
      throw error(errc::mixed_flavors, std::to_string(i),
                  std::string("factor has flavor ") + std::string(to_string(factors[i].kind())) + ", product asks for " +
                      std::string(to_string(f)));
    }
    lats.push_back(factors[i].lattice());
  }
  bounded_lattice L = direct_product(lats);
  if (f == flavor::lattice) return finite_algebra(std::move(L));
  const int n = L.size();
  auto componentwise = [&](auto op) {
    std::vector<element> table(n);
    for (element z = 0; z < n; ++z) {
      element rest = z, out = 0, scale = 1;
      for (std::size_t i = factors.size(); i-- > 0;) {
        element d = rest % factors[i].size();
        rest /= factors[i].size();
        out += scale * op(factors[i], d);
        scale *= factors[i].size();
      }
      table[z] = out;
    }
    return table;
  };
  auto A = attach_involution(std::move(L), componentwise([](const finite_algebra& F, element d) { return F.kleene(d); }));
  if (f == flavor::bi) return A;
  return attach_brouwer(A, componentwise([](const finite_algebra& F, element d) { return F.brouwer(d); }));
}

/// Product of factors that all carry the same flavor. Throws MixedFlavors.
inline finite_algebra direct_product(const std::vector<finite_algebra>& factors) {
  if (factors.empty()) throw error(errc::invalid_input, "0", "product needs at least one factor");
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i].kind() != factors[0].kind()) {
      throw error(errc::mixed_flavors, std::to_string(i), "factors carry different flavors");
    }
  return direct_product(factors, factors[0].kind());
}

/// The partition alpha (+) beta (+) alpha' of ordinal_sum_bi(M, K, f), where
/// alpha' is the image of alpha on the upper copy. Returned at flavor BI.
inline congruence sum_congruence(const bounded_lattice& M, const finite_algebra& K, const congruence& alpha,
                                 const congruence& beta, const std::optional<std::vector<element>>& f = std::nullopt) {
  if (alpha.size() != M.size() || beta.size() != K.size()) {
    throw error(errc::invalid_input, std::to_string(alpha.size()) + "," + std::to_string(beta.size()),
                "congruence sizes do not match M and K");
  }
  auto g = detail::checked_dual_map(M, f);
  auto lay = layout_of(M, K.lattice());
  detail::union_find uf(lay.size);
  for (element x = 0; x < M.size(); ++x)
    for (element y = 0; y < M.size(); ++y)
      if (alpha.related(x, y)) {
        uf.unite(lay.lower[x], lay.lower[y]);
        uf.unite(lay.upper[g[x]], lay.upper[g[y]]);
      }
  for (element x = 0; x < K.size(); ++x)
    for (element y = 0; y < K.size(); ++y)
      if (beta.related(x, y)) uf.unite(lay.middle[x], lay.middle[y]);
  congruence theta(uf.labels(), flavor::bi);
  auto S = ordinal_sum_bi(M, K, f);
  if (!is_congruence(S, theta, flavor::bi)) {
    throw error(errc::not_a_congruence, "alpha+beta+alpha'", "the summed partition is not a BI congruence");
  }
  return theta;
}

}  // namespace pbz
