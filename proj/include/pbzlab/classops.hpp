#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbzlab/algebra.hpp"
#include "pbzlab/catalog.hpp"
#include "pbzlab/constructions.hpp"
#include "pbzlab/embedding.hpp"
#include "pbzlab/error.hpp"
#include "pbzlab/terms.hpp"

namespace pbz {

struct distsets_result {
  finite_algebra source;  // GDM(n)
  finite_algebra target;  // GD(m)
  std::vector<element> map;
};

/// The embedding GDM(n) -> GD(m) sending the atoms a_i of the lower D_2^n to
/// the atoms b_i of D_2^m, x to h(x) and x' to h(x)', where h shifts a bit
/// vector into the high-order coordinates. Verified before returning.
/// Throws ParamOutOfRange unless 1 <= n < m <= 5.
inline distsets_result distsets_embedding(int n, int m) {
  if (!(1 <= n && n < m && m <= 5)) {
    throw error(errc::param_out_of_range, std::to_string(n) + "," + std::to_string(m), "need 1 <= n < m <= 5");
  }
  auto source = catalog(catalog_name{"GDM", n, {}});
  auto target = catalog(catalog_name{"GD", m, {}});
  auto src_lay = layout_of(chain(1 << n), chain(2));
  auto dst_lay = layout_of(chain(1 << m), chain(1));
  // D_2^k elements are bit vectors; the layout only needs sizes and bounds,
  // which agree with the Boolean lattices the catalog uses.
  auto h = [&](element x) { return x << (m - n); };
  std::vector<element> map(source.size(), -1);
  for (element x = 0; x < (1 << n); ++x) {
    map[src_lay.lower[x]] = dst_lay.lower[h(x)];
    map[src_lay.upper[x]] = dst_lay.upper[h(x)];
  }
  if (!is_embedding(source, target, map, flavor::bz)) {
    throw std::logic_error("distsets_embedding: the explicit map is not a BZ embedding");
  }
  return {std::move(source), std::move(target), std::move(map)};
}

/// K with A isomorphic to D_2 (+) K (+) D_2, when A is a PBZ*-lattice with a
/// unique atom and a unique coatom whose interval is pseudo-Kleene.
inline std::optional<finite_algebra> sandwich_decompose(const finite_algebra& A) {
  if (!A.has_brouwer() || !classify(A).pbz.value_or(false) || A.size() < 3) return std::nullopt;
  const bounded_lattice& L = A.lattice();
  auto atoms = L.atoms();
  auto coatoms = L.coatoms();
  if (atoms.size() != 1 || coatoms.size() != 1) return std::nullopt;
  const element lo = atoms[0], hi = coatoms[0];
  element_set interval;
  for (element x = 0; x < A.size(); ++x)
    if (L.leq(lo, x) && L.leq(x, hi)) interval.push_back(x);
  std::vector<element> index(A.size(), -1);
  for (std::size_t i = 0; i < interval.size(); ++i) index[interval[i]] = static_cast<element>(i);
  std::vector<element> kl;
  std::vector<std::string> labels;
  for (element x : interval) {
    if (index[A.kleene(x)] < 0) return std::nullopt;
    kl.push_back(index[A.kleene(x)]);
    labels.push_back(A.label(x));
  }
  auto KL = bounded_lattice::from_order(
      static_cast<int>(interval.size()), index[lo], index[hi],
      [&](element a, element b) { return L.leq(interval[a], interval[b]); });
  labels = finalize_labels(std::move(labels), index[lo], index[hi]);
  auto K = attach_involution(KL.with_labels(std::move(labels)), std::move(kl));
  if (!classify(K).pseudo_kleene.value_or(false)) return std::nullopt;
  if (!isomorphic(A, aol(chain(2), K), flavor::bz)) return std::nullopt;
  return K;
}

struct r_report {
  bool r_holds = false;
  bool rv_holds = false;
  bool small = false;                // |A| <= 2
  std::optional<bool> k_ortholattice;  // set when A decomposes as a sandwich
  bool structural = false;           // small, or the sandwich middle is an ortholattice
  bool consistent = false;           // R <=> R-v <=> structural
};

/// Checks A |= R <=> A |= R-v <=> (|A| <= 2 or A = D_2 (+) K (+) D_2 with K an
/// ortholattice). Throws NotAntiortholattice.
inline r_report r_characterization(const finite_algebra& A) {
  if (!A.has_brouwer() || !classify(A).antiortholattice.value_or(false)) {
    throw error(errc::not_antiortholattice, std::to_string(A.size()), "R characterization needs an antiortholattice");
  }
  r_report r;
  r.r_holds = satisfies(A, named_identity("R")).holds;
  r.rv_holds = satisfies(A, named_identity("RV")).holds;
  r.small = A.size() <= 2;
  if (auto K = sandwich_decompose(A)) r.k_ortholattice = classify(*K).ortholattice.value_or(false);
  r.structural = r.small || r.k_ortholattice.value_or(false);
  r.consistent = r.r_holds == r.rv_holds && r.r_holds == r.structural;
  return r;
}

struct dichotomy_result {
  bool ortholattice = false;
  /// 3 or 4 when a chain witness was found.
  int witness_size = 0;
  /// Embedding of D_witness_size (catalog numbering) into A.
  std::vector<element> map;
};

/// Either A is an ortholattice, or some x != 0 has x <= x': then x = x'
/// gives a BI embedding of D_3 and x < x' one of D_4. The witness map is
/// re-verified.
inline dichotomy_result d3_ol_dichotomy(const finite_algebra& A) {
  if (!A.has_kleene()) throw error(errc::missing_operation, "kleene", "the dichotomy needs a BI-lattice");
  dichotomy_result out;
  if (classify(A).ortholattice.value_or(false)) {
    out.ortholattice = true;
    return out;
  }
  const bounded_lattice& L = A.lattice();
  for (element x = 0; x < A.size(); ++x) {
    if (x == L.bottom() || !L.leq(x, A.kleene(x))) continue;
    auto chain_bi = catalog(catalog_name{"D", x == A.kleene(x) ? 3 : 4, {}}).reduct(flavor::bi);
    if (x == A.kleene(x)) {
      out.witness_size = 3;
      out.map = {L.bottom(), x, L.top()};
    } else {
      out.witness_size = 4;
      out.map = {L.bottom(), x, A.kleene(x), L.top()};
    }
    if (!is_embedding(chain_bi, A.reduct(flavor::bi), out.map, flavor::bi)) {
      throw std::logic_error("d3_ol_dichotomy: witness is not an embedding");
    }
    return out;
  }
  throw std::logic_error("d3_ol_dichotomy: non-ortholattice without a witness");
}

inline constexpr int default_subalgebra_guard = 16;

namespace detail {

inline std::uint64_t closure(const finite_algebra& A, flavor f, std::uint64_t seed) {
  std::vector<element> members;
  for (element x = 0; x < A.size(); ++x)
    if (seed >> x & 1) members.push_back(x);
  std::uint64_t set = seed;
  auto add = [&](element y) {
    if (!(set >> y & 1)) {
      set |= std::uint64_t{1} << y;
      members.push_back(y);
    }
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    element x = members[i];
    if (f >= flavor::bi) add(A.kleene(x));
    if (f >= flavor::bz) add(A.brouwer(x));
    for (std::size_t j = 0; j <= i; ++j) {
      add(A.meet(x, members[j]));
      add(A.join(x, members[j]));
    }
  }
  return set;
}

}  // namespace detail

/// Every subuniverse at flavor f (containing 0 and 1), ordered by size and
/// then by element list. Throws SizeGuardExceeded when |A| > size_guard.
inline std::vector<element_set> all_subuniverses(const finite_algebra& A, flavor f,
                                                 int size_guard = default_subalgebra_guard) {
  detail::require_flavor(A, f);
  if (A.size() > size_guard || A.size() > 63) {
    throw error(errc::size_guard_exceeded, std::to_string(A.size()),
                "subalgebra enumeration limited to " + std::to_string(std::min(size_guard, 63)) + " elements");
  }
  std::uint64_t base = (std::uint64_t{1} << A.bottom()) | (std::uint64_t{1} << A.top());
  std::set<std::uint64_t> found{detail::closure(A, f, base)};
  std::vector<std::uint64_t> work(found.begin(), found.end());
  while (!work.empty()) {
    std::uint64_t u = work.back();
    work.pop_back();
    for (element x = 0; x < A.size(); ++x) {
      if (u >> x & 1) continue;
      std::uint64_t v = detail::closure(A, f, u | (std::uint64_t{1} << x));
      if (found.insert(v).second) work.push_back(v);
    }
  }
  std::vector<element_set> out;
  for (std::uint64_t u : found) {
    element_set s;
    for (element x = 0; x < A.size(); ++x)
      if (u >> x & 1) s.push_back(x);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const element_set& a, const element_set& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// The subalgebras on all_subuniverses, optionally one per isomorphism type.
inline std::vector<finite_algebra> all_subalgebras(const finite_algebra& A, flavor f, bool up_to_iso,
                                                   int size_guard = default_subalgebra_guard) {
  std::vector<finite_algebra> out;
  for (const auto& u : all_subuniverses(A, f, size_guard)) {
    auto S = induced_subalgebra(A, u, f);
    if (up_to_iso &&
        std::any_of(out.begin(), out.end(), [&](const finite_algebra& T) { return isomorphic(S, T, f).has_value(); })) {
      continue;
    }
    out.push_back(std::move(S));
  }
  return out;
}

}  // namespace pbz
