#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "pbzlab/algebra.hpp"
#include "pbzlab/constructions.hpp"
#include "pbzlab/error.hpp"

namespace pbz {

/// A parsed catalog name: "B6", "D:5", "GD:3", "SANDWICH:M3" ...
struct catalog_name {
  std::string tag;
  int param = 0;      // for D, MO, BOOL, GD, GDM
  std::string inner;  // for SANDWICH

  friend bool operator==(const catalog_name&, const catalog_name&) = default;
};

inline std::string to_string(const catalog_name& c) {
  if (c.tag == "SANDWICH") return c.tag + ":" + c.inner;
  if (c.tag == "D" || c.tag == "MO" || c.tag == "BOOL" || c.tag == "GD" || c.tag == "GDM") {
    return c.tag + ":" + std::to_string(c.param);
  }
  return c.tag;
}

namespace detail {

inline bool takes_param(std::string_view tag) {
  return tag == "D" || tag == "MO" || tag == "BOOL" || tag == "GD" || tag == "GDM";
}

inline bool is_plain_name(std::string_view tag) {
  return tag == "M3" || tag == "N5" || tag == "B6" || tag == "OMLNM" || tag == "CompAOL11";
}

// Letters for chain and atom names; c is reserved for self-dual elements.
inline std::string letter_name(int i) {
  static const std::string letters = "abdefghijklmnopqrstuwxyz";
  if (i < static_cast<int>(letters.size())) return std::string(1, letters[i]);
  return "a" + std::to_string(i);
}

}  // namespace detail

/// Throws UnknownName, MissingParam, or ParamOutOfRange for a malformed number.
inline catalog_name parse_catalog_name(std::string_view text) {
  auto colon = text.find(':');
  std::string tag(text.substr(0, colon));
  catalog_name out;
  out.tag = tag;
  if (tag == "SANDWICH") {
    if (colon == std::string_view::npos || colon + 1 == text.size()) {
      throw error(errc::missing_param, text, "SANDWICH needs an inner catalog name");
    }
    out.inner = std::string(text.substr(colon + 1));
    parse_catalog_name(out.inner);
    return out;
  }
  if (detail::takes_param(tag)) {
    if (colon == std::string_view::npos) throw error(errc::missing_param, text, tag + " needs an integer parameter");
    auto digits = text.substr(colon + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw error(errc::param_out_of_range, text, "parameter is not an integer");
    }
    out.param = value;
    return out;
  }
  if (detail::is_plain_name(tag) && colon == std::string_view::npos) return out;
  throw error(errc::unknown_name, text, "not a catalog name");
}

namespace detail {

inline void require_range(const catalog_name& c, int lo, int hi) {
  if (c.param < lo || c.param > hi) {
    throw error(errc::param_out_of_range, to_string(c),
                "parameter must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

inline std::vector<std::string> chain_labels(int n) {
  if (n == 1) return {"0"};
  std::vector<std::string> labels(n);
  labels[0] = "0";
  labels[n - 1] = "1";
  for (int i = 1; i < n / 2; ++i) {
    labels[i] = letter_name(i - 1);
    labels[n - 1 - i] = labels[i] + "'";
  }
  if (n % 2 == 1) labels[n / 2] = "c";
  return labels;
}

/// D_n as a BI-lattice with the reversal involution.
inline finite_algebra bi_chain(int n) {
  std::vector<element> kl(n);
  for (element i = 0; i < n; ++i) kl[i] = n - 1 - i;
  return attach_involution(chain(n).with_labels(chain_labels(n)), std::move(kl));
}

/// D_2^n as a Boolean algebra with ~ = '. Bitstring labels.
inline finite_algebra boolean_algebra(int n) {
  bounded_lattice two = chain(2).with_labels({"0", "1"});
  bounded_lattice L = direct_product(std::vector<bounded_lattice>(n, two));
  std::vector<element> kl(L.size());
  for (element x = 0; x < L.size(); ++x) kl[x] = L.size() - 1 - x;
  auto labels = finalize_labels(L.labels(), L.bottom(), L.top());
  auto A = attach_involution(L.with_labels(std::move(labels)), kl);
  return attach_brouwer(A, std::move(kl));
}

/// MO_k: 2k atoms x, x' with ~ = '.
inline finite_algebra mo(int k) {
  const int n = 2 * k + 2;
  std::vector<cover_pair> covers;
  std::vector<std::string> labels(n);
  std::vector<element> kl(n);
  labels[0] = "0";
  labels[n - 1] = "1";
  kl[0] = n - 1;
  kl[n - 1] = 0;
  for (int i = 0; i < k; ++i) {
    element x = 1 + 2 * i, y = 2 + 2 * i;
    labels[x] = letter_name(i);
    labels[y] = letter_name(i) + "'";
    kl[x] = y;
    kl[y] = x;
  }
  for (element x = 1; x < n - 1; ++x) {
    covers.emplace_back(0, x);
    covers.emplace_back(x, n - 1);
  }
  auto A = attach_involution(bounded_lattice::from_covers(n, 0, n - 1, covers, labels), kl);
  return attach_brouwer(A, std::move(kl));
}

inline finite_algebra with_ortho_brouwer(const finite_algebra& A) {
  std::vector<element> kl(A.kleene_table().begin(), A.kleene_table().end());
  return attach_brouwer(A, std::move(kl));
}

inline finite_algebra relabel(const finite_algebra& A, std::vector<std::string> labels) {
  return A.with_labels(std::move(labels));
}

inline finite_algebra b6() {
  // 0, a, b, a', b', 1 with chains 0 < a < b' < 1 and 0 < b < a' < 1.
  const std::vector<cover_pair> covers{{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 5}, {4, 5}};
  auto L = bounded_lattice::from_covers(6, 0, 5, covers, {"0", "a", "b", "a'", "b'", "1"});
  return with_ortho_brouwer(attach_involution(L, {5, 3, 4, 1, 2, 0}));
}

inline finite_algebra comp_aol11() {
  // 0, u, v, a, a', c, b, b', u', v', 1
  const std::vector<cover_pair> covers{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {2, 5},
                                       {3, 8}, {4, 8}, {5, 8}, {5, 9}, {6, 9}, {7, 9}, {8, 10}, {9, 10}};
  auto L = bounded_lattice::from_covers(11, 0, 10, covers,
                                        {"0", "u", "v", "a", "a'", "c", "b", "b'", "u'", "v'", "1"});
  auto A = attach_involution(L, {10, 8, 9, 4, 3, 5, 7, 6, 1, 2, 0});
  return attach_brouwer(A, trivial_brouwer);
}

inline finite_algebra d1_bi() { return attach_involution(chain(1).with_labels({"0"}), {0}); }

}  // namespace detail

inline finite_algebra catalog(const catalog_name& c) {
  using namespace detail;
  if (c.tag == "D") {
    require_range(c, 1, 64);
    return attach_brouwer(bi_chain(c.param), trivial_brouwer);
  }
  if (c.tag == "MO") {
    require_range(c, 1, 16);
    return mo(c.param);
  }
  if (c.tag == "BOOL") {
    require_range(c, 1, 6);
    return boolean_algebra(c.param);
  }
  if (c.tag == "GD" || c.tag == "GDM") {
    require_range(c, 1, 6);
    auto K = c.tag == "GD" ? d1_bi() : bi_chain(2);
    return aol(boolean_algebra(c.param).lattice(), K);
  }
  if (c.tag == "SANDWICH") {
    auto K = catalog(parse_catalog_name(c.inner));
    return aol(chain(2).with_labels({"0", "1"}), K.reduct(flavor::bi));
  }
  if (c.tag == "M3") {
    auto A = relabel(boolean_algebra(2), {"0", "a", "a'", "1"});
    auto D3 = attach_brouwer(bi_chain(3), trivial_brouwer).with_labels({"0", "b", "1"});
    return horizontal_sum(A, D3, sum_flavor::pbz);
  }
  if (c.tag == "N5") {
    auto D3 = bi_chain(3).with_labels({"0", "b", "1"});
    return horizontal_sum(D3, bi_chain(4), sum_flavor::bi);
  }
  if (c.tag == "B6") return b6();
  if (c.tag == "OMLNM") {
    auto A = relabel(boolean_algebra(2), {"0", "u", "u'", "1"});
    // D_2^3 in bitstring order: 000, 001, ..., 111
    auto B = relabel(boolean_algebra(3), {"0", "c", "b", "a'", "a", "b'", "c'", "1"});
    return horizontal_sum(A, B, sum_flavor::pbz);
  }
  if (c.tag == "CompAOL11") return comp_aol11();
  throw error(errc::unknown_name, to_string(c), "not a catalog name");
}

inline finite_algebra catalog(std::string_view name) { return catalog(parse_catalog_name(name)); }

/// Names accepted by catalog(), with representative parameters.
inline std::vector<std::string> catalog_examples() {
  return {"D:1",   "D:2",   "D:3",  "D:4",   "D:5",       "D:6",        "MO:1",     "MO:2",
          "MO:3",  "BOOL:3", "M3",  "N5",    "B6",        "OMLNM",      "CompAOL11", "GD:1",
          "GD:2",  "GD:3",  "GDM:1", "GDM:2", "GDM:3",    "SANDWICH:D:3", "SANDWICH:M3",
          "SANDWICH:MO:2", "SANDWICH:B6"};
}

/// The catalog antiortholattices used by the irreducibility, SK, R and SDM
/// checks.
inline std::vector<std::string> catalog_antiortholattices() {
  return {"D:1",  "D:2",   "D:3",   "D:4",   "D:5",        "D:6",          "GD:1",          "GD:2",
          "GD:3", "GDM:1", "GDM:2", "GDM:3", "CompAOL11", "SANDWICH:D:3", "SANDWICH:M3", "SANDWICH:MO:2",
          "SANDWICH:B6"};
}

}  // namespace pbz
