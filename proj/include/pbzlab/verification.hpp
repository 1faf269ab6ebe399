#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pbzlab/algebra.hpp"
#include "pbzlab/catalog.hpp"
#include "pbzlab/classops.hpp"
#include "pbzlab/congruence.hpp"
#include "pbzlab/constructions.hpp"
#include "pbzlab/embedding.hpp"
#include "pbzlab/terms.hpp"

namespace pbz {

struct row_result {
  bool pass = false;
  std::string detail;
};

/// One executable claim. Ids are stable and prefixed by the lemma they check.
struct check_row {
  std::string id;
  int criterion = 0;
  std::string claim;
  std::function<row_result()> run;
};

struct row_outcome {
  std::string id;
  int criterion = 0;
  std::string claim;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

inline row_result verdict(bool ok, std::string detail = {}) { return {ok, std::move(detail)}; }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline finite_algebra bi(std::string_view name) { return catalog(name).reduct(flavor::bi); }

inline finite_algebra lattice_only(const bounded_lattice& L) { return finite_algebra(L); }

inline element_set by_labels(const finite_algebra& A, const std::vector<std::string>& names) {
  element_set out;
  for (element x = 0; x < A.size(); ++x)
    for (const auto& n : names)
      if (A.label(x) == n) out.push_back(x);
  return out;
}

inline bounded_lattice boolean_lattice(int n) { return catalog(catalog_name{"BOOL", n, {}}).lattice(); }

// ----------------------------------------------------------- criterion 1

inline void add_classification_rows(std::vector<check_row>& rows) {
  rows.push_back({"cls.b6", 1, "B6 is an ortholattice and not orthomodular", [] {
                    auto r = classify(catalog("B6"));
                    return verdict(*r.ortholattice && !*r.orthomodular);
                  }});
  rows.push_back({"cls.m3", 1, "M3 is pseudo-Kleene and paraorthomodular, not orthomodular", [] {
                    auto r = classify(catalog("M3"));
                    return verdict(*r.pseudo_kleene && *r.paraorthomodular && !*r.orthomodular);
                  }});
  rows.push_back({"cls.n5", 1, "N5 is not pseudo-Kleene", [] {
                    auto r = classify(catalog("N5"));
                    return verdict(!*r.pseudo_kleene);
                  }});
  rows.push_back({"cls.omlnm", 1, "D2^2 (+) D2^3 is orthomodular and not modular", [] {
                    auto r = classify(catalog("OMLNM"));
                    return verdict(*r.orthomodular && !r.modular);
                  }});
  rows.push_back({"cls.mo2", 1, "MO2 is a modular ortholattice and not Boolean", [] {
                    auto r = classify(catalog("MO:2"));
                    return verdict(r.modular && *r.ortholattice && !*r.boolean_algebra);
                  }});
}

// ----------------------------------------------------------- criterion 2

inline std::vector<std::string> bi_pool() {
  return {"D:2", "D:3", "D:4", "D:5", "M3", "N5", "B6", "MO:2", "OMLNM", "BOOL:2"};
}

inline void add_klprod_rows(std::vector<check_row>& rows) {
  std::mt19937 rng(20240611);
  auto pool = bi_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 1; i <= 20; ++i) {
    std::string a = pool[pick(rng)], b = pool[pick(rng)];
    std::string id = std::string("klprod.pair.") + (i < 10 ? "0" : "") + std::to_string(i);
    rows.push_back({id, 2, a + " x " + b + " with trivial ~ fails (*), (0,1) is sharp, (0,1)'=(1,0)", [a, b] {
                      auto A = bi(a), B = bi(b);
                      auto P = attach_brouwer(direct_product({A, B}, flavor::bi), trivial_brouwer);
                      bool star_fails = !satisfies(P, named_identity("STAR")).holds;
                      element zero_one = A.bottom() * B.size() + B.top();
                      element one_zero = A.top() * B.size() + B.bottom();
                      bool sharp = P.join(zero_one, P.kleene(zero_one)) == P.top();
                      bool pk = classify(A).pseudo_kleene.value_or(false) && classify(B).pseudo_kleene.value_or(false);
                      bool swap = P.kleene(zero_one) == one_zero;
                      return verdict(star_fails && sharp && (!pk || swap), "star fails: " + yes_no(star_fails) +
                                                                              ", sharp: " + yes_no(sharp) +
                                                                              ", pseudo-Kleene: " + yes_no(pk));
                    }});
  }
}

// ----------------------------------------------------------- criterion 3

inline std::vector<std::string> dirirred_aols() {
  return {"D:3", "D:4", "D:5", "GD:2", "GD:3", "GDM:2", "GDM:3", "CompAOL11", "SANDWICH:M3"};
}

inline void add_dirirred_rows(std::vector<check_row>& rows) {
  for (const auto& name : dirirred_aols()) {
    rows.push_back({"aoldirirred." + name, 3, "the lattice reduct of " + name + " is directly irreducible", [name] {
                      auto A = catalog(name);
                      if (!classify(A).antiortholattice.value_or(false)) return verdict(false, "not an antiortholattice");
                      auto r = irreducibility(A.reduct(flavor::lattice), flavor::lattice);
                      return verdict(r.directly_irreducible);
                    }});
  }
  rows.push_back({"aoldirirred.d3d3", 3, "D3 (+) D3 is directly irreducible as a BI-lattice, its lattice reduct is not", [] {
                    auto S = horizontal_sum(bi("D:3"), bi("D:3"), sum_flavor::bi);
                    bool bi_irr = irreducibility(S, flavor::bi).directly_irreducible;
                    bool lat_irr = irreducibility(S.reduct(flavor::lattice), flavor::lattice).directly_irreducible;
                    return verdict(bi_irr && !lat_irr, "BI: " + yes_no(bi_irr) + ", lattice: " + yes_no(lat_irr));
                  }});
}

// ----------------------------------------------------------- criterion 4

inline void add_complement_rows(std::vector<check_row>& rows) {
  for (std::string name : {"D:3", "D:4", "D:5", "D:6", "GD:1", "GD:2", "GD:3", "GDM:1", "GDM:2", "GDM:3"}) {
    rows.push_back({"complements." + name, 4, "the complemented elements of " + name + " are 0 and 1", [name] {
                      auto A = catalog(name);
                      auto c = classify(A);
                      if (!c.distributive || !c.antiortholattice.value_or(false)) {
                        return verdict(false, "not a distributive antiortholattice");
                      }
                      element_set bounds{std::min(A.bottom(), A.top()), std::max(A.bottom(), A.top())};
                      return verdict(complemented_elements(A.lattice()) == bounds);
                    }});
  }
  rows.push_back({"complements.CompAOL11", 4, "the complemented elements of CompAOL11 are 0, 1, a, a', b, b'", [] {
                    auto A = catalog("CompAOL11");
                    auto expected = by_labels(A, {"0", "1", "a", "a'", "b", "b'"});
                    std::sort(expected.begin(), expected.end());
                    return verdict(complemented_elements(A.lattice()) == expected);
                  }});
}

// ----------------------------------------------------------- criterion 5

inline void add_maxlength_rows(std::vector<check_row>& rows) {
  for (int k = 1; k <= 4; ++k) {
    rows.push_back({"maxlength.d3pow" + std::to_string(k), 5,
                    "length(T(D3^" + std::to_string(k) + ")) = " + std::to_string(k + 2), [k] {
                      std::vector<finite_algebra> factors(k, catalog("D:3"));
                      auto P = direct_product(factors, flavor::bz);
                      auto t = dense_and_t(P).t;
                      int len = length_of(P.lattice(), t);
                      return verdict(len == k + 2, "|T| = " + std::to_string(t.size()) + ", length = " + std::to_string(len));
                    }});
  }
}

// ----------------------------------------------------------- criterion 6

struct cgordsum_case {
  std::string id;
  bounded_lattice M;
  finite_algebra K;
};

inline std::vector<cgordsum_case> cgordsum_cases() {
  return {{"D2.D1", chain(2), bi("D:1")},
          {"D2.D3", chain(2), bi("D:3")},
          {"D2sq.D2", boolean_lattice(2), bi("D:2")},
          {"D3.D2", chain(3), bi("D:2")}};
}

inline void add_cgordsum_rows(std::vector<check_row>& rows) {
  for (const auto& c : cgordsum_cases()) {
    rows.push_back({"cgordsum.bi." + c.id, 6, "Con_BI(M (+) K (+) M^d) = Con(M) x Con_BI(K) for " + c.id, [c] {
                      auto S = ordinal_sum_bi(c.M, c.K);
                      auto con_s = all_congruences(S, flavor::bi);
                      auto con_m = all_congruences(lattice_only(c.M), flavor::lattice);
                      auto con_k = all_congruences(c.K, flavor::bi);
                      bool count = con_s.size() == con_m.size() * con_k.size();
                      // The sum map alpha, beta -> alpha (+) beta (+) alpha' hits every congruence once.
                      std::set<congruence> image;
                      for (const auto& a : con_m)
                        for (const auto& b : con_k) image.insert(sum_congruence(c.M, c.K, a, b));
                      bool onto = image.size() == con_s.size() &&
                                  std::all_of(con_s.begin(), con_s.end(), [&](const congruence& t) { return image.count(t) > 0; });
                      bool iso = lattice_isomorphic(lattice_of_congruences(con_s),
                                                    direct_product({lattice_of_congruences(con_m), lattice_of_congruences(con_k)}))
                                     .has_value();
                      return verdict(count && onto && iso, std::to_string(con_s.size()) + " = " + std::to_string(con_m.size()) +
                                                               " x " + std::to_string(con_k.size()) +
                                                               ", isomorphic: " + yes_no(iso) + ", sum map bijective: " + yes_no(onto));
                    }});
    // The class of the top of M is interior to the sum, so only the class of
    // 0 has to be a singleton.
    rows.push_back({"cgordsum.bz." + c.id, 6, "Con_BZ(aol(M,K)) = (Con_0(M) x Con_BI(K)) (+) D2 for " + c.id, [c] {
                      auto A = aol(c.M, c.K);
                      auto con_a = congruence_lattice(A, flavor::bz);
                      auto con01_m = lattice_of_congruences(con_0(lattice_only(c.M), flavor::lattice));
                      auto con_k = congruence_lattice(c.K, flavor::bi);
                      auto expected = ordinal_sum(direct_product({con01_m, con_k}), chain(2));
                      bool iso = lattice_isomorphic(con_a, expected).has_value();
                      return verdict(iso, "|Con_BZ| = " + std::to_string(con_a.size()) + ", expected " +
                                              std::to_string(expected.size()));
                    }});
  }
}

// ----------------------------------------------------------- criterion 7

inline void add_cggendist_rows(std::vector<check_row>& rows) {
  for (int n = 1; n <= 3; ++n) {
    std::string sn = "n" + std::to_string(n);
    rows.push_back({"cggendist.simple." + sn, 7, "GD(" + std::to_string(n) + ") is simple", [n] {
                      auto A = catalog(catalog_name{"GD", n, {}});
                      return verdict(irreducibility(A, flavor::bz).simple);
                    }});
    rows.push_back({"cggendist.chain." + sn, 7, "Con_BZ(GDM(" + std::to_string(n) + ")) is the 3-chain {Delta, theta, nabla}", [n] {
                      auto A = catalog(catalog_name{"GDM", n, {}});
                      auto cons = all_congruences(A, flavor::bz);
                      auto M = boolean_lattice(n);
                      auto K = bi("D:2");
                      auto theta = sum_congruence(M, K, congruence::identity(M.size(), flavor::lattice),
                                                  congruence::total(2, flavor::bi));
                      bool chain3 = lattice_isomorphic(lattice_of_congruences(cons), chain(3)).has_value();
                      bool middle = cons.size() == 3 && cons[1] == theta;
                      return verdict(chain3 && middle, std::to_string(cons.size()) + " congruences");
                    }});
    rows.push_back({"cggendist.quotient." + sn, 7, "GDM(" + std::to_string(n) + ")/theta = GD(" + std::to_string(n) + ")", [n] {
                      auto A = catalog(catalog_name{"GDM", n, {}});
                      auto M = boolean_lattice(n);
                      auto theta = sum_congruence(M, bi("D:2"), congruence::identity(M.size(), flavor::lattice),
                                                  congruence::total(2, flavor::bi))
                                       .with_flavor(flavor::bz);
                      if (!is_congruence(A, theta, flavor::bz)) return verdict(false, "theta is not a BZ congruence");
                      auto Q = quotient(A, theta);
                      return verdict(isomorphic(Q, catalog(catalog_name{"GD", n, {}}), flavor::bz).has_value());
                    }});
  }
}

// ----------------------------------------------------------- criterion 8

inline void add_eqcnd_rows(std::vector<check_row>& rows) {
  for (int n = 2; n <= 3; ++n) {
    struct table_row {
      std::string id, algebra;
      int param;
      char eq;
      bool expected;
    };
    std::vector<table_row> table{{"gd.c", "GD", n, 'C', true},
                               {"gdnext.c", "GD", n + 1, 'C', false},
                               {"gdm.c", "GDM", n, 'C', false},
                               {"gdm.d", "GDM", n, 'D', true},
                               {"gdnext.d", "GD", n + 1, 'D', false}};
    for (const auto& s : table) {
      std::string alg = s.algebra + "(" + std::to_string(s.param) + ")";
      std::string eq = std::string(1, s.eq) + "(" + std::to_string(n) + ")";
      rows.push_back({"eqcnd." + s.id + ".n" + std::to_string(n), 8,
                      alg + (s.expected ? " satisfies " : " fails ") + eq, [s, n] {
                        auto A = catalog(catalog_name{s.algebra, s.param, {}});
                        auto start = std::chrono::steady_clock::now();
                        auto r = satisfies(A, named_identity(std::string(1, s.eq), n));
                        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                        bool fast = secs < 5.0;
                        std::string d = std::to_string(r.valuations) + " valuations";
                        if (!fast) d += ", took longer than 5 s";
                        return verdict(r.holds == s.expected && fast, d);
                      }});
    }
  }
}

// ----------------------------------------------------------- criterion 9

inline void add_skaols_rows(std::vector<check_row>& rows) {
  for (const auto& name : catalog_antiortholattices()) {
    rows.push_back({"skaols." + name, 9, name + " satisfies SK exactly when it has at most 3 elements", [name] {
                      auto A = catalog(name);
                      bool sk = satisfies(A, named_identity("SK")).holds;
                      bool agrees = classify(A).sk == sk;
                      return verdict(agrees && sk == (A.size() <= 3), "SK: " + yes_no(sk) + ", |L| = " + std::to_string(A.size()));
                    }});
  }
}

// ---------------------------------------------------------- criterion 10

inline std::vector<std::pair<std::string, std::pair<std::string, std::string>>> transfer_identities() {
  return {{"DIST", {"x ^ (y v z)", "(x ^ y) v (x ^ z)"}},
          {"MOD", {"x v (y ^ (x v z))", "(x v y) ^ (x v z)"}},
          {"OML", {"x v (x' ^ (x v y))", "x v y"}},
          {"R", {"x ^ x'", "y ^ y'"}},
          {"RV", {"x v x'", "y v y'"}},
          {"KLEENE", {"(x ^ x') ^ (y v y')", "x ^ x'"}}};
}

inline void add_eqthrclsop_rows(std::vector<check_row>& rows) {
  for (std::string k : {"D:1", "D:2", "D:3", "BOOL:2", "MO:2", "M3", "B6"}) {
    for (const auto& [name, tu] : transfer_identities()) {
      auto [t, u] = tu;
      rows.push_back({"eqthrclsop." + k + "." + name, 10, "K |= t = u iff D2 (+) K (+) D2 |= m(t,u) = m(u,t) for K = " + k + ", " + name,
                      [k, t, u] {
                        auto K = bi(k);
                        auto tt = parse_term(t), uu = parse_term(u);
                        bool left = satisfies(K, identity{tt, uu}).holds;
                        auto S = catalog("SANDWICH:" + k);
                        bool right = satisfies(S, m_transform(tt, uu).as_identity()).holds;
                        return verdict(left == right, "K: " + yes_no(left) + ", sandwich: " + yes_no(right));
                      }});
    }
  }
}

// ---------------------------------------------------------- criterion 11

inline void add_theeqr_rows(std::vector<check_row>& rows) {
  for (const auto& name : catalog_antiortholattices()) {
    rows.push_back({"theeqr." + name, 11, "R, R-v and the sandwich-over-OL shape agree on " + name, [name] {
                      auto r = r_characterization(catalog(name));
                      return verdict(r.consistent, "R: " + yes_no(r.r_holds) + ", Rv: " + yes_no(r.rv_holds) +
                                                       ", structure: " + yes_no(r.structural));
                    }});
  }
}

// ---------------------------------------------------------- criterion 12

inline void add_distsets_rows(std::vector<check_row>& rows) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}}) {
    rows.push_back({"distsets.n" + std::to_string(n) + "m" + std::to_string(m), 12,
                    "the explicit map GDM(" + std::to_string(n) + ") -> GD(" + std::to_string(m) + ") is a BZ embedding",
                    [n, m] {
                      auto r = distsets_embedding(n, m);
                      return verdict(is_embedding(r.source, r.target, r.map, flavor::bz),
                                     std::to_string(r.source.size()) + " -> " + std::to_string(r.target.size()));
                    }});
  }
}

// ---------------------------------------------------------- criterion 13

inline void add_d3vsol_rows(std::vector<check_row>& rows) {
  for (const auto& name : catalog_examples()) {
    rows.push_back({"d3vsol." + name, 13, name + " is an ortholattice or contains D3 or D4", [name] {
                      auto A = catalog(name);
                      auto r = d3_ol_dichotomy(A);
                      bool ol = classify(A).ortholattice.value_or(false);
                      if (r.ortholattice) return verdict(ol && r.witness_size == 0, "ortholattice");
                      auto D = catalog(catalog_name{"D", r.witness_size, {}}).reduct(flavor::bi);
                      bool ok = !ol && is_embedding(D, A.reduct(flavor::bi), r.map, flavor::bi);
                      return verdict(ok, "D" + std::to_string(r.witness_size) + " witness");
                    }});
  }
}

// ---------------------------------------------------------- criterion 14

inline void add_hsum_rows(std::vector<check_row>& rows) {
  rows.push_back({"hsum.d3d3.pk", 14, "D3 (+) D3 is rejected at PK", [] {
                    try {
                      horizontal_sum(bi("D:3"), bi("D:3"), sum_flavor::pk);
                    } catch (const error& e) {
                      return verdict(e.code() == errc::side_condition_violated, e.what());
                    }
                    return verdict(false, "accepted");
                  }});
  auto contains_both = [](const finite_algebra& A, const finite_algebra& B, const finite_algebra& S, flavor f) {
    return embeds(A, S, f).has_value() && embeds(B, S, f).has_value();
  };
  rows.push_back({"hsum.d3d3.bi", 14, "D3 (+) D3 is accepted at BI and contains both operands", [contains_both] {
                    auto S = horizontal_sum(bi("D:3"), bi("D:3"), sum_flavor::bi);
                    return verdict(S.size() == 4 && contains_both(bi("D:3"), bi("D:3"), S, flavor::bi));
                  }});
  rows.push_back({"hsum.d2sqd3.pbz", 14, "D2^2 (+) D3 is accepted at PBZ, equals M3 and contains both operands", [contains_both] {
                    auto A = catalog("BOOL:2"), B = catalog("D:3");
                    auto S = horizontal_sum(A, B, sum_flavor::pbz);
                    bool m3 = isomorphic(S, catalog("M3"), flavor::bz).has_value();
                    return verdict(m3 && contains_both(A, B, S, flavor::bz));
                  }});
  rows.push_back({"hsum.mo2.pbz", 14, "D2^2 (+) D2^2 at PBZ is MO2 and contains both operands", [contains_both] {
                    auto A = catalog("BOOL:2");
                    auto S = horizontal_sum(A, A, sum_flavor::pbz);
                    bool mo2 = isomorphic(S, catalog("MO:2"), flavor::bz).has_value();
                    return verdict(mo2 && contains_both(A, A, S, flavor::bz));
                  }});
  rows.push_back({"hsum.omlnm.pbz", 14, "D2^2 (+) D2^3 at PBZ contains both operands", [contains_both] {
                    auto A = catalog("BOOL:2"), B = catalog("BOOL:3");
                    auto S = horizontal_sum(A, B, sum_flavor::pbz);
                    return verdict(contains_both(A, B, S, flavor::bz));
                  }});
}

// ---------------------------------------------------------- criterion 15

inline row_result sdm_meet_irreducible(const finite_algebra& A) {
  bool sdm = satisfies(A, named_identity("SDM")).holds;
  bool mi = classify(A).zero_meet_irreducible;
  return verdict(sdm == mi, "SDM: " + yes_no(sdm) + ", 0 meet-irreducible: " + yes_no(mi));
}

inline void add_sdm_rows(std::vector<check_row>& rows) {
  for (const auto& name : catalog_antiortholattices()) {
    rows.push_back({"sdm.catalog." + name, 15, name + " satisfies SDM iff 0 is meet-irreducible",
                    [name] { return sdm_meet_irreducible(catalog(name)); }});
  }
  const std::vector<std::string> lower{"D:2", "D:3", "D:4", "BOOL:2", "N5", "M3"};
  const std::vector<std::string> middle{"D:1", "D:2", "D:3", "D:4", "BOOL:2", "M3", "MO:2", "B6"};
  std::mt19937 rng(7051);
  std::uniform_int_distribution<std::size_t> pm(0, lower.size() - 1), pk(0, middle.size() - 1);
  for (int i = 1; i <= 50; ++i) {
    std::string m = lower[pm(rng)], k = middle[pk(rng)];
    std::string id = std::string("sdm.random.") + (i < 10 ? "0" : "") + std::to_string(i);
    rows.push_back({id, 15, "aol(" + m + ", " + k + ") satisfies SDM iff 0 is meet-irreducible", [m, k] {
                      auto A = aol(catalog(m).lattice(), bi(k));
                      return sdm_meet_irreducible(A);
                    }});
  }
}

}  // namespace detail

/// Every claim checked by `verify-paper` and by the acceptance suite, in
/// criterion order.
inline std::vector<check_row> lemma_checks() {
  std::vector<check_row> rows;
  detail::add_classification_rows(rows);
  detail::add_klprod_rows(rows);
  detail::add_dirirred_rows(rows);
  detail::add_complement_rows(rows);
  detail::add_maxlength_rows(rows);
  detail::add_cgordsum_rows(rows);
  detail::add_cggendist_rows(rows);
  detail::add_eqcnd_rows(rows);
  detail::add_skaols_rows(rows);
  detail::add_eqthrclsop_rows(rows);
  detail::add_theeqr_rows(rows);
  detail::add_distsets_rows(rows);
  detail::add_d3vsol_rows(rows);
  detail::add_hsum_rows(rows);
  detail::add_sdm_rows(rows);
  return rows;
}

/// Runs the rows whose id contains `filter` (all rows when empty). A row
/// that throws is a failure carrying the error text.
inline std::vector<row_outcome> run_checks(std::string_view filter = {}) {
  std::vector<row_outcome> out;
  for (const auto& row : lemma_checks()) {
    if (!filter.empty() && row.id.find(filter) == std::string::npos) continue;
    row_outcome o{row.id, row.criterion, row.claim};
    auto start = std::chrono::steady_clock::now();
    try {
      auto r = row.run();
      o.pass = r.pass;
      o.detail = r.detail;
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const row_outcome& a, const row_outcome& b) { return a.id < b.id; });
  return out;
}

}  // namespace pbz
