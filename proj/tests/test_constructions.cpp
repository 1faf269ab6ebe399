#include <gtest/gtest.h>

#include "support.hpp"

using namespace pbz;
using pbz::testing::at;
using pbz::testing::error_code_of;

namespace {

finite_algebra bi(const char* name) { return catalog(name).reduct(flavor::bi); }

bounded_lattice square() { return catalog("BOOL:2").lattice(); }

}  // namespace

TEST(OrdinalSum, Examples) {
  EXPECT_TRUE(lattice_isomorphic(ordinal_sum(chain(2), chain(2)), chain(3)).has_value());
  auto L = ordinal_sum(square(), square());
  EXPECT_EQ(L.size(), 7);
  EXPECT_EQ(lattice_laws(L).distributive, true);
  auto M = catalog("B6").lattice();
  EXPECT_TRUE(lattice_isomorphic(ordinal_sum(chain(1), M), M).has_value());
}

TEST(OrdinalSum, LowerPartBelowUpperPart) {
  auto L = square(), M = catalog("M3").lattice();
  auto S = ordinal_sum(L, M);
  // L keeps its indices; everything in L is below every new element.
  for (element x = 0; x < L.size(); ++x)
    for (element y = L.size(); y < S.size(); ++y) EXPECT_TRUE(S.leq(x, y));
}

TEST(OrdinalSumBi, ChainExamples) {
  auto d3 = ordinal_sum_bi(chain(2), bi("D:1"));
  EXPECT_TRUE(isomorphic(d3, bi("D:3"), flavor::bi).has_value());
  auto d5 = ordinal_sum_bi(chain(2), bi("D:3"));
  EXPECT_TRUE(isomorphic(d5, bi("D:5"), flavor::bi).has_value());
}

TEST(OrdinalSumBi, GDM2) {
  auto A = ordinal_sum_bi(square(), bi("D:2"));
  EXPECT_EQ(A.size(), 8);
  EXPECT_TRUE(isomorphic(A, bi("GDM:2"), flavor::bi).has_value());
}

TEST(OrdinalSumBi, InvolutionSwapsLowerAndUpper) {
  auto M = square();
  auto K = bi("M3");
  auto A = ordinal_sum_bi(M, K);
  auto lay = layout_of(M, K.lattice());
  for (element x = 0; x < M.size(); ++x) EXPECT_EQ(A.kleene(lay.lower[x]), lay.upper[x]);
  for (element y = 0; y < K.size(); ++y) EXPECT_EQ(A.kleene(lay.middle[y]), lay.middle[K.kleene(y)]);
}

TEST(OrdinalSumBi, AutomorphismOfLowerPart) {
  auto M = square();
  auto atoms = M.atoms();
  std::vector<element> swap = M.elements();
  std::swap(swap[atoms[0]], swap[atoms[1]]);
  auto A = ordinal_sum_bi(M, bi("D:2"), swap);
  auto lay = layout_of(M, chain(2));
  EXPECT_EQ(A.kleene(lay.lower[atoms[0]]), lay.upper[atoms[1]]);
  std::vector<element> bad{0, 0, 0, 0};
  EXPECT_EQ(error_code_of([&] { ordinal_sum_bi(M, bi("D:2"), bad); }), errc::not_dual_iso);
  std::vector<element> flip{3, 1, 2, 0};
  EXPECT_EQ(error_code_of([&] { ordinal_sum_bi(M, bi("D:2"), flip); }), errc::not_dual_iso);
}

TEST(Aol, Examples) {
  auto d5 = aol(chain(2), bi("D:3"));
  EXPECT_TRUE(isomorphic(d5, catalog("D:5"), flavor::bz).has_value());
  auto s = aol(chain(2), bi("M3"));
  EXPECT_EQ(s.size(), 7);
  auto r = classify(s);
  EXPECT_TRUE(r.antiortholattice.value());
  EXPECT_FALSE(r.distributive);
  EXPECT_TRUE(r.zero_meet_irreducible);
}

TEST(Aol, Errors) {
  EXPECT_EQ(error_code_of([] { aol(chain(1), bi("D:3")); }), errc::trivial_lower_part);
  EXPECT_EQ(error_code_of([] { aol(chain(2), bi("N5")); }), errc::not_pseudo_kleene);
  EXPECT_EQ(error_code_of([] { aol(chain(2), finite_algebra(chain(2))); }), errc::missing_operation);
}

TEST(HorizontalSum, LatticeNumbering) {
  auto S = horizontal_sum(chain(3), chain(4));
  EXPECT_EQ(S.size(), 5);
  EXPECT_EQ(S.bottom(), 0);
  EXPECT_EQ(S.top(), 4);
  EXPECT_TRUE(S.leq(2, 3));   // the two interior points of the 4-chain
  EXPECT_FALSE(S.leq(1, 2));  // the 3-chain interior against the other side
  EXPECT_EQ(error_code_of([] { horizontal_sum(chain(1), chain(3)); }), errc::invalid_input);
}

TEST(HorizontalSum, M3AndMO2) {
  auto bool2 = catalog("BOOL:2");
  auto m3 = horizontal_sum(bool2, catalog("D:3"), sum_flavor::pbz);
  EXPECT_TRUE(lattice_isomorphic(m3.lattice(), catalog("M3").lattice()).has_value());
  EXPECT_TRUE(classify(m3).pbz.value());
  auto mo2 = horizontal_sum(bool2, bool2, sum_flavor::pbz);
  EXPECT_TRUE(isomorphic(mo2, catalog("MO:2"), flavor::bz).has_value());
}

TEST(HorizontalSum, SideConditions) {
  auto d3 = bi("D:3");
  EXPECT_EQ(error_code_of([&] { horizontal_sum(d3, d3, sum_flavor::pk); }), errc::side_condition_violated);
  auto s = horizontal_sum(d3, d3, sum_flavor::bi);
  EXPECT_FALSE(classify(s).pseudo_kleene.value());
  EXPECT_EQ(error_code_of([] { horizontal_sum(catalog("D:3"), catalog("D:3"), sum_flavor::pbz); }),
            errc::side_condition_violated);
  EXPECT_EQ(error_code_of([] { horizontal_sum(catalog("D:3"), catalog("D:1"), sum_flavor::bi); }),
            errc::side_condition_violated);
}

TEST(HorizontalSum, OperandsAreSubalgebras) {
  auto A = catalog("BOOL:2"), B = catalog("BOOL:3");
  auto S = horizontal_sum(A, B, sum_flavor::pbz);
  EXPECT_TRUE(pbz::testing::brute_force_embeds(A, S, flavor::bz));
  EXPECT_TRUE(embeds(B, S, flavor::bz).has_value());
  EXPECT_EQ(S.size(), 10);
}

TEST(SumFlavor, ParseRoundTrip) {
  for (auto f : {sum_flavor::bi, sum_flavor::pk, sum_flavor::bz, sum_flavor::pbz})
    EXPECT_EQ(parse_sum_flavor(to_string(f)), f);
  EXPECT_EQ(error_code_of([] { parse_sum_flavor("XY"); }), errc::unknown_name);
}

TEST(DirectProduct, Examples) {
  EXPECT_TRUE(lattice_isomorphic(direct_product({chain(2), chain(2)}), square()).has_value());
  auto d3 = catalog("D:3");
  auto P = direct_product({d3, d3});
  EXPECT_EQ(P.size(), 9);
  EXPECT_EQ(P.kind(), flavor::bz);
  EXPECT_EQ(dense_and_t(P).t.size(), 5u);
}

TEST(DirectProduct, LexicographicNumbering) {
  auto P = direct_product({chain(2), chain(3)});
  // (a, b) -> 3a + b
  for (element a = 0; a < 2; ++a)
    for (element b = 0; b < 3; ++b)
      for (element c = 0; c < 2; ++c)
        for (element d = 0; d < 3; ++d) EXPECT_EQ(P.leq(3 * a + b, 3 * c + d), a <= c && b <= d);
}

TEST(DirectProduct, KleeneOfZeroOne) {
  for (const char* a : {"D:2", "D:3", "M3", "MO:2", "B6"})
    for (const char* b : {"D:4", "BOOL:2", "M3"}) {
      auto A = bi(a), B = bi(b);
      auto P = direct_product({A, B}, flavor::bi);
      element zero_one = A.bottom() * B.size() + B.top();
      element one_zero = A.top() * B.size() + B.bottom();
      EXPECT_EQ(P.kleene(zero_one), one_zero) << a << " x " << b;
    }
}

TEST(DirectProduct, MixedFlavors) {
  EXPECT_EQ(error_code_of([] { direct_product({catalog("D:3"), bi("D:3")}); }), errc::mixed_flavors);
  EXPECT_EQ(error_code_of([] { direct_product({catalog("D:3"), bi("D:3")}, flavor::bz); }), errc::mixed_flavors);
  EXPECT_EQ(direct_product({catalog("D:3"), bi("D:3")}, flavor::bi).kind(), flavor::bi);
}

TEST(SumCongruence, Examples) {
  auto M = chain(2);
  auto K = bi("M3");
  auto delta = sum_congruence(M, K, congruence::identity(2, flavor::lattice), congruence::identity(K.size(), flavor::bi));
  EXPECT_TRUE(delta.is_identity());

  // nabla on D_2 glues 0 to 0_K and 1_K to 1.
  auto theta = sum_congruence(M, K, congruence::total(2, flavor::lattice), congruence::identity(K.size(), flavor::bi));
  EXPECT_EQ(theta.block_count(), K.size());
  auto A = catalog("SANDWICH:M3");
  auto Q = quotient(A.reduct(flavor::bi), theta);
  EXPECT_TRUE(isomorphic(Q, K, flavor::bi).has_value());
}

TEST(SumCongruence, ThetaOnGDM2) {
  auto M = square();
  auto theta = sum_congruence(M, bi("D:2"), congruence::identity(4, flavor::lattice), congruence::total(2, flavor::bi));
  auto A = catalog("GDM:2");
  EXPECT_TRUE(is_congruence(A, theta.with_flavor(flavor::bz), flavor::bz));
  EXPECT_EQ(theta.block_count(), 7);
  EXPECT_TRUE(theta.related(at(A, "u"), at(A, "u'")));
}

TEST(Catalog, Examples) {
  auto b6 = catalog("B6");
  EXPECT_EQ(b6.size(), 6);
  auto gd2 = catalog("GD:2");
  EXPECT_EQ(gd2.size(), 7);
  auto r = classify(gd2);
  EXPECT_TRUE(r.distributive && r.antiortholattice.value());
  EXPECT_FALSE(r.sdm.value());
  auto c = catalog("CompAOL11");
  EXPECT_EQ(c.size(), 11);
  EXPECT_TRUE(classify(c).antiortholattice.value());
  // {u, a, a', c, u'} is a diamond: modular, not distributive.
  EXPECT_FALSE(classify(c).distributive);
  EXPECT_TRUE(classify(c).modular);
}

TEST(Catalog, Sizes) {
  EXPECT_EQ(catalog("D:64").size(), 64);
  EXPECT_EQ(catalog("MO:3").size(), 8);
  EXPECT_EQ(catalog("BOOL:4").size(), 16);
  EXPECT_EQ(catalog("GD:3").size(), 15);
  EXPECT_EQ(catalog("GDM:3").size(), 16);
  EXPECT_EQ(catalog("OMLNM").size(), 10);
  EXPECT_EQ(catalog("SANDWICH:B6").size(), 8);
  EXPECT_EQ(catalog("SANDWICH:SANDWICH:D:1").size(), 5);
}

TEST(Catalog, NameErrors) {
  EXPECT_EQ(error_code_of([] { catalog("D"); }), errc::missing_param);
  EXPECT_EQ(error_code_of([] { catalog("D:0"); }), errc::param_out_of_range);
  EXPECT_EQ(error_code_of([] { catalog("D:x"); }), errc::param_out_of_range);
  EXPECT_EQ(error_code_of([] { catalog("GD:7"); }), errc::param_out_of_range);
  EXPECT_EQ(error_code_of([] { catalog("Q8"); }), errc::unknown_name);
  EXPECT_EQ(error_code_of([] { catalog("SANDWICH:N5"); }), errc::not_pseudo_kleene);
}

TEST(Catalog, NamesRoundTrip) {
  for (const auto& name : catalog_examples()) EXPECT_EQ(to_string(parse_catalog_name(name)), name);
}

TEST(Catalog, EveryEntryIsValidAndLabelled) {
  for (const auto& name : catalog_examples()) {
    auto A = catalog(name);
    ASSERT_TRUE(A.lattice().has_labels()) << name;
    std::set<std::string> seen(A.lattice().labels().begin(), A.lattice().labels().end());
    EXPECT_EQ(static_cast<int>(seen.size()), A.size()) << name;
    if (A.size() > 1) {
      EXPECT_EQ(A.label(A.bottom()), "0") << name;
      EXPECT_EQ(A.label(A.top()), "1") << name;
    }
  }
  for (const auto& name : catalog_antiortholattices()) EXPECT_TRUE(classify(catalog(name)).antiortholattice.value()) << name;
}
