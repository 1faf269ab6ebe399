#include <gtest/gtest.h>

#include "support.hpp"

using namespace pbz;
using pbz::testing::at;
using pbz::testing::error_code_of;
using pbz::testing::labelled;

namespace {

finite_algebra d3_bi() { return catalog("D:3").reduct(flavor::bi); }

// A horizontal sum of two 4-chains, each reversed into itself.
finite_algebra d4_sum_d4() { return horizontal_sum(catalog("D:4").reduct(flavor::bi), catalog("D:4").reduct(flavor::bi), sum_flavor::bi); }

}  // namespace

TEST(AttachInvolution, ThreeChain) {
  auto A = attach_involution(chain(3), {2, 1, 0});
  EXPECT_EQ(A.kind(), flavor::bi);
  EXPECT_EQ(A.kleene(1), 1);
  EXPECT_TRUE(classify(A).pseudo_kleene.value());
}

TEST(AttachInvolution, IdentityTableIsNotAntitone) {
  try {
    attach_involution(chain(3), {0, 1, 2});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_antitone);
    EXPECT_EQ(std::string(e.what()).rfind("NotAntitone(0,1)", 0), 0u) << e.what();
  }
}

TEST(AttachInvolution, NonInvolution) {
  EXPECT_EQ(error_code_of([] { attach_involution(chain(3), {2, 0, 0}); }), errc::not_involutive);
}

TEST(AttachInvolution, B6IsNotTheHorizontalSumOfChains) {
  auto B6 = catalog("B6").reduct(flavor::bi);
  auto S = d4_sum_d4();
  EXPECT_TRUE(lattice_isomorphic(B6.lattice(), S.lattice()).has_value());
  EXPECT_FALSE(isomorphic(B6, S, flavor::bi).has_value());
  EXPECT_FALSE(pbz::testing::brute_force_embeds(B6, S, flavor::bi));
}

TEST(AttachBrouwer, KleeneChainBecomesAntiortholattice) {
  auto A = attach_brouwer(catalog("D:5").reduct(flavor::bi), trivial_brouwer);
  EXPECT_TRUE(classify(A).antiortholattice.value());
  EXPECT_EQ(A.brouwer(A.bottom()), A.top());
}

TEST(AttachBrouwer, OrthomodularWithBrouwerEqualKleene) {
  auto M = catalog("MO:2").reduct(flavor::bi);
  std::vector<element> t(M.kleene_table().begin(), M.kleene_table().end());
  auto A = attach_brouwer(M, t);
  auto r = classify(A);
  EXPECT_TRUE(r.bz.value());
  EXPECT_TRUE(r.pbz.value());
  EXPECT_FALSE(r.antiortholattice.value());
}

TEST(AttachBrouwer, ProductOfTwoElementChainsWithTrivialFailsStar) {
  auto P = direct_product({catalog("D:2").reduct(flavor::bi), catalog("D:2").reduct(flavor::bi)}, flavor::bi);
  auto A = attach_brouwer(P, trivial_brouwer);
  EXPECT_FALSE(classify(A).star.value());
}

TEST(AttachBrouwer, RejectsBadTables) {
  auto A = d3_bi();
  EXPECT_EQ(error_code_of([&] { attach_brouwer(A, {2, 2, 0}); }), errc::bz_axiom_failure);
  EXPECT_EQ(error_code_of([&] { attach_brouwer(A, {2, 0}); }), errc::invalid_input);
  EXPECT_EQ(error_code_of([] { attach_brouwer(finite_algebra(chain(2)), trivial_brouwer); }), errc::missing_operation);
}

TEST(Classify, CatalogTable) {
  auto b6 = classify(catalog("B6"));
  EXPECT_TRUE(b6.ortholattice.value());
  EXPECT_FALSE(b6.orthomodular.value());
  EXPECT_FALSE(b6.paraorthomodular.value());

  auto m3 = classify(catalog("M3"));
  EXPECT_TRUE(m3.pseudo_kleene.value());
  EXPECT_TRUE(m3.paraorthomodular.value());
  EXPECT_FALSE(m3.orthomodular.value());

  EXPECT_FALSE(classify(catalog("N5")).pseudo_kleene.value());

  auto oml = classify(catalog("OMLNM"));
  EXPECT_TRUE(oml.orthomodular.value());
  EXPECT_FALSE(oml.modular);

  auto mo2 = classify(catalog("MO:2"));
  EXPECT_TRUE(mo2.modular);
  EXPECT_TRUE(mo2.ortholattice.value());
  EXPECT_FALSE(mo2.boolean_algebra.value());
}

TEST(Classify, LatticeOnlyLeavesOperationFlagsUnset) {
  auto r = classify(finite_algebra(chain(3)));
  EXPECT_FALSE(r.pseudo_kleene.has_value());
  EXPECT_FALSE(r.pbz.has_value());
  EXPECT_TRUE(r.distributive);
  EXPECT_TRUE(r.zero_meet_irreducible);
}

TEST(Classify, OrthomodularOracleOnCatalog) {
  for (const auto& name : catalog_examples()) {
    auto A = catalog(name);
    bool oml = true;
    for (element a = 0; a < A.size(); ++a)
      for (element b = 0; b < A.size(); ++b)
        if (A.leq(a, b) && A.join(A.meet(b, A.kleene(a)), a) != b) oml = false;
    EXPECT_EQ(classify(A).orthomodular.value(), oml) << name;
  }
}

TEST(SharpElements, AntiortholatticesHaveOnlyBounds) {
  for (const auto& name : catalog_antiortholattices()) {
    auto A = catalog(name);
    element_set bounds{A.bottom(), A.top()};
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    EXPECT_EQ(sharp_elements(A), bounds) << name;
  }
}

TEST(SharpElements, OrthoLatticeIsAllSharp) {
  auto A = catalog("MO:2");
  EXPECT_EQ(sharp_elements(A), A.lattice().elements());
}

TEST(SharpElements, M3WithTrivialBrouwer) {
  // b = b' is the only non-sharp element: a v a' = 1 in the Boolean block.
  auto A = attach_brouwer(catalog("M3").reduct(flavor::bi), trivial_brouwer);
  EXPECT_EQ(sharp_elements(A), labelled(A, {"0", "a", "a'", "1"}));
}

TEST(DenseAndT, Examples) {
  auto mo2 = dense_and_t(catalog("MO:2"));
  auto M = catalog("MO:2");
  EXPECT_EQ(mo2.t, (element_set{M.bottom(), M.top()}));

  auto D3 = catalog("D:3");
  EXPECT_EQ(dense_and_t(D3).dense, labelled(D3, {"c", "1"}));

  auto sq = direct_product({D3, D3}, flavor::bz);
  auto r = dense_and_t(sq);
  EXPECT_EQ(r.t.size(), 5u);
  // T = {0} u D x D.
  for (element x : r.t)
    if (x != sq.bottom()) EXPECT_EQ(sq.brouwer(x), sq.bottom());
}

TEST(DenseAndT, GD2) {
  auto A = catalog("GD:2");
  auto r = dense_and_t(A);
  EXPECT_EQ(r.dense.size(), 6u);
  EXPECT_EQ(r.t.size(), 7u);
}

TEST(Reduct, DropsOperations) {
  auto A = catalog("GD:2");
  EXPECT_EQ(A.reduct(flavor::bi).kind(), flavor::bi);
  EXPECT_EQ(A.reduct(flavor::lattice).kind(), flavor::lattice);
  EXPECT_FALSE(A.reduct(flavor::bi).has_brouwer());
}

TEST(InducedSubalgebra, D4InsideD5) {
  auto D5 = catalog("D:5");
  auto S = induced_subalgebra(D5, labelled(D5, {"0", "a", "a'", "1"}), flavor::bz);
  EXPECT_TRUE(isomorphic(S, catalog("D:4"), flavor::bz).has_value());
  EXPECT_EQ(error_code_of([&] { induced_subalgebra(D5, labelled(D5, {"0", "a", "1"}), flavor::bi); }),
            errc::invalid_input);
}

TEST(Flavor, ParseAndPrint) {
  EXPECT_EQ(parse_flavor("BZ"), flavor::bz);
  EXPECT_EQ(parse_flavor("bi"), flavor::bi);
  EXPECT_EQ(to_string(flavor::lattice), "Lattice");
  EXPECT_EQ(error_code_of([] { parse_flavor("PBZ"); }), errc::unknown_name);
}

TEST(Labels, ChainLabels) {
  auto D5 = catalog("D:5");
  EXPECT_EQ(at(D5, "c"), 2);
  EXPECT_EQ(D5.kleene(at(D5, "a")), at(D5, "a'"));
}
