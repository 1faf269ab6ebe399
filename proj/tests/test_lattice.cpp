#include <gtest/gtest.h>

#include "support.hpp"

using namespace pbz;
using pbz::testing::error_code_of;

namespace {

bounded_lattice diamond() {
  std::vector<cover_pair> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return bounded_lattice::from_covers(5, 0, 4, covers);
}

bounded_lattice pentagon() {
  // 0 < b < 1 and 0 < a < a2 < 1
  std::vector<cover_pair> covers{{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}};
  return bounded_lattice::from_covers(5, 0, 4, covers);
}

// Triple sweep written against leq only.
bool distributive_oracle(const bounded_lattice& L) {
  for (element x = 0; x < L.size(); ++x)
    for (element y = 0; y < L.size(); ++y)
      for (element z = 0; z < L.size(); ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

bool modular_oracle(const bounded_lattice& L) {
  for (element x = 0; x < L.size(); ++x)
    for (element y = 0; y < L.size(); ++y)
      for (element z = 0; z < L.size(); ++z)
        if (L.leq(x, z) && L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) return false;
  return true;
}

}  // namespace

TEST(FromCovers, ThreeChain) {
  std::vector<cover_pair> covers{{0, 1}, {1, 2}};
  auto L = bounded_lattice::from_covers(3, 0, 2, covers);
  EXPECT_TRUE(L.is_chain());
  EXPECT_EQ(L.meet(1, 2), 1);
  EXPECT_EQ(L.join(0, 1), 1);
  EXPECT_TRUE(lattice_isomorphic(L, chain(3)).has_value());
}

TEST(FromCovers, DiamondIsM3Reduct) {
  auto L = diamond();
  EXPECT_EQ(L.atoms(), (element_set{1, 2, 3}));
  EXPECT_EQ(L.meet(1, 2), 0);
  EXPECT_EQ(L.join(2, 3), 4);
  EXPECT_TRUE(lattice_isomorphic(L, catalog("M3").lattice()).has_value());
}

TEST(FromCovers, MeetAndJoinAgreeWithOrder) {
  auto L = catalog("CompAOL11").lattice();
  for (element a = 0; a < L.size(); ++a)
    for (element b = 0; b < L.size(); ++b) {
      element m = L.meet(a, b);
      ASSERT_TRUE(L.leq(m, a) && L.leq(m, b));
      for (element z = 0; z < L.size(); ++z)
        if (L.leq(z, a) && L.leq(z, b)) ASSERT_TRUE(L.leq(z, m));
      element j = L.join(a, b);
      ASSERT_TRUE(L.leq(a, j) && L.leq(b, j));
      for (element z = 0; z < L.size(); ++z)
        if (L.leq(a, z) && L.leq(b, z)) ASSERT_TRUE(L.leq(j, z));
    }
}

TEST(FromCovers, TwoMaximalElementsIsNotBounded) {
  std::vector<cover_pair> covers{{0, 1}, {0, 2}};
  auto code = error_code_of([&] { bounded_lattice::from_covers(4, 0, 3, covers); });
  EXPECT_TRUE(code == errc::not_bounded || code == errc::not_a_lattice);
}

TEST(FromCovers, BowtieIsNotALattice) {
  // 0 < a, b < c, d < 1: {a, b} has two minimal upper bounds.
  std::vector<cover_pair> covers{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  try {
    bounded_lattice::from_covers(6, 0, 5, covers);
    FAIL() << "bowtie accepted";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_a_lattice);
    EXPECT_EQ(std::string(e.what()).rfind("NotALattice(1,2)", 0), 0u) << e.what();
  }
}

TEST(FromCovers, CycleIsNotAPoset) {
  std::vector<cover_pair> covers{{0, 1}, {1, 2}, {2, 1}};
  EXPECT_EQ(error_code_of([&] { bounded_lattice::from_covers(3, 0, 2, covers); }), errc::not_a_poset);
}

TEST(FromCovers, OutOfRangeIsInvalidInput) {
  std::vector<cover_pair> covers{{0, 7}};
  EXPECT_EQ(error_code_of([&] { bounded_lattice::from_covers(3, 0, 2, covers); }), errc::invalid_input);
}

TEST(LatticeLaws, M3ModularNotDistributive) {
  auto r = lattice_laws(diamond());
  EXPECT_FALSE(r.distributive);
  EXPECT_TRUE(r.modular);
  EXPECT_FALSE(distributive_oracle(diamond()));
  EXPECT_TRUE(modular_oracle(diamond()));
}

TEST(LatticeLaws, N5NotModular) {
  EXPECT_FALSE(lattice_laws(pentagon()).modular);
  EXPECT_FALSE(modular_oracle(pentagon()));
  EXPECT_FALSE(lattice_laws(catalog("N5").lattice()).modular);
}

TEST(LatticeLaws, ChainsAreDistributive) {
  for (int n = 1; n <= 7; ++n) {
    auto r = lattice_laws(chain(n));
    EXPECT_TRUE(r.distributive && r.modular) << n;
  }
}

TEST(LatticeLaws, AgreesWithOracleOnCatalog) {
  for (const auto& name : catalog_examples()) {
    auto L = catalog(name).lattice();
    if (L.size() > 16) continue;
    auto r = lattice_laws(L);
    EXPECT_EQ(r.distributive, distributive_oracle(L)) << name;
    EXPECT_EQ(r.modular, modular_oracle(L)) << name;
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(length_of(chain(1)), 1);
  EXPECT_EQ(length_of(catalog("B6").lattice()), 4);
  auto D3 = catalog("D:3");
  auto sq = direct_product({D3, D3}, flavor::bz);
  EXPECT_EQ(length_of(sq.lattice(), dense_and_t(sq).t), 4);
  EXPECT_EQ(error_code_of([&] { length_of(chain(2), {}); }), errc::empty_subset);
}

TEST(SplittingPair, Examples) {
  EXPECT_TRUE(is_splitting_pair(chain(2), 0, 1));
  EXPECT_FALSE(is_splitting_pair(chain(3), 0, 2));
  auto sq = catalog("BOOL:2").lattice();
  auto atoms = sq.atoms();
  EXPECT_TRUE(is_splitting_pair(sq, atoms[0], atoms[1]));
}

TEST(Complements, Examples) {
  EXPECT_EQ(complemented_elements(chain(3)), (element_set{0, 2}));
  EXPECT_EQ(complemented_elements(catalog("BOOL:2").lattice()).size(), 4u);
  auto C = catalog("CompAOL11");
  EXPECT_EQ(complemented_elements(C.lattice()), pbz::testing::labelled(C, {"0", "1", "a", "a'", "b", "b'"}));
}

TEST(Complements, OracleSweep) {
  for (const auto& name : catalog_examples()) {
    auto L = catalog(name).lattice();
    element_set expected;
    for (element a = 0; a < L.size(); ++a) {
      bool has = false;
      for (element b = 0; b < L.size(); ++b) has = has || (L.meet(a, b) == L.bottom() && L.join(a, b) == L.top());
      if (has) expected.push_back(a);
    }
    EXPECT_EQ(complemented_elements(L), expected) << name;
  }
}

TEST(LatticeIsomorphic, Examples) {
  auto d3d3 = horizontal_sum(catalog("D:3"), catalog("D:3"), sum_flavor::bi);
  EXPECT_TRUE(lattice_isomorphic(d3d3.lattice(), catalog("BOOL:2").lattice()).has_value());
  auto d4d4 = horizontal_sum(chain(4), chain(4));
  EXPECT_TRUE(lattice_isomorphic(catalog("B6").lattice(), d4d4).has_value());
  EXPECT_FALSE(lattice_isomorphic(chain(3), catalog("BOOL:2").lattice()).has_value());
  EXPECT_FALSE(lattice_isomorphic(chain(4), catalog("BOOL:2").lattice()).has_value());
}

TEST(LatticeIsomorphic, MapPreservesOrder) {
  auto L = catalog("B6").lattice();
  auto M = horizontal_sum(chain(4), chain(4));
  auto f = lattice_isomorphic(L, M);
  ASSERT_TRUE(f);
  for (element a = 0; a < L.size(); ++a)
    for (element b = 0; b < L.size(); ++b) EXPECT_EQ(L.leq(a, b), M.leq((*f)[a], (*f)[b]));
}

TEST(Dual, SwapsBoundsAndOperations) {
  auto L = pentagon();
  auto D = L.dual();
  EXPECT_EQ(D.bottom(), L.top());
  EXPECT_EQ(D.top(), L.bottom());
  for (element a = 0; a < L.size(); ++a)
    for (element b = 0; b < L.size(); ++b) {
      EXPECT_EQ(D.meet(a, b), L.join(a, b));
      EXPECT_EQ(D.leq(a, b), L.leq(b, a));
    }
}
