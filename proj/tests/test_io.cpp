#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "support.hpp"

using namespace pbz;
using pbz::testing::error_code_of;

namespace {

std::string fixture(const char* name) { return std::string(PBZLAB_FIXTURES) + "/" + name; }

void expect_equal_algebras(const finite_algebra& a, const finite_algebra& b, const std::string& name) {
  ASSERT_EQ(a.size(), b.size()) << name;
  EXPECT_EQ(a.bottom(), b.bottom()) << name;
  EXPECT_EQ(a.top(), b.top()) << name;
  EXPECT_EQ(a.kind(), b.kind()) << name;
  for (element x = 0; x < a.size(); ++x) {
    EXPECT_EQ(a.label(x), b.label(x)) << name;
    if (a.has_kleene()) EXPECT_EQ(a.kleene(x), b.kleene(x)) << name;
    if (a.has_brouwer()) EXPECT_EQ(a.brouwer(x), b.brouwer(x)) << name;
    for (element y = 0; y < a.size(); ++y) EXPECT_EQ(a.leq(x, y), b.leq(x, y)) << name;
  }
}

}  // namespace

TEST(AlgebraFile, CatalogRoundTrip) {
  for (const auto& name : catalog_examples()) {
    auto A = catalog(name);
    auto text = algebra_to_json(A).dump();
    auto B = algebra_from_json(json::parse(text));
    expect_equal_algebras(A, B, name);
  }
}

TEST(AlgebraFile, ReductsRoundTrip) {
  auto A = catalog("B6");
  for (flavor f : {flavor::lattice, flavor::bi}) {
    auto R = A.reduct(f);
    expect_equal_algebras(R, algebra_from_json(algebra_to_json(R)), "B6");
  }
}

TEST(AlgebraFile, SaveAndLoad) {
  auto path = (std::filesystem::temp_directory_path() / "pbzlab_io_test.json").string();
  auto A = catalog("GDM:2");
  save_algebra_file(A, path);
  expect_equal_algebras(A, load_algebra_file(path), "GDM:2");
  std::remove(path.c_str());
}

TEST(AlgebraFile, Fixtures) {
  auto d4 = load_algebra_file(fixture("d4.json"));
  EXPECT_TRUE(isomorphic(d4, catalog("D:4"), flavor::bz).has_value());
  auto b6 = load_algebra_file(fixture("benzene.json"));
  EXPECT_EQ(b6.kind(), flavor::bi);
  EXPECT_TRUE(isomorphic(b6, catalog("B6").reduct(flavor::bi), flavor::bi).has_value());
}

TEST(AlgebraFile, RejectsWithModuleErrors) {
  try {
    load_algebra_file(fixture("bowtie.json"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_a_lattice);
    EXPECT_EQ(std::string(e.what()).rfind("NotALattice(1,2)", 0), 0u) << e.what();
  }
  EXPECT_EQ(error_code_of([] { load_algebra_file(fixture("not_antitone.json")); }), errc::not_antitone);
  EXPECT_EQ(error_code_of([] { load_algebra_file(fixture("brouwer_without_kleene.json")); }), errc::missing_operation);
  EXPECT_EQ(error_code_of([] { load_algebra_file(fixture("truncated.json")); }), errc::invalid_input);
  EXPECT_EQ(error_code_of([] { load_algebra_file(fixture("missing.json")); }), errc::invalid_input);
}

TEST(AlgebraFile, FieldValidation) {
  EXPECT_EQ(error_code_of([] { algebra_from_json(json::array()); }), errc::invalid_input);
  EXPECT_EQ(error_code_of([] { algebra_from_json(json{{"n", 2}, {"bottom", 0}, {"top", 1}}); }), errc::invalid_input);
  EXPECT_EQ(error_code_of([] {
              algebra_from_json(json{{"n", 2}, {"bottom", 0}, {"top", 1}, {"covers", {{0, 1, 2}}}});
            }),
            errc::invalid_input);
  EXPECT_EQ(error_code_of([] {
              algebra_from_json(
                  json{{"n", 2}, {"bottom", 0}, {"top", 1}, {"covers", {{0, 1}}}, {"kleene", {1, 0}}, {"brouwer", "none"}});
            }),
            errc::invalid_input);
}

TEST(CheckReport, B6AndGD2) {
  auto b6 = check_report(catalog("B6"));
  EXPECT_EQ(b6["classification"]["ortholattice"], true);
  EXPECT_EQ(b6["classification"]["orthomodular"], false);

  auto gd = check_report(catalog("GD:2"));
  EXPECT_EQ(gd["classification"]["antiortholattice"], true);
  EXPECT_EQ(gd["classification"]["sdm"], false);
  EXPECT_EQ(gd["dense"].size(), 6u);
  EXPECT_EQ(gd["t"].size(), 7u);
  EXPECT_EQ(gd["sharp"], json({"0", "1"}));
}

TEST(CheckReport, LatticeOnlyHasNulls) {
  auto r = check_report(finite_algebra(chain(3)));
  EXPECT_TRUE(r["sharp"].is_null());
  EXPECT_TRUE(r["dense"].is_null());
  EXPECT_TRUE(r["classification"]["pseudo_kleene"].is_null());
  EXPECT_EQ(r["classification"]["distributive"], true);
  EXPECT_NE(check_report_text(finite_algebra(chain(3))).find("sharp=n/a"), std::string::npos);
}
