#include <gtest/gtest.h>

#include "helly/complex.hpp"
#include "helly/errors.hpp"

using namespace helly;

TEST(Simplex, SortsAndRejectsBadInput) {
  const Simplex s({3, 1, 2});
  EXPECT_EQ(s.vertices(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_THROW(Simplex({}), MalformedInput);
  EXPECT_THROW(Simplex({1, 1}), MalformedInput);
  EXPECT_THROW(Simplex({-1, 2}), MalformedInput);
}

TEST(Simplex, CanonicalOrderIsDimensionThenLex) {
  EXPECT_LT(Simplex({5}), Simplex({0, 1}));
  EXPECT_LT(Simplex({0, 2}), Simplex({1, 2}));
  EXPECT_LT(Simplex({0, 1}), Simplex({0, 2}));
}

TEST(SimplicialComplex, FaceClosureOfTriangle) {
  const auto c = SimplicialComplex::from_maximal({{0, 1, 2}});
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_EQ(c.count(0), 3u);
  EXPECT_EQ(c.count(1), 3u);
  EXPECT_EQ(c.count(2), 1u);
  EXPECT_EQ(c.embedding_dim(), 2);
  // Simplices are stored in canonical order.
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LT(c.simplex(i - 1), c.simplex(i));
}

TEST(SimplicialComplex, FacetsDropOneVertexEach) {
  const auto c = SimplicialComplex::from_maximal({{0, 1, 2}});
  const std::size_t t = *c.index_of(Simplex({0, 1, 2}));
  const auto f = c.facets(t);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(c.simplex(f[0]), Simplex({1, 2}));
  EXPECT_EQ(c.simplex(f[1]), Simplex({0, 2}));
  EXPECT_EQ(c.simplex(f[2]), Simplex({0, 1}));
}

TEST(SimplicialComplex, EmptyComplex) {
  const auto c = SimplicialComplex::from_maximal({});
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(c.dimension(), -1);
}

TEST(SimplicialComplex, EmbeddingDimensionBelowDimensionIsRejected) {
  EXPECT_THROW(SimplicialComplex::from_maximal({{0, 1, 2}}, 1), MalformedInput);
  EXPECT_EQ(SimplicialComplex::from_maximal({{0, 1}}, 3).embedding_dim(), 3);
}

TEST(SimplicialComplex, IndexOfMissingSimplex) {
  const auto c = SimplicialComplex::from_maximal({{0, 1}, {1, 2}});
  EXPECT_FALSE(c.index_of(Simplex({0, 2})).has_value());
  EXPECT_TRUE(c.index_of(Simplex({1})).has_value());
}

TEST(Subcomplex, FromMaximalClosesFaces) {
  const auto amb = build_complex({{0, 1, 2}, {1, 2, 3}});
  const auto s = Subcomplex::from_maximal(amb, {{0, 1, 2}});
  EXPECT_EQ(s.size(), 7u);
  EXPECT_EQ(s.count(0), 3u);
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_EQ(s.maximal_simplices(), std::vector<Simplex>{Simplex({0, 1, 2})});
  EXPECT_THROW(Subcomplex::from_maximal(amb, {{0, 3}}), ValidationError);
}

TEST(Subcomplex, SimplexSetMustBeFaceClosed) {
  const auto amb = build_complex({{0, 1, 2}});
  EXPECT_THROW(Subcomplex::from_simplex_set(amb, {{0, 1}}), ValidationError);
  const auto s = Subcomplex::from_simplex_set(amb, {{0}, {1}, {0, 1}});
  EXPECT_EQ(s.size(), 3u);
}

TEST(Subcomplex, IntersectionAndUnion) {
  const auto amb = build_complex({{0, 1, 2}, {1, 2, 3}});
  const auto a = Subcomplex::from_maximal(amb, {{0, 1, 2}});
  const auto b = Subcomplex::from_maximal(amb, {{1, 2, 3}});
  const auto i = a.intersect(b);
  EXPECT_EQ(i, Subcomplex::from_maximal(amb, {{1, 2}}));
  EXPECT_EQ(a.unite(b), Subcomplex::full(amb));
  EXPECT_TRUE(i.is_subset_of(a));
  EXPECT_TRUE(a.is_subset_of(a.unite(b)));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE(Subcomplex::empty(amb).empty());
  EXPECT_EQ(Subcomplex::empty(amb).dimension(), -1);
}

TEST(Subcomplex, DifferentAmbientsAreRejected) {
  const auto a = Subcomplex::full(build_complex({{0, 1}}));
  const auto b = Subcomplex::full(build_complex({{0, 1, 2}}));
  EXPECT_THROW(a.intersect(b), ContractViolation);
  EXPECT_THROW(a.unite(b), ContractViolation);
  // Separately built but identical ambients are interchangeable.
  const auto c = Subcomplex::full(build_complex({{0, 1}}));
  EXPECT_EQ(a.intersect(c), a);
}

TEST(SubcomplexFamily, LabelsAndSelection) {
  const auto amb = build_complex({{0, 1}, {1, 2}, {2, 3}});
  SubcomplexFamily f(amb, {Subcomplex::from_maximal(amb, {{0, 1}, {1, 2}}),
                           Subcomplex::from_maximal(amb, {{1, 2}, {2, 3}}),
                           Subcomplex::from_maximal(amb, {{2, 3}})});
  EXPECT_EQ(f.labels(), (std::vector<std::string>{"A1", "A2", "A3"}));
  EXPECT_EQ(f.find("A2"), std::optional<std::size_t>(1));
  EXPECT_FALSE(f.find("B").has_value());
  const std::vector<int> all{0, 1, 2};
  EXPECT_EQ(intersect_members(f, all), Subcomplex::from_maximal(amb, {{2}}));
  EXPECT_EQ(union_members(f, all), Subcomplex::full(amb));
  EXPECT_THROW(intersect_members(f, std::vector<int>{}), ContractViolation);
  EXPECT_THROW(union_members(f, std::vector<int>{3}), ContractViolation);
  EXPECT_THROW(SubcomplexFamily(amb, {}), ContractViolation);
}

TEST(FamilyFile, ParsesMembersAndLabels) {
  const auto f = parse_family(R"({
    "ambient": [[0,1,2],[1,2,3]],
    "embedding_dim": 2,
    "members": [
      {"label": "left", "simplices": [[0,1,2]]},
      {"simplices": [[1,2,3]]}
    ]})");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.label(0), "left");
  EXPECT_EQ(f.label(1), "A2");
  EXPECT_EQ(f.ambient().embedding_dim(), 2);
  EXPECT_EQ(f.member(0).count(2), 1u);
}

TEST(FamilyFile, Errors) {
  EXPECT_THROW(parse_family("{"), MalformedInput);
  EXPECT_THROW(parse_family(R"({"ambient": [[0,1]]})"), MalformedInput);
  EXPECT_THROW(parse_family(R"({"ambient": [[0,1]], "members": [{"simplices": [[0,2]]}]})"),
               ValidationError);
  EXPECT_THROW(parse_family(R"({"ambient": [["a"]], "members": []})"), MalformedInput);
  EXPECT_THROW(load_family("/nonexistent/family.json"), MalformedInput);
}
