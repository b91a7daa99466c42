#include <gtest/gtest.h>

#include "dlspec/canonical.hpp"
#include "dlspec/families.hpp"
#include "test_oracles.hpp"

using namespace dlspec;

namespace {

std::vector<FamilySpec> specs_at(int n) {
  std::vector<FamilySpec> out;
  for (FamilyId id : all_family_ids()) {
    if (id == FamilyId::Multipartite) {
      out.push_back(FamilySpec::multipartite({n - 2, 1, 1}));
    } else if (id == FamilyId::CompleteSplit) {
      out.push_back(FamilySpec::split(n, 2));
    } else if (id == FamilyId::Kite) {
      out.push_back(FamilySpec::kite(n, 3));
    } else {
      out.push_back(FamilySpec::of(id, n));
    }
  }
  return out;
}

}  // namespace

TEST(Families, Builders) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10U);
  EXPECT_EQ(path_graph(5).edge_count(), 4U);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5U);
  EXPECT_EQ(star_graph(5).degree(0), 4);
  EXPECT_EQ(complete_minus_edge(5).edge_count(), 9U);
  EXPECT_FALSE(complete_minus_edge(5).adjacent(0, 1));
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6U);
  const Graph kite = kite_graph(6, 3);
  EXPECT_EQ(kite.edge_count(), 3U + 3U);
  EXPECT_TRUE(kite.adjacent(2, 3));
  EXPECT_EQ(kite.degree(5), 1);
  EXPECT_TRUE(is_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
  EXPECT_FALSE(is_isomorphic(star_graph(4), path_graph(4)));
}

TEST(Families, NamedInstances) {
  const Graph k2211 = instantiate(FamilySpec::multipartite({2, 2, 1, 1}));
  EXPECT_EQ(k2211.order(), 6);
  EXPECT_EQ(components(complement(k2211)).sizes(), (std::vector<int>{2, 2, 1, 1}));

  const Graph f12 = instantiate(FamilySpec::of(FamilyId::S3JoinTwoK2, 7));
  EXPECT_TRUE(is_isomorphic(f12, join(star_graph(3), disjoint_union({complete_graph(2), complete_graph(2)}))));

  EXPECT_TRUE(is_isomorphic(instantiate(FamilySpec::split(6, 3)), instantiate(FamilySpec::multipartite({3, 1, 1, 1}))));

  EXPECT_EQ(canonical_form(instantiate(FamilySpec::of(FamilyId::PP1PlusEdge, 7))),
            canonical_form(complement(disjoint_union({complete_graph(3), complete_minus_edge(3), Graph(1)}))));

  const Graph f5 = instantiate(FamilySpec::of(FamilyId::TripartiteN321, 6));
  EXPECT_TRUE(is_isomorphic(f5, instantiate(FamilySpec::multipartite({3, 2, 1}))));
  EXPECT_TRUE(oracle::brute_isomorphic(f5, instantiate(FamilySpec::multipartite({3, 2, 1}))));

  // (K_{n-1} u K_1) + 2e: the isolated vertex gains two neighbours.
  const Graph f9 = instantiate(FamilySpec::of(FamilyId::CliqueK1PlusTwoEdges, 6));
  auto degrees = f9.degrees();
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{2, 4, 4, 4, 5, 5}));
}

TEST(Families, StructureMatchesComplementComponents) {
  for (int n = 4; n <= 12; ++n) {
    for (const auto& spec : specs_at(n)) {
      if (!is_instantiable(spec)) continue;
      const Graph g = instantiate(spec);
      EXPECT_EQ(g.order(), n) << describe(spec);
      EXPECT_TRUE(is_connected(g)) << describe(spec);
      EXPECT_EQ(instantiate(spec), g) << "not deterministic: " << describe(spec);
      if (auto structure = complement_structure(spec)) {
        EXPECT_EQ(complement(g), *structure) << describe(spec);
        EXPECT_EQ(components(complement(g)).sizes(), components(*structure).sizes()) << describe(spec);
      }
    }
  }
}

TEST(Families, MultipartiteIsComplementOfCliques) {
  const std::vector<std::vector<int>> partitions{{1, 1}, {3, 2}, {2, 2, 2}, {4, 1, 1}, {3, 3, 1, 1}, {2, 2, 2, 2, 1}};
  for (const auto& parts : partitions) {
    std::vector<Graph> cliques;
    for (int t : parts) cliques.push_back(complete_graph(t));
    EXPECT_TRUE(is_isomorphic(instantiate(FamilySpec::multipartite(parts)), complement(disjoint_union(cliques))));
  }
}

TEST(Families, ConstraintViolationsNameTheCondition) {
  try {
    check_constraints(FamilySpec::of(FamilyId::PPPPlusEdge, 7));
    FAIL() << "expected ConstraintError";
  } catch (const ConstraintError& e) {
    EXPECT_NE(std::string(e.what()).find("requires 3 | n"), std::string::npos) << e.what();
  }
  EXPECT_THROW(instantiate(FamilySpec::of(FamilyId::S3JoinTwoK2, 8)), ConstraintError);
  EXPECT_THROW(instantiate(FamilySpec::of(FamilyId::BipartiteJoinTwoCliques, 10)), ConstraintError);
  EXPECT_THROW(instantiate(FamilySpec::of(FamilyId::PP1PlusEdge, 5)), ConstraintError);  // p = 2 < 3
  EXPECT_THROW(instantiate(FamilySpec::split(5, 5)), ConstraintError);
  EXPECT_THROW(instantiate(FamilySpec::multipartite({3})), ConstraintError);
  EXPECT_FALSE(is_instantiable(FamilySpec::of(FamilyId::PP2, 7)));
  EXPECT_TRUE(is_instantiable(FamilySpec::of(FamilyId::PP2, 8)));
}

TEST(Families, KeysRoundTrip) {
  for (FamilyId id : all_family_ids()) EXPECT_EQ(parse_family_id(family_key(id)), id);
  EXPECT_EQ(parse_family_id("F6"), FamilyId::PP1PlusEdge);
  EXPECT_EQ(parse_family_id("f12"), FamilyId::S3JoinTwoK2);
  EXPECT_EQ(parse_family_id("F6:K_pp1_plus_e"), FamilyId::PP1PlusEdge);
  EXPECT_FALSE(parse_family_id("F22"));
  EXPECT_FALSE(parse_family_id(""));
  EXPECT_EQ(describe(FamilySpec::multipartite({1, 2, 2, 1})), "K_{2,2,1,1}");
}
