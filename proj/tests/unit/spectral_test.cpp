#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dlspec/families.hpp"
#include "dlspec/spectral.hpp"
#include "test_oracles.hpp"

using namespace dlspec;

namespace {

void expect_groups(const SpectrumNumeric& s, const std::vector<std::pair<double, int>>& want, double tol = 1e-9) {
  ASSERT_EQ(s.groups.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(s.groups[i].value, want[i].first, tol) << "group " << i;
    EXPECT_EQ(s.groups[i].multiplicity, want[i].second) << "group " << i;
  }
}

}  // namespace

TEST(Distances, MatchFloydWarshall) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 2 + trial % 14, 0.25);
    const auto data = all_pairs_distances(g);
    const auto ref = oracle::floyd_distances(g);
    int diameter = 0;
    for (int i = 0; i < g.order(); ++i) {
      std::int64_t tr = 0;
      for (int j = 0; j < g.order(); ++j) {
        EXPECT_EQ(data.dist(i, j), ref[i][j]);
        tr += ref[i][j];
        diameter = std::max(diameter, ref[i][j]);
      }
      EXPECT_EQ(data.transmissions[i], tr);
    }
    EXPECT_EQ(data.diameter, diameter);
  }
}

TEST(Distances, DisconnectedIsDomainError) {
  const Graph g = disjoint_union({complete_graph(2), Graph(1)});
  EXPECT_THROW(all_pairs_distances(g), DomainError);
  EXPECT_THROW(distance_laplacian(g), DomainError);
  EXPECT_NO_THROW(laplacian(g));
}

TEST(Matrices, DistanceLaplacianRowSumsVanish) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = distance_laplacian(oracle::random_connected_graph(rng, 2 + trial % 10, 0.3));
    for (int i = 0; i < m.size(); ++i) {
      std::int64_t row = 0;
      for (int j = 0; j < m.size(); ++j) row += m(i, j);
      EXPECT_EQ(row, 0);
    }
  }
}

TEST(Matrices, DiameterTwoIdentity) {
  // For diameter <= 2: D^L = 2n I - 2J - L.
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 60) {
    const Graph g = oracle::random_connected_graph(rng, 3 + checked % 9, 0.6);
    if (all_pairs_distances(g).diameter > 2) continue;
    const int n = g.order();
    const auto dl = distance_laplacian(g);
    const auto l = laplacian(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(dl(i, j), (i == j ? 2 * n : 0) - 2 - l(i, j));
    ++checked;
  }
}

TEST(Jacobi, SmallKnownSpectra) {
  expect_groups(numeric_spectrum(distance_laplacian(complete_graph(3))), {{3, 2}, {0, 1}});
  expect_groups(numeric_spectrum(distance_laplacian(path_graph(3))), {{5, 1}, {3, 1}, {0, 1}});
  expect_groups(numeric_spectrum(distance_laplacian(complete_graph(6))), {{6, 5}, {0, 1}});
  // Star S_5: leaves are independent twins with transmission 7.
  expect_groups(numeric_spectrum(distance_laplacian(star_graph(5))), {{9, 3}, {5, 1}, {0, 1}});
  expect_groups(numeric_spectrum(laplacian(path_graph(4))),
                {{2 + std::sqrt(2.0), 1}, {2, 1}, {2 - std::sqrt(2.0), 1}, {0, 1}});
  expect_groups(numeric_spectrum(SymmetricIntMatrix(1)), {{0, 1}});
}

TEST(Jacobi, AgreesWithIndependentSolver) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 24;
    const auto m = distance_laplacian(oracle::random_connected_graph(rng, n, 0.15 + 0.05 * (trial % 10)));
    const auto ours = symmetric_eigenvalues(m);
    const auto ref = oracle::eigen_eigenvalues(m);
    const double scale = std::max(1.0, ref.front());
    ASSERT_EQ(ours.size(), ref.size());
    for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_NEAR(ours[i], ref[i], 1e-9 * scale);
  }
}

TEST(Jacobi, TraceAndSemidefiniteness) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = distance_laplacian(oracle::random_connected_graph(rng, 2 + trial % 16, 0.3));
    const auto eig = symmetric_eigenvalues(m);
    double sum = 0.0;
    for (double v : eig) sum += v;
    EXPECT_NEAR(sum, static_cast<double>(m.trace()), 1e-8 * static_cast<double>(m.trace()));
    EXPECT_GE(eig.back(), -1e-9);
    EXPECT_TRUE(std::is_sorted(eig.begin(), eig.end(), std::greater<>()));
  }
}

TEST(Jacobi, IndefiniteMatrix) {
  // Distance matrix of K_{1,3}: eigenvalues -2, -2, and 2 +- sqrt(7).
  const auto eig = symmetric_eigenvalues(distance_matrix(star_graph(4)));
  ASSERT_EQ(eig.size(), 4U);
  EXPECT_NEAR(eig[0], 2 + std::sqrt(7.0), 1e-12);
  EXPECT_NEAR(eig[1], 2 - std::sqrt(7.0), 1e-12);
  EXPECT_NEAR(eig[2], -2, 1e-12);
  EXPECT_NEAR(eig[3], -2, 1e-12);
}

TEST(Grouping, ToleranceFormula) {
  EXPECT_DOUBLE_EQ(grouping_tolerance(0.0), 1e-8);
  EXPECT_DOUBLE_EQ(grouping_tolerance(100.0), 1e-6);
  EXPECT_DOUBLE_EQ(grouping_tolerance(100.0, 1e-15), kGroupingAbsoluteFloor);
}

TEST(Grouping, MergesConsecutiveCloseValues) {
  const auto s = SpectrumNumeric::from_values({1.0, 3.0, 3.0 + 1e-12, 2.0, 3.0 - 1e-12}, 1e-9);
  expect_groups(s, {{3, 3}, {2, 1}, {1, 1}});
  EXPECT_EQ(s.total_multiplicity(), 5);
  EXPECT_DOUBLE_EQ(s.spectral_radius(), s.groups[0].value);
  EXPECT_EQ(s.group_at_position(3).value, s.groups[0].value);
  EXPECT_EQ(s.group_at_position(4).multiplicity, 1);
  EXPECT_THROW((void)s.group_at_position(6), DomainError);
  EXPECT_THROW((void)s.group_at_position(0), DomainError);
}

TEST(Grouping, IntegerMultiplicitiesMatchExactRank) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = distance_laplacian(oracle::random_connected_graph(rng, 3 + trial % 9, 0.5));
    for (const auto& grp : numeric_spectrum(m).groups) {
      const double r = std::round(grp.value);
      if (std::abs(grp.value - r) > 1e-6) continue;
      EXPECT_EQ(grp.multiplicity, exact_integer_multiplicity(m, static_cast<std::int64_t>(r)));
    }
  }
}
