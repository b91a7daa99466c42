#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dlspec/graph.hpp"

namespace dlspec {

/// Dense symmetric matrix with 64-bit integer entries, row-major.
class SymmetricIntMatrix {
 public:
  explicit SymmetricIntMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size, 0) {}

  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] std::int64_t operator()(int i, int j) const noexcept { return data_[index(i, j)]; }
  /// Writes both (i, j) and (j, i).
  void set(int i, int j, std::int64_t value) noexcept {
    data_[index(i, j)] = value;
    data_[index(j, i)] = value;
  }
  [[nodiscard]] std::int64_t trace() const noexcept;
  [[nodiscard]] std::int64_t max_abs_entry() const noexcept;
  [[nodiscard]] std::span<const std::int64_t> values() const noexcept { return data_; }

  friend bool operator==(const SymmetricIntMatrix&, const SymmetricIntMatrix&) = default;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * size_ + static_cast<std::size_t>(j);
  }

  int size_;
  std::vector<std::int64_t> data_;
};

struct DistanceData {
  SymmetricIntMatrix dist;
  std::vector<std::int64_t> transmissions;
  int diameter = 0;
};

/// BFS from every vertex. Throws DomainError for disconnected graphs.
DistanceData all_pairs_distances(const Graph& g);

SymmetricIntMatrix adjacency_matrix(const Graph& g);
SymmetricIntMatrix laplacian(const Graph& g);
/// Throws DomainError for disconnected graphs.
SymmetricIntMatrix distance_matrix(const Graph& g);
/// Diag(Tr) - D. Throws DomainError for disconnected graphs.
SymmetricIntMatrix distance_laplacian(const Graph& g);

struct GroupedEigenvalue {
  double value = 0.0;
  int multiplicity = 0;

  friend bool operator==(const GroupedEigenvalue&, const GroupedEigenvalue&) = default;
};

/// Eigenvalues grouped by closeness, in descending order of value.
struct SpectrumNumeric {
  std::vector<GroupedEigenvalue> groups;

  [[nodiscard]] int total_multiplicity() const noexcept;
  [[nodiscard]] double spectral_radius() const noexcept;
  /// Each value repeated by its multiplicity, descending.
  [[nodiscard]] std::vector<double> expanded() const;
  /// Group holding the k-th largest eigenvalue (1-based position).
  [[nodiscard]] const GroupedEigenvalue& group_at_position(int position) const;

  static SpectrumNumeric from_values(std::vector<double> values, double tolerance);
};

/// Jacobi sweeps stop once every off-diagonal magnitude is below
/// kJacobiRelativeThreshold times the largest entry of the input.
inline constexpr double kJacobiRelativeThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 30;
inline constexpr double kDefaultGroupingRelativeTol = 1e-8;
inline constexpr double kGroupingAbsoluteFloor = 1e-10;

/// All eigenvalues, descending. Throws ConvergenceError if the sweep budget
/// runs out.
std::vector<double> symmetric_eigenvalues(const SymmetricIntMatrix& m);

/// max(floor, relative * max(1, spectral_radius)).
double grouping_tolerance(double spectral_radius, double relative = kDefaultGroupingRelativeTol);

/// Eigenvalues grouped greedily: a value joins the current group when it is
/// within `grouping_tol` of the previous value. Without an explicit tolerance
/// the default relative tolerance is used.
SpectrumNumeric numeric_spectrum(const SymmetricIntMatrix& m, std::optional<double> grouping_tol = std::nullopt);

/// Rank over the rationals via fraction-free elimination.
int exact_rank(const SymmetricIntMatrix& m);

/// n - rank(m - lambda I), exact.
int exact_integer_multiplicity(const SymmetricIntMatrix& m, std::int64_t lambda);

}  // namespace dlspec
