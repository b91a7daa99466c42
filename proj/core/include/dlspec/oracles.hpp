#pragma once

// Closed-form spectral predictions. Nothing in here calls the eigensolver:
// every result is derived from formulas or combinatorics so that agreement
// with the numeric route is a genuine cross-check.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dlspec/graph.hpp"
#include "dlspec/spectral.hpp"

namespace dlspec {

using Rational = boost::rational<std::int64_t>;

namespace trig {
// 4 sin^2(k pi / 8), k = 1, 2, 3: the nonzero Laplacian eigenvalues of P_4.
inline constexpr double kFourSinSqPiOver8 = 0.58578643762690495119831127579030192;
inline constexpr double kFourSinSqTwoPiOver8 = 2.0;
inline constexpr double kFourSinSqThreePiOver8 = 3.41421356237309504880168872420969808;
// Comparison guard for values built from the literals above.
inline constexpr double kGuard = 1e-12;
}  // namespace trig

/// One eigenvalue of a symbolic spectrum: value = slope*n + offset + constant,
/// multiplicity = mult_slope*n + mult_offset.
struct PatternEntry {
  Rational slope{0};
  Rational offset{0};
  double constant = 0.0;
  Rational mult_slope{0};
  Rational mult_offset{1};
};

struct PatternValue {
  double value = 0.0;
  int multiplicity = 0;
  /// Set when the value is an integer at this n (no real constant part).
  std::optional<std::int64_t> exact;
};

class SpectrumPattern {
 public:
  SpectrumPattern() = default;
  explicit SpectrumPattern(std::vector<PatternEntry> entries) : entries_(std::move(entries)) {}

  SpectrumPattern& add(Rational slope, Rational offset, Rational mult_slope, Rational mult_offset,
                       double constant = 0.0);

  [[nodiscard]] const std::vector<PatternEntry>& entries() const noexcept { return entries_; }

  /// Throws DomainError unless the multiplicities are positive integers
  /// summing to n and the values strictly decrease.
  [[nodiscard]] std::vector<PatternValue> evaluate(int n) const;
  [[nodiscard]] SpectrumNumeric evaluate_numeric(int n) const;

 private:
  std::vector<PatternEntry> entries_;
};

/// Laplacian spectrum of the complement: n - mu_{n-i} for i = 1..n-1, then 0.
/// Throws DomainError if 0 is not an eigenvalue of the input.
SpectrumNumeric complement_laplacian_spectrum(const SpectrumNumeric& l_spec, int n);

/// Distance Laplacian spectrum of a connected graph of diameter <= 2 from its
/// Laplacian spectrum: 2n - mu_{n-1} >= ... >= 2n - mu_1 > 0.
SpectrumNumeric dl_spectrum_from_laplacian(const SpectrumNumeric& l_spec, int n);

/// Multiplicity of n as a distance Laplacian eigenvalue: number of
/// components of the complement, minus one. Throws for disconnected g.
int predicted_multiplicity_of_n(const Graph& g);

/// Distance Laplacian spectrum of K_{t1,...,tk} as a pattern in n (the
/// part sizes enter as constants); evaluate at n = sum of parts.
SpectrumPattern multipartite_dl_spectrum(std::span<const int> parts);

/// True iff the Laplacian spectrum has shape (a^(n-2), b, 0) with a > b > 0.
bool recognize_kn_minus_e(const SpectrumNumeric& l_spec, int n);

enum class TwoEigenvalueClass { Star, BalancedBipartite, None };

/// Shape (b, a^(n-2), 0) with 0 < a < b: star when a = 1, K_{n/2,n/2} when
/// a = n/2, otherwise None.
TwoEigenvalueClass recognize_two_distinct_mult_n2(const SpectrumNumeric& l_spec, int n);

struct TwinEigenvalue {
  std::int64_t value = 0;
  int min_multiplicity = 0;
  /// Shared transmission of the twins.
  std::int64_t transmission = 0;
};

/// `clique` must be a clique whose members agree on neighbours outside it.
/// Yields (Tr + 1, p - 1). Throws DomainError when the set is not such a set.
TwinEigenvalue twin_clique_eigenvalue(const Graph& g, std::span<const Vertex> clique);
/// `set` must be independent with identical neighbourhoods. Yields (Tr + 2, p - 1).
TwinEigenvalue twin_independent_eigenvalue(const Graph& g, std::span<const Vertex> set);

/// Closed-form Laplacian spectrum (descending, with trailing zero) of the
/// connected blocks used by the family constructions: K_m, K_m - e, S_m,
/// K_{q,q}, C_4, P_4, Ki_{4,3}. nullopt for any other graph.
std::optional<std::vector<double>> block_laplacian_closed_form(const Graph& block);

/// Closed-form Laplacian spectrum of a disjoint union of recognised blocks.
std::optional<SpectrumNumeric> structure_laplacian_closed_form(const Graph& structure);

/// Distance Laplacian spectrum of complement(structure), obtained by
/// complementing the closed-form Laplacian spectrum and applying the
/// diameter-2 transfer. `structure` must be disconnected.
std::optional<SpectrumNumeric> composed_dl_spectrum(const Graph& structure);

}  // namespace dlspec
