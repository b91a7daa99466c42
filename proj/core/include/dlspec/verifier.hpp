#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlspec/enumerator.hpp"
#include "dlspec/families.hpp"
#include "dlspec/graph.hpp"
#include "dlspec/oracles.hpp"
#include "dlspec/spectral.hpp"

namespace dlspec {

enum class TheoremId { T31a, T31b, T41, T42a, T42b, T42c };

inline constexpr std::array kAllTheorems = {TheoremId::T31a, TheoremId::T31b, TheoremId::T41,
                                            TheoremId::T42a, TheoremId::T42b, TheoremId::T42c};

/// "t31a", "t31b", "t41", "t42a", "t42b", "t42c".
std::string theorem_key(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);
/// Smallest order the theorem is stated for.
int theorem_min_order(TheoremId id);

/// One family on the right-hand side of a theorem, with the distance
/// Laplacian spectrum the theorem states for it.
struct TheoremMember {
  FamilySpec spec;
  SpectrumPattern stated;
};

/// Right-hand-side members instantiable at order n.
std::vector<TheoremMember> theorem_members(TheoremId id, int n);

struct Tolerances {
  /// Relative grouping tolerance (scaled by max(1, spectral radius)).
  double grouping_relative = kDefaultGroupingRelativeTol;
  /// A grouped value this close to an integer is treated as that integer
  /// and its multiplicity is taken from exact rank.
  double integral = 1e-6;
};

/// Multiplicity-(n-4) cases for m(top eigenvalue) = n-4, split by the
/// multiplicity of the eigenvalue n (3, 2, 1, or absent).
enum class CaseLabel { A, B, C, D, None };
std::string case_label_name(CaseLabel label);

struct MultiplicityProfile {
  int order = 0;
  /// Distance Laplacian spectrum, numerically grouped.
  SpectrumNumeric spectrum;
  /// Multiplicity of the spectral radius.
  int m_partial1 = 0;
  /// True when the spectral radius is integral and m_partial1 comes from exact rank.
  bool partial1_exact = false;
  /// For non-integral spectral radius: grouping agrees at x10 and x0.1 tolerance.
  bool partial1_stable = true;
  /// Exact multiplicity of the eigenvalue n.
  int m_n_exact = 0;
  /// Multiplicity of the group holding the (n-3)-th largest eigenvalue
  /// (exact when integral); 0 for n < 4.
  int m_second = 0;
  /// Every integral group's numeric multiplicity matched exact rank.
  bool grouping_consistent = true;
  /// Second smallest eigenvalue equals n.
  bool second_smallest_is_n = false;
  CaseLabel case_label = CaseLabel::None;
};

/// Throws DomainError for disconnected graphs.
MultiplicityProfile classify(const Graph& g, const Tolerances& tol = {});

/// Whether a profile satisfies the theorem's left-hand side.
bool satisfies_hypothesis(TheoremId id, const MultiplicityProfile& profile);

struct FamilyInstance {
  std::string id;
  std::string label;
  /// Canonical graph6.
  std::string graph6;
};

struct Counterexample {
  enum class Kind { Unpredicted, Missing };
  Kind kind = Kind::Unpredicted;
  /// Canonical graph6.
  std::string graph6;
  SpectrumNumeric spectrum;
  /// Family id for Missing entries.
  std::string family;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::T31a;
  int order = 0;
  std::size_t scanned = 0;
  /// Canonical graph6 strings, sorted.
  std::vector<std::string> satisfying;
  std::vector<FamilyInstance> families;
  /// Distinct canonical graph6 strings of the families, sorted.
  std::vector<std::string> predicted;
  bool equal = false;
  std::vector<Counterexample> counterexamples;
  /// Satisfying graphs whose top multiplicity relied on unstable grouping.
  std::vector<std::string> unstable;
  double elapsed_ms = 0.0;
  /// False when run below the theorem's order threshold.
  bool normative = true;
};

struct VerifyOptions {
  Tolerances tol;
  /// Worker threads; 0 means hardware concurrency.
  unsigned parallelism = 0;
  /// Allow orders below the theorem threshold (report marked non-normative).
  bool force = false;
};

/// Throws OrderRangeError below the theorem threshold (unless forced) and
/// CompletenessError when the source misses connected graphs of order n.
VerificationReport verify_theorem(TheoremId id, int n, const GraphStream& source, const VerifyOptions& options = {});

/// Same as calling verify_theorem for each id, classifying the source once.
std::vector<VerificationReport> verify_theorems(std::span<const TheoremId> ids, int n, const GraphStream& source,
                                                const VerifyOptions& options = {});

struct ClassifiedGraph {
  /// Canonically labeled.
  Graph graph;
  std::string graph6;
  MultiplicityProfile profile;
};

/// Connected graphs of order n in case (c) or (d), one per isomorphism
/// class, sorted by canonical graph6. Requires n >= 5 and a complete source.
std::vector<ClassifiedGraph> explore_open_cases(int n, const GraphStream& source, const VerifyOptions& options = {});

/// Profiles of the connected graphs in the source, one per isomorphism
/// class, sorted by canonical graph6. Disconnected graphs are skipped.
std::vector<ClassifiedGraph> classify_all(const GraphStream& source, const VerifyOptions& options = {});

}  // namespace dlspec
