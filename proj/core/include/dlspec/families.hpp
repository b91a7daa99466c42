#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlspec/graph.hpp"

namespace dlspec {

// Building blocks. Labels: clique/path/cycle vertices in order; the star's
// centre is vertex 0; complete_minus_edge drops the edge {0, 1}; the kite is
// a clique on 0..omega-1 with a path omega..n-1 hung from vertex omega-1.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph kite_graph(int n, int omega);
Graph complete_minus_edge(int n);
Graph complete_bipartite(int p, int q);
/// k isolated vertices appended as a block; k may be zero only via the
/// caller skipping it.
Graph isolated(int k);

/// Named families of the characterization theorems, each built as the
/// complement of a disjoint union of simple blocks.
enum class FamilyId {
  Multipartite,           // F1   K_{t1..tk};            co: K_t1 u ... u K_tk
  CompleteSplit,          // F2   SK_{n,a};              co: K_a u (n-a)K_1
  SplitNMinus3,           // F3   SK_{n,n-3}
  SplitNMinus2PlusEdge,   // F4   SK_{n,n-2}+e;          co: (K_{n-2}-e) u 2K_1
  TripartiteN321,         // F5   K_{n-3,2,1};           co: K_{n-3} u K_2 u K_1
  PP1PlusEdge,            // F6   K_{p,p,1}+e, n=2p+1;   co: K_p u (K_p-e) u K_1
  PP2,                    // F7   K_{p,p,2}, n=2p+2;     co: K_p u K_p u K_2
  PPPPlusEdge,            // F8   K_{p,p,p}+e, n=3p;     co: K_p u K_p u (K_p-e)
  CliqueK1PlusTwoEdges,   // F9   (K_{n-1} u K_1)+2e;    co: S_{n-2} u 2K_1
  K2JoinTwoCliques,       // F10  K_2 v (K_q u K_q);     co: 2K_1 u K_{q,q}
  BipartiteJoinTwoCliques,// F11  K_{q,q} v (K_q u K_q); co: 2K_q u K_{q,q}
  S3JoinTwoK2,            // F12  S_3 v (K_2 u K_2), n=7
  Split4PlusEdge,         // F13  SK_{n,4}+e;            co: (K_4-e) u (n-4)K_1
  Multipartite321,        // F14  K_{3,2,1..1};          co: K_3 u K_2 u (n-5)K_1
  CoStar4,                // F15  co: S_4 u (n-4)K_1
  CoCycle4,               // F16  co: C_4 u (n-4)K_1
  CoPath4,                // F17  co: P_4 u (n-4)K_1
  CoKite43,               // F18  co: Ki_{4,3} u (n-4)K_1
  CoStar3K2,              // F19  co: S_3 u K_2 u (n-5)K_1
  Multipartite41,         // F20  K_{4,1..1} = SK_{n,4}
  Multipartite2221,       // F21  K_{2,2,2,1..1};        co: 3K_2 u (n-6)K_1
  Complete,
  Path,
  Cycle,
  Star,
  Kite,
  CompleteMinusEdge,
};

struct FamilySpec {
  FamilyId id = FamilyId::Complete;
  int order = 0;
  /// Part sizes, Multipartite only.
  std::vector<int> parts;
  /// Independent-part size for CompleteSplit (alpha), clique size for Kite (omega).
  int size_param = 0;

  static FamilySpec of(FamilyId id, int order) { return {id, order, {}, 0}; }
  static FamilySpec multipartite(std::vector<int> parts);
  static FamilySpec split(int order, int alpha) { return {FamilyId::CompleteSplit, order, {}, alpha}; }
  static FamilySpec kite(int order, int omega) { return {FamilyId::Kite, order, {}, omega}; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Stable identifier such as "F6:K_pp1_plus_e" or "K_n".
std::string family_key(FamilyId id);
/// Accepts the full key, its "F<k>" prefix, or a primitive key; case-insensitive.
std::optional<FamilyId> parse_family_id(std::string_view text);
std::span<const FamilyId> all_family_ids();
/// Human-readable label for a concrete spec, e.g. "K_{2,2,1,1}".
std::string describe(const FamilySpec& spec);

/// Throws ConstraintError naming the violated condition.
void check_constraints(const FamilySpec& spec);
bool is_instantiable(const FamilySpec& spec);

/// The disjoint-union structure whose complement defines the family, or
/// nullopt for the primitive families.
std::optional<Graph> complement_structure(const FamilySpec& spec);

/// Deterministic labeled instance; complement(result) equals
/// complement_structure(spec) when that exists.
Graph instantiate(const FamilySpec& spec);

}  // namespace dlspec
