#include "dlspec/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dlspec {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ConstraintError("C_n requires n >= 3 (got n=" + std::to_string(n) + ")");
  return path_graph(n).with_edge(0, n - 1);
}

Graph star_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

Graph kite_graph(int n, int omega) {
  if (omega < 1 || omega > n) {
    throw ConstraintError("Ki_{n,w} requires 1 <= w <= n (got n=" + std::to_string(n) + ", w=" + std::to_string(omega) + ")");
  }
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex j = 1; j < omega; ++j)
    for (Vertex i = 0; i < j; ++i) e.emplace_back(i, j);
  for (Vertex v = omega; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph(n, e);
}

Graph complete_minus_edge(int n) { return complete_graph(n).without_edge(0, 1); }

Graph complete_bipartite(int p, int q) {
  return join(Graph(p), Graph(q));
}

Graph isolated(int k) { return Graph(k); }

FamilySpec FamilySpec::multipartite(std::vector<int> parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  return {FamilyId::Multipartite, n, std::move(parts), 0};
}

namespace {

struct FamilyInfo {
  FamilyId id;
  const char* key;
};

constexpr std::array kFamilies = {
    FamilyInfo{FamilyId::Multipartite, "F1:K_multipartite"},
    FamilyInfo{FamilyId::CompleteSplit, "F2:SK_split"},
    FamilyInfo{FamilyId::SplitNMinus3, "F3:SK_n_n-3"},
    FamilyInfo{FamilyId::SplitNMinus2PlusEdge, "F4:SK_n_n-2_plus_e"},
    FamilyInfo{FamilyId::TripartiteN321, "F5:K_n-3_2_1"},
    FamilyInfo{FamilyId::PP1PlusEdge, "F6:K_pp1_plus_e"},
    FamilyInfo{FamilyId::PP2, "F7:K_pp2"},
    FamilyInfo{FamilyId::PPPPlusEdge, "F8:K_ppp_plus_e"},
    FamilyInfo{FamilyId::CliqueK1PlusTwoEdges, "F9:K_n-1_u_K1_plus_2e"},
    FamilyInfo{FamilyId::K2JoinTwoCliques, "F10:K2_join_2K_q"},
    FamilyInfo{FamilyId::BipartiteJoinTwoCliques, "F11:K_qq_join_2K_q"},
    FamilyInfo{FamilyId::S3JoinTwoK2, "F12:S3_join_2K2"},
    FamilyInfo{FamilyId::Split4PlusEdge, "F13:SK_n4_plus_e"},
    FamilyInfo{FamilyId::Multipartite321, "F14:K_321_1"},
    FamilyInfo{FamilyId::CoStar4, "F15:co_S4"},
    FamilyInfo{FamilyId::CoCycle4, "F16:co_C4"},
    FamilyInfo{FamilyId::CoPath4, "F17:co_P4"},
    FamilyInfo{FamilyId::CoKite43, "F18:co_Ki43"},
    FamilyInfo{FamilyId::CoStar3K2, "F19:co_S3_K2"},
    FamilyInfo{FamilyId::Multipartite41, "F20:K_41_1"},
    FamilyInfo{FamilyId::Multipartite2221, "F21:K_2221_1"},
    FamilyInfo{FamilyId::Complete, "K_n"},
    FamilyInfo{FamilyId::Path, "P_n"},
    FamilyInfo{FamilyId::Cycle, "C_n"},
    FamilyInfo{FamilyId::Star, "S_n"},
    FamilyInfo{FamilyId::Kite, "Ki_n_w"},
    FamilyInfo{FamilyId::CompleteMinusEdge, "K_n-e"},
};

constexpr auto kAllIds = [] {
  std::array<FamilyId, kFamilies.size()> ids{};
  for (std::size_t i = 0; i < kFamilies.size(); ++i) ids[i] = kFamilies[i].id;
  return ids;
}();

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

[[noreturn]] void violated(const FamilySpec& spec, const std::string& condition) {
  throw ConstraintError(family_key(spec.id) + " requires " + condition + " (got n=" + std::to_string(spec.order) + ")");
}

void require(bool ok, const FamilySpec& spec, const std::string& condition) {
  if (!ok) violated(spec, condition);
}

void require_divides(int d, int value, const FamilySpec& spec, const std::string& condition) {
  if (value % d != 0) violated(spec, condition);
}

Graph cliques(std::initializer_list<int> sizes) {
  std::vector<Graph> blocks;
  for (int s : sizes) blocks.push_back(complete_graph(s));
  return disjoint_union(blocks);
}

// Appends k isolated vertices (k >= 0).
Graph pad(const Graph& g, int k) { return k == 0 ? g : disjoint_union({g, isolated(k)}); }

}  // namespace

std::string family_key(FamilyId id) {
  for (const auto& f : kFamilies)
    if (f.id == id) return f.key;
  return "unknown";
}

std::optional<FamilyId> parse_family_id(std::string_view text) {
  const auto wanted = lower(text);
  for (const auto& f : kFamilies) {
    const std::string key = lower(f.key);
    if (key == wanted) return f.id;
    const auto colon = key.find(':');
    if (colon != std::string::npos && key.substr(0, colon) == wanted) return f.id;
  }
  return std::nullopt;
}

std::span<const FamilyId> all_family_ids() { return kAllIds; }

std::string describe(const FamilySpec& spec) {
  std::ostringstream os;
  const int n = spec.order;
  switch (spec.id) {
    case FamilyId::Multipartite: {
      auto parts = spec.parts;
      std::sort(parts.begin(), parts.end(), std::greater<>());
      os << "K_{";
      for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
      os << "}";
      break;
    }
    case FamilyId::CompleteSplit: os << "SK_{" << n << "," << spec.size_param << "}"; break;
    case FamilyId::SplitNMinus3: os << "SK_{" << n << "," << n - 3 << "}"; break;
    case FamilyId::SplitNMinus2PlusEdge: os << "SK_{" << n << "," << n - 2 << "}+e"; break;
    case FamilyId::TripartiteN321: os << "K_{" << n - 3 << ",2,1}"; break;
    case FamilyId::PP1PlusEdge: os << "K_{p,p,1}+e (p=" << (n - 1) / 2 << ")"; break;
    case FamilyId::PP2: os << "K_{p,p,2} (p=" << (n - 2) / 2 << ")"; break;
    case FamilyId::PPPPlusEdge: os << "K_{p,p,p}+e (p=" << n / 3 << ")"; break;
    case FamilyId::CliqueK1PlusTwoEdges: os << "(K_" << n - 1 << " u K_1)+2e"; break;
    case FamilyId::K2JoinTwoCliques: os << "K_2 v (K_" << (n - 2) / 2 << " u K_" << (n - 2) / 2 << ")"; break;
    case FamilyId::BipartiteJoinTwoCliques:
      os << "K_{" << n / 4 << "," << n / 4 << "} v (K_" << n / 4 << " u K_" << n / 4 << ")";
      break;
    case FamilyId::S3JoinTwoK2: os << "S_3 v (K_2 u K_2)"; break;
    case FamilyId::Split4PlusEdge: os << "SK_{" << n << ",4}+e"; break;
    case FamilyId::Multipartite321: os << "K_{3,2,1^" << n - 5 << "}"; break;
    case FamilyId::CoStar4: os << "co(S_4 u " << n - 4 << "K_1)"; break;
    case FamilyId::CoCycle4: os << "co(C_4 u " << n - 4 << "K_1)"; break;
    case FamilyId::CoPath4: os << "co(P_4 u " << n - 4 << "K_1)"; break;
    case FamilyId::CoKite43: os << "co(Ki_{4,3} u " << n - 4 << "K_1)"; break;
    case FamilyId::CoStar3K2: os << "co(S_3 u K_2 u " << n - 5 << "K_1)"; break;
    case FamilyId::Multipartite41: os << "K_{4,1^" << n - 4 << "}"; break;
    case FamilyId::Multipartite2221: os << "K_{2,2,2,1^" << n - 6 << "}"; break;
    case FamilyId::Complete: os << "K_" << n; break;
    case FamilyId::Path: os << "P_" << n; break;
    case FamilyId::Cycle: os << "C_" << n; break;
    case FamilyId::Star: os << "S_" << n; break;
    case FamilyId::Kite: os << "Ki_{" << n << "," << spec.size_param << "}"; break;
    case FamilyId::CompleteMinusEdge: os << "K_" << n << "-e"; break;
  }
  return os.str();
}

void check_constraints(const FamilySpec& spec) {
  const int n = spec.order;
  switch (spec.id) {
    case FamilyId::Multipartite: {
      require(spec.parts.size() >= 2, spec, "at least 2 parts");
      require(std::all_of(spec.parts.begin(), spec.parts.end(), [](int t) { return t >= 1; }), spec,
              "every part size >= 1");
      require(std::accumulate(spec.parts.begin(), spec.parts.end(), 0) == n, spec, "part sizes summing to n");
      break;
    }
    case FamilyId::CompleteSplit: require(spec.size_param >= 1 && spec.size_param <= n - 1, spec, "1 <= alpha <= n-1"); break;
    case FamilyId::SplitNMinus3: require(n >= 4, spec, "n >= 4"); break;
    case FamilyId::SplitNMinus2PlusEdge: require(n >= 5, spec, "n >= 5"); break;
    case FamilyId::TripartiteN321: require(n >= 4, spec, "n >= 4"); break;
    case FamilyId::PP1PlusEdge:
      require_divides(2, n - 1, spec, "2 | (n-1)");
      require((n - 1) / 2 >= 3, spec, "p = (n-1)/2 >= 3");
      break;
    case FamilyId::PP2:
      require_divides(2, n - 2, spec, "2 | (n-2)");
      require((n - 2) / 2 >= 3, spec, "p = (n-2)/2 >= 3");
      break;
    case FamilyId::PPPPlusEdge:
      require_divides(3, n, spec, "3 | n");
      require(n / 3 >= 3, spec, "p = n/3 >= 3");
      break;
    case FamilyId::CliqueK1PlusTwoEdges: require(n >= 4, spec, "n >= 4"); break;
    case FamilyId::K2JoinTwoCliques:
      require_divides(2, n - 2, spec, "2 | (n-2)");
      require(n >= 4, spec, "n >= 4");
      break;
    case FamilyId::BipartiteJoinTwoCliques:
      require_divides(4, n, spec, "4 | n");
      require(n >= 4, spec, "n >= 4");
      break;
    case FamilyId::S3JoinTwoK2: require(n == 7, spec, "n = 7"); break;
    case FamilyId::Split4PlusEdge:
    case FamilyId::Multipartite321:
    case FamilyId::CoStar4:
    case FamilyId::CoCycle4:
    case FamilyId::CoPath4:
    case FamilyId::CoKite43:
    case FamilyId::CoStar3K2:
    case FamilyId::Multipartite41: require(n >= 5, spec, "n >= 5"); break;
    case FamilyId::Multipartite2221: require(n >= 6, spec, "n >= 6"); break;
    case FamilyId::Complete: require(n >= 1, spec, "n >= 1"); break;
    case FamilyId::Path: require(n >= 1, spec, "n >= 1"); break;
    case FamilyId::Cycle: require(n >= 3, spec, "n >= 3"); break;
    case FamilyId::Star: require(n >= 2, spec, "n >= 2"); break;
    case FamilyId::Kite: require(spec.size_param >= 1 && spec.size_param <= n, spec, "1 <= w <= n"); break;
    case FamilyId::CompleteMinusEdge: require(n >= 3, spec, "n >= 3"); break;
  }
  require(n <= kMaxOrder, spec, "n <= " + std::to_string(kMaxOrder));
}

bool is_instantiable(const FamilySpec& spec) {
  try {
    check_constraints(spec);
    return true;
  } catch (const ConstraintError&) {
    return false;
  }
}

std::optional<Graph> complement_structure(const FamilySpec& spec) {
  check_constraints(spec);
  const int n = spec.order;
  switch (spec.id) {
    case FamilyId::Multipartite: {
      std::vector<Graph> blocks;
      for (int t : spec.parts) blocks.push_back(complete_graph(t));
      return disjoint_union(blocks);
    }
    case FamilyId::CompleteSplit: return pad(complete_graph(spec.size_param), n - spec.size_param);
    case FamilyId::SplitNMinus3: return pad(complete_graph(n - 3), 3);
    case FamilyId::SplitNMinus2PlusEdge: return pad(complete_minus_edge(n - 2), 2);
    case FamilyId::TripartiteN321: return cliques({n - 3, 2, 1});
    case FamilyId::PP1PlusEdge: {
      const int p = (n - 1) / 2;
      return disjoint_union({complete_graph(p), complete_minus_edge(p), isolated(1)});
    }
    case FamilyId::PP2: {
      const int p = (n - 2) / 2;
      return cliques({p, p, 2});
    }
    case FamilyId::PPPPlusEdge: {
      const int p = n / 3;
      return disjoint_union({complete_graph(p), complete_graph(p), complete_minus_edge(p)});
    }
    case FamilyId::CliqueK1PlusTwoEdges: return pad(star_graph(n - 2), 2);
    case FamilyId::K2JoinTwoCliques: {
      const int q = (n - 2) / 2;
      return disjoint_union({isolated(2), complete_bipartite(q, q)});
    }
    case FamilyId::BipartiteJoinTwoCliques: {
      const int q = n / 4;
      return disjoint_union({cliques({q, q}), complete_bipartite(q, q)});
    }
    case FamilyId::S3JoinTwoK2:
      return disjoint_union({complement(star_graph(3)), complement(cliques({2, 2}))});
    case FamilyId::Split4PlusEdge: return pad(complete_minus_edge(4), n - 4);
    case FamilyId::Multipartite321: return pad(cliques({3, 2}), n - 5);
    case FamilyId::CoStar4: return pad(star_graph(4), n - 4);
    case FamilyId::CoCycle4: return pad(cycle_graph(4), n - 4);
    case FamilyId::CoPath4: return pad(path_graph(4), n - 4);
    case FamilyId::CoKite43: return pad(kite_graph(4, 3), n - 4);
    case FamilyId::CoStar3K2: return pad(disjoint_union({star_graph(3), complete_graph(2)}), n - 5);
    case FamilyId::Multipartite41: return pad(complete_graph(4), n - 4);
    case FamilyId::Multipartite2221: return pad(cliques({2, 2, 2}), n - 6);
    case FamilyId::Complete:
    case FamilyId::Path:
    case FamilyId::Cycle:
    case FamilyId::Star:
    case FamilyId::Kite:
    case FamilyId::CompleteMinusEdge: return std::nullopt;
  }
  return std::nullopt;
}

Graph instantiate(const FamilySpec& spec) {
  if (auto structure = complement_structure(spec)) return complement(*structure);
  const int n = spec.order;
  switch (spec.id) {
    case FamilyId::Complete: return complete_graph(n);
    case FamilyId::Path: return path_graph(n);
    case FamilyId::Cycle: return cycle_graph(n);
    case FamilyId::Star: return star_graph(n);
    case FamilyId::Kite: return kite_graph(n, spec.size_param);
    case FamilyId::CompleteMinusEdge: return complete_minus_edge(n);
    default: break;
  }
  throw DomainError("no construction for " + family_key(spec.id));
}

}  // namespace dlspec
