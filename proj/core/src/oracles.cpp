#include "dlspec/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "dlspec/canonical.hpp"
#include "dlspec/families.hpp"

namespace dlspec {

namespace {

double oracle_tolerance(const SpectrumNumeric& s) { return 1e-8 * std::max(1.0, s.spectral_radius()); }

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

SpectrumNumeric group(std::vector<double> values) {
  double radius = 0.0;
  for (double v : values) radius = std::max(radius, std::abs(v));
  return SpectrumNumeric::from_values(std::move(values), 1e-9 * std::max(1.0, radius));
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void check_twin_set(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) throw DomainError("twin set is empty");
  std::vector<bool> member(g.order(), false);
  for (Vertex v : set) {
    if (v < 0 || v >= g.order()) throw DomainError("twin set vertex " + std::to_string(v) + " out of range");
    if (member[v]) throw DomainError("twin set lists vertex " + std::to_string(v) + " twice");
    member[v] = true;
  }
}

std::uint64_t mask_of(std::span<const Vertex> set) {
  std::uint64_t m = 0;
  for (Vertex v : set) m |= std::uint64_t{1} << v;
  return m;
}

TwinEigenvalue shared_transmission(const Graph& g, std::span<const Vertex> set, std::int64_t shift) {
  const auto data = all_pairs_distances(g);
  const auto tr = data.transmissions[set.front()];
  for (Vertex v : set) {
    if (data.transmissions[v] != tr) throw DomainError("twin vertices have different transmissions");
  }
  return {tr + shift, static_cast<int>(set.size()) - 1, tr};
}

}  // namespace

SpectrumPattern& SpectrumPattern::add(Rational slope, Rational offset, Rational mult_slope, Rational mult_offset,
                                      double constant) {
  entries_.push_back({slope, offset, constant, mult_slope, mult_offset});
  return *this;
}

std::vector<PatternValue> SpectrumPattern::evaluate(int n) const {
  std::vector<PatternValue> out;
  int total = 0;
  for (const auto& e : entries_) {
    const Rational base = e.slope * Rational(n) + e.offset;
    const Rational mult = e.mult_slope * Rational(n) + e.mult_offset;
    if (mult.denominator() != 1 || mult.numerator() <= 0) {
      throw DomainError("pattern multiplicity is not a positive integer at n=" + std::to_string(n));
    }
    PatternValue v;
    v.value = to_double(base) + e.constant;
    v.multiplicity = static_cast<int>(mult.numerator());
    if (e.constant == 0.0 && base.denominator() == 1) v.exact = base.numerator();
    if (!out.empty() && !(out.back().value - v.value > trig::kGuard)) {
      throw DomainError("pattern values are not strictly decreasing at n=" + std::to_string(n));
    }
    total += v.multiplicity;
    out.push_back(v);
  }
  if (total != n) throw DomainError("pattern multiplicities sum to " + std::to_string(total) + ", not n=" + std::to_string(n));
  return out;
}

SpectrumNumeric SpectrumPattern::evaluate_numeric(int n) const {
  SpectrumNumeric s;
  for (const auto& v : evaluate(n)) s.groups.push_back({v.value, v.multiplicity});
  return s;
}

SpectrumNumeric complement_laplacian_spectrum(const SpectrumNumeric& l_spec, int n) {
  const auto mu = l_spec.expanded();
  if (static_cast<int>(mu.size()) != n) throw DomainError("Laplacian spectrum does not have n eigenvalues");
  if (mu.empty() || !near(mu.back(), 0.0, oracle_tolerance(l_spec))) {
    throw DomainError("input is not a Laplacian spectrum: 0 is not an eigenvalue");
  }
  std::vector<double> out;
  out.reserve(mu.size());
  for (int j = 0; j + 1 < n; ++j) out.push_back(n - mu[j]);
  out.push_back(0.0);
  return group(std::move(out));
}

SpectrumNumeric dl_spectrum_from_laplacian(const SpectrumNumeric& l_spec, int n) {
  const auto mu = l_spec.expanded();
  std::vector<double> out;
  out.reserve(mu.size());
  for (int j = 0; j + 1 < static_cast<int>(mu.size()); ++j) out.push_back(2.0 * n - mu[j]);
  out.push_back(0.0);
  return group(std::move(out));
}

int predicted_multiplicity_of_n(const Graph& g) {
  if (!is_connected(g)) throw DomainError("graph is disconnected");
  return static_cast<int>(components(complement(g)).count()) - 1;
}

SpectrumPattern multipartite_dl_spectrum(std::span<const int> parts) {
  if (parts.size() < 2) throw DomainError("complete multipartite spectrum needs at least 2 parts");
  std::map<int, int, std::greater<>> count;
  for (int t : parts) {
    if (t < 1) throw DomainError("part sizes must be positive");
    if (t >= 2) ++count[t];
  }
  SpectrumPattern p;
  for (auto [t, c] : count) p.add(1, t, 0, static_cast<std::int64_t>(c) * (t - 1));
  p.add(1, 0, 0, static_cast<std::int64_t>(parts.size()) - 1);
  p.add(0, 0, 0, 1);
  return p;
}

bool recognize_kn_minus_e(const SpectrumNumeric& l_spec, int n) {
  if (n < 4) return false;
  const double tol = oracle_tolerance(l_spec);
  const auto& g = l_spec.groups;
  if (g.size() != 3) return false;
  if (g[0].multiplicity != n - 2 || g[1].multiplicity != 1 || g[2].multiplicity != 1) return false;
  return near(g[2].value, 0.0, tol) && g[1].value > tol && g[0].value - g[1].value > tol;
}

TwoEigenvalueClass recognize_two_distinct_mult_n2(const SpectrumNumeric& l_spec, int n) {
  const double tol = oracle_tolerance(l_spec);
  const auto& g = l_spec.groups;
  if (n < 3 || g.size() != 3) return TwoEigenvalueClass::None;
  if (g[0].multiplicity != 1 || g[1].multiplicity != n - 2 || g[2].multiplicity != 1) return TwoEigenvalueClass::None;
  if (!near(g[2].value, 0.0, tol) || !(g[1].value > tol) || !(g[0].value - g[1].value > tol)) {
    return TwoEigenvalueClass::None;
  }
  if (near(g[1].value, 1.0, tol)) return TwoEigenvalueClass::Star;
  if (n % 2 == 0 && near(g[1].value, n / 2.0, tol)) return TwoEigenvalueClass::BalancedBipartite;
  return TwoEigenvalueClass::None;
}

TwinEigenvalue twin_clique_eigenvalue(const Graph& g, std::span<const Vertex> clique) {
  check_twin_set(g, clique);
  const auto inside = mask_of(clique);
  const auto outside_of = [&](Vertex v) { return g.neighbor_mask(v) & ~inside; };
  const auto reference = outside_of(clique.front());
  for (Vertex v : clique) {
    for (Vertex u : clique) {
      if (u != v && !g.adjacent(u, v)) throw DomainError("vertex set is not a clique");
    }
    if (outside_of(v) != reference) throw DomainError("clique members differ in their outside neighbourhoods");
  }
  return shared_transmission(g, clique, 1);
}

TwinEigenvalue twin_independent_eigenvalue(const Graph& g, std::span<const Vertex> set) {
  check_twin_set(g, set);
  const auto reference = g.neighbor_mask(set.front());
  for (Vertex v : set) {
    for (Vertex u : set) {
      if (g.adjacent(u, v)) throw DomainError("vertex set is not independent");
    }
    if (g.neighbor_mask(v) != reference) throw DomainError("independent set members have different neighbourhoods");
  }
  return shared_transmission(g, set, 2);
}

std::optional<std::vector<double>> block_laplacian_closed_form(const Graph& block) {
  const int m = block.order();
  if (!is_connected(block)) return std::nullopt;
  auto repeat = [](std::vector<double>& out, double v, int times) { out.insert(out.end(), times, v); };
  const auto form = canonical_form(block);
  const auto same = [&](const Graph& h) { return canonical_form(h) == form; };
  std::vector<double> out;

  if (m == 1) return std::vector<double>{0.0};
  if (same(complete_graph(m))) {
    repeat(out, m, m - 1);
  } else if (m >= 3 && same(complete_minus_edge(m))) {
    repeat(out, m, m - 2);
    out.push_back(m - 2);
  } else if (m >= 3 && same(star_graph(m))) {
    out.push_back(m);
    repeat(out, 1.0, m - 2);
  } else if (m >= 4 && m % 2 == 0 && same(complete_bipartite(m / 2, m / 2))) {
    out.push_back(m);
    repeat(out, m / 2.0, m - 2);
  } else if (m == 4 && same(path_graph(4))) {
    out = {trig::kFourSinSqThreePiOver8, trig::kFourSinSqTwoPiOver8, trig::kFourSinSqPiOver8};
  } else if (m == 4 && same(kite_graph(4, 3))) {
    out = {4.0, 3.0, 1.0};
  } else {
    return std::nullopt;
  }
  out.push_back(0.0);
  return out;
}

std::optional<SpectrumNumeric> structure_laplacian_closed_form(const Graph& structure) {
  std::vector<double> all;
  for (const auto& block : components(structure).blocks) {
    auto spec = block_laplacian_closed_form(induced_subgraph(structure, block));
    if (!spec) return std::nullopt;
    all.insert(all.end(), spec->begin(), spec->end());
  }
  return group(std::move(all));
}

std::optional<SpectrumNumeric> composed_dl_spectrum(const Graph& structure) {
  if (is_connected(structure)) throw DomainError("complement structure must be disconnected");
  auto l_structure = structure_laplacian_closed_form(structure);
  if (!l_structure) return std::nullopt;
  const int n = structure.order();
  return dl_spectrum_from_laplacian(complement_laplacian_spectrum(*l_structure, n), n);
}

}  // namespace dlspec
