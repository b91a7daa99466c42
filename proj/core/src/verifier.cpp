#include "dlspec/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "dlspec/canonical.hpp"
#include "dlspec/errors.hpp"

namespace dlspec {

namespace {

// Runs fn(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any worker is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

SpectrumPattern pattern(std::initializer_list<PatternEntry> entries) { return SpectrumPattern(entries); }

// value = a*n + b, multiplicity = c*n + d
PatternEntry e(Rational a, Rational b, Rational c, Rational d, double constant = 0.0) {
  return {a, b, constant, c, d};
}

const PatternEntry kZero = e(0, 0, 0, 1);
const PatternEntry kNTimes3 = e(1, 0, 0, 3);
const PatternEntry kNTimes2 = e(1, 0, 0, 2);
const PatternEntry kNTimesNMinus4 = e(1, 0, 1, -4);

std::vector<TheoremMember> members_31a(int n) {
  std::vector<TheoremMember> out;
  if (n % 4 == 0) {
    const int q = n / 4;
    out.push_back({FamilySpec::multipartite({q, q, q, q}), pattern({e({5, 4}, 0, 1, -4), kNTimes3, kZero})});
  }
  if ((n - 1) % 3 == 0) {
    const int q = (n - 1) / 3;
    out.push_back({FamilySpec::multipartite({q, q, q, 1}), pattern({e({4, 3}, {-1, 3}, 1, -4), kNTimes3, kZero})});
  }
  if (n % 2 == 0) {
    const int q = (n - 2) / 2;
    out.push_back({FamilySpec::multipartite({q, q, 1, 1}), pattern({e({3, 2}, -1, 1, -4), kNTimes3, kZero})});
  }
  out.push_back({FamilySpec::of(FamilyId::SplitNMinus3, n), pattern({e(2, -3, 1, -4), kNTimes3, kZero})});
  return out;
}

std::vector<TheoremMember> members_31b(int n) {
  return {
      {FamilySpec::of(FamilyId::SplitNMinus2PlusEdge, n), pattern({e(2, -2, 1, -4), e(2, -4, 0, 1), kNTimes2, kZero})},
      {FamilySpec::of(FamilyId::TripartiteN321, n), pattern({e(2, -3, 1, -4), e(1, 2, 0, 1), kNTimes2, kZero})},
      {FamilySpec::of(FamilyId::PP1PlusEdge, n),
       pattern({e({3, 2}, {-1, 2}, 1, -4), e({3, 2}, {-5, 2}, 0, 1), kNTimes2, kZero})},
      {FamilySpec::of(FamilyId::PP2, n), pattern({e({3, 2}, -1, 1, -4), e(1, 2, 0, 1), kNTimes2, kZero})},
      {FamilySpec::of(FamilyId::PPPPlusEdge, n), pattern({e({4, 3}, 0, 1, -4), e({4, 3}, -2, 0, 1), kNTimes2, kZero})},
  };
}

std::vector<TheoremMember> members_41(int n) {
  return {
      {FamilySpec::of(FamilyId::S3JoinTwoK2, n), pattern({e(0, 11, 0, 1), e(0, 9, 0, 3), e(0, 7, 0, 2), kZero})},
      {FamilySpec::of(FamilyId::CliqueK1PlusTwoEdges, n), pattern({e(2, -2, 0, 1), e(1, 1, 1, -4), kNTimes2, kZero})},
      {FamilySpec::of(FamilyId::K2JoinTwoCliques, n),
       pattern({e(2, -2, 0, 1), e({3, 2}, -1, 1, -4), kNTimes2, kZero})},
      {FamilySpec::of(FamilyId::BipartiteJoinTwoCliques, n),
       pattern({e({3, 2}, 0, 0, 1), e({5, 4}, 0, 1, -4), kNTimes2, kZero})},
  };
}

std::vector<TheoremMember> members_42a(int n) {
  return {
      {FamilySpec::of(FamilyId::Multipartite41, n), pattern({e(1, 4, 0, 3), kNTimesNMinus4, kZero})},
      {FamilySpec::of(FamilyId::Multipartite2221, n), pattern({e(1, 2, 0, 3), kNTimesNMinus4, kZero})},
  };
}

std::vector<TheoremMember> members_42b(int n) {
  return {
      {FamilySpec::of(FamilyId::Split4PlusEdge, n), pattern({e(1, 4, 0, 2), e(1, 2, 0, 1), kNTimesNMinus4, kZero})},
      {FamilySpec::of(FamilyId::Multipartite321, n), pattern({e(1, 3, 0, 2), e(1, 2, 0, 1), kNTimesNMinus4, kZero})},
  };
}

std::vector<TheoremMember> members_42c(int n) {
  return {
      {FamilySpec::of(FamilyId::CoStar4, n), pattern({e(1, 4, 0, 1), e(1, 1, 0, 2), kNTimesNMinus4, kZero})},
      {FamilySpec::of(FamilyId::CoCycle4, n), pattern({e(1, 4, 0, 1), e(1, 2, 0, 2), kNTimesNMinus4, kZero})},
      {FamilySpec::of(FamilyId::CoPath4, n),
       pattern({e(1, 0, 0, 1, trig::kFourSinSqThreePiOver8), e(1, 2, 0, 1), e(1, 0, 0, 1, trig::kFourSinSqPiOver8),
                kNTimesNMinus4, kZero})},
      {FamilySpec::of(FamilyId::CoKite43, n), pattern({e(1, 4, 0, 1), e(1, 3, 0, 1), e(1, 1, 0, 1), kNTimesNMinus4, kZero})},
      {FamilySpec::of(FamilyId::CoStar3K2, n),
       pattern({e(1, 3, 0, 1), e(1, 2, 0, 1), e(1, 1, 0, 1), kNTimesNMinus4, kZero})},
  };
}

void check_threshold(TheoremId id, int n, bool force) {
  const int min = theorem_min_order(id);
  if (n < min && !force) {
    throw OrderRangeError("order below theorem threshold " + std::to_string(min) + " (got n=" + std::to_string(n) + ")");
  }
  if (n < 1 || n > kMaxCanonicalOrder || !connected_graph_count(n)) {
    throw OrderRangeError("verification supports 1 <= n <= 11, got " + std::to_string(n));
  }
}

struct Scan {
  std::vector<std::string> graph6;
  std::vector<std::optional<MultiplicityProfile>> profiles;
  std::size_t distinct_connected = 0;
};

// Canonical forms and profiles for every graph in the source; disconnected
// graphs get no profile.
Scan scan(const GraphStream& source, const VerifyOptions& options) {
  Scan s;
  const std::size_t count = source.size();
  s.graph6.resize(count);
  s.profiles.resize(count);
  parallel_for(count, options.parallelism, [&](std::size_t i) {
    const Graph& g = source.graphs[i];
    s.graph6[i] = canonical_form(g).graph6;
    if (is_connected(g)) s.profiles[i] = classify(g, options.tol);
  });
  std::set<std::string> distinct;
  for (std::size_t i = 0; i < count; ++i)
    if (s.profiles[i]) distinct.insert(s.graph6[i]);
  s.distinct_connected = distinct.size();
  return s;
}

void check_complete(int n, const GraphStream& source, const Scan& s) {
  if (!source.graphs.empty() && source.order != n) {
    throw CompletenessError("source holds graphs of order " + std::to_string(source.order) + ", expected " +
                            std::to_string(n));
  }
  const auto expected = connected_graph_count(n);
  if (!expected) throw OrderRangeError("no reference count for order " + std::to_string(n));
  if (s.distinct_connected != *expected) {
    throw CompletenessError("source covers " + std::to_string(s.distinct_connected) + " of " +
                            std::to_string(*expected) + " connected graphs of order " + std::to_string(n));
  }
}

VerificationReport assemble(TheoremId id, int n, const GraphStream& source, const Scan& s, const VerifyOptions& options) {
  VerificationReport r;
  r.theorem = id;
  r.order = n;
  r.normative = n >= theorem_min_order(id);

  std::map<std::string, const MultiplicityProfile*> satisfying;
  std::set<std::string> unstable;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (!s.profiles[i]) continue;
    ++r.scanned;
    const auto& p = *s.profiles[i];
    if (!satisfies_hypothesis(id, p)) continue;
    satisfying.emplace(s.graph6[i], &p);
    if (!p.partial1_exact && !p.partial1_stable) unstable.insert(s.graph6[i]);
  }
  for (const auto& [g6, _] : satisfying) r.satisfying.push_back(g6);
  r.unstable.assign(unstable.begin(), unstable.end());

  std::map<std::string, std::vector<std::string>> predicted;
  for (const auto& m : theorem_members(id, n)) {
    const auto g6 = canonical_form(instantiate(m.spec)).graph6;
    r.families.push_back({family_key(m.spec.id), describe(m.spec), g6});
    predicted[g6].push_back(family_key(m.spec.id));
  }
  for (const auto& [g6, _] : predicted) r.predicted.push_back(g6);

  for (const auto& [g6, profile] : satisfying) {
    if (!predicted.contains(g6)) r.counterexamples.push_back({Counterexample::Kind::Unpredicted, g6, profile->spectrum, {}});
  }
  for (const auto& [g6, ids] : predicted) {
    if (satisfying.contains(g6)) continue;
    std::string joined;
    for (const auto& f : ids) joined += (joined.empty() ? "" : ",") + f;
    const auto spectrum = classify(from_graph6(g6), options.tol).spectrum;
    r.counterexamples.push_back({Counterexample::Kind::Missing, g6, spectrum, joined});
  }
  r.equal = r.counterexamples.empty();
  return r;
}

std::vector<ClassifiedGraph> collect(const GraphStream& source, const Scan& s, auto&& keep) {
  std::map<std::string, const MultiplicityProfile*> picked;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (s.profiles[i] && keep(*s.profiles[i])) picked.emplace(s.graph6[i], &*s.profiles[i]);
  }
  std::vector<ClassifiedGraph> out;
  out.reserve(picked.size());
  for (const auto& [g6, p] : picked) out.push_back({from_graph6(g6), g6, *p});
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string theorem_key(TheoremId id) {
  switch (id) {
    case TheoremId::T31a: return "t31a";
    case TheoremId::T31b: return "t31b";
    case TheoremId::T41: return "t41";
    case TheoremId::T42a: return "t42a";
    case TheoremId::T42b: return "t42b";
    case TheoremId::T42c: return "t42c";
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto id : kAllTheorems)
    if (theorem_key(id) == lowered) return id;
  return std::nullopt;
}

int theorem_min_order(TheoremId id) {
  return (id == TheoremId::T31a || id == TheoremId::T31b) ? 6 : 5;
}

std::vector<TheoremMember> theorem_members(TheoremId id, int n) {
  std::vector<TheoremMember> all;
  switch (id) {
    case TheoremId::T31a: all = members_31a(n); break;
    case TheoremId::T31b: all = members_31b(n); break;
    case TheoremId::T41: all = members_41(n); break;
    case TheoremId::T42a: all = members_42a(n); break;
    case TheoremId::T42b: all = members_42b(n); break;
    case TheoremId::T42c: all = members_42c(n); break;
  }
  std::erase_if(all, [](const TheoremMember& m) { return !is_instantiable(m.spec); });
  return all;
}

std::string case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::A: return "a";
    case CaseLabel::B: return "b";
    case CaseLabel::C: return "c";
    case CaseLabel::D: return "d";
    case CaseLabel::None: return "none";
  }
  return "none";
}

MultiplicityProfile classify(const Graph& g, const Tolerances& tol) {
  const int n = g.order();
  const auto dl = distance_laplacian(g);
  const auto values = symmetric_eigenvalues(dl);
  const double radius = values.empty() ? 0.0 : values.front();

  MultiplicityProfile p;
  p.order = n;
  p.spectrum = SpectrumNumeric::from_values(values, grouping_tolerance(radius, tol.grouping_relative));

  const auto exact_of = [&](const GroupedEigenvalue& grp) -> std::optional<int> {
    const double r = std::round(grp.value);
    if (std::abs(grp.value - r) > tol.integral) return std::nullopt;
    return exact_integer_multiplicity(dl, static_cast<std::int64_t>(r));
  };

  std::vector<std::optional<int>> exact(p.spectrum.groups.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    exact[i] = exact_of(p.spectrum.groups[i]);
    if (exact[i] && *exact[i] != p.spectrum.groups[i].multiplicity) p.grouping_consistent = false;
  }

  const auto& top = p.spectrum.groups.front();
  p.partial1_exact = exact.front().has_value();
  p.m_partial1 = exact.front().value_or(top.multiplicity);
  if (!p.partial1_exact) {
    for (double factor : {10.0, 0.1}) {
      const auto regrouped = SpectrumNumeric::from_values(values, grouping_tolerance(radius, tol.grouping_relative * factor));
      if (regrouped.groups.front().multiplicity != top.multiplicity) p.partial1_stable = false;
    }
  }

  p.m_n_exact = exact_integer_multiplicity(dl, n);

  const auto& groups = p.spectrum.groups;
  p.second_smallest_is_n = groups.size() >= 2 && std::abs(groups[groups.size() - 2].value - n) <= tol.integral;

  if (n >= 4) {
    const auto& grp = p.spectrum.group_at_position(n - 3);
    const auto index = static_cast<std::size_t>(&grp - groups.data());
    p.m_second = exact[index].value_or(grp.multiplicity);
  }

  if (n >= 5 && p.m_partial1 == n - 4) {
    switch (p.m_n_exact) {
      case 3: p.case_label = CaseLabel::A; break;
      case 2: p.case_label = CaseLabel::B; break;
      case 1: p.case_label = CaseLabel::C; break;
      case 0: p.case_label = CaseLabel::D; break;
      default: break;
    }
  }
  return p;
}

bool satisfies_hypothesis(TheoremId id, const MultiplicityProfile& p) {
  const int n = p.order;
  switch (id) {
    case TheoremId::T31a: return p.case_label == CaseLabel::A;
    case TheoremId::T31b: return p.case_label == CaseLabel::B;
    case TheoremId::T41: {
      const auto& g = p.spectrum.groups;
      return g.size() == 4 && p.m_partial1 == 1 && g[0].multiplicity == 1 && g[1].multiplicity == n - 4 &&
             p.m_second == n - 4 && g[2].multiplicity == 2 && p.m_n_exact == 2 && p.second_smallest_is_n &&
             g[3].multiplicity == 1;
    }
    case TheoremId::T42a: return p.m_n_exact == n - 4 && p.m_partial1 == 3;
    case TheoremId::T42b: return p.m_n_exact == n - 4 && p.m_partial1 == 2;
    case TheoremId::T42c: return p.m_n_exact == n - 4 && p.m_partial1 == 1;
  }
  return false;
}

VerificationReport verify_theorem(TheoremId id, int n, const GraphStream& source, const VerifyOptions& options) {
  const TheoremId ids[] = {id};
  return verify_theorems(ids, n, source, options).front();
}

std::vector<VerificationReport> verify_theorems(std::span<const TheoremId> ids, int n, const GraphStream& source,
                                                const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  for (auto id : ids) check_threshold(id, n, options.force);
  const auto s = scan(source, options);
  check_complete(n, source, s);
  std::vector<VerificationReport> out;
  for (auto id : ids) {
    out.push_back(assemble(id, n, source, s, options));
    out.back().elapsed_ms = elapsed_ms(start);
  }
  return out;
}

std::vector<ClassifiedGraph> explore_open_cases(int n, const GraphStream& source, const VerifyOptions& options) {
  if (n < 5) throw OrderRangeError("open cases are defined for n >= 5, got " + std::to_string(n));
  if (n > kMaxCanonicalOrder || !connected_graph_count(n)) {
    throw OrderRangeError("exploration supports 5 <= n <= 11, got " + std::to_string(n));
  }
  const auto s = scan(source, options);
  check_complete(n, source, s);
  return collect(source, s, [](const MultiplicityProfile& p) {
    return p.case_label == CaseLabel::C || p.case_label == CaseLabel::D;
  });
}

std::vector<ClassifiedGraph> classify_all(const GraphStream& source, const VerifyOptions& options) {
  const auto s = scan(source, options);
  return collect(source, s, [](const MultiplicityProfile&) { return true; });
}

}  // namespace dlspec
