#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "dlspec/canonical.hpp"
#include "dlspec/enumerator.hpp"
#include "dlspec/errors.hpp"
#include "dlspec/families.hpp"
#include "dlspec/report.hpp"
#include "dlspec/spectral.hpp"
#include "dlspec/verifier.hpp"

namespace dlspec::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::optional<double> tol;
  unsigned jobs = 0;
};

double parse_positive(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError(what + " is not a number: '" + text + "'");
  }
  if (used != text.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(what + " must be a positive number, got '" + text + "'");
  }
  return v;
}

Tolerances tolerances(const Settings& s) {
  Tolerances tol;
  if (s.tol) {
    tol.grouping_relative = *s.tol;
  } else if (const char* env = std::getenv("DLSPEC_TOL"); env && *env) {
    tol.grouping_relative = parse_positive(env, "DLSPEC_TOL");
  }
  return tol;
}

VerifyOptions verify_options(const Settings& s, bool force) {
  VerifyOptions o;
  o.tol = tolerances(s);
  o.parallelism = s.jobs;
  o.force = force;
  return o;
}

// Writes to `path` when given, otherwise to `out`.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  body(file);
}

GraphStream load_stream(int n, const std::string& corpus) {
  if (!corpus.empty()) {
    CorpusOptions opts;
    opts.expect_order = n;
    auto stream = stream_corpus(corpus, opts);
    stream.order = n;
    return stream;
  }
  if (n > kMaxEnumerationOrder) {
    throw UsageError("orders above " + std::to_string(kMaxEnumerationOrder) + " need --corpus");
  }
  return enumerate_connected(n);
}

SymmetricIntMatrix build_matrix(const Graph& g, const std::string& kind) {
  if (kind == "dl") return distance_laplacian(g);
  if (kind == "d") return distance_matrix(g);
  if (kind == "l") return laplacian(g);
  return adjacency_matrix(g);
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
  std::string graph6;
  std::string matrix = "dl";
  bool exact_int = false;
  std::string format = "plain";
};

int cmd_spectrum(const SpectrumArgs& a, const Settings& s, std::ostream& out) {
  const Graph g = from_graph6(a.graph6);
  const auto m = build_matrix(g, a.matrix);
  const auto values = symmetric_eigenvalues(m);
  double radius = 0.0;
  for (double v : values) radius = std::max(radius, std::abs(v));
  auto spectrum = SpectrumNumeric::from_values(values, grouping_tolerance(radius, tolerances(s).grouping_relative));

  bool all_integral = true;
  json exact = json::array();
  if (a.exact_int) {
    for (auto& grp : spectrum.groups) {
      const double r = std::round(grp.value);
      if (std::abs(grp.value - r) > 1e-6) {
        all_integral = false;
        continue;
      }
      grp.multiplicity = exact_integer_multiplicity(m, static_cast<std::int64_t>(r));
      grp.value = r;
      exact.push_back({static_cast<std::int64_t>(r), grp.multiplicity});
    }
  }

  if (a.format == "json") {
    json doc{{"graph6", a.graph6}, {"n", g.order()}, {"matrix", a.matrix}, {"spectrum", spectrum_to_json(spectrum)}};
    if (a.exact_int) doc["exact"] = exact;
    out << doc.dump(2) << '\n';
  } else {
    out << format_spectrum(spectrum);
    if (a.exact_int) out << (all_integral ? " (exact)" : " (exact for integer values)");
    out << '\n';
  }
  return kOk;
}

// --- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::vector<std::string> graph6;
  std::string corpus;
  std::string format = "plain";
  std::string output;
};

void write_profiles(std::ostream& os, const std::vector<ClassifiedGraph>& items, const std::string& format,
                    std::optional<int> n) {
  if (format == "csv") {
    write_profile_csv_header(os);
    for (const auto& item : items) write_profile_csv_row(os, item);
  } else if (format == "json") {
    json doc{{"count", items.size()}, {"graphs", json::array()}};
    if (n) doc["n"] = *n;
    for (const auto& item : items) doc["graphs"].push_back(profile_to_json(item));
    os << doc.dump(2) << '\n';
  } else {
    for (const auto& item : items) {
      const auto& p = item.profile;
      os << item.graph6 << "  " << format_spectrum(p.spectrum) << "  m(d1)=" << p.m_partial1 << "  m(n)=" << p.m_n_exact
         << "  case=" << case_label_name(p.case_label) << '\n';
    }
  }
}

int cmd_classify(const ClassifyArgs& a, const Settings& s, std::ostream& out) {
  if (a.graph6.empty() == a.corpus.empty()) throw UsageError("give either --graph6 or --corpus");
  const auto options = verify_options(s, false);
  std::vector<ClassifiedGraph> items;
  if (!a.corpus.empty()) {
    items = classify_all(stream_corpus(a.corpus), options);
  } else {
    for (const auto& text : a.graph6) {
      Graph g = from_graph6(text);
      auto profile = classify(g, options.tol);
      items.push_back({std::move(g), text, std::move(profile)});
    }
  }
  emit(a.output, out, [&](std::ostream& os) { write_profiles(os, items, a.format, std::nullopt); });
  return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  int n = 0;
  std::string corpus;
  bool force = false;
  std::string output;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs& a, const Settings& s, std::ostream& out, std::ostream& err) {
  std::vector<TheoremId> ids;
  if (a.theorem == "all") {
    ids.assign(kAllTheorems.begin(), kAllTheorems.end());
  } else if (auto id = parse_theorem_id(a.theorem)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown theorem '" + a.theorem + "' (expected t31a, t31b, t41, t42a, t42b, t42c or all)");
  }
  if (!a.force) {
    for (auto id : ids) {
      if (a.n < theorem_min_order(id)) {
        throw OrderRangeError("order below theorem threshold " + std::to_string(theorem_min_order(id)) +
                              " for " + theorem_key(id) + " (got n=" + std::to_string(a.n) + "); use --force to explore");
      }
    }
  }

  const auto stream = load_stream(a.n, a.corpus);
  const auto reports = verify_theorems(ids, a.n, stream, verify_options(s, a.force));
  const bool all_equal = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.equal; });

  std::ostringstream summary;
  for (const auto& r : reports) {
    summary << theorem_key(r.theorem) << " n=" << r.order << ": " << (r.equal ? "equal" : "counterexample")
            << " (scanned " << r.scanned << ", satisfying " << r.satisfying.size() << ", predicted "
            << r.predicted.size() << ")" << (r.normative ? "" : " [non-normative]") << '\n';
    for (const auto& c : r.counterexamples) {
      summary << "  " << (c.kind == Counterexample::Kind::Unpredicted ? "unpredicted " : "missing ") << c.graph6
              << "  " << format_spectrum(c.spectrum) << (c.family.empty() ? "" : "  " + c.family) << '\n';
    }
  }

  if (a.format == "plain") {
    emit(a.output, out, [&](std::ostream& os) { os << summary.str(); });
  } else {
    json doc = reports.size() == 1 ? report_to_json(reports.front()) : json::array();
    if (reports.size() != 1)
      for (const auto& r : reports) doc.push_back(report_to_json(r));
    emit(a.output, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
    if (!a.output.empty()) out << summary.str();
    else if (!all_equal) err << summary.str();
  }
  if (a.force && std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.normative; })) {
    err << "warning: order below theorem threshold; results are non-normative\n";
  }
  return all_equal ? kOk : kVerdictFailure;
}

// --- family -----------------------------------------------------------------

struct FamilyArgs {
  std::string id;
  std::optional<int> n;
  std::vector<int> parts;
  std::optional<int> alpha;
  std::optional<int> omega;
  std::string format = "plain";
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
  const auto id = parse_family_id(a.id);
  if (!id) throw UsageError("unknown family id '" + a.id + "'");

  FamilySpec spec;
  if (*id == FamilyId::Multipartite) {
    if (a.parts.empty()) throw UsageError(family_key(*id) + " needs --parts");
    spec = FamilySpec::multipartite(a.parts);
    if (a.n && *a.n != spec.order) {
      throw ConstraintError(family_key(*id) + " requires part sizes summing to n (got n=" + std::to_string(*a.n) + ")");
    }
  } else {
    if (!a.n) throw UsageError(family_key(*id) + " needs --n");
    if (*id == FamilyId::CompleteSplit) {
      if (!a.alpha) throw UsageError(family_key(*id) + " needs --alpha");
      spec = FamilySpec::split(*a.n, *a.alpha);
    } else if (*id == FamilyId::Kite) {
      if (!a.omega) throw UsageError(family_key(*id) + " needs --omega");
      spec = FamilySpec::kite(*a.n, *a.omega);
    } else {
      spec = FamilySpec::of(*id, *a.n);
    }
  }

  check_constraints(spec);
  const Graph g = instantiate(spec);
  const auto g6 = spec.order <= kMaxCanonicalOrder ? canonical_form(g).graph6 : to_graph6(g);
  if (a.format == "json") {
    json doc{{"id", family_key(*id)}, {"label", describe(spec)}, {"n", spec.order}, {"graph6", g6}};
    out << doc.dump(2) << '\n';
  } else {
    out << g6 << '\n';
  }
  return kOk;
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  std::string output;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  const auto stream = enumerate_connected(a.n);
  if (a.output.empty()) {
    for (const auto& g : stream) out << to_graph6(g) << '\n';
  } else {
    write_corpus(a.output, stream);
    err << stream.size() << " connected graphs of order " << a.n << " written to " << a.output << '\n';
  }
  return kOk;
}

// --- explore-open -----------------------------------------------------------

struct ExploreArgs {
  int n = 0;
  std::string corpus;
  std::string format = "json";
  std::string output;
};

int cmd_explore(const ExploreArgs& a, const Settings& s, std::ostream& out) {
  if (a.n < 5) throw OrderRangeError("open cases are defined for n >= 5, got " + std::to_string(a.n));
  const auto stream = load_stream(a.n, a.corpus);
  const auto hits = explore_open_cases(a.n, stream, verify_options(s, false));
  emit(a.output, out, [&](std::ostream& os) { write_profiles(os, hits, a.format, a.n); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance Laplacian spectra and multiplicity (n-4) theorem checks", "dlspec"};
  app.require_subcommand(1);
  // Global options may follow the subcommand.
  app.fallthrough();

  Settings settings;
  std::string tol_text;
  app.add_option("--tol", tol_text, "Relative grouping tolerance (overrides DLSPEC_TOL)");
  app.add_option("--jobs", settings.jobs, "Worker threads (default: all cores)")->check(CLI::PositiveNumber);

  const auto formats = [](std::initializer_list<const char*> allowed) {
    return CLI::IsMember(std::vector<std::string>(allowed.begin(), allowed.end()));
  };

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Grouped spectrum of one graph");
  sp->add_option("--graph6", spectrum.graph6, "Graph in graph6")->required();
  sp->add_option("--matrix", spectrum.matrix, "dl, d, l or a")->check(formats({"dl", "d", "l", "a"}));
  sp->add_flag("--exact-int", spectrum.exact_int, "Confirm integer eigenvalue multiplicities by exact rank");
  sp->add_option("--format", spectrum.format)->check(formats({"plain", "json"}));

  ClassifyArgs classify_args;
  auto* cl = app.add_subcommand("classify", "Multiplicity profiles");
  cl->add_option("--graph6", classify_args.graph6, "Graph(s) in graph6");
  cl->add_option("--corpus", classify_args.corpus, "graph6 file, one graph per line");
  cl->add_option("--format", classify_args.format)->check(formats({"plain", "json", "csv"}));
  cl->add_option("-o,--output", classify_args.output);

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify", "Check a theorem over all connected graphs of one order");
  ve->add_option("--theorem", verify.theorem, "t31a, t31b, t41, t42a, t42b, t42c or all")->required();
  ve->add_option("--n", verify.n, "Order")->required();
  ve->add_option("--corpus", verify.corpus, "graph6 file instead of the built-in enumeration");
  ve->add_flag("--force", verify.force, "Allow orders below the theorem threshold (non-normative)");
  ve->add_option("-o,--output", verify.output, "Report path");
  ve->add_option("--format", verify.format)->check(formats({"json", "plain"}));

  FamilyArgs family;
  auto* fa = app.add_subcommand("family", "Canonical graph6 of a family member");
  fa->add_option("--id", family.id, "Family id, e.g. F12 or F6:K_pp1_plus_e")->required();
  fa->add_option("--n", family.n, "Order");
  fa->add_option("--parts", family.parts, "Part sizes for F1")->delimiter(',');
  fa->add_option("--alpha", family.alpha, "Independent-part size for F2");
  fa->add_option("--omega", family.omega, "Clique size for Kite");
  fa->add_option("--format", family.format)->check(formats({"plain", "json"}));

  EnumerateArgs enumerate;
  auto* en = app.add_subcommand("enumerate", "All connected graphs of one order, as graph6");
  en->add_option("--n", enumerate.n, "Order")->required();
  en->add_option("-o,--output", enumerate.output);

  ExploreArgs explore;
  auto* ex = app.add_subcommand("explore-open", "Graphs in the open cases (c) and (d)");
  ex->add_option("--n", explore.n, "Order")->required();
  ex->add_option("--corpus", explore.corpus);
  ex->add_option("--format", explore.format)->check(formats({"json", "csv", "plain"}));
  ex->add_option("-o,--output", explore.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!tol_text.empty()) settings.tol = parse_positive(tol_text, "--tol");
    if (*sp) return cmd_spectrum(spectrum, settings, out);
    if (*cl) return cmd_classify(classify_args, settings, out);
    if (*ve) return cmd_verify(verify, settings, out, err);
    if (*fa) return cmd_family(family, out);
    if (*en) return cmd_enumerate(enumerate, out, err);
    if (*ex) return cmd_explore(explore, settings, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OrderRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CompletenessError& e) {
    err << "error: " << e.what() << '\n';
    return kIncomplete;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace dlspec::cli
