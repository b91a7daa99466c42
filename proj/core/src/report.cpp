#include "dlspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace dlspec {

namespace {

using nlohmann::json;

std::string kind_name(Counterexample::Kind kind) {
  return kind == Counterexample::Kind::Unpredicted ? "unpredicted" : "missing";
}

bool is_graph6_text(const json& v) { return v.is_string() && !v.get<std::string>().empty(); }

void check_spectrum(const json& spec, const std::string& where, std::vector<std::string>& problems) {
  if (!spec.is_array() || spec.empty()) {
    problems.push_back(where + ".spectrum must be a non-empty array");
    return;
  }
  for (const auto& pair : spec) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number_integer() ||
        pair[1].get<long long>() < 1) {
      problems.push_back(where + ".spectrum entries must be [value, multiplicity >= 1]");
      return;
    }
  }
}

}  // namespace

std::string format_value(double value) {
  const double r = std::round(value);
  if (std::abs(value - r) <= 1e-6) return std::to_string(static_cast<long long>(r));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string format_spectrum(const SpectrumNumeric& spectrum) {
  std::string out;
  for (const auto& g : spectrum.groups) {
    if (!out.empty()) out += ", ";
    out += format_value(g.value);
    if (g.multiplicity != 1) out += "^" + std::to_string(g.multiplicity);
  }
  return out;
}

json spectrum_to_json(const SpectrumNumeric& spectrum) {
  json out = json::array();
  for (const auto& g : spectrum.groups) out.push_back({g.value, g.multiplicity});
  return out;
}

json report_to_json(const VerificationReport& r) {
  json doc;
  doc["theorem"] = theorem_key(r.theorem);
  doc["n"] = r.order;
  doc["counts"] = {{"scanned", r.scanned}, {"satisfying", r.satisfying.size()}, {"predicted", r.predicted.size()}};
  doc["verdict"] = r.equal ? "equal" : "counterexample";
  doc["normative"] = r.normative;
  doc["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples) {
    json item{{"graph6", c.graph6}, {"spectrum", spectrum_to_json(c.spectrum)}, {"kind", kind_name(c.kind)}};
    if (!c.family.empty()) item["family"] = c.family;
    doc["counterexamples"].push_back(std::move(item));
  }
  doc["families"] = json::array();
  for (const auto& f : r.families) doc["families"].push_back({{"id", f.id}, {"label", f.label}, {"graph6", f.graph6}});
  doc["satisfying"] = r.satisfying;
  doc["unstable"] = r.unstable;
  doc["elapsed_ms"] = r.elapsed_ms;
  return doc;
}

std::vector<std::string> validate_report_json(const json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object()) return {"report must be a JSON object"};
  const auto need = [&](const char* key) {
    if (!doc.contains(key)) problems.push_back(std::string("missing field ") + key);
    return doc.contains(key);
  };

  if (need("theorem") && !(doc["theorem"].is_string() && parse_theorem_id(doc["theorem"].get<std::string>()))) {
    problems.push_back("theorem must be one of t31a, t31b, t41, t42a, t42b, t42c");
  }
  if (need("n") && !(doc["n"].is_number_integer() && doc["n"].get<long long>() >= 1)) {
    problems.push_back("n must be a positive integer");
  }
  if (need("counts")) {
    const auto& c = doc["counts"];
    for (const char* key : {"scanned", "satisfying", "predicted"}) {
      if (!c.is_object() || !c.contains(key) || !c[key].is_number_unsigned()) {
        problems.push_back(std::string("counts.") + key + " must be a non-negative integer");
      }
    }
  }
  std::string verdict;
  if (need("verdict")) {
    if (doc["verdict"].is_string()) verdict = doc["verdict"].get<std::string>();
    if (verdict != "equal" && verdict != "counterexample") problems.push_back("verdict must be equal or counterexample");
  }
  if (need("counterexamples")) {
    const auto& list = doc["counterexamples"];
    if (!list.is_array()) {
      problems.push_back("counterexamples must be an array");
    } else {
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "counterexamples[" + std::to_string(i) + "]";
        if (!list[i].is_object() || !list[i].contains("graph6") || !is_graph6_text(list[i]["graph6"])) {
          problems.push_back(where + ".graph6 must be a non-empty string");
          continue;
        }
        if (!list[i].contains("spectrum")) {
          problems.push_back(where + " lacks a spectrum");
        } else {
          check_spectrum(list[i]["spectrum"], where, problems);
        }
      }
      if (verdict == "equal" && !list.empty()) problems.push_back("verdict equal with counterexamples listed");
      if (verdict == "counterexample" && list.empty()) problems.push_back("verdict counterexample with none listed");
    }
  }
  if (need("families")) {
    const auto& list = doc["families"];
    if (!list.is_array()) {
      problems.push_back("families must be an array");
    } else {
      std::set<std::string> distinct;
      for (const auto& f : list) {
        if (!f.is_object() || !f.contains("id") || !f["id"].is_string() || !f.contains("graph6") ||
            !is_graph6_text(f["graph6"])) {
          problems.push_back("families entries need string id and graph6");
          break;
        }
        distinct.insert(f["graph6"].get<std::string>());
      }
      if (doc.contains("counts") && doc["counts"].contains("predicted") &&
          doc["counts"]["predicted"].is_number_unsigned() &&
          doc["counts"]["predicted"].get<std::size_t>() != distinct.size() && problems.empty()) {
        problems.push_back("counts.predicted disagrees with the distinct family graphs");
      }
    }
  }
  if (need("elapsed_ms") && !(doc["elapsed_ms"].is_number() && doc["elapsed_ms"].get<double>() >= 0.0)) {
    problems.push_back("elapsed_ms must be a non-negative number");
  }
  return problems;
}

json profile_to_json(const ClassifiedGraph& item) {
  const auto& p = item.profile;
  return {{"graph6", item.graph6},
          {"n", p.order},
          {"spectrum", spectrum_to_json(p.spectrum)},
          {"m_partial1", p.m_partial1},
          {"m_partial1_exact", p.partial1_exact},
          {"m_n_exact", p.m_n_exact},
          {"m_second", p.m_second},
          {"case_label", case_label_name(p.case_label)}};
}

void write_profile_csv_header(std::ostream& out) { out << "graph6,n,spectrum,m_partial1,m_n_exact,case_label\n"; }

void write_profile_csv_row(std::ostream& out, const ClassifiedGraph& item) {
  const auto& p = item.profile;
  // graph6 never contains '"' or ','; the spectrum always needs quoting.
  out << item.graph6 << ',' << p.order << ",\"" << format_spectrum(p.spectrum) << "\"," << p.m_partial1 << ','
      << p.m_n_exact << ',' << case_label_name(p.case_label) << '\n';
}

}  // namespace dlspec
