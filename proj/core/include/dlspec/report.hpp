#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "dlspec/spectral.hpp"
#include "dlspec/verifier.hpp"

namespace dlspec {

/// Integral values print without decimals, others with up to six.
std::string format_value(double value);
/// "11^3, 7^3, 0".
std::string format_spectrum(const SpectrumNumeric& spectrum);

/// [[value, multiplicity], ...]
nlohmann::json spectrum_to_json(const SpectrumNumeric& spectrum);

nlohmann::json report_to_json(const VerificationReport& report);
/// Schema problems, empty when the document is a well-formed report.
std::vector<std::string> validate_report_json(const nlohmann::json& doc);

nlohmann::json profile_to_json(const ClassifiedGraph& item);

/// Columns: graph6, n, spectrum, m_partial1, m_n_exact, case_label.
void write_profile_csv_header(std::ostream& out);
void write_profile_csv_row(std::ostream& out, const ClassifiedGraph& item);

}  // namespace dlspec
