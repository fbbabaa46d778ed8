#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "topoinf/graph_families.hpp"
#include "topoinf/grammars.hpp"
#include "topoinf/masking.hpp"
#include "topoinf/shapley.hpp"

namespace topoinf {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class ReportFormat { Json, Csv, Table };
ReportFormat parse_report_format(std::string_view name);

/**
 * Versioned output document. `payload_kind` is one of "profile", "sweep",
 * "family", "identities", "grammar", "masking".
 */
struct ReportEnvelope
{
    int schema_version = kReportSchemaVersion;
    std::string tool_version = std::string(kToolVersion);
    nlohmann::json config = nlohmann::json::object();
    std::string payload_kind;
    nlohmann::json payload;

    nlohmann::json to_json() const;
    static ReportEnvelope from_json(const nlohmann::json& j);

    friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

nlohmann::json profile_to_json(const InfluenceProfile& p);
InfluenceProfile profile_from_json(const nlohmann::json& j);
nlohmann::json sweep_to_json(const std::vector<InfluenceProfile>& profiles);
nlohmann::json closed_form_to_json(const ClosedFormResult& res);
nlohmann::json identities_to_json(const IdentityReport& rep);
nlohmann::json grammar_set_to_json(const std::string& grammar, const std::vector<LabeledString>& strings);
nlohmann::json masking_to_json(const MaskingReport& rep);

/// Serializes the envelope; identical envelopes give identical bytes.
std::string emit_report(const ReportEnvelope& env, ReportFormat format, bool entropy_in_bits = false);

/// Writes bytes to `path`, or throws IoError if the destination is unwritable.
void write_file(const std::string& path, std::string_view bytes);

/// %.17g rendering used by the CSV and table writers.
std::string format_real(double v);

} // namespace topoinf
