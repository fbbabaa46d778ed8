#include "topoinf/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace topoinf {

using nlohmann::json;

std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ReportFormat parse_report_format(std::string_view name)
{
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "table")
        return ReportFormat::Table;
    throw InputError("unknown output format '" + std::string(name) + "'");
}

json ReportEnvelope::to_json() const
{
    return json{{"schema_version", schema_version},
                {"tool_version", tool_version},
                {"config", config},
                {"payload_kind", payload_kind},
                {"payload", payload}};
}

ReportEnvelope ReportEnvelope::from_json(const json& j)
{
    ReportEnvelope env;
    env.schema_version = j.at("schema_version").get<int>();
    if (env.schema_version != kReportSchemaVersion)
        throw InputError("unsupported report schema version " + std::to_string(env.schema_version));
    env.tool_version = j.at("tool_version").get<std::string>();
    env.config = j.at("config");
    env.payload_kind = j.at("payload_kind").get<std::string>();
    env.payload = j.at("payload");
    return env;
}

json profile_to_json(const InfluenceProfile& p)
{
    json method;
    if (p.method.kind == MethodKind::Exact) {
        method = {{"kind", "exact"}, {"cap", p.method.exact_cap}};
    } else {
        method = {{"kind", "sampled"}, {"permutations", p.method.num_permutations}, {"seed", p.method.seed}};
    }
    json j{{"n", p.size()},   {"labels", p.labels},         {"shapley", p.shapley},
           {"mu", p.mu},      {"entropy", p.entropy},       {"method", method},
           {"resolution", p.resolution}, {"metric", p.metric}, {"ranking", rank_by_influence(p.mu)}};
    if (!p.std_errors.empty())
        j["std_errors"] = p.std_errors;
    return j;
}

InfluenceProfile profile_from_json(const json& j)
{
    InfluenceProfile p;
    p.labels = j.at("labels").get<std::vector<std::string>>();
    p.shapley = j.at("shapley").get<std::vector<double>>();
    p.mu = j.at("mu").get<std::vector<double>>();
    p.entropy = j.at("entropy").get<double>();
    p.resolution = j.at("resolution").get<double>();
    p.metric = j.at("metric").get<std::string>();
    if (j.contains("std_errors"))
        p.std_errors = j.at("std_errors").get<std::vector<double>>();
    const auto& m = j.at("method");
    if (m.at("kind") == "exact") {
        p.method = MethodSpec::exact(m.at("cap").get<std::size_t>());
    } else {
        p.method = MethodSpec::sampled(m.at("permutations").get<std::size_t>(), m.at("seed").get<std::uint64_t>());
    }
    return p;
}

json sweep_to_json(const std::vector<InfluenceProfile>& profiles)
{
    json arr = json::array();
    for (const auto& p : profiles)
        arr.push_back(profile_to_json(p));
    return json{{"profiles", arr}};
}

json closed_form_to_json(const ClosedFormResult& res)
{
    json roles = json::array();
    for (const auto& r : res.roles)
        roles.push_back({{"role", r.role},
                         {"multiplicity", r.multiplicity()},
                         {"vertices", r.vertices},
                         {"shapley", to_double(r.shapley)},
                         {"influence", to_double(r.influence)},
                         {"shapley_exact", to_string(r.shapley)},
                         {"influence_exact", to_string(r.influence)}});
    return json{{"family", std::string(to_string(res.spec.kind))},
                {"name", describe(res.spec)},
                {"vertices", res.spec.vertex_count()},
                {"roles", roles},
                {"entropy", res.entropy}};
}

json identities_to_json(const IdentityReport& rep)
{
    json bad = json::array();
    for (const auto& m : rep.mismatches)
        bad.push_back({{"identity", m.identity},
                       {"a", m.a},
                       {"b", m.b},
                       {"lhs", to_string(m.lhs)},
                       {"rhs", to_string(m.rhs)}});
    return json{{"checked", rep.checked},
                {"checked_per_identity", rep.checked_per_identity},
                {"mismatches", bad},
                {"ok", rep.ok()}};
}

json grammar_set_to_json(const std::string& grammar, const std::vector<LabeledString>& strings)
{
    json rows = json::array();
    for (const auto& s : strings)
        rows.push_back({{"string", s.text}, {"accepted", s.accepted}});
    return json{{"grammar", grammar}, {"strings", rows}};
}

json masking_to_json(const MaskingReport& rep)
{
    json rates = json::array();
    for (const auto& r : rep.rates)
        rates.push_back({{"j", r.j}, {"top", r.top}, {"bottom", r.bottom}, {"random", r.random}});
    json outcomes = json::array();
    for (const auto& o : rep.outcomes)
        outcomes.push_back({{"graph", o.graph},
                            {"j", o.j},
                            {"variant", std::string(to_string(o.variant))},
                            {"label_before", o.label_before},
                            {"label_after", o.label_after},
                            {"flipped", o.flipped()},
                            {"masked", o.masked}});
    return json{{"rates", rates},
                {"outcomes", outcomes},
                {"ensemble",
                 {{"graphs", rep.graph_count},
                  {"n_min", rep.n_min},
                  {"n_max", rep.n_max},
                  {"p_min", rep.p_min},
                  {"p_max", rep.p_max},
                  {"dataset_seed", rep.dataset_seed},
                  {"experiment_seed", rep.experiment_seed}}}};
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string num(const json& v)
{
    if (v.is_number_float())
        return format_real(v.get<double>());
    return v.dump();
}

std::string join_indices(const json& arr)
{
    std::string out;
    for (const auto& v : arr)
        out += (out.empty() ? "" : " ") + v.dump();
    return out;
}

void profile_rows(std::ostream& os, const json& p, const std::string& prefix)
{
    const bool sampled = p.contains("std_errors");
    for (std::size_t i = 0; i < p.at("mu").size(); ++i) {
        os << prefix << i << ',' << csv_field(p["labels"][i].get<std::string>()) << ',' << num(p["shapley"][i]) << ','
           << num(p["mu"][i]);
        if (sampled)
            os << ',' << num(p["std_errors"][i]);
        os << '\n';
    }
}

std::string to_csv(const ReportEnvelope& env)
{
    std::ostringstream os;
    const auto& p = env.payload;
    if (env.payload_kind == "profile") {
        os << "index,label,shapley,mu" << (p.contains("std_errors") ? ",std_error" : "") << '\n';
        profile_rows(os, p, "");
    } else if (env.payload_kind == "sweep") {
        const auto& profs = p.at("profiles");
        const bool sampled = !profs.empty() && profs[0].contains("std_errors");
        os << "radius,index,label,shapley,mu" << (sampled ? ",std_error" : "") << '\n';
        for (const auto& prof : profs)
            profile_rows(os, prof, num(prof.at("resolution")) + ",");
    } else if (env.payload_kind == "family") {
        os << "family,role,multiplicity,shapley,influence,shapley_exact,influence_exact\n";
        for (const auto& r : p.at("roles"))
            os << csv_field(p["name"].get<std::string>()) << ',' << r["role"].get<std::string>() << ','
               << r["multiplicity"].dump() << ',' << num(r["shapley"]) << ',' << num(r["influence"]) << ','
               << r["shapley_exact"].get<std::string>() << ',' << r["influence_exact"].get<std::string>() << '\n';
    } else if (env.payload_kind == "identities") {
        os << "identity,checked,mismatches\n";
        for (int id = 1; id <= 3; ++id) {
            std::size_t bad = 0;
            for (const auto& m : p.at("mismatches"))
                bad += m["identity"].get<int>() == id;
            os << id << ',' << p["checked_per_identity"][static_cast<std::size_t>(id - 1)].dump() << ',' << bad
               << '\n';
        }
    } else if (env.payload_kind == "grammar") {
        os << "string,accepted\n";
        for (const auto& s : p.at("strings"))
            os << s["string"].get<std::string>() << ',' << (s["accepted"].get<bool>() ? 1 : 0) << '\n';
    } else if (env.payload_kind == "masking") {
        os << "graph,j,variant,label_before,label_after,flipped,masked\n";
        for (const auto& o : p.at("outcomes"))
            os << o["graph"].dump() << ',' << o["j"].dump() << ',' << o["variant"].get<std::string>() << ','
               << o["label_before"].dump() << ',' << o["label_after"].dump() << ','
               << (o["flipped"].get<bool>() ? 1 : 0) << ',' << join_indices(o["masked"]) << '\n';
    } else {
        throw InputError("no CSV layout for payload kind '" + env.payload_kind + "'");
    }
    return os.str();
}

void profile_table(std::ostream& os, const json& p, bool bits)
{
    const double scale = bits ? 1.0 / std::numbers::ln2 : 1.0;
    os << "resolution " << num(p.at("resolution")) << "  metric " << p.at("metric").get<std::string>()
       << "  method " << p["method"]["kind"].get<std::string>() << '\n';
    os << std::left << std::setw(6) << "index" << std::setw(20) << "label" << std::setw(24) << "shapley"
       << "mu\n";
    for (std::size_t i = 0; i < p.at("mu").size(); ++i)
        os << std::left << std::setw(6) << i << std::setw(20) << p["labels"][i].get<std::string>() << std::setw(24)
           << num(p["shapley"][i]) << num(p["mu"][i]) << '\n';
    os << "entropy " << format_real(p.at("entropy").get<double>() * scale) << (bits ? " bits" : " nats") << '\n';
}

std::string to_table(const ReportEnvelope& env, bool bits)
{
    std::ostringstream os;
    const auto& p = env.payload;
    const double scale = bits ? 1.0 / std::numbers::ln2 : 1.0;
    os << "# " << env.payload_kind << "  schema " << env.schema_version << "  tool " << env.tool_version;
    if (env.config.contains("seed"))
        os << "  seed " << env.config["seed"].dump();
    os << '\n';
    if (env.payload_kind == "profile") {
        profile_table(os, p, bits);
    } else if (env.payload_kind == "sweep") {
        for (const auto& prof : p.at("profiles")) {
            profile_table(os, prof, bits);
            os << '\n';
        }
    } else if (env.payload_kind == "family") {
        os << p.at("name").get<std::string>() << " (" << p.at("vertices").dump() << " vertices)\n";
        os << std::left << std::setw(12) << "role" << std::setw(6) << "count" << std::setw(40) << "shapley"
           << "influence\n";
        for (const auto& r : p.at("roles"))
            os << std::left << std::setw(12) << r["role"].get<std::string>() << std::setw(6)
               << r["multiplicity"].dump() << std::setw(40)
               << (r["shapley_exact"].get<std::string>() + " (" + num(r["shapley"]) + ") ")
               << r["influence_exact"].get<std::string>() << " (" << num(r["influence"]) << ")\n";
        os << "entropy " << format_real(p.at("entropy").get<double>() * scale) << (bits ? " bits" : " nats") << '\n';
    } else if (env.payload_kind == "identities") {
        os << "checked " << p.at("checked").dump() << "  mismatches " << p.at("mismatches").size() << '\n';
        for (const auto& m : p.at("mismatches"))
            os << "  identity " << m["identity"].dump() << " at (" << m["a"].dump() << ", " << m["b"].dump()
               << "): " << m["lhs"].get<std::string>() << " != " << m["rhs"].get<std::string>() << '\n';
    } else if (env.payload_kind == "grammar") {
        for (const auto& s : p.at("strings"))
            os << s["string"].get<std::string>() << '\t' << (s["accepted"].get<bool>() ? "accept" : "reject")
               << '\n';
    } else if (env.payload_kind == "masking") {
        const auto& e = p.at("ensemble");
        os << "graphs " << e["graphs"].dump() << "  n " << e["n_min"].dump() << ".." << e["n_max"].dump()
           << "  p " << num(e["p_min"]) << ".." << num(e["p_max"]) << '\n';
        os << std::left << std::setw(4) << "J" << std::setw(24) << "top" << std::setw(24) << "random"
           << "bottom\n";
        for (const auto& r : p.at("rates"))
            os << std::left << std::setw(4) << r["j"].dump() << std::setw(24) << num(r["top"]) << std::setw(24)
               << num(r["random"]) << num(r["bottom"]) << '\n';
    } else {
        throw InputError("no table layout for payload kind '" + env.payload_kind + "'");
    }
    return os.str();
}

} // namespace

std::string emit_report(const ReportEnvelope& env, ReportFormat format, bool entropy_in_bits)
{
    switch (format) {
    case ReportFormat::Json: return env.to_json().dump(2) + "\n";
    case ReportFormat::Csv: return to_csv(env);
    case ReportFormat::Table: return to_table(env, entropy_in_bits);
    }
    return {};
}

void write_file(const std::string& path, std::string_view bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

} // namespace topoinf
