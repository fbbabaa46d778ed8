#include "topoinf/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "topoinf/graph_families.hpp"
#include "topoinf/grammars.hpp"
#include "topoinf/io.hpp"
#include "topoinf/masking.hpp"
#include "topoinf/report.hpp"
#include "topoinf/shapley.hpp"

namespace topoinf {

using nlohmann::json;

json RunConfig::echo() const
{
    json j{{"subcommand", subcommand}, {"seed", seed}, {"format", format}};
    if (subcommand == "influence" || subcommand == "sweep") {
        j["input"] = input;
        j["input_kind"] = input_kind.value_or(std::string(to_string(default_input_kind(parse_metric(metric)))));
        j["metric"] = metric;
        if (subcommand == "influence")
            j["radius"] = radius;
        else
            j["radii"] = radii;
    }
    if (subcommand == "influence" || subcommand == "sweep" || subcommand == "family" ||
        (subcommand == "grammar" && grammar_radius)) {
        if (sample > 0)
            j["method"] = {{"kind", "sampled"}, {"permutations", sample}};
        else
            j["method"] = {{"kind", "exact"}, {"cap", cap}};
    }
    if (subcommand == "family") {
        j["family"] = family;
        j["n"] = n;
        if (m)
            j["m"] = m;
        if (family == "er" || family == "erdos_renyi")
            j["p"] = p;
    }
    if (subcommand == "identities") {
        j["n_max"] = n_max;
        j["m_max"] = m_max;
    }
    if (subcommand == "grammar") {
        j["grammar"] = grammar;
        if (length_range)
            j["range"] = *length_range;
        else
            j["length"] = length;
        j["negatives"] = negatives;
        if (grammar_radius)
            j["radius"] = *grammar_radius;
    }
    if (subcommand == "mask") {
        j["count"] = count;
        j["n_range"] = {node_min, node_max};
        j["p_range"] = {p_min, p_max};
        j["j"] = j_values;
        j["data_seed"] = data_seed.value_or(seed);
    }
    return j;
}

namespace {

MethodSpec method_of(const RunConfig& c)
{
    MethodSpec m = c.sample > 0 ? MethodSpec::sampled(c.sample, c.seed) : MethodSpec::exact(c.cap);
    m.exact_cap = c.cap;
    m.threads = c.threads;
    return m;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos)
            throw InputError("");
        std::size_t a = std::stoul(text.substr(0, colon));
        std::size_t b = std::stoul(text.substr(colon + 1));
        if (a > b)
            throw InputError("");
        return {a, b};
    } catch (const std::exception&) {
        throw InputError("length range must look like A:B with A <= B, got '" + text + "'");
    }
}

ReportEnvelope run_selected(const RunConfig& c, std::ostream& err)
{
    ReportEnvelope env;
    env.config = c.echo();
    if (c.cap > kDefaultExactCap && c.cap <= kHardExactCap)
        err << "warning: exact cap raised to " << c.cap << "; enumeration visits 2^n subsets per run\n";

    if (c.subcommand == "influence" || c.subcommand == "sweep") {
        const Metric metric = parse_metric(c.metric);
        const InputKind kind = c.input_kind ? parse_input_kind(*c.input_kind) : default_input_kind(metric);
        if (kind == InputKind::Graph) {
            const NeighborComplex g = read_graph(c.input);
            if (c.subcommand == "sweep")
                throw InputError("sweep needs a metric input; graph input has no radius");
            InfluenceProfile prof = influence_of_complex(g, method_of(c));
            prof.metric = "graph";
            for (std::size_t i = 0; i < g.size(); ++i)
                prof.labels.push_back(std::to_string(i));
            env.payload_kind = "profile";
            env.payload = profile_to_json(prof);
            return env;
        }
        const LabeledPointSet points = read_points(c.input, kind);
        if (c.subcommand == "influence") {
            env.payload_kind = "profile";
            env.payload = profile_to_json(run_influence(points, metric, c.radius, method_of(c)));
        } else {
            env.payload_kind = "sweep";
            env.payload = sweep_to_json(r_sweep(points, metric, c.radii, method_of(c)));
        }
        return env;
    }

    if (c.subcommand == "family") {
        FamilySpec spec;
        spec.kind = parse_family_kind(c.family);
        spec.n = c.n;
        spec.m = c.m;
        spec.p = c.p;
        spec.seed = c.seed;
        if (!spec.analytic()) {
            InfluenceProfile prof = influence_of_complex(make_family(spec), method_of(c));
            prof.metric = "graph";
            for (std::size_t i = 0; i < spec.n; ++i)
                prof.labels.push_back(std::to_string(i));
            env.payload_kind = "profile";
            env.payload = profile_to_json(prof);
            return env;
        }
        env.payload_kind = "family";
        env.payload = closed_form_to_json(closed_form(spec));
        return env;
    }

    if (c.subcommand == "identities") {
        env.payload_kind = "identities";
        env.payload = identities_to_json(verify_closed_form_identities(c.n_max, c.m_max));
        return env;
    }

    if (c.subcommand == "grammar") {
        const GrammarSpec g = builtin_grammar(c.grammar);
        if (c.grammar_radius) {
            env.payload_kind = "profile";
            env.payload = profile_to_json(grammar_entropy(g, c.length, *c.grammar_radius, method_of(c)));
            return env;
        }
        auto [lo, hi] = c.length_range ? parse_range(*c.length_range) : std::pair{c.length, c.length};
        const auto strings = grammar_dataset(g, lo, hi, c.negatives);
        if (strings.empty())
            err << "note: grammar " << g.name << " produces no strings in the requested lengths\n";
        env.payload_kind = "grammar";
        env.payload = grammar_set_to_json(g.name, strings);
        return env;
    }

    if (c.subcommand == "mask") {
        ErEnsembleConfig ens;
        ens.count = c.count;
        ens.n_min = c.node_min;
        ens.n_max = c.node_max;
        ens.p_min = c.p_min;
        ens.p_max = c.p_max;
        ens.seed = c.data_seed.value_or(c.seed);
        const auto dataset = generate_er_dataset(ens);
        MaskingReport rep = run_masking_experiment(dataset, c.j_values, c.seed, method_of(c));
        rep.dataset_seed = ens.seed;
        env.payload_kind = "masking";
        env.payload = masking_to_json(rep);
        return env;
    }

    throw InputError("no subcommand selected");
}

} // namespace

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const ReportFormat format = parse_report_format(config.format);
        ReportEnvelope env = run_selected(config, err);
        const std::string bytes = emit_report(env, format, config.bits);
        if (config.output.empty())
            out << bytes;
        else
            write_file(config.output, bytes);
        if (!config.csv_output.empty())
            write_file(config.csv_output, emit_report(env, ReportFormat::Csv));
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::Input: return kExitInputError;
        case ErrorKind::SizeCap: return kExitSizeCap;
        case ErrorKind::Numeric: return kExitNumeric;
        case ErrorKind::Io: return kExitIo;
        }
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Shapley decomposition of the 0th Betti number of neighbor complexes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    RunConfig c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", c.seed, "Random seed (echoed into the report)");
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--output", c.output, "Write the report to this path instead of stdout");
        sub->add_flag("--bits", c.bits, "Display entropy in bits (table output)");
    };
    auto add_method = [&](CLI::App* sub) {
        auto* exact = sub->add_flag("--exact", "Exact subset enumeration (default)");
        auto* sample = sub->add_option("--sample", c.sample, "Sampled Shapley with this many permutations")
                           ->check(CLI::PositiveNumber);
        exact->excludes(sample);
        sub->add_option("--cap", c.cap, "Largest vertex count for exact enumeration")->check(CLI::Range(1, 26));
        sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 64));
    };
    auto add_points = [&](CLI::App* sub) {
        sub->add_option("--input", c.input, "Input file")->required();
        sub->add_option("--kind", c.input_kind, "Input layout")
            ->check(CLI::IsMember({"strings", "vectors", "matrix", "graph"}));
        sub->add_option("--metric", c.metric, "Distance")
            ->check(CLI::IsMember({"edit", "hamming", "euclidean", "precomputed"}));
    };

    auto* influence = app.add_subcommand("influence", "Influence profile of a dataset at one radius");
    add_points(influence);
    influence->add_option("--radius", c.radius, "Neighbor radius r (edge iff d <= r)");
    add_method(influence);
    add_common(influence);

    auto* sweep = app.add_subcommand("sweep", "Influence profiles over several radii");
    add_points(sweep);
    sweep->add_option("--radii", c.radii, "Comma-separated radii")->delimiter(',')->required();
    add_method(sweep);
    add_common(sweep);

    auto* family = app.add_subcommand("family", "Closed-form influence of a special graph family");
    family->add_option("--kind", c.family, "complete|cycle|wheel|star|path|bipartite|er")->required();
    family->add_option("--n", c.n, "Vertex count (n side for bipartite)")->required();
    family->add_option("--m", c.m, "m side of K_{m,n}");
    family->add_option("--p", c.p, "Edge probability for er");
    add_method(family);
    add_common(family);

    auto* identities = app.add_subcommand("identities", "Check the closed-form combinatorial identities exactly");
    identities->add_option("--nmax", c.n_max, "Largest N")->check(CLI::Range(1, 25));
    identities->add_option("--mmax", c.m_max, "Largest m");
    add_common(identities);

    auto* grammar = app.add_subcommand("grammar", "Enumerate strings of a built-in grammar");
    grammar->add_option("--g", c.grammar, "Grammar 1..4")->required()->check(CLI::Range(1, 4));
    auto* len = grammar->add_option("--len", c.length, "String length N");
    auto* range = grammar->add_option("--range", c.length_range, "Length range A:B");
    len->excludes(range);
    grammar->add_flag("--neg", c.negatives, "Also emit rejected strings");
    grammar->add_option("--radius", c.grammar_radius, "Compute the influence profile at this radius instead");
    add_method(grammar);
    add_common(grammar);

    auto* mask = app.add_subcommand("mask", "Influence-guided vertex masking on an ER ensemble");
    mask->add_option("--count", c.count, "Number of graphs");
    mask->add_option("--nmin", c.node_min, "Smallest graph");
    mask->add_option("--nmax", c.node_max, "Largest graph");
    mask->add_option("--pmin", c.p_min, "Smallest edge probability");
    mask->add_option("--pmax", c.p_max, "Largest edge probability");
    mask->add_option("--j", c.j_values, "Comma-separated mask sizes")->delimiter(',');
    mask->add_option("--data-seed", c.data_seed, "Seed for the ensemble (defaults to --seed)");
    mask->add_option("--csv", c.csv_output, "Also write per-graph outcomes as CSV to this path");
    add_method(mask);
    add_common(mask);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? kExitOk : kExitInputError;
    }

    for (auto* sub : app.get_subcommands())
        c.subcommand = sub->get_name();
    if (c.subcommand == "grammar" && grammar->count("--format") == 0)
        c.format = "table";
    if (c.subcommand == "grammar" && c.grammar_radius && grammar->count("--format") == 0)
        c.format = "json";
    return dispatch(c, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.push_back("topoinf");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace topoinf
