#include "topoinf/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace topoinf {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool skip_line(std::string_view line) { return line.empty() || line.front() == '#'; }

std::vector<std::string_view> split_csv(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

bool parse_double(std::string_view field, double& value)
{
    // std::from_chars for double is available in libstdc++ 11.
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    if (first != last && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc{} && ptr == last && first != last;
}

std::vector<std::vector<double>> read_numeric_rows(std::istream& in, bool allow_header)
{
    std::vector<std::vector<double>> rows;
    std::string raw;
    std::size_t line_no = 0;
    bool first_content = true;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (skip_line(line))
            continue;
        std::vector<double> row;
        bool numeric = true;
        for (auto field : split_csv(line)) {
            double v = 0;
            if (!parse_double(field, v)) {
                numeric = false;
                break;
            }
            row.push_back(v);
        }
        if (!numeric) {
            if (allow_header && first_content) {
                first_content = false;
                continue;
            }
            throw InputError("line " + std::to_string(line_no) + ": non-numeric CSV field");
        }
        first_content = false;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::ifstream open(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file '" + path.string() + "'");
    return in;
}

} // namespace

InputKind parse_input_kind(std::string_view name)
{
    if (name == "strings")
        return InputKind::Strings;
    if (name == "vectors")
        return InputKind::Vectors;
    if (name == "matrix")
        return InputKind::Matrix;
    if (name == "graph")
        return InputKind::Graph;
    throw InputError("unknown input kind '" + std::string(name) + "'");
}

std::string_view to_string(InputKind kind) noexcept
{
    switch (kind) {
    case InputKind::Strings: return "strings";
    case InputKind::Vectors: return "vectors";
    case InputKind::Matrix: return "matrix";
    case InputKind::Graph: return "graph";
    }
    return "unknown";
}

InputKind default_input_kind(Metric metric) noexcept
{
    switch (metric) {
    case Metric::Edit:
    case Metric::Hamming: return InputKind::Strings;
    case Metric::Euclidean: return InputKind::Vectors;
    case Metric::Precomputed: return InputKind::Matrix;
    }
    return InputKind::Strings;
}

LabeledPointSet read_strings(std::istream& in)
{
    std::vector<std::string> items;
    std::string raw;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        const auto line = trim(raw);
        if (skip_line(line))
            continue;
        const auto end = line.find_first_of(" \t,");
        auto field = line.substr(0, end);
        if (items.empty() && !header_seen && field == "string") {
            header_seen = true; // CSV written by the grammar subcommand
            continue;
        }
        items.emplace_back(std::move(field));
    }
    if (items.empty())
        throw InputError("strings input contains no samples");
    return LabeledPointSet::from_strings(std::move(items));
}

LabeledPointSet read_vectors(std::istream& in)
{
    auto rows = read_numeric_rows(in, true);
    if (rows.empty())
        throw InputError("vector input contains no samples");
    std::vector<Eigen::VectorXd> vecs;
    vecs.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != rows.front().size())
            throw InputError("vector rows have inconsistent lengths");
        vecs.push_back(Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size())));
    }
    return LabeledPointSet::from_vectors(std::move(vecs));
}

LabeledPointSet read_matrix(std::istream& in)
{
    auto rows = read_numeric_rows(in, false);
    if (rows.empty())
        throw InputError("distance matrix input is empty");
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw InputError("distance matrix must be square");
        for (Eigen::Index j = 0; j < n; ++j)
            d(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return LabeledPointSet::from_matrix(std::move(d));
}

NeighborComplex read_edge_list(std::istream& in)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t n = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            const auto pos = line.find("vertices:");
            if (pos != std::string_view::npos) {
                std::istringstream ss{std::string(line.substr(pos + 9))};
                std::size_t k = 0;
                if (!(ss >> k))
                    throw InputError("line " + std::to_string(line_no) + ": malformed vertex count");
                n = std::max(n, k);
            }
            continue;
        }
        std::istringstream ss{std::string(line)};
        long long u = -1, v = -1;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra) || u < 0 || v < 0)
            throw InputError("line " + std::to_string(line_no) + ": expected two nonnegative vertex ids");
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        n = std::max({n, static_cast<std::size_t>(u) + 1, static_cast<std::size_t>(v) + 1});
    }
    if (n == 0)
        throw InputError("edge list defines no vertices");
    return NeighborComplex::from_edges(n, edges, "edge-list");
}

LabeledPointSet read_points(const std::filesystem::path& path, InputKind kind)
{
    auto in = open(path);
    switch (kind) {
    case InputKind::Strings: return read_strings(in);
    case InputKind::Vectors: return read_vectors(in);
    case InputKind::Matrix: return read_matrix(in);
    case InputKind::Graph: break;
    }
    throw InputError("graph input has no point set; read it with read_graph");
}

NeighborComplex read_graph(const std::filesystem::path& path)
{
    auto in = open(path);
    return read_edge_list(in);
}

} // namespace topoinf
