#include "topoinf/metric_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <iomanip>
#include <sstream>

namespace topoinf {

namespace {

// FNV-1a over the raw matrix bytes; identifies which distances a complex came from.
std::string fingerprint(const Eigen::MatrixXd& d)
{
    std::uint64_t h = 1469598103934665603ull;
    const auto* bytes = reinterpret_cast<const unsigned char*>(d.data());
    const std::size_t len = static_cast<std::size_t>(d.size()) * sizeof(double);
    for (std::size_t k = 0; k < len; ++k) {
        h ^= bytes[k];
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "dm:" << d.rows() << ':' << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

const char* kind_name(const Sample& s)
{
    switch (s.index()) {
    case 0: return "string";
    case 1: return "vector";
    default: return "opaque";
    }
}

} // namespace

std::string LabeledPointSet::label(std::size_t i) const
{
    if (i < labels.size() && !labels[i].empty())
        return labels[i];
    if (const auto* s = std::get_if<std::string>(&items.at(i)))
        return *s;
    return std::to_string(i);
}

LabeledPointSet LabeledPointSet::from_strings(std::vector<std::string> strings)
{
    LabeledPointSet p;
    p.items.reserve(strings.size());
    for (auto& s : strings)
        p.items.emplace_back(std::move(s));
    return p;
}

LabeledPointSet LabeledPointSet::from_vectors(std::vector<Eigen::VectorXd> rows)
{
    LabeledPointSet p;
    p.items.reserve(rows.size());
    for (auto& r : rows)
        p.items.emplace_back(std::move(r));
    return p;
}

LabeledPointSet LabeledPointSet::from_matrix(Eigen::MatrixXd distances)
{
    LabeledPointSet p;
    for (Eigen::Index i = 0; i < distances.rows(); ++i)
        p.items.emplace_back(OpaqueId{static_cast<std::size_t>(i)});
    p.precomputed = std::move(distances);
    return p;
}

std::string_view to_string(Metric m) noexcept
{
    switch (m) {
    case Metric::Edit: return "edit";
    case Metric::Hamming: return "hamming";
    case Metric::Euclidean: return "euclidean";
    case Metric::Precomputed: return "precomputed";
    }
    return "unknown";
}

Metric parse_metric(std::string_view name)
{
    if (name == "edit")
        return Metric::Edit;
    if (name == "hamming")
        return Metric::Hamming;
    if (name == "euclidean")
        return Metric::Euclidean;
    if (name == "precomputed")
        return Metric::Precomputed;
    throw InputError("unknown metric '" + std::string(name) + "'");
}

std::size_t edit_distance(std::string_view a, std::string_view b)
{
    if (a.size() < b.size())
        std::swap(a, b);
    // Two-row DP over the shorter string.
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

DistanceMatrix build_distance_matrix(const LabeledPointSet& points, Metric metric)
{
    const std::size_t n = points.size();
    if (n == 0)
        throw InputError("point set is empty");
    const std::size_t kind = points.items.front().index();
    for (const auto& s : points.items)
        if (s.index() != kind)
            throw InputError(std::string("mixed sample kinds: ") + kind_name(points.items.front()) + " and " +
                             kind_name(s));

    if (metric == Metric::Precomputed || kind == 2) {
        if (metric != Metric::Precomputed || kind != 2 || !points.precomputed)
            throw InputError("precomputed metric requires opaque samples with a distance matrix");
        const auto& full = *points.precomputed;
        if (full.rows() != full.cols())
            throw InputError("precomputed distance matrix must be square");
        Eigen::MatrixXd d(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto a = std::get<OpaqueId>(points.items[i]).index;
                const auto b = std::get<OpaqueId>(points.items[j]).index;
                if (a >= static_cast<std::size_t>(full.rows()) || b >= static_cast<std::size_t>(full.rows()))
                    throw InputError("opaque sample index outside precomputed matrix");
                d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    full(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            }
        }
        return DistanceMatrix(std::move(d));
    }

    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    auto put = [&](std::size_t i, std::size_t j, double v) {
        d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    };

    if (kind == 0) {
        if (metric != Metric::Edit && metric != Metric::Hamming)
            throw InputError("metric '" + std::string(to_string(metric)) + "' does not apply to strings");
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = std::get<std::string>(points.items[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto& b = std::get<std::string>(points.items[j]);
                if (metric == Metric::Edit) {
                    put(i, j, static_cast<double>(edit_distance(a, b)));
                } else {
                    if (a.size() != b.size())
                        throw InputError("hamming metric requires equal-length strings");
                    std::size_t diff = 0;
                    for (std::size_t k = 0; k < a.size(); ++k)
                        diff += a[k] != b[k];
                    put(i, j, static_cast<double>(diff));
                }
            }
        }
    } else {
        if (metric != Metric::Euclidean && metric != Metric::Hamming)
            throw InputError("metric '" + std::string(to_string(metric)) + "' does not apply to vectors");
        const auto dim = std::get<Eigen::VectorXd>(points.items[0]).size();
        for (const auto& s : points.items)
            if (std::get<Eigen::VectorXd>(s).size() != dim)
                throw InputError("vectors have inconsistent dimensions");
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = std::get<Eigen::VectorXd>(points.items[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto& b = std::get<Eigen::VectorXd>(points.items[j]);
                put(i, j, metric == Metric::Euclidean ? euclidean_distance(a, b) : hamming_distance(a, b));
            }
        }
    }
    return DistanceMatrix(std::move(d));
}

NeighborComplex::NeighborComplex(std::size_t n, double resolution, std::string source)
    : rows_(n, VertexSet(n)), resolution_(resolution), source_(std::move(source))
{
}

NeighborComplex NeighborComplex::from_edges(std::size_t n,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                            std::string source)
{
    NeighborComplex g(n, 0.0, std::move(source));
    for (const auto& [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void NeighborComplex::add_edge(std::size_t i, std::size_t j)
{
    if (i >= size() || j >= size())
        throw InputError("edge endpoint out of range");
    if (i == j)
        throw InputError("self-loops are not allowed");
    rows_[i].set(j);
    rows_[j].set(i);
}

std::size_t NeighborComplex::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& r : rows_)
        twice += r.count();
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> NeighborComplex::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        rows_[i].for_each([&](std::size_t j) {
            if (i < j)
                out.emplace_back(i, j);
        });
    return out;
}

NeighborComplex NeighborComplex::induced(const VertexSet& keep) const
{
    const auto kept = keep.indices();
    std::vector<std::size_t> new_index(size(), size());
    for (std::size_t k = 0; k < kept.size(); ++k)
        new_index[kept[k]] = k;
    NeighborComplex g(kept.size(), resolution_, source_);
    for (std::size_t k = 0; k < kept.size(); ++k)
        rows_[kept[k]].for_each([&](std::size_t j) {
            if (new_index[j] < kept.size())
                g.rows_[k].set(new_index[j]);
        });
    return g;
}

NeighborComplex NeighborComplex::permuted(const std::vector<std::size_t>& perm) const
{
    if (perm.size() != size())
        throw InputError("permutation size mismatch");
    NeighborComplex g(size(), resolution_, source_);
    for (std::size_t i = 0; i < size(); ++i)
        rows_[i].for_each([&](std::size_t j) { g.rows_[perm[i]].set(perm[j]); });
    return g;
}

NeighborComplex build_complex(const DistanceMatrix& dm, double r)
{
    if (!(r >= 0.0))
        throw InputError("resolution must be nonnegative");
    const std::size_t n = dm.size();
    NeighborComplex g(n, r, fingerprint(dm.matrix()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dm(i, j) <= r)
                g.add_edge(i, j);
    return g;
}

bool is_subcomplex(const NeighborComplex& lower, const NeighborComplex& upper)
{
    if (lower.size() != upper.size())
        return false;
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (!((lower.neighbors(i) & upper.neighbors(i)) == lower.neighbors(i)))
            return false;
    return true;
}

} // namespace topoinf
