#include "topoinf/masking.hpp"

#include <algorithm>
#include <array>

#include "topoinf/graph_families.hpp"
#include "topoinf/homology.hpp"
#include "topoinf/random.hpp"

namespace topoinf {

namespace {

std::size_t component_count(const NeighborComplex& g)
{
    return betti0_union_find(g, VertexSet::full(g.size()));
}

} // namespace

LabeledGraph draw_er_graph(const ErEnsembleConfig& cfg, std::uint64_t attempt)
{
    if (cfg.n_min == 0 || cfg.n_min > cfg.n_max)
        throw InputError("ER node range is empty");
    if (!(cfg.p_min >= 0.0 && cfg.p_min <= cfg.p_max && cfg.p_max <= 1.0))
        throw InputError("ER probability range must satisfy 0 <= p_min <= p_max <= 1");
    StreamRng rng(cfg.seed, attempt);
    const std::size_t n = cfg.n_min + rng.below(cfg.n_max - cfg.n_min + 1);
    const double p = cfg.p_min + (cfg.p_max - cfg.p_min) * rng.uniform();
    LabeledGraph lg;
    lg.graph = make_family(FamilySpec::erdos_renyi(n, p, rng.next()));
    lg.label = component_count(lg.graph);
    lg.p = p;
    lg.attempt = attempt;
    return lg;
}

std::vector<LabeledGraph> generate_er_dataset(const ErEnsembleConfig& cfg)
{
    if (cfg.classes == 0)
        throw InputError("need at least one class");
    std::vector<std::size_t> quota(cfg.classes, cfg.count / cfg.classes);
    for (std::size_t c = 0; c < cfg.count % cfg.classes; ++c)
        ++quota[c];

    std::vector<std::vector<LabeledGraph>> buckets(cfg.classes);
    std::size_t remaining = cfg.count;
    std::uint64_t attempt = 0;
    for (; remaining > 0 && attempt < cfg.max_attempts; ++attempt) {
        LabeledGraph lg = draw_er_graph(cfg, attempt);
        if (lg.label == 0 || lg.label > cfg.classes)
            continue;
        auto& bucket = buckets[lg.label - 1];
        if (bucket.size() < quota[lg.label - 1]) {
            bucket.push_back(std::move(lg));
            --remaining;
        }
    }
    if (remaining > 0) {
        std::string filled;
        for (std::size_t c = 0; c < cfg.classes; ++c)
            filled += (c ? ", " : "") + std::to_string(buckets[c].size()) + "/" + std::to_string(quota[c]);
        throw InputError("ER classes unreachable after " + std::to_string(cfg.max_attempts) + " draws (n " +
                         std::to_string(cfg.n_min) + ".." + std::to_string(cfg.n_max) + ", p " +
                         std::to_string(cfg.p_min) + ".." + std::to_string(cfg.p_max) + "; filled " + filled + ")");
    }

    // Class-major order, each class in draw order.
    std::vector<LabeledGraph> out;
    out.reserve(cfg.count);
    for (auto& b : buckets)
        for (auto& lg : b)
            out.push_back(std::move(lg));
    return out;
}

std::vector<std::size_t> rank_nodes(const NeighborComplex& g, const MethodSpec& method)
{
    const InfluenceProfile prof = influence_of_complex(g, method);
    return rank_by_influence(prof.mu);
}

NeighborComplex mask_nodes(const NeighborComplex& g, std::span<const std::size_t> masked)
{
    VertexSet keep = VertexSet::full(g.size());
    for (auto v : masked) {
        if (v >= g.size())
            throw InputError("masked vertex " + std::to_string(v) + " out of range");
        keep.reset(v);
    }
    if (keep.none())
        throw InputError("masking would remove every vertex");
    return g.induced(keep);
}

std::string_view to_string(MaskVariant v) noexcept
{
    switch (v) {
    case MaskVariant::Top: return "top";
    case MaskVariant::Bottom: return "bottom";
    case MaskVariant::Random: return "random";
    }
    return "unknown";
}

MaskingReport run_masking_experiment(std::span<const LabeledGraph> dataset, std::span<const std::size_t> j_values,
                                     std::uint64_t seed, const MethodSpec& method)
{
    if (dataset.empty())
        throw InputError("masking experiment needs at least one graph");
    MaskingReport rep;
    rep.graph_count = dataset.size();
    rep.experiment_seed = seed;
    rep.n_min = dataset.front().graph.size();
    rep.p_min = rep.p_max = dataset.front().p;
    for (const auto& lg : dataset) {
        rep.n_min = std::min(rep.n_min, lg.graph.size());
        rep.n_max = std::max(rep.n_max, lg.graph.size());
        rep.p_min = std::min(rep.p_min, lg.p);
        rep.p_max = std::max(rep.p_max, lg.p);
    }
    for (auto j : j_values)
        if (j >= rep.n_min)
            throw InputError("J = " + std::to_string(j) + " is not below the smallest graph size " +
                             std::to_string(rep.n_min));

    std::vector<std::array<std::size_t, 3>> flips(j_values.size(), {0, 0, 0});
    for (std::size_t gi = 0; gi < dataset.size(); ++gi) {
        const auto& g = dataset[gi].graph;
        const std::size_t before = component_count(g);
        const auto ranking = rank_nodes(g, method);
        for (std::size_t ji = 0; ji < j_values.size(); ++ji) {
            const std::size_t j = j_values[ji];
            const auto shuffled = sample_permutation(g.size(), splitmix64(seed) ^ j, gi);
            const std::vector<std::size_t> chosen[3] = {
                {ranking.begin(), ranking.begin() + static_cast<std::ptrdiff_t>(j)},
                {ranking.end() - static_cast<std::ptrdiff_t>(j), ranking.end()},
                {shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(j)},
            };
            for (int v = 0; v < 3; ++v) {
                MaskOutcome o;
                o.graph = gi;
                o.j = j;
                o.variant = static_cast<MaskVariant>(v);
                o.label_before = before;
                o.label_after = component_count(mask_nodes(g, chosen[v]));
                o.masked = chosen[v];
                if (o.flipped())
                    ++flips[ji][static_cast<std::size_t>(v)];
                rep.outcomes.push_back(std::move(o));
            }
        }
    }
    const auto total = static_cast<double>(dataset.size());
    for (std::size_t ji = 0; ji < j_values.size(); ++ji)
        rep.rates.push_back({j_values[ji], static_cast<double>(flips[ji][0]) / total,
                             static_cast<double>(flips[ji][1]) / total, static_cast<double>(flips[ji][2]) / total});
    return rep;
}

} // namespace topoinf
