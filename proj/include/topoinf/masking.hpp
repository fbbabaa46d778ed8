#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "topoinf/shapley.hpp"

namespace topoinf {

struct ErEnsembleConfig
{
    std::size_t count = 300;
    std::size_t n_min = 8;
    std::size_t n_max = 14;
    double p_min = 0.02;
    double p_max = 0.21;
    std::size_t classes = 3;
    std::uint64_t seed = 0;
    std::size_t max_attempts = 1'000'000;
};

struct LabeledGraph
{
    NeighborComplex graph;
    std::size_t label = 0; ///< connected-component count
    double p = 0.0;
    std::uint64_t attempt = 0; ///< draw index that produced the graph
};

/// Candidate graph number `attempt` of the rejection sampler, labeled by its component count.
LabeledGraph draw_er_graph(const ErEnsembleConfig& cfg, std::uint64_t attempt);

/**
 * Rejection-samples ER graphs until every class 1..classes holds its quota
 * (count / classes, the remainder going to the lowest classes). Graphs with
 * more than `classes` components are discarded. Throws InputError when the
 * quotas are not met within `max_attempts` draws.
 */
std::vector<LabeledGraph> generate_er_dataset(const ErEnsembleConfig& cfg);

/// Vertices by descending influence, ties by ascending index.
std::vector<std::size_t> rank_nodes(const NeighborComplex& g, const MethodSpec& method = MethodSpec::exact());

/// Induced subgraph on the vertices not in `masked`. Throws InputError when nothing would remain.
NeighborComplex mask_nodes(const NeighborComplex& g, std::span<const std::size_t> masked);

enum class MaskVariant { Top, Bottom, Random };
std::string_view to_string(MaskVariant v) noexcept;

struct MaskOutcome
{
    std::size_t graph = 0;
    std::size_t j = 0;
    MaskVariant variant = MaskVariant::Top;
    std::size_t label_before = 0;
    std::size_t label_after = 0;
    std::vector<std::size_t> masked;

    bool flipped() const noexcept { return label_before != label_after; }
};

struct MaskingRates
{
    std::size_t j = 0;
    double top = 0.0;
    double bottom = 0.0;
    double random = 0.0;
};

struct MaskingReport
{
    std::vector<MaskingRates> rates;
    std::vector<MaskOutcome> outcomes;
    std::size_t graph_count = 0;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    double p_min = 0.0;
    double p_max = 0.0;
    std::uint64_t dataset_seed = 0;
    std::uint64_t experiment_seed = 0;
};

/**
 * For every graph and J, deletes the J most influential, the J least
 * influential and J uniformly chosen vertices, relabels each result from
 * scratch and aggregates the fraction of changed labels.
 */
MaskingReport run_masking_experiment(std::span<const LabeledGraph> dataset, std::span<const std::size_t> j_values,
                                     std::uint64_t seed, const MethodSpec& method = MethodSpec::exact());

} // namespace topoinf
