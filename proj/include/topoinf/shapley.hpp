#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "topoinf/metric_complex.hpp"

namespace topoinf {

/// Largest complex the exact enumerator accepts without an explicit override.
inline constexpr std::size_t kDefaultExactCap = 20;
/// Absolute upper bound for exact enumeration (2^26 subsets).
inline constexpr std::size_t kHardExactCap = 26;

/**
 * Raw Shapley decomposition of beta_0 over the vertices of a complex.
 *
 * Exact runs fill `cardinality_counts[i][k]`, the sum over all subsets C of
 * size k not containing i of |beta_0(C + i) - beta_0(C)|. Sampled runs fill
 * `std_errors` instead.
 */
struct ShapleyVector
{
    std::vector<double> values;
    std::vector<std::vector<std::uint64_t>> cardinality_counts;
    std::vector<double> std_errors;

    std::size_t size() const noexcept { return values.size(); }
};

struct ExactOptions
{
    std::size_t cap = kDefaultExactCap;
    unsigned threads = 1;
};

struct SamplingOptions
{
    std::size_t num_permutations = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

ShapleyVector exact_shapley(const NeighborComplex& complex, const ExactOptions& opts = {});

/// Weight k!(n-k-1)!/n! attached to subsets of size k, in extended precision.
long double shapley_weight(std::size_t n, std::size_t k);

/// Recomputes values from an exact cardinality table.
std::vector<double> values_from_counts(const std::vector<std::vector<std::uint64_t>>& counts);

/**
 * Monte Carlo Shapley estimate from uniformly random join orders.
 *
 * Permutation p is generated from (seed, p) alone, so results do not depend
 * on thread count or on which permutations were drawn earlier.
 */
ShapleyVector sampled_shapley(const NeighborComplex& complex, const SamplingOptions& opts);

/// The p-th permutation of 0..n-1 drawn by sampled_shapley for `seed`.
std::vector<std::size_t> sample_permutation(std::size_t n, std::uint64_t seed, std::uint64_t index);

enum class MethodKind { Exact, Sampled };

struct MethodSpec
{
    MethodKind kind = MethodKind::Exact;
    std::size_t exact_cap = kDefaultExactCap;
    std::size_t num_permutations = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;

    static MethodSpec exact(std::size_t cap = kDefaultExactCap) { return {MethodKind::Exact, cap}; }
    static MethodSpec sampled(std::size_t permutations, std::uint64_t seed)
    {
        MethodSpec m;
        m.kind = MethodKind::Sampled;
        m.num_permutations = permutations;
        m.seed = seed;
        return m;
    }
};

struct InfluenceProfile
{
    std::vector<double> shapley;
    std::vector<double> mu;
    std::vector<double> std_errors; ///< sampled runs only
    std::vector<std::string> labels;
    double entropy = 0.0; ///< nats
    MethodSpec method;
    double resolution = 0.0;
    std::string metric;

    std::size_t size() const noexcept { return mu.size(); }
};

/// mu(i) = s(i) / sum_j s(j) plus entropy. Throws NumericError when sum s <= 0.
InfluenceProfile normalize_influence(const ShapleyVector& sv);

/// Natural-log entropy with 0 log 0 = 0.
double entropy(std::span<const double> mu);
inline double entropy(const InfluenceProfile& profile) { return entropy(profile.mu); }

/// Vertex order by descending influence; ties go to the lower index.
std::vector<std::size_t> rank_by_influence(std::span<const double> mu);

ShapleyVector compute_shapley(const NeighborComplex& complex, const MethodSpec& method);

/// Influence of every vertex of an already built complex.
InfluenceProfile influence_of_complex(const NeighborComplex& complex, const MethodSpec& method);

/// Distances, complex at radius r, Shapley decomposition, normalization and entropy.
InfluenceProfile run_influence(const LabeledPointSet& points, Metric metric, double r, const MethodSpec& method);

/// One independent profile per radius; the complexes are checked to be nested in r.
std::vector<InfluenceProfile> r_sweep(const LabeledPointSet& points, Metric metric, std::span<const double> radii,
                                      const MethodSpec& method);

} // namespace topoinf
