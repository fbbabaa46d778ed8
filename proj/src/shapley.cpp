#include "topoinf/shapley.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "topoinf/homology.hpp"
#include "topoinf/random.hpp"

namespace topoinf {

namespace {

using Mask = std::uint32_t;

using CountTable = std::vector<std::vector<std::uint64_t>>;

// Accumulates |beta_0(C + i) - beta_0(C)| into t[i][|C|] for every C in [begin, end).
void accumulate_range(const std::vector<Mask>& nbr, std::uint64_t begin, std::uint64_t end, CountTable& t)
{
    const std::size_t n = nbr.size();
    const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<Mask> comps;
    comps.reserve(n);
    for (std::uint64_t c = begin; c < end; ++c) {
        const auto subset = static_cast<Mask>(c);
        comps.clear();
        Mask rem = subset;
        while (rem) {
            Mask comp = rem & (~rem + 1);
            Mask frontier = comp;
            while (frontier) {
                Mask grow = 0;
                for (Mask f = frontier; f; f &= f - 1)
                    grow |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
                grow &= subset & ~comp;
                comp |= grow;
                frontier = grow;
            }
            comps.push_back(comp);
            rem &= ~comp;
        }
        const auto k = static_cast<std::size_t>(std::popcount(subset));
        for (Mask out = all & ~subset; out; out &= out - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(out));
            std::size_t touched = 0;
            for (Mask comp : comps)
                touched += (comp & nbr[i]) != 0;
            // beta_0 moves by 1 - touched, never below 1 - deg_C(i).
            assert(touched <= static_cast<std::size_t>(std::popcount(nbr[i] & subset)));
            t[i][k] += touched == 0 ? 1 : touched - 1;
        }
    }
}

} // namespace

long double shapley_weight(std::size_t n, std::size_t k)
{
    // k!(n-k-1)!/n! = 1 / (n * C(n-1, k))
    long double binom = 1.0L;
    const std::size_t kk = std::min(k, n - 1 - k);
    for (std::size_t j = 1; j <= kk; ++j)
        binom = binom * static_cast<long double>(n - 1 - kk + j) / static_cast<long double>(j);
    return 1.0L / (static_cast<long double>(n) * std::round(binom));
}

std::vector<double> values_from_counts(const CountTable& counts)
{
    const std::size_t n = counts.size();
    std::vector<double> values(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        long double s = 0.0L;
        for (std::size_t k = 0; k < counts[i].size(); ++k)
            if (counts[i][k])
                s += static_cast<long double>(counts[i][k]) * shapley_weight(n, k);
        values[i] = static_cast<double>(s);
    }
    return values;
}

ShapleyVector exact_shapley(const NeighborComplex& complex, const ExactOptions& opts)
{
    const std::size_t n = complex.size();
    if (n == 0)
        throw InputError("complex has no vertices");
    if (opts.cap > kHardExactCap)
        throw SizeCapError("exact cap " + std::to_string(opts.cap) + " exceeds the hard maximum of " +
                           std::to_string(kHardExactCap));
    if (n > opts.cap)
        throw SizeCapError("exact enumeration over 2^" + std::to_string(n) + " subsets exceeds the cap of " +
                           std::to_string(opts.cap) + " vertices; use sampled Shapley instead");

    std::vector<Mask> nbr(n);
    for (std::size_t i = 0; i < n; ++i)
        nbr[i] = static_cast<Mask>(complex.neighbors(i).low_word());

    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, 64));
    std::vector<CountTable> partial(threads, CountTable(n, std::vector<std::uint64_t>(n, 0)));
    if (threads == 1) {
        accumulate_range(nbr, 0, total, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (total + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t b = std::min(total, w * chunk);
            const std::uint64_t e = std::min(total, b + chunk);
            pool.emplace_back([&, w, b, e] { accumulate_range(nbr, b, e, partial[w]); });
        }
    }

    ShapleyVector sv;
    sv.cardinality_counts = std::move(partial[0]);
    for (unsigned w = 1; w < threads; ++w)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                sv.cardinality_counts[i][k] += partial[w][i][k];
    sv.values = values_from_counts(sv.cardinality_counts);
    for (std::size_t i = 0; i < n; ++i)
        if (sv.values[i] > static_cast<double>(n))
            throw std::logic_error("Shapley value exceeds vertex count");
    return sv;
}

std::vector<std::size_t> sample_permutation(std::size_t n, std::uint64_t seed, std::uint64_t index)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    StreamRng rng(seed, index);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

ShapleyVector sampled_shapley(const NeighborComplex& complex, const SamplingOptions& opts)
{
    const std::size_t n = complex.size();
    if (n == 0)
        throw InputError("complex has no vertices");
    if (opts.num_permutations == 0)
        throw InputError("sampled Shapley needs at least one permutation");

    struct Sums
    {
        std::vector<std::uint64_t> sum, sum_sq;
    };
    const std::uint64_t total = opts.num_permutations;
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, 64));
    std::vector<Sums> partial(threads, Sums{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)});

    auto work = [&](std::uint64_t b, std::uint64_t e, Sums& acc) {
        for (std::uint64_t p = b; p < e; ++p) {
            ComponentTracker tracker(complex);
            for (std::size_t v : sample_permutation(n, opts.seed, p)) {
                const std::size_t before = tracker.components();
                const std::size_t after = tracker.add(v);
                const std::uint64_t marginal = after >= before ? after - before : before - after;
                acc.sum[v] += marginal;
                acc.sum_sq[v] += marginal * marginal;
            }
        }
    };
    if (threads == 1) {
        work(0, total, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (total + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t b = std::min(total, w * chunk);
            const std::uint64_t e = std::min(total, b + chunk);
            pool.emplace_back([&, w, b, e] { work(b, e, partial[w]); });
        }
    }

    ShapleyVector sv;
    sv.values.assign(n, 0.0);
    sv.std_errors.assign(n, 0.0);
    const auto count = static_cast<double>(total);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = 0, sum_sq = 0;
        for (const auto& acc : partial) {
            sum += acc.sum[i];
            sum_sq += acc.sum_sq[i];
        }
        const double mean = static_cast<double>(sum) / count;
        sv.values[i] = mean;
        if (total > 1) {
            const double var = (static_cast<double>(sum_sq) - count * mean * mean) / (count - 1.0);
            sv.std_errors[i] = std::sqrt(std::max(var, 0.0) / count);
        }
    }
    return sv;
}

double entropy(std::span<const double> mu)
{
    double h = 0.0;
    for (double p : mu)
        if (p > 0.0)
            h -= p * std::log(p);
    return h;
}

InfluenceProfile normalize_influence(const ShapleyVector& sv)
{
    long double total = 0.0L;
    for (double s : sv.values) {
        if (s < 0.0)
            throw NumericError("negative Shapley value");
        total += s;
    }
    if (!(total > 0.0L))
        throw NumericError("Shapley vector sums to zero; cannot normalize");

    InfluenceProfile prof;
    prof.shapley = sv.values;
    prof.std_errors = sv.std_errors;
    prof.mu.resize(sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i)
        prof.mu[i] = static_cast<double>(sv.values[i] / total);
    prof.entropy = entropy(prof.mu);
    return prof;
}

std::vector<std::size_t> rank_by_influence(std::span<const double> mu)
{
    std::vector<std::size_t> order(mu.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return mu[a] > mu[b]; });
    return order;
}

ShapleyVector compute_shapley(const NeighborComplex& complex, const MethodSpec& method)
{
    if (method.kind == MethodKind::Exact)
        return exact_shapley(complex, ExactOptions{method.exact_cap, method.threads});
    return sampled_shapley(complex, SamplingOptions{method.num_permutations, method.seed, method.threads});
}

InfluenceProfile influence_of_complex(const NeighborComplex& complex, const MethodSpec& method)
{
    InfluenceProfile prof = normalize_influence(compute_shapley(complex, method));
    prof.method = method;
    prof.resolution = complex.resolution();
    return prof;
}

InfluenceProfile run_influence(const LabeledPointSet& points, Metric metric, double r, const MethodSpec& method)
{
    const NeighborComplex complex = build_complex(build_distance_matrix(points, metric), r);
    InfluenceProfile prof = influence_of_complex(complex, method);
    prof.metric = std::string(to_string(metric));
    prof.labels.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        prof.labels.push_back(points.label(i));
    return prof;
}

std::vector<InfluenceProfile> r_sweep(const LabeledPointSet& points, Metric metric, std::span<const double> radii,
                                      const MethodSpec& method)
{
    if (radii.empty())
        throw InputError("r sweep needs at least one radius");
    for (double r : radii)
        if (!(r >= 0.0))
            throw InputError("radii must be nonnegative");

    const DistanceMatrix dm = build_distance_matrix(points, metric);
    std::vector<NeighborComplex> complexes;
    complexes.reserve(radii.size());
    for (double r : radii)
        complexes.push_back(build_complex(dm, r));

    std::vector<std::size_t> by_radius(radii.size());
    std::iota(by_radius.begin(), by_radius.end(), std::size_t{0});
    std::stable_sort(by_radius.begin(), by_radius.end(),
                     [&](std::size_t a, std::size_t b) { return radii[a] < radii[b]; });
    for (std::size_t k = 1; k < by_radius.size(); ++k)
        if (!is_subcomplex(complexes[by_radius[k - 1]], complexes[by_radius[k]]))
            throw std::logic_error("neighbor complexes are not nested in r");

    std::vector<InfluenceProfile> out;
    out.reserve(radii.size());
    for (const auto& complex : complexes) {
        InfluenceProfile prof = influence_of_complex(complex, method);
        prof.metric = std::string(to_string(metric));
        for (std::size_t i = 0; i < points.size(); ++i)
            prof.labels.push_back(points.label(i));
        out.push_back(std::move(prof));
    }
    return out;
}

} // namespace topoinf
