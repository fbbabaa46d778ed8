#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "topoinf/graph_families.hpp"
#include "topoinf/shapley.hpp"

using namespace topoinf;

namespace {

const std::vector<std::string> kG3 = {"1111", "0000", "0001"};
const std::vector<std::string> kG4 = {"0000", "0001", "0011", "0100", "0110",
                                      "0111", "1001", "1100", "1101", "1111"};

} // namespace

TEST_CASE("exact Shapley on small graphs", "[shapley]")
{
    const auto g3 = NeighborComplex::from_edges(3, {{1, 2}});
    const auto sv = exact_shapley(g3);
    CHECK(sv.values[0] == Catch::Approx(1.0).margin(1e-12));
    CHECK(sv.values[1] == Catch::Approx(0.5).margin(1e-12));
    CHECK(sv.values[2] == Catch::Approx(0.5).margin(1e-12));

    const auto k3 = make_family(FamilySpec::complete(3));
    for (double v : exact_shapley(k3).values)
        CHECK(v == Catch::Approx(1.0 / 3).margin(1e-12));

    const auto p3 = NeighborComplex::from_edges(3, {{0, 1}, {1, 2}});
    const auto s = exact_shapley(p3).values;
    CHECK(s[0] == Catch::Approx(0.5).margin(1e-12));
    CHECK(s[1] == Catch::Approx(2.0 / 3).margin(1e-12));
    CHECK(s[2] == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("exact Shapley equals the average over all join orders", "[shapley][oracle]")
{
    std::mt19937_64 rng(1234);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (double p : {0.2, 0.5}) {
            const auto g = oracle::random_graph(n, p, rng);
            const auto want = oracle::permutation_shapley(oracle::adjacency(g));
            const auto got = exact_shapley(g);
            for (std::size_t i = 0; i < n; ++i)
                REQUIRE(std::abs(got.values[i] - want[i]) <= 1e-12);
            const auto again = values_from_counts(got.cardinality_counts);
            for (std::size_t i = 0; i < n; ++i)
                REQUIRE(std::abs(again[i] - got.values[i]) <= 1e-12);
        }
    }
}

TEST_CASE("thread count does not change results", "[shapley][determinism]")
{
    std::mt19937_64 rng(8);
    const auto g = oracle::random_graph(14, 0.2, rng);
    const auto one = exact_shapley(g, {20, 1});
    const auto three = exact_shapley(g, {20, 3});
    CHECK(one.values == three.values);
    CHECK(one.cardinality_counts == three.cardinality_counts);

    const auto a = sampled_shapley(g, {500, 42, 1});
    const auto b = sampled_shapley(g, {500, 42, 4});
    const auto c = sampled_shapley(g, {500, 42, 1});
    CHECK(a.values == b.values);
    CHECK(a.std_errors == b.std_errors);
    CHECK(a.values == c.values);
    const auto d = sampled_shapley(g, {500, 43, 1});
    CHECK(a.values != d.values);
}

TEST_CASE("sampled estimate on K7 is within three standard errors", "[shapley][sampling]")
{
    const auto k7 = make_family(FamilySpec::complete(7));
    const auto sv = sampled_shapley(k7, {10000, 2024, 1});
    for (std::size_t i = 0; i < 7; ++i) {
        INFO("vertex " << i);
        CHECK(std::abs(sv.values[i] - 1.0 / 7) <= 3 * sv.std_errors[i]);
        CHECK(sv.std_errors[i] > 0);
    }
}

TEST_CASE("sample permutations are permutations", "[shapley][sampling]")
{
    for (std::uint64_t idx = 0; idx < 50; ++idx) {
        auto p = sample_permutation(9, 5, idx);
        std::sort(p.begin(), p.end());
        for (std::size_t i = 0; i < 9; ++i)
            REQUIRE(p[i] == i);
    }
    CHECK(sample_permutation(9, 5, 3) == sample_permutation(9, 5, 3));
}

TEST_CASE("size caps", "[shapley][errors]")
{
    CHECK_THROWS_AS(exact_shapley(NeighborComplex(21)), SizeCapError);
    CHECK_THROWS_AS(exact_shapley(NeighborComplex(5), {27, 1}), SizeCapError);
    CHECK_THROWS_AS(exact_shapley(NeighborComplex(0)), InputError);
    CHECK_NOTHROW(compute_shapley(NeighborComplex(40), MethodSpec::sampled(10, 1)));
}

TEST_CASE("normalization and entropy", "[influence]")
{
    ShapleyVector sv;
    sv.values = {1.0, 0.5, 0.5};
    const auto p = normalize_influence(sv);
    CHECK(p.mu[0] == Catch::Approx(0.5));
    CHECK(p.mu[1] == Catch::Approx(0.25));
    CHECK(p.entropy == Catch::Approx(1.5 * std::log(2.0)).margin(1e-15));

    ShapleyVector zero;
    zero.values = {0.0, 0.0};
    CHECK_THROWS_AS(normalize_influence(zero), NumericError);

    const std::vector<double> point = {1.0};
    CHECK(entropy(point) == 0.0);
    const std::vector<double> uniform(8, 0.125);
    CHECK(entropy(uniform) == Catch::Approx(std::log(8.0)).margin(1e-15));
    const std::vector<double> with_zero = {0.5, 0.0, 0.5};
    CHECK(entropy(with_zero) == Catch::Approx(std::log(2.0)).margin(1e-15));
}

TEST_CASE("ranking breaks ties by index", "[influence]")
{
    const std::vector<double> mu = {0.2, 0.3, 0.2, 0.3};
    CHECK(rank_by_influence(mu) == std::vector<std::size_t>{1, 3, 0, 2});
}

TEST_CASE("wheel W6 influence", "[influence]")
{
    const auto p = influence_of_complex(make_family(FamilySpec::wheel(6)), MethodSpec::exact());
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(p.mu[i] == Catch::Approx(9.0 / 55).margin(1e-12));
    CHECK(p.mu[5] == Catch::Approx(2.0 / 11).margin(1e-12));
}

TEST_CASE("influence profiles of the g3 and g4 strings", "[influence]")
{
    const auto p3 = run_influence(LabeledPointSet::from_strings(kG3), Metric::Edit, 1.0, MethodSpec::exact());
    CHECK(p3.mu == std::vector<double>{0.5, 0.25, 0.25});
    CHECK(p3.labels[0] == "1111");

    const auto p4 = run_influence(LabeledPointSet::from_strings(kG4), Metric::Edit, 1.0, MethodSpec::exact());
    CHECK(std::abs(p4.entropy - 2.2916) <= 0.0005);

    const auto single = run_influence(LabeledPointSet::from_strings({"01"}), Metric::Edit, 1.0, MethodSpec::exact());
    CHECK(single.mu == std::vector<double>{1.0});
    CHECK(single.entropy == 0.0);
}

TEST_CASE("resolution sweeps", "[influence][sweep]")
{
    const auto points = LabeledPointSet::from_strings(kG4);
    const std::vector<double> radii = {2.0, 1.0};
    const auto sweep = r_sweep(points, Metric::Edit, radii, MethodSpec::exact());
    REQUIRE(sweep.size() == 2);
    // output follows input order
    CHECK(sweep[0].resolution == 2.0);
    CHECK(std::abs(sweep[0].entropy - 2.3023) <= 0.0005);
    CHECK(std::abs(sweep[1].entropy - 2.2916) <= 0.0005);

    const std::vector<double> zero = {0.0};
    CHECK(r_sweep(points, Metric::Edit, zero, MethodSpec::exact())[0].entropy ==
          Catch::Approx(std::log(10.0)).margin(1e-12));

    const auto dm = build_distance_matrix(points, Metric::Edit);
    const std::vector<double> top = {dm.max_entry()};
    const auto full = r_sweep(points, Metric::Edit, top, MethodSpec::exact());
    for (double m : full[0].mu)
        CHECK(m == Catch::Approx(0.1).margin(1e-12));
}

TEST_CASE("influence is a symmetric probability measure", "[influence][property]")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + trial % 9;
        const auto g = oracle::random_graph(n, 0.35, rng);
        const auto p = influence_of_complex(g, MethodSpec::exact());
        double total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(p.mu[i] >= 0);
            REQUIRE(p.shapley[i] <= static_cast<double>(n));
            total += p.mu[i];
        }
        REQUIRE(std::abs(total - 1.0) <= 1e-12);
        REQUIRE(p.entropy <= std::log(static_cast<double>(n)) + 1e-12);

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto q = influence_of_complex(g.permuted(perm), MethodSpec::exact());
        for (std::size_t i = 0; i < n; ++i)
            REQUIRE(std::abs(q.mu[perm[i]] - p.mu[i]) <= 1e-12);
    }

    for (const auto& spec : {FamilySpec::complete(8), FamilySpec::cycle(9), FamilySpec::bipartite(3, 5),
                             FamilySpec::star(7)}) {
        const auto p = influence_of_complex(make_family(spec), MethodSpec::exact());
        const auto cf = closed_form(spec);
        for (const auto& role : cf.roles)
            for (auto v : role.vertices)
                CHECK(std::abs(p.mu[v] - p.mu[role.vertices.front()]) <= 1e-12);
    }
}
