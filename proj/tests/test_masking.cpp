#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "topoinf/graph_families.hpp"
#include "topoinf/homology.hpp"
#include "topoinf/masking.hpp"

using namespace topoinf;

namespace {

ErEnsembleConfig small_config(std::uint64_t seed)
{
    ErEnsembleConfig cfg;
    cfg.count = 60;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("ER draws at the probability extremes", "[masking]")
{
    ErEnsembleConfig cfg;
    cfg.p_min = cfg.p_max = 1.0;
    for (std::uint64_t a = 0; a < 20; ++a)
        CHECK(draw_er_graph(cfg, a).label == 1);

    cfg.p_min = cfg.p_max = 0.0;
    cfg.n_min = cfg.n_max = 9;
    CHECK(draw_er_graph(cfg, 0).label == 9);
    cfg.max_attempts = 500;
    CHECK_THROWS_AS(generate_er_dataset(cfg), InputError);
}

TEST_CASE("dataset is deterministic and balanced", "[masking]")
{
    const auto a = generate_er_dataset(small_config(7));
    const auto b = generate_er_dataset(small_config(7));
    REQUIRE(a.size() == 60);
    std::array<std::size_t, 4> per_class{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].graph == b[i].graph);
        REQUIRE(a[i].label >= 1);
        REQUIRE(a[i].label <= 3);
        REQUIRE(a[i].graph.size() >= 8);
        REQUIRE(a[i].graph.size() <= 14);
        const auto adj = oracle::adjacency(a[i].graph);
        std::vector<char> all(adj.size(), 1);
        REQUIRE(static_cast<std::size_t>(oracle::components(adj, all)) == a[i].label);
        ++per_class[a[i].label];
    }
    CHECK(per_class[1] == 20);
    CHECK(per_class[2] == 20);
    CHECK(per_class[3] == 20);
}

TEST_CASE("node ranking", "[masking]")
{
    // star: center (last canonical vertex) leads
    const auto star = make_family(FamilySpec::star(6));
    CHECK(rank_nodes(star).front() == 5);

    const auto k5 = make_family(FamilySpec::complete(5));
    CHECK(rank_nodes(k5) == std::vector<std::size_t>{0, 1, 2, 3, 4});

    const auto p5 = make_family(FamilySpec::path(5));
    CHECK(rank_nodes(p5) == std::vector<std::size_t>{1, 2, 3, 0, 4});
}

TEST_CASE("vertex masking", "[masking]")
{
    const auto p3 = make_family(FamilySpec::path(3));
    const std::vector<std::size_t> middle = {1};
    const std::vector<std::size_t> end = {0};
    CHECK(betti0_union_find(mask_nodes(p3, middle), VertexSet::full(2)) == 2);
    CHECK(betti0_union_find(mask_nodes(p3, end), VertexSet::full(2)) == 1);

    const auto star = make_family(FamilySpec::star(6));
    const std::vector<std::size_t> center = {5};
    CHECK(betti0_union_find(mask_nodes(star, center), VertexSet::full(5)) == 5);

    const std::vector<std::size_t> all = {0, 1, 2};
    CHECK_THROWS_AS(mask_nodes(p3, all), InputError);
    const std::vector<std::size_t> outside = {7};
    CHECK_THROWS_AS(mask_nodes(p3, outside), InputError);
}

TEST_CASE("masking experiment bookkeeping", "[masking]")
{
    const auto data = generate_er_dataset(small_config(3));
    const std::vector<std::size_t> js = {0, 1, 2};
    const auto rep = run_masking_experiment(data, js, 11);
    REQUIRE(rep.rates.size() == 3);
    CHECK(rep.rates[0].top == 0.0);
    CHECK(rep.rates[0].bottom == 0.0);
    CHECK(rep.rates[0].random == 0.0);
    CHECK(rep.outcomes.size() == data.size() * js.size() * 3);
    for (const auto& o : rep.outcomes) {
        REQUIRE(o.masked.size() == o.j);
        REQUIRE(std::set<std::size_t>(o.masked.begin(), o.masked.end()).size() == o.j);
        REQUIRE(o.label_before == data[o.graph].label);
        const auto after = mask_nodes(data[o.graph].graph, o.masked);
        REQUIRE(betti0_union_find(after, VertexSet::full(after.size())) == o.label_after);
    }

    const auto again = run_masking_experiment(data, js, 11);
    for (std::size_t k = 0; k < rep.rates.size(); ++k) {
        CHECK(rep.rates[k].top == again.rates[k].top);
        CHECK(rep.rates[k].random == again.rates[k].random);
    }

    const std::vector<std::size_t> too_big = {8};
    CHECK_THROWS_AS(run_masking_experiment(data, too_big, 11), InputError);
}
