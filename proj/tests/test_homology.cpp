#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "topoinf/homology.hpp"

using namespace topoinf;

namespace {

NeighborComplex g3_complex()
{
    // 1111, 0000, 0001 at r = 1
    return NeighborComplex::from_edges(3, {{1, 2}});
}

VertexSet subset_of(std::size_t n, std::initializer_list<std::size_t> members)
{
    VertexSet s(n);
    for (auto v : members)
        s.set(v);
    return s;
}

} // namespace

TEST_CASE("component counts on the g3 complex", "[betti]")
{
    const auto g = g3_complex();
    CHECK(betti0_union_find(g, VertexSet::full(3)) == 2);
    CHECK(betti0_union_find(g, subset_of(3, {1, 2})) == 1);
    CHECK(betti0_union_find(g, subset_of(3, {0})) == 1);
    CHECK(betti0_union_find(g, VertexSet(3)) == 0);
    CHECK(betti0_laplacian(g, VertexSet::full(3)) == 2);
}

TEST_CASE("component counts on small named graphs", "[betti]")
{
    NeighborComplex k5(5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            k5.add_edge(i, j);
    CHECK(betti0_union_find(k5, VertexSet::full(5)) == 1);
    CHECK(betti0_laplacian(k5, VertexSet::full(5)) == 1);

    const auto p3 = NeighborComplex::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(betti0_laplacian(p3, VertexSet::full(3)) == 1);
    CHECK(betti0_laplacian(p3, subset_of(3, {0, 2})) == 2);

    CHECK(betti0_laplacian(NeighborComplex(2), VertexSet::full(2)) == 2);
    CHECK_THROWS_AS(betti0_laplacian(p3, VertexSet(3)), InputError);
}

TEST_CASE("union-find and Laplacian agree with BFS on every subset", "[betti][property]")
{
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (double p : {0.1, 0.3, 0.6}) {
            const auto g = oracle::random_graph(n, p, rng);
            const auto adj = oracle::adjacency(g);
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                const auto s = VertexSet::from_bits(n, mask);
                const auto want = static_cast<std::size_t>(oracle::components_of_mask(adj, mask));
                REQUIRE(betti0_union_find(g, s) == want);
                REQUIRE(betti0_laplacian(g, s) == want);
            }
        }
    }
}

TEST_CASE("symmetric eigenvalues match Eigen's solver", "[spectral]")
{
    std::mt19937_64 rng(7);
    std::normal_distribution<double> z;
    for (int n : {1, 2, 3, 5, 10, 31, 64}) {
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
                a(i, j) = a(j, i) = z(rng);
        const Eigen::VectorXd got = symmetric_eigenvalues(a);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a, Eigen::EigenvaluesOnly);
        const double scale = std::max(1.0, ref.eigenvalues().cwiseAbs().maxCoeff());
        REQUIRE(got.size() == n);
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(got(i) - ref.eigenvalues()(i)) <= 1e-10 * scale);
    }
}

TEST_CASE("eigenvalue iteration cap raises a numeric error", "[spectral][errors]")
{
    Eigen::MatrixXd a(3, 3);
    a << 2, 1, 0, 1, 2, 1, 0, 1, 2;
    CHECK_THROWS_AS(symmetric_eigenvalues(a, 0), NumericError);
}

TEST_CASE("incremental update matches recomputation", "[incremental]")
{
    const auto g = g3_complex();
    CHECK(incremental_components(g, subset_of(3, {1}), 2) == 1);
    CHECK(incremental_components(g, subset_of(3, {1}), 0) == 2);
    CHECK(incremental_components(g, VertexSet(3), 0) == 1);
    CHECK_THROWS_AS(incremental_components(g, subset_of(3, {1}), 1), InputError);

    std::mt19937_64 rng(31);
    for (std::size_t n : {6u, 9u, 12u}) {
        const auto g2 = oracle::random_graph(n, 0.25, rng);
        const auto adj = oracle::adjacency(g2);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto s = VertexSet::from_bits(n, mask);
            for (std::size_t v = 0; v < n; ++v) {
                if ((mask >> v) & 1)
                    continue;
                const auto want = oracle::components_of_mask(adj, mask | (std::uint64_t{1} << v));
                REQUIRE(incremental_components(g2, s, v) == static_cast<std::size_t>(want));
            }
        }
    }
}

TEST_CASE("adding a vertex changes beta_0 by at most +1 and at least 1 - degree", "[incremental][property]")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 10;
        const auto g = oracle::random_graph(n, 0.3, rng);
        ComponentTracker t(g);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng);
        for (auto v : order) {
            const auto before = static_cast<long>(t.components());
            const auto after = static_cast<long>(t.add(v));
            REQUIRE(after - before <= 1);
            REQUIRE(after - before >= 1 - static_cast<long>(g.degree(v)));
        }
        REQUIRE(t.components() == betti0_union_find(g, VertexSet::full(n)));
    }
}

TEST_CASE("beta_0 is additive over disjoint unions", "[betti][property]")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = oracle::random_graph(7, 0.3, rng);
        const auto b = oracle::random_graph(6, 0.3, rng);
        NeighborComplex u(13);
        for (auto [x, y] : a.edges())
            u.add_edge(x, y);
        for (auto [x, y] : b.edges())
            u.add_edge(x + 7, y + 7);
        REQUIRE(betti0_union_find(u, VertexSet::full(13)) ==
                betti0_union_find(a, VertexSet::full(7)) + betti0_union_find(b, VertexSet::full(6)));
    }
}
