#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "topoinf/grammars.hpp"
#include "topoinf/shapley.hpp"

using namespace topoinf;

TEST_CASE("membership examples", "[grammars]")
{
    const auto g1 = builtin_grammar(1);
    CHECK(accepts(g1, "111"));
    CHECK_FALSE(accepts(g1, "101"));
    CHECK(accepts(g1, ""));

    const auto g2 = builtin_grammar(2);
    CHECK(accepts(g2, "0110"));
    CHECK_FALSE(accepts(g2, "0111"));

    const auto g3 = builtin_grammar(3);
    CHECK(accepts(g3, "0001"));
    CHECK(accepts(g3, "0000"));
    CHECK_FALSE(accepts(g3, "0011"));

    const auto g4 = builtin_grammar(4);
    CHECK(accepts(g4, "1100"));
    CHECK_FALSE(accepts(g4, "1000"));
    CHECK(accepts(g4, "0111"));

    CHECK_THROWS_AS(accepts(g1, "12"), InputError);
    CHECK_THROWS_AS(builtin_grammar(5), InputError);
}

TEST_CASE("every DFA agrees with the direct description", "[grammars][oracle]")
{
    for (int g = 1; g <= 4; ++g) {
        const auto spec = builtin_grammar(g);
        for (std::size_t len = 0; len <= 12; ++len)
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
                const auto s = oracle::bits_of(x, len);
                INFO("g" << g << " " << s);
                REQUIRE(accepts(spec, s) == oracle::in_language(g, s));
            }
    }
}

TEST_CASE("enumeration matches brute force", "[grammars][oracle]")
{
    for (int g = 1; g <= 4; ++g) {
        const auto spec = builtin_grammar(g);
        for (std::size_t len = 0; len <= 16; ++len) {
            std::vector<std::string> in, out;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
                auto s = oracle::bits_of(x, len);
                (oracle::in_language(g, s) ? in : out).push_back(std::move(s));
            }
            REQUIRE(enumerate_strings(spec, len) == in);
            if (len <= 10)
                REQUIRE(enumerate_rejected(spec, len) == out);
        }
    }
}

TEST_CASE("DFAs are minimal", "[grammars]")
{
    for (int g = 1; g <= 4; ++g) {
        const auto spec = builtin_grammar(g);
        const std::size_t k = spec.states();
        // pairwise distinguishability by fixed-point marking
        std::vector<std::vector<char>> dist(k, std::vector<char>(k, 0));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                dist[a][b] = spec.accepting[a] != spec.accepting[b];
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    if (!dist[a][b])
                        for (int c = 0; c < 2; ++c)
                            if (dist[spec.transition[a][c]][spec.transition[b][c]]) {
                                dist[a][b] = 1;
                                changed = true;
                            }
        }
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                CHECK(dist[a][b]);
    }
}

TEST_CASE("language sizes", "[grammars]")
{
    CHECK(enumerate_strings(builtin_grammar(1), 9) == std::vector<std::string>{"111111111"});
    CHECK(enumerate_strings(builtin_grammar(3), 4) == std::vector<std::string>{"0000", "0001", "1111"});
    CHECK(enumerate_strings(builtin_grammar(4), 4).size() == 10);
    CHECK(enumerate_strings(builtin_grammar(2), 5).empty());
}

TEST_CASE("grammar entropies", "[grammars]")
{
    const auto m = MethodSpec::exact();
    CHECK(grammar_entropy(builtin_grammar(1), 6, 1.0, m).entropy == 0.0);
    CHECK(grammar_entropy(builtin_grammar(3), 4, 1.0, m).entropy ==
          Catch::Approx(1.5 * std::log(2.0)).margin(1e-12));
    CHECK(std::abs(grammar_entropy(builtin_grammar(4), 4, 1.0, m).entropy - 2.2916) <= 0.0005);
    CHECK(std::abs(grammar_entropy(builtin_grammar(4), 4, 2.0, m).entropy - 2.3023) <= 0.0005);

    // even parity strings differ in at least two positions
    const auto g2 = grammar_entropy(builtin_grammar(2), 4, 1.0, m);
    CHECK(g2.size() == 8);
    CHECK(g2.entropy == Catch::Approx(std::log(8.0)).margin(1e-12));

    CHECK_THROWS_AS(grammar_entropy(builtin_grammar(2), 5, 1.0, m), InputError);
}

TEST_CASE("labeled datasets", "[grammars]")
{
    const auto data = grammar_dataset(builtin_grammar(4), 2, 6, true);
    std::size_t expected = 0;
    for (std::size_t len = 2; len <= 6; ++len)
        expected += std::size_t{1} << len;
    CHECK(data.size() == expected);
    std::set<std::string> seen;
    for (const auto& ls : data) {
        CHECK(ls.accepted == oracle::in_language(4, ls.text));
        seen.insert(ls.text);
    }
    CHECK(seen.size() == expected);

    const auto pos = grammar_dataset(builtin_grammar(1), 1, 5, false);
    CHECK(pos.size() == 5);
}
