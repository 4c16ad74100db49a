#include <catch_amalgamated.hpp>

#include <random>

#include <dnalex/clique.hpp>

#include "oracles.hpp"

using namespace dnalex;

TEST_CASE("exact clique search matches subset enumeration on random graphs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 14;
        const double density = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        std::vector<std::uint64_t> w(n);
        for (auto& x : w) x = 1 + rng() % 3;
        Graph g(n, w);
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (static_cast<double>(rng() % 1000) / 1000.0 < density) {
                    g.add_edge(i, j);
                    adj[i][j] = adj[j][i] = true;
                }
        const auto r = max_weight_clique(g);
        CHECK(r.weight == oracle::brute_max_clique(adj, w));
        CHECK(g.is_clique(r.vertices));
        CHECK(g.weight_of(r.vertices) == r.weight);
        CHECK(std::is_sorted(r.vertices.begin(), r.vertices.end()));
    }
}

TEST_CASE("colouring bound dominates the optimum") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 12;
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        Bitset all(n);
        for (std::size_t v = 0; v < n; ++v) all.set(v);
        CHECK(colouring_bound(g, all, degeneracy_order(g)) >= max_weight_clique(g).weight);
        CHECK(greedy_clique(g).weight <= max_weight_clique(g).weight);
    }
}

TEST_CASE("edge cases") {
    CHECK(max_weight_clique(Graph(0)).weight == 0);
    Graph single(1, {5});
    CHECK(max_weight_clique(single).weight == 5);
    Graph k4(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK(max_weight_clique(k4).vertices == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(Graph(3, {1, 2}), std::invalid_argument);
}

TEST_CASE("search is deterministic") {
    std::mt19937_64 rng(19);
    Graph g(30);
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = i + 1; j < 30; ++j)
            if (rng() % 3) g.add_edge(i, j);
    const auto a = max_weight_clique(g), b = max_weight_clique(g);
    CHECK(a.vertices == b.vertices);
    CHECK(a.nodes == b.nodes);
}
