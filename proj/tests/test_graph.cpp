#include "oracles.hpp"

#include "sierp/errors.hpp"
#include "sierp/sierpinski.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sierp;

namespace {

// C4 with the labels 1..4 of the drawing; index = label - 1.
SierpinskiGraph c4(int n) { return SierpinskiGraph(cycle_graph(4), n); }

std::vector<std::string> labels(const SierpinskiGraph& s, const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws)
        out.push_back(s.label(w));
    return out;
}

} // namespace

TEST_CASE("base graph rejects loops, repeated edges and bad endpoints") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
    Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.edge(0) == Edge{0, 3});
}

TEST_CASE("named base graphs") {
    CHECK(parse_base_spec("K4").size() == 6);
    CHECK(parse_base_spec("C5").size() == 5);
    CHECK(parse_base_spec("P4").size() == 3);
    CHECK_THROWS_AS(parse_base_spec("C2"), InputError);
    CHECK_THROWS_AS(parse_base_spec("X3"), InputError);
    CHECK_THROWS_AS(parse_base_spec("K"), InputError);
    CHECK(petersen_graph().size() == 15);
}

TEST_CASE("neighbors follow the adjacency rule") {
    CHECK(labels(c4(1), c4(1).neighbors(Word{0})) == std::vector<std::string>{"2", "4"});
    CHECK(labels(c4(2), c4(2).neighbors(Word{0, 1})) ==
          std::vector<std::string>{"1.1", "1.3", "2.1"});
    CHECK_THROWS_AS(c4(2).neighbors(Word{0}), InputError);
    CHECK_THROWS_AS(c4(2).neighbors(Word{0, 4}), InputError);
    const SierpinskiGraph k1(complete_graph(3), 1);
    CHECK(k1.neighbors(Word{2}).size() == 2);
}

TEST_CASE("extreme vertices") {
    CHECK(labels(c4(3), c4(3).extreme_vertices()) ==
          std::vector<std::string>{"1.1.1", "2.2.2", "3.3.3", "4.4.4"});
    CHECK(c4(1).extreme_vertices().size() == 4);
    CHECK(SierpinskiGraph(complete_graph(3), 2).extreme_vertices().size() == 3);
}

TEST_CASE("materialize counts and budget") {
    const Graph g = c4(2).materialize();
    CHECK(g.order() == 16);
    CHECK(g.size() == 20);
    const Graph k = SierpinskiGraph(complete_graph(3), 3).materialize();
    CHECK(k.order() == 27);
    CHECK(k.size() == 39);
    CHECK(SierpinskiGraph(cycle_graph(5), 1).materialize().size() == 5);
    CHECK_THROWS_AS(c4(3).materialize(63), ResourceError);
    try {
        c4(3).materialize(63);
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("63") != std::string::npos);
    }
}

TEST_CASE("distance") {
    const auto s = c4(2);
    CHECK(distance(s, Word{0, 0}, Word{0, 0}) == 0);
    CHECK(distance(s, Word{0, 0}, Word{1, 1}) == 3);
    const auto s3 = c4(3);
    const auto ext = s3.extreme_vertices();
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = i + 1; j < ext.size(); ++j)
            CHECK(distance(s3, ext[i], ext[j]) >= 7);
    const SierpinskiGraph split(Graph(4, {{0, 1}, {2, 3}}), 2);
    CHECK(distance(split, Word{0, 0}, Word{2, 2}) == kUnreachable);
}

TEST_CASE("triangle freeness") {
    CHECK(is_triangle_free(cycle_graph(5)));
    CHECK_FALSE(is_triangle_free(complete_graph(3)));
    CHECK(is_triangle_free(petersen_graph()));
    // brute force over all triples agrees
    for (const Graph& g : {petersen_graph(), complete_graph(4), cycle_graph(4)}) {
        bool found = false;
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                for (int c = b + 1; c < g.order(); ++c)
                    found |= g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
        CHECK(is_triangle_free(g) == !found);
    }
}

TEST_CASE("structural invariants over small graphs") {
    std::vector<Graph> corpus;
    for (int order = 2; order <= 4; ++order)
        for (auto& g : oracle::all_connected(order))
            corpus.push_back(g);
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        corpus.push_back(oracle::random_connected(5 + seed % 2, 0.4, seed));
    for (const Graph& base : corpus) {
        const std::uint64_t p = base.order();
        for (int n = 1; n <= 4; ++n) {
            const SierpinskiGraph s(base, n);
            if (s.vertex_count() > 2000)
                continue;
            const Graph g = s.materialize();
            std::uint64_t pn = 1;
            for (int i = 0; i < n; ++i)
                pn *= p;
            REQUIRE(static_cast<std::uint64_t>(g.order()) == pn);
            REQUIRE(static_cast<std::uint64_t>(g.size()) == base.size() * (pn - 1) / (p - 1));
            REQUIRE(s.edge_count() == static_cast<std::uint64_t>(g.size()));
            for (int v = 0; v < g.order(); ++v) {
                const Word w = s.word_at(v);
                const auto nb = s.neighbors(w);
                REQUIRE(std::find(nb.begin(), nb.end(), w) == nb.end());
                for (const auto& x : nb) {
                    const auto back = s.neighbors(x);
                    REQUIRE(std::binary_search(back.begin(), back.end(), w));
                }
                const int extra = g.degree(v) - base.degree(w.back());
                REQUIRE((extra == 0 || extra == 1));
            }
            if (n >= 2)
                REQUIRE(g.max_degree() == base.max_degree() + 1);
        }
        const SierpinskiGraph s2(base, 2);
        const auto ext = s2.extreme_vertices();
        for (std::size_t i = 0; i < ext.size(); ++i)
            for (std::size_t j = i + 1; j < ext.size(); ++j)
                REQUIRE(distance(s2, ext[i], ext[j]) >= 3);
    }
}

TEST_CASE("distance agrees with matrix reachability") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const SierpinskiGraph s(oracle::random_connected(4, 0.5, seed), 3);
        const Graph g = s.materialize();
        for (int a = 0; a < g.order(); a += 7)
            for (int b = 0; b < g.order(); b += 5)
                REQUIRE(distance(s, s.word_at(a), s.word_at(b)) == oracle::matrix_distance(g, a, b));
    }
}

TEST_CASE("word labels round trip") {
    const auto s = c4(3);
    CHECK(s.label(Word{0, 1, 3}) == "1.2.4");
    CHECK(s.parse_word("1.2.4") == Word{0, 1, 3});
    CHECK_THROWS_AS(s.parse_word("1.2"), InputError);
    CHECK_THROWS_AS(s.parse_word("1.2.9"), InputError);
    for (std::uint64_t i = 0; i < s.vertex_count(); ++i)
        REQUIRE(s.index_of(s.word_at(i)) == i);
}
