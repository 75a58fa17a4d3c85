#include "sierp/embedding.hpp"
#include "sierp/errors.hpp"
#include "sierp/reductions.hpp"
#include "sierp/sierpinski.hpp"

#include <doctest.h>

using namespace sierp;

TEST_CASE("gadget embeddings") {
    const Graph s32 = SierpinskiGraph(complete_graph(3), 2).materialize();
    const Graph s33 = SierpinskiGraph(complete_graph(3), 3).materialize();
    const auto h = find_embedding(gadget_H(), s32, 1000000);
    REQUIRE(h.status == EmbeddingStatus::Found);
    CHECK(is_embedding(gadget_H(), s32, h.mapping));
    const auto p = find_embedding(gadget_P(), s33, 1000000);
    REQUIRE(p.status == EmbeddingStatus::Found);
    CHECK(is_embedding(gadget_P(), s33, p.mapping));
    // P needs a third level: it does not fit into S_3^2
    CHECK_THROWS_AS(find_embedding(gadget_P(), s32, 1000000), InputError);
}

TEST_CASE("no embedding and budget") {
    CHECK(find_embedding(complete_graph(3), cycle_graph(5), 1000).status == EmbeddingStatus::None);
    CHECK(find_embedding(cycle_graph(4), SierpinskiGraph(cycle_graph(5), 2).materialize(), 100000)
              .status == EmbeddingStatus::None);
    const Graph host = SierpinskiGraph(cycle_graph(5), 3).materialize();
    CHECK(find_embedding(cycle_graph(4), host, 3).status == EmbeddingStatus::Unknown);
}

TEST_CASE("is_embedding rejects bad maps") {
    const Graph c5 = cycle_graph(5);
    CHECK(is_embedding(path_graph(3), c5, {0, 1, 2}));
    CHECK_FALSE(is_embedding(path_graph(3), c5, {0, 2, 1}));
    CHECK_FALSE(is_embedding(path_graph(3), c5, {0, 1, 0}));
    CHECK_FALSE(is_embedding(path_graph(3), c5, {0, 1}));
}
