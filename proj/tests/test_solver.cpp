#include "oracles.hpp"

#include "sierp/certificates.hpp"
#include "sierp/errors.hpp"
#include "sierp/reductions.hpp"
#include "sierp/sierpinski.hpp"
#include "sierp/solver.hpp"

#include <doctest.h>

using namespace sierp;

namespace {

Graph sier(const Graph& base, int n) { return SierpinskiGraph(base, n).materialize(); }

bool respects(const Graph& h, const std::vector<int>& c, int k, const ColorConstraints& cons) {
    if (!is_proper(h, c))
        return false;
    for (int x : c)
        if (x < 1 || x > k)
            return false;
    for (auto [v, col] : cons.forced)
        if (c[v] != col)
            return false;
    for (const auto& [v, cols] : cons.forbidden)
        if (cols.count(c[v]))
            return false;
    return true;
}

} // namespace

TEST_CASE("k_colorable basics") {
    CHECK(k_colorable(complete_graph(4), 3).status == SolveStatus::Unsat);
    const Graph t2 = tilde_graph(sier(complete_graph(3), 2)).graph;
    const auto sat = k_colorable(t2, 4);
    REQUIRE(sat.status == SolveStatus::Sat);
    CHECK(respects(t2, sat.coloring, 4, {}));
    CHECK(k_colorable(t2, 3).status == SolveStatus::Unsat);
    CHECK_THROWS_AS(k_colorable(t2, 0), InputError);
    CHECK_THROWS_AS(k_colorable(t2, 65), InputError);
}

TEST_CASE("constraints") {
    const Graph c6 = cycle_graph(6);
    ColorConstraints cons;
    cons.forced[0] = 2;
    cons.forbidden[1] = {1};
    const auto r = k_colorable(c6, 3, cons);
    REQUIRE(r.status == SolveStatus::Sat);
    CHECK(respects(c6, r.coloring, 3, cons));

    ColorConstraints clash;
    clash.forced[0] = 1;
    clash.forbidden[0] = {1};
    CHECK_THROWS_AS(k_colorable(c6, 3, clash), InputError);
    ColorConstraints not_clique;
    not_clique.anchor = {0, 2};
    CHECK_THROWS_AS(k_colorable(c6, 3, not_clique), InputError);
    ColorConstraints out_of_range;
    out_of_range.forced[9] = 1;
    CHECK_THROWS_AS(k_colorable(c6, 3, out_of_range), InputError);

    // two adjacent vertices forced equal
    ColorConstraints same;
    same.forced[0] = 1;
    same.forced[1] = 1;
    CHECK(k_colorable(c6, 3, same).status == SolveStatus::Unsat);
    ColorConstraints anchored;
    anchored.anchor = {0, 1};
    const auto a = k_colorable(c6, 2, anchored);
    REQUIRE(a.status == SolveStatus::Sat);
    CHECK(a.coloring[0] != a.coloring[1]);
}

TEST_CASE("budget exhaustion gives Unknown with bounds") {
    const Graph t3 = tilde_graph(sier(complete_graph(3), 3)).graph;
    SolverOptions tiny;
    tiny.budget = 5;
    CHECK(k_colorable(t3, 4, {}, tiny).status == SolveStatus::Unknown);
    const auto c = chromatic_number(t3, {}, tiny);
    CHECK(c.status == SolveStatus::Unknown);
    CHECK(c.lower <= c.upper);
    CHECK(c.lower >= 1);
}

TEST_CASE("chromatic number and injective values") {
    CHECK(chromatic_number(cycle_graph(5)).value == 3);
    CHECK(chromatic_number(common_neighbor_graph(sier(complete_graph(3), 2)).graph).value == 3);
    CHECK(chromatic_number(tilde_graph(sier(cycle_graph(5), 2)).graph).value == 4);

    CHECK(injective_chromatic_number(sier(cycle_graph(4), 2)).outcome.value == 3);
    CHECK(injective_chromatic_number(cycle_graph(8)).outcome.value == 2);
    CHECK(injective_chromatic_number(sier(complete_graph(4), 2)).outcome.value == 4);

    CHECK(injective_chromatic_index(sier(complete_graph(3), 1)).outcome.value == 3);
    const auto s33 = injective_chromatic_index(sier(complete_graph(3), 3));
    CHECK(s33.outcome.value == 5);
    CHECK(s33.outcome.lower == 5);
    CHECK_FALSE(validate_edge(sier(complete_graph(3), 3), s33.certificate));
    CHECK(injective_chromatic_index(path_graph(4)).outcome.value == 2);
}

TEST_CASE("constrained certificate searches") {
    const SierpinskiGraph c5(cycle_graph(5), 3);
    const auto i4 = constrained_certificate_search(c5, 4, Condition{ConditionKind::I, {}});
    CHECK(i4.outcome.status == SolveStatus::Sat);
    REQUIRE(i4.certificate);
    CHECK(check_condition_i(c5, *i4.certificate));
    const auto i3 = constrained_certificate_search(c5, 3, Condition{ConditionKind::I, {}});
    CHECK(i3.outcome.status == SolveStatus::Unsat);
    CHECK_FALSE(i3.certificate);

    const SierpinskiGraph s3(complete_graph(3), 3);
    const auto ta = constrained_certificate_search(s3, 5, Condition{ConditionKind::TypeA, {}});
    REQUIRE(ta.certificate);
    CHECK(check_s3_type(s3, *ta.certificate, S3Type::A));

    CHECK_THROWS_AS(constrained_certificate_search(c5, 3, Condition{ConditionKind::II, {0, 1, 0, 1, 0}}),
                    InputError);
    CHECK_THROWS_AS(constrained_certificate_search(c5, 5, Condition{ConditionKind::TypeA, {}}),
                    InputError);
    CHECK(parse_condition("ii") == ConditionKind::II);
    CHECK_THROWS_AS(parse_condition("iii"), InputError);
}

TEST_CASE("solver agrees with brute force on graphs of at most 8 nodes") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int order = 3 + seed % 6;
        const Graph h = oracle::random_connected(order, 0.2 + 0.1 * (seed % 7), seed);
        const auto c = chromatic_number(h);
        REQUIRE(c.status == SolveStatus::Sat);
        const int truth = oracle::chromatic_number(h);
        REQUIRE(c.value == truth);
        REQUIRE(respects(h, c.coloring, c.value, {}));
        if (truth > 1) {
            REQUIRE(k_colorable(h, truth - 1).status == SolveStatus::Unsat);
            REQUIRE_FALSE(oracle::colorable(h, truth - 1));
        }
        // monotone: the certificate at k also works at k + 1
        const auto up = k_colorable(h, truth + 1);
        REQUIRE(up.status == SolveStatus::Sat);
        REQUIRE(respects(h, c.coloring, truth + 1, {}));
    }
}

TEST_CASE("single-thread search is deterministic") {
    const Graph t = tilde_graph(sier(cycle_graph(5), 3)).graph;
    const auto a = k_colorable(t, 4);
    const auto b = k_colorable(t, 4);
    REQUIRE(a.status == SolveStatus::Sat);
    CHECK(a.coloring == b.coloring);
    CHECK(a.explored == b.explored);
}

TEST_CASE("portfolio mode returns a valid answer") {
    const Graph t = tilde_graph(sier(complete_graph(3), 3)).graph;
    SolverOptions opts;
    opts.portfolio = 3;
    const auto sat = k_colorable(t, 5, {}, opts);
    REQUIRE(sat.status == SolveStatus::Sat);
    CHECK(is_proper(t, sat.coloring));
    CHECK(k_colorable(t, 4, {}, opts).status == SolveStatus::Unsat);
}
