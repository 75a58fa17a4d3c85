#pragma once

#include "sierp/coloring.hpp"
#include "sierp/graph.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace sierp {

/// Search-step budget of the default searches (DSATUR node expansions plus
/// CDCL conflicts); SIERP_BUDGET overrides it.
std::uint64_t default_budget();

inline constexpr int kMaxColors = 64;

/// Side constraints for k-colorability searches (colors are 1-based).
///
/// `anchor` is a clique colored first, in order. When colors are
/// interchangeable this pins the anchor to colors 1..|anchor|.
struct ColorConstraints {
    std::map<int, int> forced;
    std::map<int, std::set<int>> forbidden;
    std::vector<int> anchor;

    bool empty() const noexcept { return forced.empty() && forbidden.empty() && anchor.empty(); }
};

struct SolverOptions {
    std::uint64_t budget = default_budget();
    /// > 1 runs that many differently ordered searches in parallel and keeps
    /// the first answer. Certificates are then not reproducible.
    int portfolio = 1;
    /// Seeds the shuffled orderings of portfolio mode.
    std::uint64_t seed = 0;
};

enum class SolveStatus { Sat, Unsat, Unknown };

std::string to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unknown;
    /// k for k_colorable; the chromatic number for chromatic_number when Sat.
    int value = 0;
    /// Proven bounds: lower <= chi <= upper.
    int lower = 0;
    int upper = 0;
    /// Proper coloring with colors 1..value when Sat.
    std::vector<int> coloring;
    std::uint64_t explored = 0;
    std::uint64_t budget = 0;
};

/// Exact search: a short DSATUR backtracking run, then a CDCL SAT search
/// for what is left. Sat certificates respect `cons` and use colors 1..k;
/// Unsat is reported only with a complete refutation; Unknown means the
/// budget (DSATUR nodes plus CDCL conflicts) ran out. Throws InputError for k outside 1..64 or inconsistent
/// constraints.
SolveOutcome k_colorable(const Graph& h, int k, const ColorConstraints& cons = {},
                         const SolverOptions& opts = {});

/// Smallest k with k_colorable Sat, searched upward from a clique bound.
SolveOutcome chromatic_number(const Graph& h, const ColorConstraints& cons = {},
                              const SolverOptions& opts = {});

/// Greedy clique grown from every start vertex; the largest found.
std::vector<int> greedy_clique(const Graph& h);

struct InjectiveVertexResult {
    SolveOutcome outcome;
    VertexColoring certificate;  // empty unless outcome is Sat
};

struct InjectiveEdgeResult {
    SolveOutcome outcome;
    EdgeColoring certificate;
};

/// chi_i(s) as the chromatic number of the common-neighbor graph; the
/// certificate is re-validated as an injective coloring of s.
InjectiveVertexResult injective_chromatic_number(const Graph& s, const SolverOptions& opts = {});
/// chi_i'(s) as the chromatic number of the tilde graph.
InjectiveEdgeResult injective_chromatic_index(const Graph& s, const SolverOptions& opts = {});

} // namespace sierp
