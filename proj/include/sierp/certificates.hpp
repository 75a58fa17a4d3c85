#pragma once

#include "sierp/coloring.hpp"
#include "sierp/sierpinski.hpp"
#include "sierp/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sierp {

enum class ConditionKind { I, II, TypeA, TypeB };

std::string to_string(ConditionKind c);
/// "i", "ii", "typeA", "typeB"; throws InputError otherwise.
ConditionKind parse_condition(const std::string& s);

struct Condition {
    ConditionKind kind = ConditionKind::I;
    /// Bipartition of the base graph for condition ii: 0 = A, 1 = B.
    std::vector<int> side;
};

/// Translation of a condition into side constraints on tilde_graph(s).
/// Type conditions have several boundary orientations (which edge at a
/// {3,5} extreme carries the 5); `orientation` selects one of
/// condition_orientations() many.
ColorConstraints condition_constraints(const SierpinskiGraph& s, const Graph& materialized, int k,
                                       const Condition& cond, int orientation = 0);
int condition_orientations(const Condition& cond);

struct CertificateResult {
    SolveOutcome outcome;
    /// Set when outcome is Sat; already re-checked against the condition.
    std::optional<EdgeColoring> certificate;
};

/// Searches an injective edge k-coloring of s satisfying the condition.
/// Conditions i/ii need dim 3; type conditions need base K3 and k >= 5.
/// Throws InputError for an untranslatable condition (e.g. invalid
/// bipartition, wrong base graph).
CertificateResult constrained_certificate_search(const SierpinskiGraph& s, int k,
                                                 const Condition& cond,
                                                 const SolverOptions& opts = {});

} // namespace sierp
