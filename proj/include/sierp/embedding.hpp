#pragma once

#include "sierp/graph.hpp"

#include <cstdint>
#include <vector>

namespace sierp {

enum class EmbeddingStatus { Found, None, Unknown };

struct EmbeddingOutcome {
    EmbeddingStatus status = EmbeddingStatus::Unknown;
    /// mapping[p] = host vertex of pattern vertex p when Found.
    std::vector<int> mapping;
    std::uint64_t explored = 0;
};

/// Injective map of pattern vertices into host vertices that sends every
/// pattern edge to a host edge (subgraph, not necessarily induced).
/// Throws InputError if the pattern has more vertices than the host.
EmbeddingOutcome find_embedding(const Graph& pattern, const Graph& host, std::uint64_t budget);

/// True iff mapping is injective and preserves every pattern edge.
bool is_embedding(const Graph& pattern, const Graph& host, const std::vector<int>& mapping);

} // namespace sierp
