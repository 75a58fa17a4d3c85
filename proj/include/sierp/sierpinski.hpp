#pragma once

#include "sierp/graph.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sierp {

/// A vertex of S_G^n: a length-n sequence of base-vertex indices.
/// Words of equal length compare lexicographically.
struct Word {
    std::vector<int> coords;

    Word() = default;
    explicit Word(std::vector<int> c) : coords(std::move(c)) {}
    Word(std::initializer_list<int> c) : coords(c) {}

    int size() const noexcept { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[i]; }
    int& operator[](int i) { return coords[i]; }
    int back() const { return coords.back(); }

    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Concatenation prefix + w.
Word concat(const Word& prefix, const Word& w);

inline constexpr std::uint64_t kDefaultVertexBudget = 1u << 20;

/// The generalized Sierpinski graph S_G^n.
///
/// The adjacency rule in neighbors() is the source of truth; materialize()
/// produces an explicit Graph whose vertex i is word_at(i), i.e. the index
/// table is lexicographic over words.
class SierpinskiGraph {
public:
    /// Throws InputError for dim < 1 or an empty base graph.
    SierpinskiGraph(Graph base, int dim);

    const Graph& base() const noexcept { return *base_; }
    int dim() const noexcept { return dim_; }
    std::string name() const;

    /// order(base)^n; throws ResourceError if it does not fit in 63 bits.
    std::uint64_t vertex_count() const;
    /// |E(G)| * sum_{i<n} order(base)^i.
    std::uint64_t edge_count() const;

    /// Throws InputError unless w has length dim() and valid coordinates.
    void check(const Word& w) const;
    /// Sorted, duplicate-free list of words adjacent to w.
    std::vector<Word> neighbors(const Word& w) const;
    std::vector<Word> extreme_vertices() const;

    std::uint64_t index_of(const Word& w) const;
    Word word_at(std::uint64_t index) const;

    /// Base labels joined by '.', e.g. "1.2.2".
    std::string label(const Word& w) const;
    Word parse_word(const std::string& text) const;

    /// Throws ResourceError naming the budget if vertex_count() > budget.
    Graph materialize(std::uint64_t vertex_budget = kDefaultVertexBudget) const;

private:
    std::shared_ptr<const Graph> base_;
    int dim_;
};

/// Shortest-path length by BFS over neighbors(); kUnreachable if disconnected.
int distance(const SierpinskiGraph& s, const Word& a, const Word& b);

} // namespace sierp
