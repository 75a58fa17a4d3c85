#include "sierp/graph.hpp"

#include "sierp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace sierp {

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels) {
    if (order < 0)
        throw InputError("graph order must be nonnegative");
    const auto n = static_cast<std::size_t>(order);
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= order || b >= order)
            throw InputError("edge endpoint out of range: (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
        if (a == b)
            throw InputError("loop at vertex " + std::to_string(a));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
        throw InputError("repeated edge (" + std::to_string(it->u) + "," + std::to_string(it->v) +
                         ")");

    adj_.assign(n, {});
    inc_.assign(n, {});
    for (int e = 0; e < size(); ++e) {
        const auto [a, b] = edges_[static_cast<std::size_t>(e)];
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        inc_[v].reserve(nb.size());
        for (int w : nb)
            inc_[v].push_back(*edge_index(static_cast<int>(v), w));
    }

    if (labels.empty()) {
        labels_.reserve(n);
        for (int v = 0; v < order; ++v)
            labels_.push_back(std::to_string(v + 1));
    } else {
        if (labels.size() != n)
            throw InputError("label count " + std::to_string(labels.size()) +
                             " does not match order " + std::to_string(order));
        labels_ = std::move(labels);
        custom_labels_ = true;
    }
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& nb : adj_)
        best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

bool Graph::adjacent(int a, int b) const {
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> Graph::edge_index(int a, int b) const {
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::optional<int> Graph::find_label(const std::string& s) const {
    for (int v = 0; v < order(); ++v)
        if (labels_[static_cast<std::size_t>(v)] == s)
            return v;
    return std::nullopt;
}

std::uint64_t Graph::fingerprint() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(order()));
    for (const auto& e : edges_) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
    }
    return h;
}

bool Graph::is_connected() const {
    if (order() == 0)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(order()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == order();
}

Graph complete_graph(int p) {
    if (p < 1)
        throw InputError("K<p> needs p >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            e.emplace_back(i, j);
    Graph g(p, e);
    g.set_name("K" + std::to_string(p));
    return g;
}

Graph cycle_graph(int k) {
    if (k < 3)
        throw InputError("C<k> needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    Graph g(k, e);
    g.set_name("C" + std::to_string(k));
    return g;
}

Graph path_graph(int k) {
    if (k < 1)
        throw InputError("P<k> needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i)
        e.emplace_back(i, i + 1);
    Graph g(k, e);
    g.set_name("P" + std::to_string(k));
    return g;
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    Graph g(10, e);
    g.set_name("Petersen");
    return g;
}

Graph parse_base_spec(const std::string& spec) {
    if (spec.size() < 2)
        throw InputError("bad base graph spec '" + spec + "' (expected K<p>, C<k> or P<k>)");
    int value = 0;
    const char* first = spec.data() + 1;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw InputError("bad base graph spec '" + spec + "' (expected K<p>, C<k> or P<k>)");
    try {
        switch (spec[0]) {
        case 'K':
            return complete_graph(value);
        case 'C':
            return cycle_graph(value);
        case 'P':
            return path_graph(value);
        default:
            break;
        }
    } catch (const InputError& e) {
        throw InputError("bad base graph spec '" + spec + "': " + e.what());
    }
    throw InputError("bad base graph spec '" + spec + "' (expected K<p>, C<k> or P<k>)");
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (const auto& e : g.edges()) {
        const auto& na = g.neighbors(e.u);
        const auto& nb = g.neighbors(e.v);
        std::size_t i = 0, j = 0;
        while (i < na.size() && j < nb.size()) {
            if (na[i] < nb[j]) {
                ++i;
            } else if (nb[j] < na[i]) {
                ++j;
            } else {
                std::array<int, 3> t{e.u, e.v, na[i]};
                std::sort(t.begin(), t.end());
                return t;
            }
        }
    }
    return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

} // namespace sierp

namespace sierp {

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> dist(g.order(), kUnreachable);
    std::queue<int> q;
    for (int s : sources) {
        if (dist.at(s) != 0) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace sierp
