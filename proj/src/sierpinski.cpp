#include "sierp/sierpinski.hpp"

#include "sierp/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>

namespace sierp {

Word concat(const Word& prefix, const Word& w) {
    Word out = prefix;
    out.coords.insert(out.coords.end(), w.coords.begin(), w.coords.end());
    return out;
}

SierpinskiGraph::SierpinskiGraph(Graph base, int dim)
    : base_(std::make_shared<const Graph>(std::move(base))), dim_(dim) {
    if (dim_ < 1)
        throw InputError("Sierpinski dimension must be >= 1");
    if (base_->order() < 1)
        throw InputError("Sierpinski base graph must have at least one vertex");
}

std::string SierpinskiGraph::name() const {
    return "S(" + base_->name() + "," + std::to_string(dim_) + ")";
}

std::uint64_t SierpinskiGraph::vertex_count() const {
    const auto n = static_cast<std::uint64_t>(base_->order());
    std::uint64_t total = 1;
    for (int i = 0; i < dim_; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / 2 / n)
            throw ResourceError(name() + " has more than 2^63 vertices");
        total *= n;
    }
    return total;
}

std::uint64_t SierpinskiGraph::edge_count() const {
    // |E_n| = |V(G)| |E_{n-1}| + |E(G)|
    const auto n = static_cast<std::uint64_t>(base_->order());
    const auto m = static_cast<std::uint64_t>(base_->size());
    std::uint64_t e = m;
    for (int i = 1; i < dim_; ++i)
        e = n * e + m;
    return e;
}

void SierpinskiGraph::check(const Word& w) const {
    if (w.size() != dim_)
        throw InputError("word length " + std::to_string(w.size()) + " does not match dimension " +
                         std::to_string(dim_));
    for (int c : w.coords)
        if (c < 0 || c >= base_->order())
            throw InputError("word coordinate " + std::to_string(c) + " is not a vertex of " +
                             base_->name());
}

std::vector<Word> SierpinskiGraph::neighbors(const Word& w) const {
    check(w);
    std::vector<Word> out;
    const int n = dim_;
    const int last = w[n - 1];
    // d = n: move inside the innermost copy of G
    for (int x : base_->neighbors(last)) {
        Word v = w;
        v[n - 1] = x;
        out.push_back(std::move(v));
    }
    // d < n: w_{d+1} = ... = w_n = v and w_d v in E(G)
    for (int d = n - 1; d >= 1; --d) {
        if (w[d] != last)
            break;
        const int wd = w[d - 1];
        if (!base_->adjacent(wd, last))
            continue;
        Word v = w;
        v[d - 1] = last;
        for (int i = d; i < n; ++i)
            v[i] = wd;
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> SierpinskiGraph::extreme_vertices() const {
    std::vector<Word> out;
    for (int u = 0; u < base_->order(); ++u)
        out.emplace_back(std::vector<int>(dim_, u));
    return out;
}

std::uint64_t SierpinskiGraph::index_of(const Word& w) const {
    check(w);
    const auto n = static_cast<std::uint64_t>(base_->order());
    std::uint64_t idx = 0;
    for (int c : w.coords)
        idx = idx * n + static_cast<std::uint64_t>(c);
    return idx;
}

Word SierpinskiGraph::word_at(std::uint64_t index) const {
    if (index >= vertex_count())
        throw InputError("vertex index " + std::to_string(index) + " out of range for " + name());
    const auto n = static_cast<std::uint64_t>(base_->order());
    std::vector<int> c(dim_);
    for (int i = dim_ - 1; i >= 0; --i) {
        c[i] = static_cast<int>(index % n);
        index /= n;
    }
    return Word(std::move(c));
}

std::string SierpinskiGraph::label(const Word& w) const {
    check(w);
    std::string s;
    for (int i = 0; i < w.size(); ++i) {
        if (i)
            s += '.';
        s += base_->label(w[i]);
    }
    return s;
}

Word SierpinskiGraph::parse_word(const std::string& text) const {
    std::vector<int> c;
    std::size_t start = 0;
    while (true) {
        auto dot = text.find('.', start);
        auto part = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        auto v = base_->find_label(part);
        if (!v)
            throw InputError("'" + part + "' in word '" + text + "' is not a vertex label of " +
                             base_->name());
        c.push_back(*v);
        if (dot == std::string::npos)
            break;
        start = dot + 1;
    }
    Word w(std::move(c));
    check(w);
    return w;
}

Graph SierpinskiGraph::materialize(std::uint64_t vertex_budget) const {
    const auto count = vertex_count();
    if (count > vertex_budget)
        throw ResourceError(name() + " has " + std::to_string(count) +
                            " vertices, exceeding the vertex budget of " +
                            std::to_string(vertex_budget));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count());
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Word w = word_at(i);
        labels.push_back(label(w));
        for (const auto& x : neighbors(w)) {
            auto j = index_of(x);
            if (j > i)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    Graph g(static_cast<int>(count), edges, std::move(labels));
    g.set_name(name());
    return g;
}

int distance(const SierpinskiGraph& s, const Word& a, const Word& b) {
    s.check(a);
    s.check(b);
    if (a == b)
        return 0;
    std::unordered_map<std::uint64_t, int> dist;
    std::queue<Word> q;
    dist.emplace(s.index_of(a), 0);
    q.push(a);
    const auto target = s.index_of(b);
    while (!q.empty()) {
        Word w = std::move(q.front());
        q.pop();
        const int dw = dist.at(s.index_of(w));
        for (auto& x : s.neighbors(w)) {
            auto ix = s.index_of(x);
            if (dist.contains(ix))
                continue;
            if (ix == target)
                return dw + 1;
            dist.emplace(ix, dw + 1);
            q.push(std::move(x));
        }
    }
    return kUnreachable;
}

} // namespace sierp
