#include "sierp/embedding.hpp"

#include "sierp/errors.hpp"

#include <algorithm>

namespace sierp {

namespace {

class Matcher {
public:
    Matcher(const Graph& p, const Graph& h, std::uint64_t budget)
        : p_(p), h_(h), budget_(budget), map_(p.order(), -1), used_(h.order(), 0) {
        build_order();
    }

    EmbeddingStatus run() {
        if (extend(0))
            return EmbeddingStatus::Found;
        return aborted_ ? EmbeddingStatus::Unknown : EmbeddingStatus::None;
    }

    const std::vector<int>& mapping() const { return map_; }
    std::uint64_t explored() const { return explored_; }

private:
    // Connected order: highest degree first, then always the unmatched
    // vertex with the most already-ordered neighbors.
    void build_order() {
        const int n = p_.order();
        std::vector<int> placed(n, 0), links(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best < 0 || links[v] > links[best] ||
                    (links[v] == links[best] && p_.degree(v) > p_.degree(best)))
                    best = v;
            }
            placed[best] = 1;
            order_.push_back(best);
            for (int w : p_.neighbors(best))
                ++links[w];
        }
    }

    bool feasible(int pv, int hv) const {
        if (used_[hv] || h_.degree(hv) < p_.degree(pv))
            return false;
        for (int pw : p_.neighbors(pv))
            if (map_[pw] >= 0 && !h_.adjacent(hv, map_[pw]))
                return false;
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size())
            return true;
        const int pv = order_[depth];
        // candidates: neighbors of an already mapped neighbor's image, else all
        int anchor = -1;
        for (int pw : p_.neighbors(pv))
            if (map_[pw] >= 0) {
                anchor = map_[pw];
                break;
            }
        auto attempt = [&](int hv) {
            if (!feasible(pv, hv))
                return false;
            if (++explored_ > budget_) {
                aborted_ = true;
                return false;
            }
            map_[pv] = hv;
            used_[hv] = 1;
            if (extend(depth + 1))
                return true;
            map_[pv] = -1;
            used_[hv] = 0;
            return false;
        };
        if (anchor >= 0) {
            for (int hv : h_.neighbors(anchor)) {
                if (attempt(hv))
                    return true;
                if (aborted_)
                    return false;
            }
        } else {
            for (int hv = 0; hv < h_.order(); ++hv) {
                if (attempt(hv))
                    return true;
                if (aborted_)
                    return false;
            }
        }
        return false;
    }

    const Graph& p_;
    const Graph& h_;
    std::uint64_t budget_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<char> used_;
    std::uint64_t explored_ = 0;
    bool aborted_ = false;
};

} // namespace

EmbeddingOutcome find_embedding(const Graph& pattern, const Graph& host, std::uint64_t budget) {
    if (pattern.order() > host.order())
        throw InputError("pattern " + pattern.name() + " has more vertices than host " +
                         host.name());
    Matcher m(pattern, host, budget);
    EmbeddingOutcome out;
    out.status = m.run();
    out.explored = m.explored();
    if (out.status == EmbeddingStatus::Found)
        out.mapping = m.mapping();
    return out;
}

bool is_embedding(const Graph& pattern, const Graph& host, const std::vector<int>& mapping) {
    if (static_cast<int>(mapping.size()) != pattern.order())
        return false;
    std::vector<int> sorted = mapping;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int x : mapping)
        if (x < 0 || x >= host.order())
            return false;
    for (const auto& e : pattern.edges())
        if (!host.adjacent(mapping[e.u], mapping[e.v]))
            return false;
    return true;
}

} // namespace sierp
