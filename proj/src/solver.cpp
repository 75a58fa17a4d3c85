#include "sierp/solver.hpp"

#include "sierp/errors.hpp"
#include "sierp/reductions.hpp"
#include "sierp/sat.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace sierp {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SIERP_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 500'000'000ull;
}

std::string to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Sat:
        return "SAT";
    case SolveStatus::Unsat:
        return "UNSAT";
    case SolveStatus::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

namespace {

using Mask = std::uint64_t;

Mask bit(int c) { return Mask{1} << c; }

/// One DSATUR backtracking run. Colors are 0-based internally.
class Search {
public:
    Search(const Graph& g, int k, std::vector<Mask> allowed, Mask symmetric,
           std::vector<int> anchor, std::vector<int> priority, std::uint64_t budget,
           const std::atomic<bool>* stop)
        : g_(g), k_(k), allowed_(std::move(allowed)), symmetric_(symmetric),
          anchor_(std::move(anchor)), priority_(std::move(priority)), budget_(budget),
          stop_(stop) {
        const int n = g.order();
        color_.assign(n, -1);
        count_.assign(static_cast<std::size_t>(n) * k_, 0);
        blocked_.assign(n, 0);
        used_.assign(k_, 0);
        udeg_.resize(n);
        free_.resize(n);
        pos_.resize(n);
        for (int v = 0; v < n; ++v) {
            udeg_[v] = g.degree(v);
            free_[v] = v;
            pos_[v] = v;
        }
        nfree_ = n;
    }

    SolveStatus run() {
        for (int v = 0; v < g_.order(); ++v)
            if (allowed_[v] == 0)
                return SolveStatus::Unsat;
        if (dfs())
            return SolveStatus::Sat;
        return aborted_ ? SolveStatus::Unknown : SolveStatus::Unsat;
    }

    std::vector<int> coloring() const {
        std::vector<int> out(color_.size());
        for (std::size_t v = 0; v < color_.size(); ++v)
            out[v] = color_[v] + 1;
        return out;
    }

    std::uint64_t explored() const noexcept { return explored_; }

private:
    Mask avail(int v) const { return allowed_[v] & ~blocked_[v]; }

    int select() {
        while (anchor_pos_ < anchor_.size()) {
            const int a = anchor_[anchor_pos_];
            if (color_[a] < 0)
                return a;
            ++anchor_pos_;
        }
        int best = -1;
        int best_avail = 0;
        for (int i = 0; i < nfree_; ++i) {
            const int v = free_[i];
            const int a = std::popcount(avail(v));
            if (best < 0 || a < best_avail ||
                (a == best_avail && (udeg_[v] > udeg_[best] ||
                                     (udeg_[v] == udeg_[best] && priority_[v] < priority_[best])))) {
                best = v;
                best_avail = a;
            }
        }
        return best;
    }

    void remove_free(int v) {
        const int i = pos_[v];
        const int last = free_[nfree_ - 1];
        free_[i] = last;
        pos_[last] = i;
        free_[nfree_ - 1] = v;
        pos_[v] = nfree_ - 1;
        --nfree_;
    }

    void restore_free(int v) {
        // v sits at position nfree_ by the LIFO discipline
        (void)v;
        ++nfree_;
    }

    // Returns false on a domain wipe-out; the update is applied in full either way.
    bool assign(int v, int c) {
        color_[v] = c;
        ++used_[c];
        remove_free(v);
        bool ok = true;
        for (int u : g_.neighbors(v)) {
            --udeg_[u];
            if (count_[static_cast<std::size_t>(u) * k_ + c]++ == 0) {
                blocked_[u] |= bit(c);
                if (color_[u] < 0 && avail(u) == 0)
                    ok = false;
            }
        }
        return ok;
    }

    void unassign(int v, int c) {
        for (int u : g_.neighbors(v)) {
            ++udeg_[u];
            if (--count_[static_cast<std::size_t>(u) * k_ + c] == 0)
                blocked_[u] &= ~bit(c);
        }
        restore_free(v);
        --used_[c];
        color_[v] = -1;
    }

    bool dfs() {
        if (nfree_ == 0)
            return true;
        const int v = select();
        Mask av = avail(v);
        bool fresh_tried = false;
        while (av) {
            const int c = std::countr_zero(av);
            av &= av - 1;
            if ((symmetric_ & bit(c)) && used_[c] == 0) {
                if (fresh_tried)
                    continue;
                fresh_tried = true;
            }
            if (++explored_ > budget_ || (stop_ && stop_->load(std::memory_order_relaxed))) {
                aborted_ = true;
                return false;
            }
            const bool ok = assign(v, c);
            if (ok && dfs())
                return true;
            unassign(v, c);
            if (aborted_)
                return false;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<Mask> allowed_;
    Mask symmetric_;
    std::vector<int> anchor_;
    std::size_t anchor_pos_ = 0;
    std::vector<int> priority_;
    std::uint64_t budget_;
    const std::atomic<bool>* stop_;

    std::vector<int> color_;
    std::vector<int> count_;
    std::vector<Mask> blocked_;
    std::vector<int> used_;
    std::vector<int> udeg_;
    std::vector<int> free_;
    std::vector<int> pos_;
    int nfree_ = 0;
    std::uint64_t explored_ = 0;
    bool aborted_ = false;
};

struct Prepared {
    std::vector<Mask> allowed;
    Mask symmetric = 0;
    bool trivially_unsat = false;
};

Prepared prepare(const Graph& h, int k, const ColorConstraints& cons) {
    const Mask full = k == 64 ? ~Mask{0} : bit(k) - 1;
    Prepared p;
    p.allowed.assign(h.order(), full);
    p.symmetric = full;
    auto check_node = [&h](int v) {
        if (v < 0 || v >= h.order())
            throw InputError("constraint names node " + std::to_string(v) + " outside the graph");
    };
    for (const auto& [v, cols] : cons.forbidden) {
        check_node(v);
        for (int c : cols) {
            if (c < 1)
                throw InputError("forbidden color must be >= 1");
            if (c <= k) {
                p.allowed[v] &= ~bit(c - 1);
                p.symmetric &= ~bit(c - 1);
            }
        }
    }
    for (const auto& [v, c] : cons.forced) {
        check_node(v);
        if (c < 1)
            throw InputError("forced color must be >= 1");
        if (auto it = cons.forbidden.find(v); it != cons.forbidden.end() && it->second.contains(c))
            throw InputError("node " + std::to_string(v) + " is forced to forbidden color " +
                             std::to_string(c));
        if (c > k) {
            p.trivially_unsat = true;
            continue;
        }
        p.allowed[v] &= bit(c - 1);
        p.symmetric &= ~bit(c - 1);
    }
    for (std::size_t i = 0; i < cons.anchor.size(); ++i) {
        check_node(cons.anchor[i]);
        for (std::size_t j = i + 1; j < cons.anchor.size(); ++j)
            if (!h.adjacent(cons.anchor[i], cons.anchor[j]))
                throw InputError("anchor nodes " + std::to_string(cons.anchor[i]) + " and " +
                                 std::to_string(cons.anchor[j]) + " are not adjacent");
    }
    return p;
}

} // namespace

namespace {

// First stage of k_colorable; `budget` bounds the DSATUR node expansions.
SolveOutcome dsatur_stage(const Graph& h, int k, const Prepared& p, const ColorConstraints& cons,
                          const SolverOptions& opts, std::uint64_t budget) {
    SolveOutcome out;
    out.value = k;
    std::vector<int> identity(h.order());
    std::iota(identity.begin(), identity.end(), 0);
    const int threads = std::max(1, opts.portfolio);

    if (threads == 1) {
        Search s(h, k, p.allowed, p.symmetric, cons.anchor, identity, budget, nullptr);
        out.status = s.run();
        out.explored = s.explored();
        if (out.status == SolveStatus::Sat)
            out.coloring = s.coloring();
        return out;
    }

    std::atomic<bool> stop{false};
    std::mutex mu;
    bool have = false;
    std::uint64_t explored = 0;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::vector<int> prio = identity;
            if (t > 0) {
                std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(t));
                std::shuffle(prio.begin(), prio.end(), rng);
            }
            Search s(h, k, p.allowed, p.symmetric, cons.anchor, prio, budget, &stop);
            const SolveStatus st = s.run();
            std::lock_guard lock(mu);
            explored += s.explored();
            if (st != SolveStatus::Unknown && !have) {
                have = true;
                out.status = st;
                if (st == SolveStatus::Sat)
                    out.coloring = s.coloring();
                stop = true;
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (!have)
        out.status = SolveStatus::Unknown;
    out.explored = explored;
    return out;
}

constexpr std::uint64_t kDsaturSlice = 200'000;

} // namespace

SolveOutcome k_colorable(const Graph& h, int k, const ColorConstraints& cons,
                         const SolverOptions& opts) {
    if (k < 1 || k > kMaxColors)
        throw InputError("k must be in 1.." + std::to_string(kMaxColors) + ", got " +
                         std::to_string(k));
    Prepared p = prepare(h, k, cons);
    SolveOutcome out;
    out.value = k;
    out.budget = opts.budget;
    if (p.trivially_unsat) {
        out.status = SolveStatus::Unsat;
        return out;
    }
    SolveOutcome first = dsatur_stage(h, k, p, cons, opts, std::min(opts.budget, kDsaturSlice));
    first.budget = opts.budget;
    if (first.status != SolveStatus::Unknown || first.explored >= opts.budget)
        return first;

    // DSATUR proves infeasibility poorly; clause learning takes over
    const Mask full = k == 64 ? ~Mask{0} : bit(k) - 1;
    const std::vector<int> pins = p.symmetric == full ? cons.anchor : std::vector<int>{};
    SolveOutcome second =
        sat_k_colorable(h, k, p.allowed, pins, opts.budget - first.explored);
    second.explored += first.explored;
    second.budget = opts.budget;
    return second;
}

std::vector<int> greedy_clique(const Graph& h) {
    std::vector<int> best;
    for (int s = 0; s < h.order(); ++s) {
        std::vector<int> cand = h.neighbors(s);
        std::stable_sort(cand.begin(), cand.end(),
                         [&h](int a, int b) { return h.degree(a) > h.degree(b); });
        std::vector<int> clique{s};
        for (int c : cand) {
            bool ok = true;
            for (int x : clique)
                if (!h.adjacent(c, x)) {
                    ok = false;
                    break;
                }
            if (ok)
                clique.push_back(c);
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    return best;
}

namespace {

// One-pass DSATUR with an open palette; respects forbidden/forced colors.
// Returns 0 if some node runs out of the 64 available colors.
int greedy_upper_bound(const Graph& h, const ColorConstraints& cons) {
    Prepared p = prepare(h, kMaxColors, cons);
    if (p.trivially_unsat)
        return 0;
    const int n = h.order();
    std::vector<int> color(n, -1);
    std::vector<Mask> blocked(n, 0);
    int maxc = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0)
                continue;
            const int sat = std::popcount(blocked[v] | ~p.allowed[v]);
            if (sat > best_sat || (sat == best_sat && h.degree(v) > h.degree(best))) {
                best = v;
                best_sat = sat;
            }
        }
        const Mask av = p.allowed[best] & ~blocked[best];
        if (av == 0)
            return 0;
        const int c = std::countr_zero(av);
        color[best] = c;
        maxc = std::max(maxc, c + 1);
        for (int u : h.neighbors(best))
            blocked[u] |= bit(c);
    }
    return maxc;
}

} // namespace

SolveOutcome chromatic_number(const Graph& h, const ColorConstraints& cons,
                              const SolverOptions& opts) {
    SolveOutcome out;
    out.budget = opts.budget;
    if (h.order() == 0) {
        out.status = SolveStatus::Sat;
        return out;
    }
    ColorConstraints c = cons;
    const std::vector<int> clique = greedy_clique(h);
    if (c.anchor.empty())
        c.anchor = clique;
    int lower = std::max<int>(1, static_cast<int>(clique.size()));
    int upper = greedy_upper_bound(h, c);
    const int top = upper > 0 ? upper : kMaxColors;
    if (lower > kMaxColors)
        throw ResourceError("clique of size " + std::to_string(lower) + " exceeds the " +
                            std::to_string(kMaxColors) + "-color limit");

    std::uint64_t explored = 0;
    for (int k = lower; k <= top; ++k) {
        SolverOptions o = opts;
        o.budget = opts.budget > explored ? opts.budget - explored : 0;
        SolveOutcome r = k_colorable(h, k, c, o);
        explored += r.explored;
        if (r.status == SolveStatus::Sat) {
            out.status = SolveStatus::Sat;
            out.value = out.lower = out.upper = k;
            out.coloring = std::move(r.coloring);
            out.explored = explored;
            return out;
        }
        if (r.status == SolveStatus::Unknown) {
            out.status = SolveStatus::Unknown;
            out.lower = k;
            out.upper = upper > 0 ? upper : 0;
            out.explored = explored;
            return out;
        }
    }
    // every k up to the bound is infeasible under the constraints
    out.status = SolveStatus::Unsat;
    out.lower = top + 1;
    out.explored = explored;
    return out;
}

InjectiveVertexResult injective_chromatic_number(const Graph& s, const SolverOptions& opts) {
    const ConflictGraph cg = common_neighbor_graph(s);
    InjectiveVertexResult res;
    res.outcome = chromatic_number(cg.graph, {}, opts);
    if (res.outcome.status == SolveStatus::Sat) {
        std::vector<int> colors(s.order(), 0);
        for (int i = 0; i < cg.graph.order(); ++i)
            colors[cg.node_map[i]] = res.outcome.coloring[i];
        res.certificate = make_vertex_coloring(s, std::move(colors), res.outcome.value);
        if (s.order() > 0 && validate_vertex(s, res.certificate))
            throw std::logic_error("solver certificate failed injective validation");
    }
    return res;
}

InjectiveEdgeResult injective_chromatic_index(const Graph& s, const SolverOptions& opts) {
    const ConflictGraph cg = tilde_graph(s);
    InjectiveEdgeResult res;
    res.outcome = chromatic_number(cg.graph, {}, opts);
    if (res.outcome.status == SolveStatus::Sat) {
        std::vector<int> colors(s.size(), 0);
        for (int i = 0; i < cg.graph.order(); ++i)
            colors[cg.node_map[i]] = res.outcome.coloring[i];
        res.certificate = make_edge_coloring(s, std::move(colors), res.outcome.value);
        if (validate_edge(s, res.certificate))
            throw std::logic_error("solver certificate failed injective edge validation");
    }
    return res;
}

} // namespace sierp
