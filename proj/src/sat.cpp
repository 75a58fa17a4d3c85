#include "sierp/sat.hpp"

#include <algorithm>
#include <stdexcept>

namespace sierp {

namespace {

// Luby sequence 1 1 2 1 1 2 4 ... at position i (0-based).
std::uint64_t luby(std::uint64_t i) {
    std::uint64_t size = 1, seq = 0;
    while (size < i + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != i) {
        size = (size - 1) >> 1;
        --seq;
        i %= size;
    }
    return std::uint64_t{1} << seq;
}

} // namespace

int SatSolver::new_var() {
    const int v = vars();
    assign_.push_back(-1);
    level_.push_back(0);
    reason_.push_back(-1);
    phase_.push_back(0);
    seen_.push_back(0);
    activity_.push_back(0);
    heap_pos_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v;
}

bool SatSolver::add_clause(std::vector<int> lits) {
    if (unsat_)
        return false;
    if (!trail_lim_.empty())
        throw std::logic_error("clauses can only be added at decision level 0");
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && (lits[i] ^ 1) == lits[i + 1])
            return true;  // tautology
        const int val = lit_value(lits[i]);
        if (val == 1)
            return true;
        if (val < 0)
            kept.push_back(lits[i]);
    }
    if (kept.empty()) {
        unsat_ = true;
        return false;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        if (propagate() >= 0)
            unsat_ = true;
        return !unsat_;
    }
    clauses_.push_back({std::move(kept)});
    attach(static_cast<int>(clauses_.size()) - 1);
    return true;
}

void SatSolver::attach(int ci) {
    const Clause& c = clauses_[ci];
    watches_[c.lits[0]].push_back(ci);
    watches_[c.lits[1]].push_back(ci);
}

void SatSolver::enqueue(int lit, int reason) {
    const int v = lit >> 1;
    assign_[v] = (lit & 1) ^ 1;
    level_[v] = static_cast<int>(trail_lim_.size());
    reason_[v] = reason;
    trail_.push_back(lit);
}

// Returns the index of a conflicting clause, or -1.
int SatSolver::propagate() {
    while (qhead_ < trail_.size()) {
        const int false_lit = trail_[qhead_++] ^ 1;
        std::vector<int>& ws = watches_[false_lit];
        std::size_t keep = 0;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            const int ci = ws[i];
            Clause& c = clauses_[ci];
            if (c.deleted)
                continue;
            if (c.lits[0] == false_lit)
                std::swap(c.lits[0], c.lits[1]);
            if (lit_value(c.lits[0]) == 1) {
                ws[keep++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t j = 2; j < c.lits.size(); ++j) {
                if (lit_value(c.lits[j]) != 0) {
                    std::swap(c.lits[1], c.lits[j]);
                    watches_[c.lits[1]].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved)
                continue;
            ws[keep++] = ci;
            if (lit_value(c.lits[0]) == 0) {
                for (++i; i < ws.size(); ++i)
                    ws[keep++] = ws[i];
                ws.resize(keep);
                qhead_ = trail_.size();
                return ci;
            }
            enqueue(c.lits[0], ci);
        }
        ws.resize(keep);
    }
    return -1;
}

void SatSolver::analyze(int confl, std::vector<int>& learnt, int& back_level) {
    learnt.assign(1, 0);
    const int current = static_cast<int>(trail_lim_.size());
    int pending = 0;
    int lit = -1;
    std::size_t index = trail_.size();
    std::vector<int> touched;
    do {
        Clause& c = clauses_[confl];
        if (c.learnt)
            bump_clause(c);
        for (std::size_t j = lit < 0 ? 0 : 1; j < c.lits.size(); ++j) {
            const int q = c.lits[j];
            const int v = q >> 1;
            if (seen_[v] || level_[v] == 0)
                continue;
            seen_[v] = 1;
            touched.push_back(v);
            bump_var(v);
            if (level_[v] == current)
                ++pending;
            else
                learnt.push_back(q);
        }
        while (!seen_[trail_[--index] >> 1]) {
        }
        lit = trail_[index];
        confl = reason_[lit >> 1];
        seen_[lit >> 1] = 0;
        --pending;
    } while (pending > 0);
    learnt[0] = lit ^ 1;

    // drop literals implied by the rest of the clause
    std::size_t out = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
        const int r = reason_[learnt[i] >> 1];
        bool redundant = r >= 0;
        if (redundant)
            for (int q : clauses_[r].lits) {
                const int v = q >> 1;
                if (v != (learnt[i] >> 1) && !seen_[v] && level_[v] > 0) {
                    redundant = false;
                    break;
                }
            }
        if (!redundant)
            learnt[out++] = learnt[i];
    }
    learnt.resize(out);
    for (int v : touched)
        seen_[v] = 0;

    back_level = 0;
    if (learnt.size() > 1) {
        std::size_t best = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[learnt[i] >> 1] > level_[learnt[best] >> 1])
                best = i;
        std::swap(learnt[1], learnt[best]);
        back_level = level_[learnt[1] >> 1];
    }
}

void SatSolver::backtrack(int level) {
    if (static_cast<int>(trail_lim_.size()) <= level)
        return;
    for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[level]);) {
        const int v = trail_[i] >> 1;
        phase_[v] = static_cast<char>(trail_[i] & 1);
        assign_[v] = -1;
        reason_[v] = -1;
        if (heap_pos_[v] < 0)
            heap_insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
}

int SatSolver::pick_branch() {
    while (!heap_.empty()) {
        const int v = heap_pop();
        if (assign_[v] < 0)
            return 2 * v + phase_[v];
    }
    return -1;
}

void SatSolver::bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (double& a : activity_)
            a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0)
        heap_up(heap_pos_[v]);
}

void SatSolver::bump_clause(Clause& c) {
    c.activity += clause_inc_;
    if (c.activity > 1e20) {
        for (Clause& d : clauses_)
            if (d.learnt)
                d.activity *= 1e-20;
        clause_inc_ *= 1e-20;
    }
}

bool SatSolver::locked(int ci) const {
    const Clause& c = clauses_[ci];
    const int v = c.lits[0] >> 1;
    return reason_[v] == ci && lit_value(c.lits[0]) == 1;
}

void SatSolver::reduce_learnts() {
    std::vector<int> cand;
    for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
        const Clause& c = clauses_[ci];
        if (c.learnt && !c.deleted && c.lits.size() > 2 && !locked(ci))
            cand.push_back(ci);
    }
    std::sort(cand.begin(), cand.end(),
              [this](int a, int b) { return clauses_[a].activity < clauses_[b].activity; });
    for (std::size_t i = 0; i < cand.size() / 2; ++i) {
        Clause& c = clauses_[cand[i]];
        c.deleted = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
        --learnt_count_;
    }
    for (auto& ws : watches_)
        std::erase_if(ws, [this](int ci) { return clauses_[ci].deleted; });
}

SolveStatus SatSolver::solve(std::uint64_t conflict_budget, const std::atomic<bool>* stop) {
    if (unsat_)
        return SolveStatus::Unsat;
    if (propagate() >= 0) {
        unsat_ = true;
        return SolveStatus::Unsat;
    }
    std::size_t max_learnts = std::max<std::size_t>(clauses_.size() / 3, 2000);
    std::uint64_t restart = 0;
    std::uint64_t until_restart = 100 * luby(restart);
    std::vector<int> learnt;
    while (true) {
        const int confl = propagate();
        if (confl >= 0) {
            ++conflicts_;
            if (trail_lim_.empty()) {
                unsat_ = true;
                return SolveStatus::Unsat;
            }
            int back_level = 0;
            analyze(confl, learnt, back_level);
            backtrack(back_level);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                clauses_.push_back({learnt, true});
                const int ci = static_cast<int>(clauses_.size()) - 1;
                attach(ci);
                bump_clause(clauses_[ci]);
                ++learnt_count_;
                enqueue(learnt[0], ci);
            }
            var_inc_ /= 0.95;
            clause_inc_ /= 0.999;
            if (conflicts_ >= conflict_budget || (stop && stop->load(std::memory_order_relaxed))) {
                backtrack(0);
                return SolveStatus::Unknown;
            }
            if (--until_restart == 0) {
                backtrack(0);
                until_restart = 100 * luby(++restart);
            }
            continue;
        }
        if (learnt_count_ >= max_learnts + trail_.size()) {
            reduce_learnts();
            max_learnts += max_learnts / 10;
        }
        const int next = pick_branch();
        if (next < 0)
            return SolveStatus::Sat;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(next, -1);
    }
}

void SatSolver::heap_insert(int v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_pos_[v]);
}

void SatSolver::heap_up(int i) {
    const int v = heap_[i];
    while (i > 0) {
        const int parent = (i - 1) / 2;
        if (activity_[heap_[parent]] >= activity_[v])
            break;
        heap_[i] = heap_[parent];
        heap_pos_[heap_[i]] = i;
        i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
}

void SatSolver::heap_down(int i) {
    const int n = static_cast<int>(heap_.size());
    const int v = heap_[i];
    while (2 * i + 1 < n) {
        int child = 2 * i + 1;
        if (child + 1 < n && activity_[heap_[child + 1]] > activity_[heap_[child]])
            ++child;
        if (activity_[heap_[child]] <= activity_[v])
            break;
        heap_[i] = heap_[child];
        heap_pos_[heap_[i]] = i;
        i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
}

int SatSolver::heap_pop() {
    const int top = heap_[0];
    heap_pos_[top] = -1;
    const int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        heap_pos_[last] = 0;
        heap_down(0);
    }
    return top;
}

SolveOutcome sat_k_colorable(const Graph& h, int k, const std::vector<std::uint64_t>& allowed,
                             const std::vector<int>& anchors, std::uint64_t conflict_budget,
                             const std::atomic<bool>* stop) {
    const int n = h.order();
    SatSolver s;
    std::vector<int> var(static_cast<std::size_t>(n) * k, -1);
    auto x = [&](int v, int c) -> int& { return var[static_cast<std::size_t>(v) * k + c]; };
    SolveOutcome out;
    out.value = k;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
        std::vector<int> alo;
        for (int c = 0; c < k; ++c)
            if (allowed[v] >> c & 1) {
                x(v, c) = s.new_var();
                alo.push_back(SatSolver::pos(x(v, c)));
            }
        ok = s.add_clause(std::move(alo));
    }
    for (std::size_t i = 0; i < anchors.size() && ok; ++i) {
        const int c = static_cast<int>(i);
        ok = c < k && x(anchors[i], c) >= 0 && s.add_clause({SatSolver::pos(x(anchors[i], c))});
    }
    for (const Edge& e : h.edges()) {
        if (!ok)
            break;
        for (int c = 0; c < k && ok; ++c)
            if (x(e.u, c) >= 0 && x(e.v, c) >= 0)
                ok = s.add_clause({SatSolver::neg(x(e.u, c)), SatSolver::neg(x(e.v, c))});
    }
    out.status = ok ? s.solve(conflict_budget, stop) : SolveStatus::Unsat;
    out.explored = s.conflicts();
    if (out.status == SolveStatus::Sat) {
        out.coloring.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < k; ++c)
                if (x(v, c) >= 0 && s.value(x(v, c))) {
                    out.coloring[v] = c + 1;
                    break;
                }
    }
    return out;
}

} // namespace sierp
