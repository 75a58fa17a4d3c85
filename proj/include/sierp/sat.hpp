#pragma once

#include "sierp/solver.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

namespace sierp {

/// Small CDCL SAT solver: two watched literals, first-UIP learning, VSIDS
/// branching, phase saving and Luby restarts.
///
/// Literals are 2 * var + (negated ? 1 : 0) for variables from new_var().
class SatSolver {
public:
    static int pos(int v) { return 2 * v; }
    static int neg(int v) { return 2 * v + 1; }

    int new_var();
    int vars() const { return static_cast<int>(assign_.size()); }

    /// Adds a clause before solving. Returns false once the formula is known
    /// to be unsatisfiable.
    bool add_clause(std::vector<int> lits);

    /// Unknown when `conflict_budget` conflicts pass or `stop` is raised.
    SolveStatus solve(std::uint64_t conflict_budget, const std::atomic<bool>* stop = nullptr);

    /// Model value of v after a Sat answer.
    bool value(int v) const { return assign_[v] == 1; }

    std::uint64_t conflicts() const { return conflicts_; }

private:
    struct Clause {
        std::vector<int> lits;
        bool learnt = false;
        bool deleted = false;
        double activity = 0;
    };

    int lit_value(int lit) const {
        const int a = assign_[lit >> 1];
        return a < 0 ? -1 : a ^ (lit & 1);
    }
    void enqueue(int lit, int reason);
    int propagate();
    void analyze(int confl, std::vector<int>& learnt, int& back_level);
    void backtrack(int level);
    int pick_branch();
    void attach(int ci);
    void bump_var(int v);
    void bump_clause(Clause& c);
    void reduce_learnts();
    bool locked(int ci) const;

    void heap_insert(int v);
    void heap_up(int i);
    void heap_down(int i);
    int heap_pop();

    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_;
    std::vector<int> assign_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<char> phase_;
    std::vector<char> seen_;
    std::vector<double> activity_;
    std::vector<int> heap_;
    std::vector<int> heap_pos_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
    double var_inc_ = 1;
    double clause_inc_ = 1;
    std::size_t learnt_count_ = 0;
    std::uint64_t conflicts_ = 0;
    bool unsat_ = false;
};

/// k-colorability of `h` through SatSolver. `allowed[v]` holds the 0-based
/// colors node v may take; `anchors` are pinned to colors 0, 1, ... in order.
SolveOutcome sat_k_colorable(const Graph& h, int k, const std::vector<std::uint64_t>& allowed,
                             const std::vector<int>& anchors, std::uint64_t conflict_budget,
                             const std::atomic<bool>* stop = nullptr);

} // namespace sierp
