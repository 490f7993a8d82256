#pragma once

#include "brp/model.hpp"
#include "brp/reduced.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

namespace brp {

/// STATE(t,s,h): configuration t of the reduced solution with n inserted at stack s, tier h.
struct State {
    int t = 0;
    int s = 0;
    int h = 0;
    bool operator==(const State&) const = default;
};

struct Transition {
    State to;
    int cost = 0;
    bool operator==(const Transition&) const = default;
};

/// Feasibility of a state.
///
/// - t = 1: only the initial position of n.
/// - t = M: n exactly on top (h = h(s,M)+1) and h(s,M) < H_max.
/// - otherwise: h <= h(s,t)+1 and h(s,t) < H_max; if n is buried (h <= h(s,t))
///   and step t drops a container on s, also h(s,t)+1 < H_max.
///
/// A state with n on top of the stack that step t takes from, or onto which
/// step t would overflow, is still feasible: n can be relocated before the step.
/// Those two conditions gate the cost-0 transition instead.
bool state_feasible(const ReducedSolution& red, const State& st);

/// Successors of a feasible state with t < M, in a fixed order: the cost-0
/// edge first (if any), then cost-1 relocations by increasing destination.
///
/// Relocating n from s to s' before step t lands it at tier h(s',t)+1 and is
/// allowed when s' is not the source of step t, h(s',t) < H_max, there is
/// still room if step t also drops onto s', and the target state is feasible.
std::vector<Transition> transitions(const ReducedSolution& red, const State& from);

struct SpeedupOptions {
    bool upper_bound = true;
    bool useless_evaluations = true;
    bool aspiration = true;

    static SpeedupOptions none() { return {false, false, false}; }
    static SpeedupOptions exact() { return {true, true, false}; }
};

/// Relocate n to `dst` just before step `before_step` of the reduced solution.
struct ScheduledRelocation {
    int before_step = 0;
    int dst = 0;
    bool operator==(const ScheduledRelocation&) const = default;
};

struct OptResult {
    bool improved = false;
    /// Cost of the returned schedule when improved. Otherwise the cheapest final
    /// state reached (exact with pruning off), or f_n if pruning cut them all.
    int best_cost = 0;
    int current_cost = 0;
    std::vector<ScheduledRelocation> schedule;
    bool aspirated = false;
    /// Candidate successors evaluated.
    std::size_t expansions = 0;
    int config_count = 0;
};

/// Re-optimizes the relocations of container n with the layered dynamic program.
OptResult opt_n(const Instance& inst, const Solution& sol, int n, const SpeedupOptions& options = {});
OptResult opt_reduced(const ReducedSolution& red, int current_cost, const SpeedupOptions& options = {});

/// Splices an improving schedule for n into the solution. Moves of every other
/// container are kept in order; throws std::logic_error if the result does not replay.
Solution rebuild(const Instance& inst, const Solution& sol, int n, const OptResult& res);
Solution rebuild(const Instance& inst, const Solution& sol, const ReducedSolution& red,
                 const std::vector<ScheduledRelocation>& schedule);

struct LsOptions {
    SpeedupOptions speedups;
    /// Wall-clock budget; when exceeded, LS stops between two operator calls.
    std::optional<std::chrono::steady_clock::duration> time_limit;
};

struct LsEvent {
    int sweep = 0;
    int container = 0;
    int old_f = 0;
    int new_f = 0;
    bool aspirated = false;
};

struct LsResult {
    Solution solution;
    std::vector<LsEvent> log;
    int sweeps = 0;
    std::size_t opt_calls = 0;
    std::size_t skipped = 0;
    bool timed_out = false;
};

/// Applies opt_n to containers 1..N in turn, skipping those already at their
/// lower bound, and repeats full sweeps until one brings no improvement.
LsResult local_search(const Instance& inst, const Solution& start, const LsOptions& options = {});

} // namespace brp
