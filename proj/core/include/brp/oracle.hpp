#pragma once

#include "brp/model.hpp"

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

namespace brp::oracle {

/// Node of the explicit state graph, same meaning as brp::State.
struct Node {
    int t = 0;
    int s = 0;
    int h = 0;
    auto operator<=>(const Node&) const = default;
};

struct Edge {
    Node from;
    Node to;
    int cost = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Reachable part of the state graph of container n.
struct StateGraph {
    int config_count = 0;
    Node initial;
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<Node> finals;
};

struct GraphLimits {
    /// Cap on M * W * H_max cells enumerated.
    std::size_t max_cells = 20'000'000;
};

/// Materializes every state (t,s,h), h up to the effective height bound, by
/// physically replaying the solution with n inserted, and keeps the part
/// reachable from the initial state. Shares no code with the dynamic program.
/// Throws std::length_error beyond the cell cap.
StateGraph explicit_state_graph(const Instance& inst, const Solution& sol, int n, const GraphLimits& limits = {});

/// 0/1 shortest path from the initial state to the nearest final state;
/// nullopt if no final state is reachable.
std::optional<int> explicit_graph_opt(const Instance& inst, const Solution& sol, int n,
                                      const GraphLimits& limits = {});

struct ExactLimits {
    int max_relocations = 64;
    int max_containers = 10;
};

/// Minimum number of relocations over all U-BRP solutions, by iterative
/// deepening with the blocking-count bound; nullopt when the optimum exceeds
/// `max_relocations`. Throws std::invalid_argument when N exceeds the guard.
std::optional<int> exact_solve(const Instance& inst, const ExactLimits& limits = {});

} // namespace brp::oracle
