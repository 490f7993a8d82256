#include "brp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace brp::oracle {

namespace {

using Stacks = std::vector<std::vector<int>>;

struct Prefix {
    std::vector<Stacks> configs; // without n
    std::vector<Move> steps;
    Node initial;
};

Prefix reduce_by_replay(const Instance& inst, const Solution& sol, int n)
{
    if (n < 1 || n > inst.n_containers) {
        throw std::invalid_argument("container out of range");
    }
    const auto report = validate(inst, sol);
    if (!report.ok) {
        throw std::invalid_argument("invalid solution: " + report.message);
    }
    auto without_n = [n](Stacks bay) {
        for (auto& st : bay) {
            st.erase(std::remove(st.begin(), st.end(), n), st.end());
        }
        return bay;
    };

    Prefix out;
    Stacks bay = inst.initial_bay.stacks();
    const auto pos = *inst.initial_bay.find(n);
    out.initial = Node{1, pos.stack, pos.tier};
    out.configs.push_back(without_n(bay));
    for (const Move& m : sol.moves) {
        auto& src = bay[static_cast<std::size_t>(m.src - 1)];
        const int c = src.back();
        if (c == n && !m.is_relocation()) {
            break;
        }
        src.pop_back();
        if (m.is_relocation()) {
            bay[static_cast<std::size_t>(m.dst - 1)].push_back(c);
        }
        if (c == n) {
            // the configuration after a relocation of n replaces the previous one
            continue;
        }
        out.steps.push_back(m);
        out.configs.push_back(without_n(bay));
    }
    return out;
}

class Simulator {
public:
    Simulator(const Prefix& prefix, int n, int h_max) : prefix_(prefix), n_(n), h_max_(h_max) {}

    int config_count() const { return static_cast<int>(prefix_.configs.size()); }

    Stacks with_n(const Node& node) const
    {
        Stacks bay = config(node.t);
        auto& st = bay[static_cast<std::size_t>(node.s - 1)];
        st.insert(st.begin() + (node.h - 1), n_);
        return bay;
    }

    bool physically_valid(const Node& node) const
    {
        const auto& st = config(node.t)[static_cast<std::size_t>(node.s - 1)];
        const int height = static_cast<int>(st.size());
        return node.h >= 1 && node.h <= height + 1 && height + 1 <= h_max_;
    }

    bool on_top(const Node& node) const
    {
        return node.h == static_cast<int>(config(node.t)[static_cast<std::size_t>(node.s - 1)].size()) + 1;
    }

    /// Applies step t to a bay containing n; returns n's new node or nothing if illegal.
    std::optional<Node> apply_step(Stacks bay, int t) const
    {
        const Move& m = prefix_.steps[static_cast<std::size_t>(t - 1)];
        auto& src = bay[static_cast<std::size_t>(m.src - 1)];
        if (src.empty() || src.back() == n_) {
            return std::nullopt;
        }
        const int c = src.back();
        src.pop_back();
        if (m.is_relocation()) {
            auto& dst = bay[static_cast<std::size_t>(m.dst - 1)];
            if (static_cast<int>(dst.size()) >= h_max_) {
                return std::nullopt;
            }
            dst.push_back(c);
        }
        return locate(bay, t + 1);
    }

    std::optional<Node> relocate_then_step(const Node& node, int dst) const
    {
        Stacks bay = with_n(node);
        auto& from = bay[static_cast<std::size_t>(node.s - 1)];
        auto& to = bay[static_cast<std::size_t>(dst - 1)];
        if (from.back() != n_ || static_cast<int>(to.size()) >= h_max_) {
            return std::nullopt;
        }
        from.pop_back();
        to.push_back(n_);
        return apply_step(std::move(bay), node.t);
    }

    bool is_node(const Node& node) const
    {
        const int m = config_count();
        if (node.t == 1) {
            return node == prefix_.initial && (m > 1 || on_top(node));
        }
        if (!physically_valid(node)) {
            return false;
        }
        if (node.t == m) {
            return on_top(node);
        }
        // a buried n cannot move, so the next step must go through with n in place
        return on_top(node) || apply_step(with_n(node), node.t).has_value();
    }

private:
    const Stacks& config(int t) const { return prefix_.configs[static_cast<std::size_t>(t - 1)]; }

    Node locate(const Stacks& bay, int t) const
    {
        for (std::size_t s = 0; s < bay.size(); ++s) {
            for (std::size_t k = 0; k < bay[s].size(); ++k) {
                if (bay[s][k] == n_) {
                    return Node{t, static_cast<int>(s) + 1, static_cast<int>(k) + 1};
                }
            }
        }
        throw std::logic_error("container vanished during simulation");
    }

    const Prefix& prefix_;
    int n_;
    int h_max_;
};

} // namespace

StateGraph explicit_state_graph(const Instance& inst, const Solution& sol, int n, const GraphLimits& limits)
{
    const Prefix prefix = reduce_by_replay(inst, sol, n);
    const int h_max = inst.effective_h_max();
    const Simulator sim(prefix, n, h_max);
    const int m = sim.config_count();
    const int w = inst.width;

    const std::size_t cells = static_cast<std::size_t>(m) * static_cast<std::size_t>(w) *
                              static_cast<std::size_t>(h_max);
    if (cells > limits.max_cells) {
        throw std::length_error("state graph too large: " + std::to_string(cells) + " cells");
    }

    // Enumerate every node and its out-edges, then keep what the initial state reaches.
    std::map<Node, std::vector<Edge>> adjacency;
    for (int t = 1; t <= m; ++t) {
        for (int s = 1; s <= w; ++s) {
            for (int h = 1; h <= h_max; ++h) {
                const Node node{t, s, h};
                if (!sim.is_node(node)) {
                    continue;
                }
                auto& out = adjacency[node];
                if (t == m) {
                    continue;
                }
                if (auto next = sim.apply_step(sim.with_n(node), t); next && sim.is_node(*next)) {
                    out.push_back(Edge{node, *next, 0});
                }
                if (!sim.on_top(node)) {
                    continue;
                }
                for (int dst = 1; dst <= w; ++dst) {
                    if (dst == s) {
                        continue;
                    }
                    if (auto next = sim.relocate_then_step(node, dst); next && sim.is_node(*next)) {
                        out.push_back(Edge{node, *next, 1});
                    }
                }
            }
        }
    }

    StateGraph graph;
    graph.config_count = m;
    graph.initial = prefix.initial;
    if (!adjacency.contains(prefix.initial)) {
        return graph;
    }
    std::map<Node, bool> seen{{prefix.initial, true}};
    std::deque<Node> frontier{prefix.initial};
    while (!frontier.empty()) {
        const Node node = frontier.front();
        frontier.pop_front();
        graph.nodes.push_back(node);
        if (node.t == m) {
            graph.finals.push_back(node);
        }
        for (const Edge& e : adjacency[node]) {
            graph.edges.push_back(e);
            if (!seen[e.to]) {
                seen[e.to] = true;
                frontier.push_back(e.to);
            }
        }
    }
    std::sort(graph.nodes.begin(), graph.nodes.end());
    std::sort(graph.edges.begin(), graph.edges.end());
    std::sort(graph.finals.begin(), graph.finals.end());
    return graph;
}

std::optional<int> explicit_graph_opt(const Instance& inst, const Solution& sol, int n, const GraphLimits& limits)
{
    const StateGraph graph = explicit_state_graph(inst, sol, n, limits);
    if (graph.nodes.empty()) {
        return std::nullopt;
    }
    std::map<Node, std::vector<const Edge*>> out;
    for (const Edge& e : graph.edges) {
        out[e.from].push_back(&e);
    }
    constexpr int unreached = std::numeric_limits<int>::max();
    std::map<Node, int> dist;
    for (const Node& node : graph.nodes) {
        dist[node] = unreached;
    }
    dist[graph.initial] = 0;
    std::deque<Node> dq{graph.initial};
    while (!dq.empty()) {
        const Node node = dq.front();
        dq.pop_front();
        for (const Edge* e : out[node]) {
            const int d = dist[node] + e->cost;
            if (d < dist[e->to]) {
                dist[e->to] = d;
                if (e->cost == 0) {
                    dq.push_front(e->to);
                } else {
                    dq.push_back(e->to);
                }
            }
        }
    }
    std::optional<int> best;
    for (const Node& f : graph.finals) {
        const int d = dist[f];
        if (d != unreached && (!best || d < *best)) {
            best = d;
        }
    }
    return best;
}

namespace {

class ExactSearch {
public:
    ExactSearch(const Instance& inst) : bay_(inst.initial_bay.stacks()), h_max_(inst.effective_h_max()) {}

    std::optional<int> run(int limit)
    {
        retrieve_ready();
        for (int bound = blocking(); bound <= limit; ++bound) {
            seen_.clear();
            if (dfs(0, bound, 0, 0)) {
                return bound;
            }
        }
        return std::nullopt;
    }

private:
    /// Retrieves every container that is due and on top. Returns how many were taken.
    int retrieve_ready()
    {
        int taken = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& st : bay_) {
                if (!st.empty() && st.back() == next_) {
                    st.pop_back();
                    ++next_;
                    ++taken;
                    progress = true;
                }
            }
        }
        return taken;
    }

    int blocking() const
    {
        int count = 0;
        for (const auto& st : bay_) {
            int lowest = std::numeric_limits<int>::max();
            for (int c : st) {
                if (c > lowest) {
                    ++count;
                }
                lowest = std::min(lowest, c);
            }
        }
        return count;
    }

    std::string key() const
    {
        std::string k;
        for (const auto& st : bay_) {
            for (int c : st) {
                k.push_back(static_cast<char>(c));
            }
            k.push_back('|');
        }
        return k;
    }

    bool dfs(int used, int bound, int last_moved, int last_dst)
    {
        if (std::all_of(bay_.begin(), bay_.end(), [](const auto& st) { return st.empty(); })) {
            return true;
        }
        if (used + blocking() > bound) {
            return false;
        }
        auto [it, fresh] = seen_.try_emplace(key(), used);
        if (!fresh) {
            if (it->second <= used) {
                return false;
            }
            it->second = used;
        }
        const int w = static_cast<int>(bay_.size());
        for (int s = 0; s < w; ++s) {
            if (bay_[static_cast<std::size_t>(s)].empty()) {
                continue;
            }
            const int c = bay_[static_cast<std::size_t>(s)].back();
            // moving the same container twice in a row is never needed
            if (c == last_moved && s == last_dst) {
                continue;
            }
            for (int d = 0; d < w; ++d) {
                if (d == s || static_cast<int>(bay_[static_cast<std::size_t>(d)].size()) >= h_max_) {
                    continue;
                }
                bay_[static_cast<std::size_t>(s)].pop_back();
                bay_[static_cast<std::size_t>(d)].push_back(c);
                const int saved_next = next_;
                const Stacks saved = bay_;
                const int taken = retrieve_ready();
                const bool found = dfs(used + 1, bound, taken > 0 ? 0 : c, taken > 0 ? -1 : d);
                bay_ = saved;
                next_ = saved_next;
                bay_[static_cast<std::size_t>(d)].pop_back();
                bay_[static_cast<std::size_t>(s)].push_back(c);
                if (found) {
                    return true;
                }
            }
        }
        return false;
    }

    Stacks bay_;
    int h_max_;
    int next_ = 1;
    std::unordered_map<std::string, int> seen_;
};

} // namespace

std::optional<int> exact_solve(const Instance& inst, const ExactLimits& limits)
{
    if (inst.n_containers > limits.max_containers) {
        throw std::invalid_argument("exact solver limited to " + std::to_string(limits.max_containers) +
                                    " containers, got " + std::to_string(inst.n_containers));
    }
    return ExactSearch(inst).run(limits.max_relocations);
}

} // namespace brp::oracle
