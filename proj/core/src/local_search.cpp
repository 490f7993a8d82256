#include "brp/local_search.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace brp {

namespace {

bool final_feasible(const ReducedSolution& red, int s, int h)
{
    const int height = red.height(s, red.config_count());
    return h == height + 1 && height < red.h_max();
}

/// Step t can be applied with n left where it is.
bool stay_legal(const ReducedSolution& red, int t, int s, int h)
{
    const Move& step = red.step(t);
    const int height = red.height(s, t);
    if (step.src == s && h == height + 1) {
        return false;
    }
    if (step.is_relocation() && step.dst == s && height + 1 >= red.h_max()) {
        return false;
    }
    return true;
}

/// Tier where n lands when relocated to `dst` right before step t, or 0 if not allowed.
int relocation_landing(const ReducedSolution& red, int t, int src, int dst)
{
    if (dst == src) {
        return 0;
    }
    const Move& step = red.step(t);
    if (step.src == dst) {
        return 0;
    }
    const int height = red.height(dst, t);
    if (height >= red.h_max()) {
        return 0;
    }
    if (step.is_relocation() && step.dst == dst && height + 1 >= red.h_max()) {
        return 0;
    }
    if (!state_feasible(red, State{t + 1, dst, height + 1})) {
        return 0;
    }
    return height + 1;
}

struct Label {
    int s = 0;
    int h = 0;
    int cost = 0;
    int pred = -1;
    /// Destination of the relocation taken on the incoming edge, 0 for a cost-0 edge.
    int relocated_to = 0;
};

} // namespace

bool state_feasible(const ReducedSolution& red, const State& st)
{
    const int m = red.config_count();
    if (st.t < 1 || st.t > m || st.s < 1 || st.s > red.width() || st.h < 1) {
        return false;
    }
    if (st.t == 1) {
        const Position p = red.initial_position();
        if (st.s != p.stack || st.h != p.tier) {
            return false;
        }
        return m > 1 || final_feasible(red, st.s, st.h);
    }
    const int height = red.height(st.s, st.t);
    if (st.t == m) {
        return final_feasible(red, st.s, st.h);
    }
    if (st.h > height + 1 || height >= red.h_max()) {
        return false;
    }
    const Move& step = red.step(st.t);
    if (st.h <= height && step.is_relocation() && step.dst == st.s && height + 1 >= red.h_max()) {
        return false;
    }
    return true;
}

std::vector<Transition> transitions(const ReducedSolution& red, const State& from)
{
    std::vector<Transition> out;
    if (from.t >= red.config_count() || !state_feasible(red, from)) {
        return out;
    }
    const State stay{from.t + 1, from.s, from.h};
    if (stay_legal(red, from.t, from.s, from.h) && state_feasible(red, stay)) {
        out.push_back({stay, 0});
    }
    if (from.h == red.height(from.s, from.t) + 1) {
        for (int dst = 1; dst <= red.width(); ++dst) {
            const int tier = relocation_landing(red, from.t, from.s, dst);
            if (tier != 0) {
                out.push_back({State{from.t + 1, dst, tier}, 1});
            }
        }
    }
    return out;
}

OptResult opt_reduced(const ReducedSolution& red, int current_cost, const SpeedupOptions& options)
{
    const int m = red.config_count();
    const int w = red.width();
    const int f_n = current_cost;

    OptResult result;
    result.current_cost = f_n;
    result.best_cost = f_n;
    result.config_count = m;

    const Position start = red.initial_position();
    if (m == 1) {
        // the initial configuration is also the last one
        result.best_cost = 0;
        result.improved = f_n > 0;
        return result;
    }

    // Tier of n never exceeds the tallest reduced stack plus one.
    const int tiers = std::max(red.max_height(), start.tier) + 1;
    std::vector<int> slot(static_cast<std::size_t>(w) * static_cast<std::size_t>(tiers), -1);
    std::vector<std::size_t> touched;
    auto cell = [tiers](int s, int h) {
        return static_cast<std::size_t>(s - 1) * static_cast<std::size_t>(tiers) + static_cast<std::size_t>(h - 1);
    };

    std::vector<std::vector<Label>> layers(static_cast<std::size_t>(m));
    layers[0].push_back(Label{start.stack, start.tier, 0, -1, 0});
    std::vector<int> queue{0};
    std::vector<int> next_queue;
    std::vector<int> destinations;
    destinations.reserve(static_cast<std::size_t>(w));

    int aspirated_layer = -1;
    int aspirated_index = -1;

    for (int t = 1; t < m && aspirated_layer < 0; ++t) {
        const auto& current = layers[static_cast<std::size_t>(t - 1)];
        auto& next = layers[static_cast<std::size_t>(t)];

        // Returns true when aspiration fires on this update.
        auto update = [&](int s, int h, int cost, int pred, int relocated_to) {
            const std::size_t key = cell(s, h);
            int& idx = slot[key];
            if (idx < 0) {
                idx = static_cast<int>(next.size());
                next.push_back(Label{s, h, cost, pred, relocated_to});
                touched.push_back(key);
            } else if (cost < next[static_cast<std::size_t>(idx)].cost) {
                next[static_cast<std::size_t>(idx)] = Label{s, h, cost, pred, relocated_to};
            } else {
                return false;
            }
            if (options.aspiration && cost <= f_n - 1 && red.suffix_max(s, t + 1) < red.h_max() &&
                red.suffix_min(s, t + 1) >= h - 1 && red.height(s, m) == h - 1) {
                aspirated_layer = t;
                aspirated_index = idx;
                return true;
            }
            return false;
        };

        for (int idx : queue) {
            const Label lab = current[static_cast<std::size_t>(idx)];
            ++result.expansions;
            if (stay_legal(red, t, lab.s, lab.h) && state_feasible(red, State{t + 1, lab.s, lab.h})) {
                if (update(lab.s, lab.h, lab.cost, idx, 0)) {
                    break;
                }
            }
            if (lab.h != red.height(lab.s, t) + 1) {
                continue;
            }

            destinations.clear();
            const Move* prev = t > 1 ? &red.step(t - 1) : nullptr;
            if (options.useless_evaluations && prev != nullptr && prev->src != lab.s) {
                std::array<int, 2> pair{prev->src, prev->is_relocation() ? prev->dst : 0};
                std::sort(pair.begin(), pair.end());
                for (int d : pair) {
                    if (d != 0 && d != lab.s) {
                        destinations.push_back(d);
                    }
                }
            } else {
                for (int d = 1; d <= w; ++d) {
                    if (d != lab.s) {
                        destinations.push_back(d);
                    }
                }
            }

            bool stop = false;
            for (int dst : destinations) {
                ++result.expansions;
                const int tier = relocation_landing(red, t, lab.s, dst);
                if (tier != 0 && update(dst, tier, lab.cost + 1, idx, dst)) {
                    stop = true;
                    break;
                }
            }
            if (stop) {
                break;
            }
        }

        for (std::size_t key : touched) {
            slot[key] = -1;
        }
        touched.clear();

        next_queue.clear();
        for (std::size_t i = 0; i < next.size(); ++i) {
            const Label& lab = next[i];
            if (options.upper_bound &&
                (lab.cost >= f_n || (lab.cost >= f_n - 1 && !final_feasible(red, lab.s, lab.h)))) {
                continue;
            }
            next_queue.push_back(static_cast<int>(i));
        }
        queue.swap(next_queue);
    }

    int end_layer = -1;
    int end_index = -1;
    if (aspirated_layer >= 0) {
        end_layer = aspirated_layer;
        end_index = aspirated_index;
        result.aspirated = true;
    } else {
        const auto& last = layers[static_cast<std::size_t>(m - 1)];
        for (std::size_t i = 0; i < last.size(); ++i) {
            if (end_index < 0 || last[i].cost < last[static_cast<std::size_t>(end_index)].cost) {
                end_index = static_cast<int>(i);
            }
        }
        end_layer = m - 1;
    }
    if (end_index < 0) {
        return result;
    }

    const int cost = layers[static_cast<std::size_t>(end_layer)][static_cast<std::size_t>(end_index)].cost;
    result.best_cost = cost;
    result.improved = cost < f_n;
    if (!result.improved) {
        result.aspirated = false;
        return result;
    }
    for (int layer = end_layer, idx = end_index; layer > 0; --layer) {
        const Label& lab = layers[static_cast<std::size_t>(layer)][static_cast<std::size_t>(idx)];
        if (lab.relocated_to != 0) {
            // edge from configuration `layer` to `layer + 1` (1-based) is step `layer`
            result.schedule.push_back(ScheduledRelocation{layer, lab.relocated_to});
        }
        idx = lab.pred;
    }
    std::reverse(result.schedule.begin(), result.schedule.end());
    return result;
}

OptResult opt_n(const Instance& inst, const Solution& sol, int n, const SpeedupOptions& options)
{
    const auto red = build_reduced(inst, sol, n);
    return opt_reduced(red, red.relocations_of_n(), options);
}

Solution rebuild(const Instance& inst, const Solution& sol, const ReducedSolution& red,
                 const std::vector<ScheduledRelocation>& schedule)
{
    Solution out;
    out.moves.reserve(sol.moves.size());
    int current = red.initial_position().stack;
    std::size_t next = 0;
    for (int t = 1; t < red.config_count(); ++t) {
        if (next < schedule.size() && schedule[next].before_step == t) {
            out.moves.push_back(Move::relocate(current, schedule[next].dst));
            current = schedule[next].dst;
            ++next;
        }
        out.moves.push_back(red.step(t));
    }
    if (next != schedule.size()) {
        throw std::logic_error("relocation schedule does not match the reduced solution");
    }
    out.moves.push_back(Move::retrieve(current));
    out.moves.insert(out.moves.end(), sol.moves.begin() + static_cast<std::ptrdiff_t>(red.retrieval_index()),
                     sol.moves.end());

    const auto report = validate(inst, out);
    if (!report.ok) {
        throw std::logic_error("rebuilt solution for container " + std::to_string(red.container()) +
                               " does not replay: " + report.message);
    }
    return out;
}

Solution rebuild(const Instance& inst, const Solution& sol, int n, const OptResult& res)
{
    if (!res.improved) {
        throw std::invalid_argument("rebuild needs an improving result");
    }
    return rebuild(inst, sol, build_reduced(inst, sol, n), res.schedule);
}

LsResult local_search(const Instance& inst, const Solution& start, const LsOptions& options)
{
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    auto out_of_time = [&] { return options.time_limit && clock::now() - started > *options.time_limit; };

    LsResult res;
    res.solution = start;
    auto stats = container_stats(inst, res.solution);

    bool improvement = true;
    while (improvement) {
        improvement = false;
        ++res.sweeps;
        for (int n = 1; n <= inst.n_containers; ++n) {
            if (out_of_time()) {
                res.timed_out = true;
                return res;
            }
            if (stats.f(n) <= stats.lb(n)) {
                ++res.skipped;
                continue;
            }
            const auto red = build_reduced(inst, res.solution, n);
            const auto opt = opt_reduced(red, stats.f(n), options.speedups);
            ++res.opt_calls;
            if (!opt.improved) {
                continue;
            }
            res.solution = rebuild(inst, res.solution, red, opt.schedule);
            res.log.push_back(LsEvent{res.sweeps, n, stats.f(n), opt.best_cost, opt.aspirated});
            stats = container_stats(inst, res.solution);
            improvement = true;
        }
    }
    return res;
}

} // namespace brp
