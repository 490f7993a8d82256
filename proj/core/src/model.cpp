#include "brp/model.hpp"

#include <algorithm>

namespace brp {

int Bay::container_count() const
{
    int count = 0;
    for (const auto& s : stacks_) {
        count += static_cast<int>(s.size());
    }
    return count;
}

std::optional<Position> Bay::find(int container) const
{
    for (std::size_t s = 0; s < stacks_.size(); ++s) {
        const auto& st = stacks_[s];
        auto it = std::find(st.begin(), st.end(), container);
        if (it != st.end()) {
            return Position{static_cast<int>(s) + 1, static_cast<int>(it - st.begin()) + 1};
        }
    }
    return std::nullopt;
}

Instance Instance::make(Bay bay, HeightLimit h_max)
{
    if (bay.width() < 1) {
        throw std::invalid_argument("a bay needs at least one stack");
    }
    const int n = bay.container_count();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int s = 1; s <= bay.width(); ++s) {
        if (!h_max.is_unlimited() && bay.height(s) > h_max.raw()) {
            throw std::invalid_argument("stack " + std::to_string(s) + " exceeds the height limit");
        }
        for (int c : bay.stack(s)) {
            if (c < 1 || c > n) {
                throw std::invalid_argument("unknown container " + std::to_string(c));
            }
            if (seen[static_cast<std::size_t>(c)]) {
                throw std::invalid_argument("duplicate container " + std::to_string(c));
            }
            seen[static_cast<std::size_t>(c)] = true;
        }
    }
    Instance inst;
    inst.width = bay.width();
    inst.n_containers = n;
    inst.h_max = h_max;
    inst.initial_bay = std::move(bay);
    return inst;
}

std::string to_string(const Move& move)
{
    if (move.is_relocation()) {
        return "(" + std::to_string(move.src) + "," + std::to_string(move.dst) + ")";
    }
    return "(" + std::to_string(move.src) + ",-)";
}

int Solution::relocation_count() const
{
    return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.is_relocation(); }));
}

namespace {

struct ReplayOutcome {
    ValidationReport report;
    std::vector<int> moved;
};

ReplayOutcome replay(const Instance& inst, const Solution& sol)
{
    ReplayOutcome out;
    out.moved.reserve(sol.moves.size());
    Bay bay = inst.initial_bay;
    const int w = inst.width;
    int next_target = 1;

    auto fail = [&](std::size_t index, std::string message) {
        out.report.ok = false;
        out.report.move_index = index;
        out.report.message = std::move(message);
        return out;
    };

    for (std::size_t i = 0; i < sol.moves.size(); ++i) {
        const Move& m = sol.moves[i];
        const std::size_t index = i + 1;
        const std::string where = "move " + std::to_string(index) + " " + to_string(m) + ": ";
        if (m.src < 1 || m.src > w) {
            return fail(index, where + "source stack out of range");
        }
        if (bay.empty_stack(m.src)) {
            return fail(index, where + "source stack is empty");
        }
        const int c = bay.top(m.src);
        if (m.is_relocation()) {
            if (m.dst < 1 || m.dst > w) {
                return fail(index, where + "destination stack out of range");
            }
            if (m.dst == m.src) {
                return fail(index, where + "source and destination coincide");
            }
            if (!inst.h_max.is_unlimited() && bay.height(m.dst) >= inst.h_max.raw()) {
                return fail(index, where + "destination stack is full");
            }
            bay.pop(m.src);
            bay.push(m.dst, c);
        } else {
            if (m.dst != 0) {
                return fail(index, where + "retrieval carries a destination");
            }
            if (c != next_target) {
                return fail(index, where + "top container is " + std::to_string(c) + ", next retrieval is " +
                                       std::to_string(next_target));
            }
            bay.pop(m.src);
            ++next_target;
        }
        out.moved.push_back(c);
    }
    if (!bay.empty()) {
        return fail(0, "bay not empty after the last move (" + std::to_string(bay.container_count()) +
                           " containers left)");
    }
    return out;
}

} // namespace

ValidationReport validate(const Instance& inst, const Solution& sol)
{
    return replay(inst, sol).report;
}

std::vector<int> moved_containers(const Instance& inst, const Solution& sol)
{
    auto out = replay(inst, sol);
    if (!out.report.ok) {
        throw std::invalid_argument("invalid solution: " + out.report.message);
    }
    return std::move(out.moved);
}

int lb_container(const Instance& inst, int n)
{
    if (n < 1 || n > inst.n_containers) {
        throw std::out_of_range("container " + std::to_string(n) + " out of range");
    }
    const auto pos = *inst.initial_bay.find(n);
    const auto& st = inst.initial_bay.stack(pos.stack);
    for (int tier = 1; tier < pos.tier; ++tier) {
        if (st[static_cast<std::size_t>(tier - 1)] < n) {
            return 1;
        }
    }
    return 0;
}

int global_lower_bound(const Instance& inst)
{
    int total = 0;
    for (const auto& st : inst.initial_bay.stacks()) {
        int lowest = inst.n_containers + 1;
        for (int c : st) {
            if (c > lowest) {
                ++total;
            }
            lowest = std::min(lowest, c);
        }
    }
    return total;
}

ContainerStats container_stats(const Instance& inst, const Solution& sol)
{
    const auto moved = moved_containers(inst, sol);
    const auto size = static_cast<std::size_t>(inst.n_containers) + 1;
    ContainerStats stats;
    stats.relocations.assign(size, 0);
    stats.lower_bound.assign(size, 0);
    stats.initial_position.assign(size, Position{});
    for (std::size_t i = 0; i < moved.size(); ++i) {
        if (sol.moves[i].is_relocation()) {
            ++stats.relocations[static_cast<std::size_t>(moved[i])];
        }
    }
    for (int s = 1; s <= inst.width; ++s) {
        const auto& st = inst.initial_bay.stack(s);
        int lowest = inst.n_containers + 1;
        for (std::size_t k = 0; k < st.size(); ++k) {
            const auto c = static_cast<std::size_t>(st[k]);
            stats.lower_bound[c] = st[k] > lowest ? 1 : 0;
            stats.initial_position[c] = Position{s, static_cast<int>(k) + 1};
            lowest = std::min(lowest, st[k]);
        }
    }
    return stats;
}

} // namespace brp
