#include "brp/construct.hpp"

#include "brp/rng.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace brp {

namespace {

constexpr int infinity = std::numeric_limits<int>::max();

/// Tracks the smallest container of each stack alongside the bay.
class TrackedBay {
public:
    TrackedBay(const Instance& inst) : bay_(inst.initial_bay), limit_(inst.h_max)
    {
        for (int s = 1; s <= bay_.width(); ++s) {
            for (int c : bay_.stack(s)) {
                where_.resize(std::max<std::size_t>(where_.size(), static_cast<std::size_t>(c) + 1), 0);
                where_[static_cast<std::size_t>(c)] = s;
            }
        }
    }

    const Bay& bay() const { return bay_; }
    int stack_of(int c) const { return where_[static_cast<std::size_t>(c)]; }
    bool has_room(int s) const { return limit_.is_unlimited() || bay_.height(s) < limit_.raw(); }

    int min_of(int s) const
    {
        const auto& st = bay_.stack(s);
        return st.empty() ? infinity : *std::min_element(st.begin(), st.end());
    }

    void relocate(int from, int to, Solution& sol)
    {
        const int c = bay_.pop(from);
        bay_.push(to, c);
        where_[static_cast<std::size_t>(c)] = to;
        sol.moves.push_back(Move::relocate(from, to));
    }

    void retrieve(int from, Solution& sol)
    {
        bay_.pop(from);
        sol.moves.push_back(Move::retrieve(from));
    }

private:
    Bay bay_;
    HeightLimit limit_;
    std::vector<int> where_;
};

[[noreturn]] void dead_end(const TrackedBay& bay, int container)
{
    throw DeadEndError("no stack can accept container " + std::to_string(container), bay.bay());
}

int min_max_destination(const TrackedBay& bay, int src, int b)
{
    int best_above = 0;
    int best_above_min = infinity;
    int best_below = 0;
    int best_below_min = -1;
    for (int s = 1; s <= bay.bay().width(); ++s) {
        if (s == src || !bay.has_room(s)) {
            continue;
        }
        const int m = bay.min_of(s);
        if (m > b) {
            if (best_above == 0 || m < best_above_min) {
                best_above = s;
                best_above_min = m;
            }
        } else if (m > best_below_min) {
            best_below = s;
            best_below_min = m;
        }
    }
    return best_above != 0 ? best_above : best_below;
}

} // namespace

Solution greedy_solve(const Instance& inst, const GreedyPolicy& policy)
{
    (void)policy; // min_max is the only rule
    TrackedBay bay(inst);
    Solution sol;
    for (int target = 1; target <= inst.n_containers; ++target) {
        const int src = bay.stack_of(target);
        while (bay.bay().top(src) != target) {
            const int b = bay.bay().top(src);
            const int dst = min_max_destination(bay, src, b);
            if (dst == 0) {
                dead_end(bay, b);
            }
            bay.relocate(src, dst, sol);
        }
        bay.retrieve(src, sol);
    }
    return sol;
}

Solution random_solve(const Instance& inst, std::uint64_t seed, const RandomStartOptions& options)
{
    Xorshift64Star rng(seed);
    TrackedBay bay(inst);
    Solution sol;
    int detours = 0;
    const int w = inst.width;
    std::vector<int> candidates;

    auto pick_destination = [&](int src) {
        candidates.clear();
        for (int s = 1; s <= w; ++s) {
            if (s != src && bay.has_room(s)) {
                candidates.push_back(s);
            }
        }
        if (candidates.empty()) {
            return 0;
        }
        return candidates[rng.below(candidates.size())];
    };

    for (int target = 1; target <= inst.n_containers; ++target) {
        for (;;) {
            if (detours < options.max_detours && w > 1 &&
                rng.chance(static_cast<std::uint64_t>(options.detour_percent), 100)) {
                const int from = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(w)));
                // never bury the target under a detour, and never move the target itself
                if (!bay.bay().empty_stack(from) && bay.bay().top(from) != target) {
                    const int to = pick_destination(from);
                    if (to != 0 && to != bay.stack_of(target)) {
                        bay.relocate(from, to, sol);
                        ++detours;
                    }
                }
            }
            const int src = bay.stack_of(target);
            if (bay.bay().top(src) == target) {
                bay.retrieve(src, sol);
                break;
            }
            const int dst = pick_destination(src);
            if (dst == 0) {
                dead_end(bay, bay.bay().top(src));
            }
            bay.relocate(src, dst, sol);
        }
    }
    return sol;
}

} // namespace brp
