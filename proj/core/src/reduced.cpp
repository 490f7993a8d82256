#include "brp/reduced.hpp"

#include <algorithm>
#include <stdexcept>

namespace brp {

ReducedSolution build_reduced(const Instance& inst, const Solution& sol, int n)
{
    if (n < 1 || n > inst.n_containers) {
        throw std::invalid_argument("container " + std::to_string(n) + " out of range");
    }
    const auto moved = moved_containers(inst, sol);

    ReducedSolution red;
    red.container_ = n;
    red.width_ = inst.width;
    red.h_max_ = inst.effective_h_max();
    red.initial_position_ = *inst.initial_bay.find(n);

    const int w = inst.width;
    std::vector<int> height(static_cast<std::size_t>(w) + 1, 0);
    int n_stack = red.initial_position_.stack;
    for (int s = 1; s <= w; ++s) {
        height[static_cast<std::size_t>(s)] = inst.initial_bay.height(s) - (s == n_stack ? 1 : 0);
    }
    auto record = [&] {
        red.heights_.insert(red.heights_.end(), height.begin() + 1, height.end());
    };
    record();

    for (std::size_t k = 0; k < sol.moves.size(); ++k) {
        const Move& m = sol.moves[k];
        if (moved[k] == n) {
            if (!m.is_relocation()) {
                red.retrieval_index_ = k + 1;
                break;
            }
            ++red.relocations_of_n_;
            n_stack = m.dst;
            continue;
        }
        --height[static_cast<std::size_t>(m.src)];
        if (m.is_relocation()) {
            ++height[static_cast<std::size_t>(m.dst)];
        }
        red.steps_.push_back(m);
        red.origin_.push_back(k + 1);
        record();
    }
    if (red.retrieval_index_ == 0) {
        throw std::invalid_argument("container " + std::to_string(n) + " is never retrieved");
    }

    red.config_count_ = static_cast<int>(red.steps_.size()) + 1;
    red.suffix_min_ = red.heights_;
    red.suffix_max_ = red.heights_;
    for (int t = red.config_count_ - 1; t >= 1; --t) {
        for (int s = 1; s <= w; ++s) {
            const auto here = red.cell(s, t);
            const auto next = red.cell(s, t + 1);
            red.suffix_min_[here] = std::min(red.suffix_min_[here], red.suffix_min_[next]);
            red.suffix_max_[here] = std::max(red.suffix_max_[here], red.suffix_max_[next]);
        }
    }
    red.max_height_ = red.heights_.empty() ? 0 : *std::max_element(red.heights_.begin(), red.heights_.end());
    return red;
}

} // namespace brp
