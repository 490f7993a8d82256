#pragma once

#include "brp/model.hpp"

#include <cstddef>
#include <vector>

namespace brp {

/// The prefix of a solution before container n is retrieved, with n and its own
/// relocations erased. Configurations are numbered 1..M and step t (1..M-1)
/// leads from configuration t to t+1. Stack heights exclude n.
class ReducedSolution {
public:
    int container() const { return container_; }
    int width() const { return width_; }
    int config_count() const { return config_count_; }
    /// Effective height bound (N when the instance is unlimited).
    int h_max() const { return h_max_; }

    /// Step t, 1 <= t <= M-1.
    const Move& step(int t) const { return steps_[static_cast<std::size_t>(t - 1)]; }
    const std::vector<Move>& steps() const { return steps_; }
    /// 1-based index in the full solution of step t.
    std::size_t origin(int t) const { return origin_[static_cast<std::size_t>(t - 1)]; }
    /// 1-based index in the full solution of n's retrieval.
    std::size_t retrieval_index() const { return retrieval_index_; }
    /// Relocations of n in the full solution before its retrieval.
    int relocations_of_n() const { return relocations_of_n_; }
    Position initial_position() const { return initial_position_; }

    /// h(s,t): height of stack s in configuration t.
    int height(int s, int t) const { return heights_[cell(s, t)]; }
    /// min over t' >= t of h(s,t').
    int suffix_min(int s, int t) const { return suffix_min_[cell(s, t)]; }
    /// max over t' >= t of h(s,t').
    int suffix_max(int s, int t) const { return suffix_max_[cell(s, t)]; }
    /// Largest h(s,t) over the whole table.
    int max_height() const { return max_height_; }

    friend ReducedSolution build_reduced(const Instance& inst, const Solution& sol, int n);

private:
    std::size_t cell(int s, int t) const
    {
        return static_cast<std::size_t>(t - 1) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(s - 1);
    }

    int container_ = 0;
    int width_ = 0;
    int config_count_ = 0;
    int h_max_ = 0;
    int relocations_of_n_ = 0;
    int max_height_ = 0;
    std::size_t retrieval_index_ = 0;
    Position initial_position_;
    std::vector<Move> steps_;
    std::vector<std::size_t> origin_;
    std::vector<int> heights_;
    std::vector<int> suffix_min_;
    std::vector<int> suffix_max_;
};

/// Requires a valid solution and 1 <= n <= N (throws std::invalid_argument otherwise).
ReducedSolution build_reduced(const Instance& inst, const Solution& sol, int n);

} // namespace brp
