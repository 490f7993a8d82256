#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brp {

/// Maximum stack height of a bay. A value of zero means no bound.
class HeightLimit {
public:
    constexpr HeightLimit() = default;

    static constexpr HeightLimit unlimited() { return HeightLimit{}; }
    static HeightLimit bounded(int h_max)
    {
        if (h_max < 1) {
            throw std::invalid_argument("height limit must be >= 1");
        }
        HeightLimit limit;
        limit.value_ = h_max;
        return limit;
    }

    constexpr bool is_unlimited() const { return value_ == 0; }
    /// Raw value as stored in instance files (0 = unlimited).
    constexpr int raw() const { return value_; }

    /// Bound usable in height arithmetic. With n containers in the bay no stack
    /// can exceed n, so n stands in for "unlimited".
    constexpr int effective(int n_containers) const
    {
        if (value_ != 0) {
            return value_;
        }
        return n_containers > 0 ? n_containers : 1;
    }

    constexpr bool operator==(const HeightLimit&) const = default;

private:
    int value_ = 0;
};

/// Stack coordinate of a container; both indices are 1-based, tier 1 is the bottom.
struct Position {
    int stack = 0;
    int tier = 0;
    bool operator==(const Position&) const = default;
};

/// Layout of a bay. Stacks are numbered 1..W and listed bottom-to-top.
class Bay {
public:
    Bay() = default;
    explicit Bay(int width) : stacks_(static_cast<std::size_t>(width)) {}
    explicit Bay(std::vector<std::vector<int>> stacks) : stacks_(std::move(stacks)) {}

    int width() const { return static_cast<int>(stacks_.size()); }
    int height(int stack) const { return static_cast<int>(at(stack).size()); }
    bool empty_stack(int stack) const { return at(stack).empty(); }
    /// Top container of a non-empty stack.
    int top(int stack) const { return at(stack).back(); }
    const std::vector<int>& stack(int stack) const { return at(stack); }
    const std::vector<std::vector<int>>& stacks() const { return stacks_; }

    int container_count() const;
    bool empty() const { return container_count() == 0; }
    std::optional<Position> find(int container) const;

    void push(int stack, int container) { at(stack).push_back(container); }
    int pop(int stack)
    {
        auto& s = at(stack);
        int c = s.back();
        s.pop_back();
        return c;
    }

    bool operator==(const Bay&) const = default;

private:
    const std::vector<int>& at(int stack) const { return stacks_[static_cast<std::size_t>(stack - 1)]; }
    std::vector<int>& at(int stack) { return stacks_[static_cast<std::size_t>(stack - 1)]; }

    std::vector<std::vector<int>> stacks_;
};

/// A U-BRP instance: W stacks, containers 1..N, optional height bound.
struct Instance {
    int width = 0;
    int n_containers = 0;
    HeightLimit h_max;
    Bay initial_bay;

    /// Checks every instance invariant; throws std::invalid_argument on violation.
    static Instance make(Bay bay, HeightLimit h_max);

    int effective_h_max() const { return h_max.effective(n_containers); }
    bool operator==(const Instance&) const = default;
};

enum class MoveKind { relocation, retrieval };

/// One step: move the top container of `src` onto `dst`, or retrieve it (dst = 0).
struct Move {
    MoveKind kind = MoveKind::retrieval;
    int src = 0;
    int dst = 0;

    static constexpr Move relocate(int from, int to) { return {MoveKind::relocation, from, to}; }
    static constexpr Move retrieve(int from) { return {MoveKind::retrieval, from, 0}; }

    bool is_relocation() const { return kind == MoveKind::relocation; }
    bool operator==(const Move&) const = default;
};

std::string to_string(const Move& move);

struct Solution {
    std::vector<Move> moves;

    int relocation_count() const;
    int retrieval_count() const { return static_cast<int>(moves.size()) - relocation_count(); }
    bool operator==(const Solution&) const = default;
};

struct ValidationReport {
    bool ok = true;
    /// 1-based index of the first offending move; 0 when the failure is at the end (bay not empty).
    std::size_t move_index = 0;
    std::string message;
};

ValidationReport validate(const Instance& inst, const Solution& sol);

/// Replays `sol` and returns the container moved by each move. Throws
/// std::invalid_argument when the solution is not valid.
std::vector<int> moved_containers(const Instance& inst, const Solution& sol);

/// 1 if container n initially sits above a container with a smaller number, else 0.
int lb_container(const Instance& inst, int n);
int global_lower_bound(const Instance& inst);

struct ContainerStats {
    /// All vectors are indexed by container number; index 0 is unused.
    std::vector<int> relocations;
    std::vector<int> lower_bound;
    std::vector<Position> initial_position;

    int f(int n) const { return relocations[static_cast<std::size_t>(n)]; }
    int lb(int n) const { return lower_bound[static_cast<std::size_t>(n)]; }
};

ContainerStats container_stats(const Instance& inst, const Solution& sol);

} // namespace brp
