#pragma once

#include "brp/model.hpp"

#include <cstdint>
#include <stdexcept>

namespace brp {

/// Raised when a forced relocation has no admissible destination stack.
class DeadEndError : public std::runtime_error {
public:
    DeadEndError(const std::string& message, Bay stuck) : std::runtime_error(message), stuck_(std::move(stuck)) {}
    const Bay& stuck() const { return stuck_; }

private:
    Bay stuck_;
};

enum class GreedyRule { min_max };

/// Ties between destination stacks always go to the lowest index.
struct GreedyPolicy {
    GreedyRule rule = GreedyRule::min_max;
};

/// Restricted greedy: retrieve the target when it is on top, otherwise relocate
/// the container b above it. Destinations are the other non-full stacks; with
/// m(s) the smallest container in s (infinite when empty), pick the smallest
/// m(s) > b if one exists, else the largest m(s).
Solution greedy_solve(const Instance& inst, const GreedyPolicy& policy = {});

struct RandomStartOptions {
    /// Probability (percent) of inserting an extra relocation of a random top
    /// container before each forced step.
    int detour_percent = 15;
    /// Upper bound on extra relocations, so runs stay short.
    int max_detours = 64;
};

/// Seeded random valid solution: blocking containers go to uniformly random
/// admissible stacks and random unforced relocations of other top containers
/// are sprinkled in. Used as a deliberately poor starting point for local search.
Solution random_solve(const Instance& inst, std::uint64_t seed, const RandomStartOptions& options = {});

} // namespace brp
