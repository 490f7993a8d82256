#pragma once

#include "brp/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace brp {

enum class HeightPolicy { unlimited, h_plus_2 };

std::string to_string(HeightPolicy policy);
/// Accepts "unlimited" or "H+2".
HeightPolicy parse_height_policy(const std::string& text);

/// One benchmark class: W stacks filled to height H with a random permutation of 1..H*W.
struct GeneratorParams {
    int height = 3;
    int width = 3;
    HeightPolicy policy = HeightPolicy::unlimited;
    std::uint64_t seed = 1;
    int count = 40;

    int n_containers() const { return height * width; }
    HeightLimit height_limit() const;
};

/// Seed of the stream used for instance `index`:
/// fold splitmix64 over (seed, H, W, policy, index), i.e.
/// k = splitmix64(seed); k = splitmix64(k ^ H); ... ; k = splitmix64(k ^ index),
/// with policy encoded as 0 (unlimited) or 1 (H+2).
std::uint64_t instance_seed(const GeneratorParams& params, int index);

/// Fisher-Yates shuffle of 1..N (for i = N-1 down to 1 swap a[i] with a[below(i+1)]),
/// then stack 1 takes a[0..H-1] bottom-to-top, stack 2 the next H, and so on.
Instance generate(const GeneratorParams& params, int index);

/// Instances with ordinals 1..count.
std::vector<Instance> make_class(const GeneratorParams& params);

} // namespace brp
