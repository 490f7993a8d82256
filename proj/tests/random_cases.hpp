#pragma once

#include "brp/construct.hpp"
#include "brp/generator.hpp"
#include "brp/model.hpp"
#include "brp/rng.hpp"

#include <string>
#include <vector>

namespace brp::testing {

struct Case {
    Instance inst;
    Solution sol;
    std::string label;
};

/// Small (instance, starting solution) pairs: H and W in 2..4, both height
/// policies, each instance paired with the greedy start and `random_starts`
/// seeded random starts. Starts that hit a dead end are skipped.
inline std::vector<Case> small_cases(int per_class, int random_starts, std::uint64_t seed)
{
    std::vector<Case> out;
    for (int h = 2; h <= 4; ++h) {
        for (int w = 2; w <= 4; ++w) {
            for (auto policy : {HeightPolicy::unlimited, HeightPolicy::h_plus_2}) {
                const GeneratorParams p{h, w, policy, seed, per_class};
                for (int i = 1; i <= per_class; ++i) {
                    const Instance inst = generate(p, i);
                    const std::string base = std::to_string(h) + "x" + std::to_string(w) + "/" + to_string(policy) +
                                             "/#" + std::to_string(i);
                    try {
                        out.push_back({inst, greedy_solve(inst), base + "/greedy"});
                    } catch (const DeadEndError&) {
                    }
                    for (int r = 0; r < random_starts; ++r) {
                        try {
                            const auto start_seed = splitmix64(instance_seed(p, i) + static_cast<std::uint64_t>(r));
                            out.push_back({inst, random_solve(inst, start_seed), base + "/random" + std::to_string(r)});
                        } catch (const DeadEndError&) {
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace brp::testing
