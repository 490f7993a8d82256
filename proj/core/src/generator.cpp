#include "brp/generator.hpp"

#include "brp/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace brp {

std::string to_string(HeightPolicy policy)
{
    return policy == HeightPolicy::unlimited ? "unlimited" : "H+2";
}

HeightPolicy parse_height_policy(const std::string& text)
{
    if (text == "unlimited") {
        return HeightPolicy::unlimited;
    }
    if (text == "H+2") {
        return HeightPolicy::h_plus_2;
    }
    throw std::invalid_argument("unknown height policy '" + text + "' (expected unlimited or H+2)");
}

HeightLimit GeneratorParams::height_limit() const
{
    return policy == HeightPolicy::unlimited ? HeightLimit::unlimited() : HeightLimit::bounded(height + 2);
}

std::uint64_t instance_seed(const GeneratorParams& params, int index)
{
    std::uint64_t k = splitmix64(params.seed);
    k = splitmix64(k ^ static_cast<std::uint64_t>(params.height));
    k = splitmix64(k ^ static_cast<std::uint64_t>(params.width));
    k = splitmix64(k ^ (params.policy == HeightPolicy::unlimited ? 0ULL : 1ULL));
    k = splitmix64(k ^ static_cast<std::uint64_t>(index));
    return k;
}

Instance generate(const GeneratorParams& params, int index)
{
    if (params.height < 1 || params.width < 1) {
        throw std::invalid_argument("generator needs H >= 1 and W >= 1");
    }
    const int n = params.n_containers();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);

    Xorshift64Star rng(instance_seed(params, index));
    for (int i = n - 1; i >= 1; --i) {
        const auto j = rng.below(static_cast<std::uint64_t>(i) + 1);
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }

    std::vector<std::vector<int>> stacks(static_cast<std::size_t>(params.width));
    for (int s = 0; s < params.width; ++s) {
        auto first = perm.begin() + static_cast<std::ptrdiff_t>(s) * params.height;
        stacks[static_cast<std::size_t>(s)].assign(first, first + params.height);
    }
    return Instance::make(Bay(std::move(stacks)), params.height_limit());
}

std::vector<Instance> make_class(const GeneratorParams& params)
{
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(std::max(params.count, 0)));
    for (int i = 1; i <= params.count; ++i) {
        out.push_back(generate(params, i));
    }
    return out;
}

} // namespace brp
