#pragma once

#include "brp/model.hpp"

namespace brp::testing {

/// Three stacks [1,3], [2,4], [5] (bottom-to-top), H_max = 3.
inline Instance figure1_instance()
{
    return Instance::make(Bay({{1, 3}, {2, 4}, {5}}), HeightLimit::bounded(3));
}

/// The eight-step solution with three relocations used as the running example.
inline Solution table1_solution()
{
    return Solution{{
        Move::relocate(1, 2), // relocate 3
        Move::retrieve(1),    // retrieve 1
        Move::relocate(2, 3), // relocate 3
        Move::relocate(2, 1), // relocate 4
        Move::retrieve(2),    // retrieve 2
        Move::retrieve(3),    // retrieve 3
        Move::retrieve(1),    // retrieve 4
        Move::retrieve(3),    // retrieve 5
    }};
}

} // namespace brp::testing
