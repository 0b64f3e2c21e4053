// fixtures.hpp -- strategy tables reproduced literally

#pragma once

#include <string>
#include <vector>

#include "mmdim/core.hpp"

namespace mmdim {

struct Fixture
{
    std::string name;
    Strategy strategy;
    bool feasible = true;
};

/// Every literal strategy table, in a fixed order. Includes the one
/// non-feasible table, obtained from the (3,3,3) strategy by a projection.
const std::vector<Fixture>& fixtures();

/// Throws std::out_of_range for an unknown name.
const Fixture& fixture(const std::string& name);

namespace tables {

/// 6 questions, feasible for (4,4,4) and (4,4,5).
Strategy exception_44c(int c);
/// (2,3,3), 3 questions.
Strategy exception_233();
/// (3,4,5), 5 questions.
Strategy exception_345();
/// (1,2,3), 2 questions.
Strategy exception_123();
/// (2,4,4), 4 questions.
Strategy exception_244();
/// (2,3,4): the (2,4,4) table, color 4 unused on peg 2.
Strategy exception_234();
/// (2,4,5): the (2,4,4) table plus (2,3,5).
Strategy exception_245();

} // namespace tables

} // namespace mmdim
