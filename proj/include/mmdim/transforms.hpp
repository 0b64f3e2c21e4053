// transforms.hpp -- peg augmentation and color projection

#pragma once

#include <cstddef>

#include "mmdim/core.hpp"

namespace mmdim {

/// Strategy for params with peg `peg` holding one more color: all of
/// `strategy` plus a copy of question `source` whose color on `peg` is the
/// new color. Feasibility is preserved.
///
/// Throws std::invalid_argument for an empty strategy and std::out_of_range
/// for a bad peg or source index.
Strategy augment_peg(const Strategy& strategy, Peg peg, std::size_t source);

/// Sufficient condition for project() to preserve feasibility: for every
/// pair of colors (y,z) on the other two pegs some question has color i or j
/// on `peg` and differs from y and z on the other pegs.
///
/// Throws std::invalid_argument if i == j or either color is out of range.
bool check_projectable(const Strategy& strategy, Peg peg, Color i, Color j);

struct Projection
{
    Strategy strategy;
    /// Questions dropped because they coincided after the merge.
    std::size_t merged_duplicates = 0;
};

/// Merges color j into color i on `peg` and renumbers the colors above j, so
/// the peg has one color fewer. Questions that collide are kept once, at the
/// position of their first occurrence.
Projection project_detailed(const Strategy& strategy, Peg peg, Color i, Color j);

Strategy project(const Strategy& strategy, Peg peg, Color i, Color j);

} // namespace mmdim
