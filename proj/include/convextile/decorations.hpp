#pragma once

// Dent and bump cell tables for order-13 level-2 squares.
//
// Both tables are written in one shared frame where the SE-side square has its
// centre at (0,12) and the NW-side square below it has its centre at (12,-1).
// Region D is cut out of the upper square by an SE dent; region B is cut out
// of the lower square by an NW dent. A bump adds the region its partner's dent
// removes, so D and B together are exactly the tiny filler.

#include <array>

namespace ctile::tables {

struct RowSpan {
    int y, x0, x1;  // inclusive
};

inline constexpr int decoration_order = 13;

inline constexpr int se_center_x = 0, se_center_y = 12;
inline constexpr int nw_center_x = 12, nw_center_y = -1;

inline constexpr std::array<RowSpan, 8> region_d{{
    {2, 2, 2},
    {3, 2, 3},
    {4, 2, 4},
    {5, 2, 5},
    {6, 5, 6},
    {7, 6, 7},
    {8, 6, 8},
    {9, 6, 9},
}};

inline constexpr std::array<RowSpan, 9> region_b{{
    {1, 2, 6},
    {2, 3, 6},
    {3, 4, 6},
    {4, 5, 7},
    {5, 6, 10},
    {6, 7, 10},
    {7, 8, 10},
    {8, 9, 10},
    {9, 10, 10},
}};

// tiny filler outline (polygon vertices) in the same frame
inline constexpr std::array<std::array<int, 2>, 12> filler_outline{{
    {2, 1}, {2, 6}, {5, 6}, {5, 7}, {6, 7}, {6, 10}, {11, 10}, {11, 5}, {8, 5}, {8, 4}, {7, 4}, {7, 1},
}};

}  // namespace ctile::tables
