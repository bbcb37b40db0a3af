#pragma once

// Reference 28×28 perfection matrix of the (7,28) lattice, row-major.

#include <array>

namespace etflat {

inline constexpr std::array<std::array<int, 28>, 28> kBacherTable728 = {{
    {0, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -4, 12, 12, 12, 12, 12, 4, -12, -12, -12, -12, -12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 24, -8, 8, 8, 8, 8, -24, 8, -8, -8, -8, -8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 20, 20, -12, 4, 4, 4, -20, -20, 12, -4, -4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 16, 16, 16, -16, 0, 0, -16, -16, -16, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 12, 12, 12, 12, -20, -4, -12, -12, -12, -12, 20, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 8, 8, 8, 8, 8, -24, -8, -8, -8, -8, -8, 24, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {49, 1, 9, 9, 9, 9, 9, 1, 9, 9, 9, 9, 9, 25, 25, 25, 25, 25, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {42, -6, -6, 6, 6, 6, 6, -6, -6, 6, 6, 6, 6, 10, -10, -10, -10, -10, 6, 6, 6, 6, 2, 2, 2, 2, 2, 2},
    {35, -5, 15, -9, 3, 3, 3, -5, 15, -9, 3, 3, 3, -25, 15, -5, -5, -5, 3, -1, -1, -1, 7, 7, 7, 3, 3, 3},
    {28, -4, 12, 12, -12, 0, 0, -4, 12, 12, -12, 0, 0, -20, -20, 20, 0, 0, -4, 4, 0, 0, 4, 0, 0, 8, 8, 4},
    {21, -3, 9, 9, 9, -15, -3, -3, 9, 9, 9, -15, -3, -15, -15, -15, 25, 5, -3, -3, 5, 1, -3, 5, 1, 5, 1, 9},
    {14, -2, 6, 6, 6, 6, -18, -2, 6, 6, 6, 6, -18, -10, -10, -10, -10, 30, -2, -2, -2, 6, -2, -2, 6, -2, 6, 6},
    {36, 36, 4, 4, 4, 4, 4, 36, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 36, 36, 36, 36, 4, 4, 4, 4, 4, 4},
    {30, 30, -10, -6, 2, 2, 2, 30, -10, -6, 2, 2, 2, -10, -6, 2, 2, 2, 18, -6, -6, -6, 14, 14, 14, 6, 6, 6},
    {24, 24, -8, 8, -8, 0, 0, 24, -8, 8, -8, 0, 0, -8, 8, -8, 0, 0, -24, 24, 0, 0, 8, 0, 0, 16, 16, 8},
    {18, 18, -6, 6, 6, -10, -2, 18, -6, 6, 6, -10, -2, -6, 6, 6, -10, -2, -18, -18, 30, 6, -6, 10, 2, 10, 2, 18},
    {12, 12, -4, 4, 4, 4, -12, 12, -4, 4, 4, 4, -12, -4, 4, 4, 4, -12, -12, -12, -12, 36, -4, -4, 12, -4, 12, 12},
    {25, 25, 25, 9, 1, 1, 1, 25, 25, 9, 1, 1, 1, 25, 9, 1, 1, 1, 9, 1, 1, 1, 49, 49, 49, 9, 9, 9},
    {20, 20, 20, -12, -4, 0, 0, 20, 20, -12, -4, 0, 0, 20, -12, -4, 0, 0, -12, -4, 0, 0, 28, 0, 0, 24, 24, 12},
    {15, 15, 15, -9, 3, -5, -1, 15, 15, -9, 3, -5, -1, 15, -9, 3, -5, -1, -9, 3, -5, -1, -21, 35, 7, 15, 3, 27},
    {10, 10, 10, -6, 2, 2, -6, 10, 10, -6, 2, 2, -6, 10, -6, 2, 2, -6, -6, 2, 2, -6, -14, -14, 42, -6, 18, 18},
    {16, 16, 16, 16, 16, 0, 0, 16, 16, 16, 16, 0, 0, 16, 16, 16, 0, 0, 16, 16, 0, 0, 16, 0, 0, 64, 64, 16},
    {12, 12, 12, 12, -12, 0, 0, 12, 12, 12, -12, 0, 0, 12, 12, -12, 0, 0, 12, -12, 0, 0, -12, 0, 0, 40, 8, 36},
    {8, 8, 8, 8, -8, 0, 0, 8, 8, 8, -8, 0, 0, 8, 8, -8, 0, 0, 8, -8, 0, 0, -8, 0, 0, -16, 48, 24},
    {9, 9, 9, 9, 9, 25, 1, 9, 9, 9, 9, 25, 1, 9, 9, 9, 25, 1, 9, 9, 25, 1, 9, 25, 1, 25, 1, 81},
    {6, 6, 6, 6, 6, -10, 6, 6, 6, 6, 6, -10, 6, 6, 6, 6, -10, 6, 6, 6, -10, 6, 6, -10, 6, -10, 6, 54},
    {4, 4, 4, 4, 4, 4, 36, 4, 4, 4, 4, 4, 36, 4, 4, 4, 4, 36, 4, 4, 4, 36, 4, 4, 36, 4, 36, 36},
}};

}  // namespace etflat
