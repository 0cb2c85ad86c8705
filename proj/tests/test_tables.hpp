#pragma once

#include <vector>

// Frozen expected values for the counting tables and series, as published.
namespace test_tables {

// B_0 .. B_15
inline const long long wedderburn_series[16] = {1,   1,   1,   2,    3,    6,    11,   23,
                                                46,  98,  207, 451,  983,  2179, 4850, 10905};

// coefficients 0 .. 15 of the squared series G^2
inline const long long g_squared_series[16] = {1,   2,    3,    6,    11,   22,    44,    92,
                                               193, 414,  896,  1966, 4347, 9700,  21787, 49262};

// K_{n,l}, rows n = 0..11, columns l = 0..n
inline const std::vector<std::vector<long long>> k2_rows = {
    {1},
    {1, 0},
    {0, 1, 0},
    {1, 0, 1, 0},
    {0, 1, 1, 1, 0},
    {0, 1, 2, 2, 1, 0},
    {0, 0, 3, 3, 4, 1, 0},
    {1, 0, 1, 7, 7, 6, 1, 0},
    {0, 1, 1, 6, 14, 14, 9, 1, 0},
    {0, 1, 3, 4, 21, 28, 28, 12, 1, 0},
    {0, 0, 3, 8, 17, 54, 58, 50, 16, 1, 0},
    {0, 1, 2, 9, 27, 61, 126, 119, 85, 20, 1, 0},
};

// B_{n,k}, rows n = 0..10, columns k = 0..n
inline const std::vector<std::vector<long long>> bcolor_rows = {
    {1},
    {1, 1},
    {1, 2, 1},
    {2, 5, 5, 2},
    {3, 11, 16, 11, 3},
    {6, 26, 50, 50, 26, 6},
    {11, 60, 143, 188, 143, 60, 11},
    {23, 142, 404, 656, 656, 404, 142, 23},
    {46, 334, 1105, 2143, 2652, 2143, 1105, 334, 46},
    {98, 794, 2995, 6737, 9934, 9934, 6737, 2995, 794, 98},
    {207, 1888, 7999, 20504, 35080, 41788, 35080, 20504, 7999, 1888, 207},
};

// K_{n,l,c}: blocks n = 0..8, rows c = 0..n, columns l = 0..n
inline const std::vector<std::vector<std::vector<long long>>> k3_rows = {
    {{1}},
    {{1, 0},
     {1, 0}},
    {{0, 1, 0},
     {0, 2, 0},
     {0, 1, 0}},
    {{1, 0, 1, 0},
     {1, 1, 3, 0},
     {1, 1, 3, 0},
     {1, 0, 1, 0}},
    {{0, 1, 1, 1, 0},
     {0, 2, 5, 4, 0},
     {0, 2, 8, 6, 0},
     {0, 2, 5, 4, 0},
     {0, 1, 1, 1, 0}},
    {{0, 1, 2, 2, 1, 0},
     {0, 3, 5, 13, 5, 0},
     {0, 4, 9, 27, 10, 0},
     {0, 4, 9, 27, 10, 0},
     {0, 3, 5, 13, 5, 0},
     {0, 1, 2, 2, 1, 0}},
    {{0, 0, 3, 3, 4, 1, 0},
     {0, 0, 12, 15, 27, 6, 0},
     {0, 0, 21, 37, 70, 15, 0},
     {0, 0, 24, 50, 94, 20, 0},
     {0, 0, 21, 37, 70, 15, 0},
     {0, 0, 12, 15, 27, 6, 0},
     {0, 0, 3, 3, 4, 1, 0}},
    {{1, 0, 1, 7, 7, 6, 1, 0},
     {1, 1, 6, 34, 45, 48, 7, 0},
     {1, 2, 15, 76, 141, 148, 21, 0},
     {1, 3, 20, 108, 239, 250, 35, 0},
     {1, 3, 20, 108, 239, 250, 35, 0},
     {1, 2, 15, 76, 141, 148, 21, 0},
     {1, 1, 6, 34, 45, 48, 7, 0},
     {1, 0, 1, 7, 7, 6, 1, 0}},
    {{0, 1, 1, 6, 14, 14, 9, 1, 0},
     {0, 2, 5, 39, 86, 116, 78, 8, 0},
     {0, 2, 11, 109, 249, 426, 280, 28, 0},
     {0, 2, 17, 179, 447, 876, 566, 56, 0},
     {0, 2, 20, 206, 540, 1104, 710, 70, 0},
     {0, 2, 17, 179, 447, 876, 566, 56, 0},
     {0, 2, 11, 109, 249, 426, 280, 28, 0},
     {0, 2, 5, 39, 86, 116, 78, 8, 0},
     {0, 1, 1, 6, 14, 14, 9, 1, 0}},
};

}  // namespace test_tables
