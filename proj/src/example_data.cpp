#include "qts/example.hpp"

#include <array>

namespace qts {

namespace {

// One 2x2x2x2 tensor per entry, unfolded to 4x4 in row-major order
// (row = 2 i1 + i2, column = 2 k1 + k2); each quaternion is {w, x, y, z}.
struct Entry {
    const char* name;
    std::array<std::array<int, 4>, 16> q;
};

const Entry kCoefficients[] = {
    {"A1",
     {{
      {0, 0, 0, 1}, {2, -1, 0, 0}, {0, 5, 0, 0}, {0, 0, 0, 0},
      {0, 1, 0, 1}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1},
      {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}, {0, 0, 0, 0},
     }}},
    {"A2",
     {{
      {6, 0, 0, 0}, {0, 0, 0, 1}, {7, 0, 0, 0}, {0, 0, 0, 2},
      {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {9, 0, 0, 0}, {0, 0, 0, 0}, {8, 0, 0, 0},
      {0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, -3, 0}, {0, 0, 0, 0},
     }}},
    {"A3",
     {{
      {0, 0, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {3, 0, -1, 0},
      {2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0},
     }}},
    {"A4",
     {{
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1},
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 1, 0, 0},
     }}},
    {"A5",
     {{
      {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0},
      {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0},
     }}},
    {"A6",
     {{
      {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 1}, {-1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {2, 0, 0, 0},
      {0, 2, 0, 0}, {0, 0, 0, 0}, {1, -1, 0, 0}, {2, -1, 0, 0},
     }}},
    {"A7",
     {{
      {0, 1, 0, -1}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1},
      {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 1, 0, 0},
      {0, 0, 0, -2}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
     }}},
    {"A8",
     {{
      {0, 0, 2, 0}, {0, 1, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 1},
      {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 3}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 0, 2},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0},
     }}},
    {"A9",
     {{
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1},
      {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 1, 0},
      {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 1},
     }}},
    {"B1",
     {{
      {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 1, 0, 0}, {2, 0, 0, 0},
      {2, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 3, 0, 0}, {2, 0, 0, 0}, {0, 0, 1, 0},
     }}},
    {"B2",
     {{
      {8, 0, 0, 0}, {0, 0, 0, 0}, {9, 0, 0, 0}, {0, 1, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {7, 0, 0, 0}, {0, 0, 0, 0}, {6, 0, 0, 0},
      {0, 0, 3, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1},
     }}},
    {"B3",
     {{
      {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 3, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, -2}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0},
      {0, 0, 2, 0}, {0, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, 0},
     }}},
    {"B4",
     {{
      {0, 0, 0, 0}, {0, 1, -1, 0}, {0, 0, 0, 0}, {0, -1, 0, 1},
      {0, 1, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0},
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, -1}, {0, 0, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0},
     }}},
    {"B5",
     {{
      {0, 2, 0, 0}, {0, 0, 0, 0}, {0, -1, 1, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 0, 0}, {3, 0, 0, 0},
      {0, 0, 2, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {3, -1, 0, 0},
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0},
     }}},
    {"B6",
     {{
      {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {2, -1, 0, 0}, {2, 0, -1, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0},
      {0, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1},
     }}},
    {"B7",
     {{
      {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, -1, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 0},
     }}},
    {"B8",
     {{
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, 1},
      {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 2, 0}, {0, 3, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1},
     }}},
    {"B9",
     {{
      {0, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0},
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 0, 0}, {0, 1, 0, 0},
      {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}, {0, 0, 0, 0},
     }}},
    {"C3",
     {{
      {0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 1, 0},
      {0, 1, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1},
      {0, 0, 0, 0}, {0, 1, -2, 0}, {0, 0, 1, 1}, {0, 0, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0},
     }}},
    {"C4",
     {{
      {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0},
      {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0},
     }}},
    {"D3",
     {{
      {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0},
      {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0},
     }}},
    {"D4",
     {{
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1},
      {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, -1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0},
     }}},
    {"E1",
     {{
      {-7, 1, -6, -5}, {3, 3, 0, 0}, {1, 1, 7, -2}, {2, 4, -1, 10},
      {2, 0, -1, 2}, {3, 3, 0, -3}, {-1, -4, 2, 0}, {-1, -1, 3, -1},
      {0, 0, 0, -1}, {0, 0, 0, -3}, {0, 0, 3, 0}, {-1, 0, 0, 0},
      {2, -6, -4, 0}, {0, 0, 0, 0}, {0, -2, 0, -6}, {4, 0, 4, 0},
     }}},
    {"E2",
     {{
      {-56, 8, 90, 18}, {0, 84, 0, -14}, {-45, 42, -18, -33}, {-1, 65, 6, -42},
      {-3, 0, 0, -8}, {0, 0, 14, 0}, {0, 3, 0, -6}, {0, -1, 11, 0},
      {0, 24, -72, 72}, {-126, 0, 0, 0}, {8, 0, -73, 81}, {-116, 0, 9, 9},
      {39, 0, 0, 8}, {0, 0, -14, 0}, {0, 12, 0, 21}, {0, 13, -11, 0},
     }}},
    {"E3",
     {{
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {3, -3, -1, -1}, {0, 6, 0, 2},
      {0, 2, 0, -2}, {0, 0, 2, -2}, {2, 2, 0, 0}, {0, 0, 0, 0},
      {-1, 0, 1, 0}, {0, 0, 1, 1}, {-1, 1, 0, 0}, {0, 0, 0, 0},
     }}},
    {"E4",
     {{
      {-1, 0, -1, 0}, {-1, -2, -1, 0}, {0, 0, 0, 0}, {-3, 0, -4, -1},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 4}, {0, 0, 0, 0}, {-4, 0, 0, 0}, {0, 0, -1, 1},
     }}},
    {"E5",
     {{
      {-1, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 3, 1, 0},
      {0, 0, -2, 0}, {1, 0, 0, 2}, {-1, 0, 1, 0}, {0, 0, 0, 0},
      {0, 0, -2, 0}, {-1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 0},
      {0, 0, 1, 0}, {1, 0, -1, 2}, {0, 0, 0, -1}, {-1, 0, 0, 2},
     }}},
    {"E6",
     {{
      {0, 0, 1, -2}, {0, 2, 1, 1}, {-1, 0, -1, -1}, {-2, 0, -2, 0},
      {0, 1, 2, -1}, {0, 0, 0, 0}, {0, 2, 0, 0}, {-1, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 1, 0, 2}, {-1, -1, 0, -1}, {0, 1, 0, 0}, {1, 0, 0, 0},
     }}},
    {"E7",
     {{
      {0, 0, 0, 0}, {0, 2, 0, 0}, {0, 3, 3, 0}, {0, 0, 4, 0},
      {0, 0, 0, 0}, {-3, 0, 1, 0}, {0, 0, 0, 3}, {-5, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, -2, 0}, {0, 0, 0, 0}, {0, 0, 0, -3}, {-4, 0, 0, 0},
     }}},
    {"E8",
     {{
      {0, 4, 0, 0}, {-1, 3, -1, -3}, {0, -2, 2, 0}, {9, 0, 0, -3},
      {-2, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}, {0, 0, 0, 0},
      {0, 0, 0, 2}, {0, 1, 0, -1}, {0, 1, 0, -1}, {0, 3, 0, 0},
      {-2, 0, 0, 0}, {-2, 0, 2, 0}, {-1, 0, 1, 0}, {0, 2, 3, 1},
     }}},
    {"E9",
     {{
      {2, 0, 8, -3}, {-6, -8, -3, 0}, {-6, 4, -2, 3}, {4, 4, 6, 2},
      {-10, -4, 2, 2}, {15, 10, -7, 7}, {12, 13, -5, -1}, {-9, 3, 3, 2},
      {-4, -1, -1, -1}, {8, 8, -2, 14}, {2, 8, 2, 10}, {-6, 2, 0, -3},
      {0, -4, 15, -7}, {-7, -10, 2, 17}, {-6, 2, 7, 1}, {3, 5, 15, -1},
     }}},
    {"E10",
     {{
      {5, 61, -37, -9}, {12, -45, -75, 7}, {10, -73, 36, -13}, {-53, 3, 24, 26},
      {154, 65, -136, -191}, {249, -133, -65, 171}, {1, -34, 7, -27}, {7, 23, 42, -55},
      {26, -4, -36, -18}, {50, -56, 5, 31}, {-87, -95, 186, 117}, {-119, 143, -15, 63},
      {-48, 160, 16, -41}, {58, 45, -176, -50}, {98, -141, 14, 21}, {-143, -37, 78, 36},
     }}},
    {"H3",
     {{
      {2, 0, 0, 0}, {0, 0, 0, 0}, {3, 0, 0, 0}, {0, 0, 0, 0},
      {0, 1, 0, 0}, {0, 0, 0, -5}, {0, 0, 0, 0}, {-6, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, -1, 0, 0},
     }}},
    {"H4",
     {{
      {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {2, -1, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
     }}},
    {"J3",
     {{
      {4, 0, 0, 0}, {0, -1, 0, 0}, {5, 0, 0, 0}, {0, 0, 1, 0},
      {0, 0, 1, 0}, {-7, 0, 0, 0}, {0, 0, 0, 0}, {-8, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
     }}},
    {"J4",
     {{
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 0}, {3, 0, 0, -1},
      {0, 0, 0, 1}, {0, 0, 0, 0}, {2, -1, 0, 0}, {0, 0, 0, 0},
      {0, 1, 0, 0}, {0, 0, -1, 0}, {2, 0, 1, 0}, {3, 0, 0, 1},
     }}},
};

const Entry kSolution[] = {
    {"X1",
     {{
      {-2, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {2, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {2, 0, 0, 1},
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}, {0, 0, 0, 0},
     }}},
    {"X2",
     {{
      {0, 0, 0, 1}, {-1, 0, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 1, 0}, {2, 0, 0, 0}, {3, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
     }}},
    {"X3",
     {{
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 1}, {0, 0, 1, -1},
      {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0},
     }}},
    {"Y1",
     {{
      {0, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 0, 0}, {0, 5, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 4, 0},
      {0, 2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 0},
     }}},
    {"Y2",
     {{
      {2, 0, 0, 0}, {3, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
      {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
     }}},
    {"Y3",
     {{
      {-1, 0, 0, 0}, {0, -3, 0, 0}, {0, 2, 0, 0}, {0, 1, 0, 0},
      {0, 0, -1, 1}, {0, 0, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {5, 0, 0, 0}, {0, 0, 0, 0}, {4, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1},
     }}},
    {"W",
     {{
      {0, 1, 0, -1}, {0, 0, 1, -1}, {1, 1, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
      {0, 0, 0, 0}, {0, 0, 0, 0}, {1, -1, 0, 0}, {0, 0, 2, 0},
     }}},
};

QTensor to_tensor(const Entry& e) {
    QTensor t(Shape{2, 2}, Shape{2, 2});
    for (std::size_t i = 0; i < e.q.size(); ++i) {
        const auto& v = e.q[i];
        t.data()[i] = Quaternion(v[0], v[1], v[2], v[3]);
    }
    return t;
}

} // namespace

ProblemInstance example_problem() {
    ProblemInstance inst;
    inst.kind = SystemKind::main15;
    for (const Entry& e : kCoefficients) inst.coefficients.emplace(e.name, to_tensor(e));
    return inst;
}

TensorMap example_solution() {
    TensorMap sol;
    for (const Entry& e : kSolution) sol.emplace(e.name, to_tensor(e));
    return sol;
}

} // namespace qts
