#pragma once

#include <array>
#include <cstdint>

namespace trihex::testing {

struct TableRow {
  std::uint64_t vertices;
  std::uint64_t trihexes;
  std::uint64_t gamma;
};

// Published trihex and graph-class counts for V = 4, 8, ..., 360.
inline constexpr std::array<TableRow, 90> kPublishedCounts{{
    {4, 1, 1},     {8, 1, 1},     {12, 2, 2},    {16, 3, 3},    {20, 2, 2},
    {24, 4, 3},    {28, 4, 3},    {32, 5, 5},    {36, 5, 4},    {40, 6, 4},
    {44, 4, 3},    {48, 10, 8},   {52, 6, 4},    {56, 8, 5},    {60, 8, 6},
    {64, 11, 9},   {68, 6, 4},    {72, 13, 8},   {76, 8, 5},    {80, 14, 10},
    {84, 12, 8},   {88, 12, 7},   {92, 8, 5},    {96, 20, 15},  {100, 11, 7},
    {104, 14, 8},  {108, 14, 9},  {112, 20, 13}, {116, 10, 6},  {120, 24, 14},
    {124, 12, 7},  {128, 21, 15}, {132, 16, 10}, {136, 18, 10}, {140, 16, 10},
    {144, 31, 20}, {148, 14, 8},  {152, 20, 11}, {156, 20, 12}, {160, 30, 20},
    {164, 14, 8},  {168, 32, 18}, {172, 16, 9},  {176, 28, 17}, {180, 26, 16},
    {184, 24, 13}, {188, 16, 9},  {192, 42, 28}, {196, 21, 12}, {200, 31, 17},
    {204, 24, 14}, {208, 34, 20}, {212, 18, 10}, {216, 40, 22}, {220, 24, 14},
    {224, 40, 25}, {228, 28, 16}, {232, 30, 16}, {236, 20, 11}, {240, 56, 34},
    {244, 22, 12}, {248, 32, 17}, {252, 36, 21}, {256, 43, 27}, {260, 28, 16},
    {264, 48, 26}, {268, 24, 13}, {272, 42, 24}, {276, 32, 18}, {280, 48, 26},
    {284, 24, 13}, {288, 65, 40}, {292, 26, 14}, {296, 38, 20}, {300, 42, 24},
    {304, 48, 27}, {308, 32, 18}, {312, 56, 30}, {316, 28, 15}, {320, 62, 38},
    {324, 41, 23}, {328, 42, 22}, {332, 28, 15}, {336, 76, 44}, {340, 36, 20},
    {344, 44, 23}, {348, 40, 22}, {352, 60, 35}, {356, 30, 16}, {360, 78, 42},
}};

}  // namespace trihex::testing
