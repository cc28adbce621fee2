#pragma once

#include <span>
#include <string_view>

#include "machines.hpp"

namespace weakutm {

/// One displayed configuration of a reference run: cumulative step count,
/// state, absolute head index, and the tape window in plain glyphs.
struct GoldenFrame {
  std::uint64_t step;
  int state;
  Index head;
  std::string_view glyphs;
};

struct GoldenTrace {
  MachineId machine;
  /// Tape index of the first glyph of every frame's window.
  Index from;
  std::span<const GoldenFrame> frames;
};

namespace golden {

// Reference runs from the ether encoding of row c_0. U(3,3) covers three
// simulated timesteps, U(2,4) two and U(6,2) one.
inline constexpr GoldenFrame u33_frames[] = {
    {0, 1, 0, "001b001b001b00010b110b0b110b"},
    {1, 2, -1, "001b001b001b000b0b110b0b110b"},
    {2, 1, 0, "001b001b001b000b0b110b0b110b"},
    {3, 3, -1, "001b001b001b000b0b110b0b110b"},
    {4, 1, -2, "001b001b001b00bb0b110b0b110b"},
    {6, 1, -4, "001b001b001b11bb0b110b0b110b"},
    {7, 3, -5, "001b001b001b11bb0b110b0b110b"},
    {13, 3, 1, "001b001b000100110b110b0b110b"},
    {14, 1, 0, "001b001b00010011bb110b0b110b"},
    {15, 2, -1, "001b001b0001001bbb110b0b110b"},
    {16, 2, -2, "001b001b0001001bbb110b0b110b"},
    {17, 1, -1, "001b001b0001001bbb110b0b110b"},
    {18, 2, -2, "001b001b000100bbbb110b0b110b"},
    {21, 1, -3, "001b001b00010bbbbb110b0b110b"},
    {23, 2, -5, "001b001b000b1bbbbb110b0b110b"},
    {26, 1, -6, "001b001b00bb1bbbbb110b0b110b"},
    {29, 3, -9, "001b001b11bb1bbbbb110b0b110b"},
    {44, 1, 4, "001b0001001101111100bb0b110b"},
    {47, 2, 1, "001b0001001101111b11bb0b110b"},
    {51, 2, -3, "001b0001001101111b11bb0b110b"},
    {56, 1, -4, "001b00010011bb111b11bb0b110b"},
    {58, 2, -6, "001b0001001bbb111b11bb0b110b"},
    {63, 1, -7, "001b00010bbbbb111b11bb0b110b"},
    {65, 2, -9, "001b000b1bbbbb111b11bb0b110b"},
    {71, 3, -13, "001b11bb1bbbbb111b11bb0b110b"},
    {92, 1, 6, "0001001101111100010011bb110b"},
};
inline constexpr Index u33_from = -15;

inline constexpr GoldenFrame u24_frames[] = {
    {0, 1, 0, "000~1000~1000~1000101~0~0~01~01~0~0~01~"},
    {6, 1, -4, "000~1000~1000~10~0~1~1~01~0~0~01~01~0~0~01~"},
    {7, 2, -5, "000~1000~1000~1~0~0~1~1~01~0~0~01~01~0~0~01~"},
    {13, 2, 1, "000~1000~10001001101~0~0~01~01~0~0~01~"},
    {14, 1, 2, "000~1000~1000100111~1~0~0~01~01~0~0~01~"},
    {16, 1, 0, "000~1000~1000100111~1~0~0~01~01~0~0~01~"},
    {18, 2, -2, "000~1000~10001000~1~1~1~0~0~01~01~0~0~01~"},
    {19, 1, -1, "000~1000~1000101~0~1~1~1~0~0~01~01~0~0~01~"},
    {23, 2, -5, "000~1000~10001~0~1~1~1~1~1~0~0~01~01~0~0~01~"},
    {28, 1, -8, "000~1000~10~0~1~1~0~1~1~1~1~1~0~0~01~01~0~0~01~"},
    {29, 2, -9, "000~1000~1~0~0~1~1~0~1~1~1~1~1~0~0~01~01~0~0~01~"},
    {44, 1, 6, "000~100010011011111001~1~01~0~0~01~"},
};
inline constexpr Index u24_from = -15;

inline constexpr GoldenFrame u62_frames[] = {
    {0, 1, 0, "000001010000010100000011100100001001"},
    {1, 2, -1, "000001010000010100000011100100001001"},
    {2, 3, -2, "000001010000010100000001100100001001"},
    {3, 2, -1, "000001010000010100000001100100001001"},
    {4, 6, -2, "000001010000010100000001100100001001"},
    {5, 1, -3, "000001010000010100000101100100001001"},
    {10, 1, -8, "000001010000010100000101100100001001"},
    {11, 2, -9, "000001010000010100000101100100001001"},
    {12, 6, -10, "000001010000010100000101100100001001"},
    {13, 4, -9, "000001010000000100000101100100001001"},
    {14, 5, -8, "000001010000001100000101100100001001"},
    {15, 4, -7, "000001010000001100000101100100001001"},
    {16, 5, -6, "000001010000001110000101100100001001"},
    {17, 4, -7, "000001010000001111000101100100001001"},
    {18, 6, -6, "000001010000001101000101100100001001"},
    {19, 4, -5, "000001010000001100000101100100001001"},
    {23, 4, -3, "000001010000001100000101100100001001"},
    {24, 5, -2, "000001010000001100001101100100001001"},
    {25, 4, -1, "000001010000001100001101100100001001"},
    {27, 4, 1, "000001010000001100001111100100001001"},
    {28, 6, 2, "000001010000001100001111000100001001"},
    {29, 1, 1, "000001010000001100001111010100001001"},
};
inline constexpr Index u62_from = -23;
}  // namespace golden

inline GoldenTrace golden_trace(MachineId id) {
  switch (id) {
    case MachineId::u33: return {id, golden::u33_from, golden::u33_frames};
    case MachineId::u24: return {id, golden::u24_from, golden::u24_frames};
    case MachineId::u62: return {id, golden::u62_from, golden::u62_frames};
  }
  throw std::invalid_argument("unknown machine id");
}

}  // namespace weakutm
