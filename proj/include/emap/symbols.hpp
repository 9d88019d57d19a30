#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace emap {

// Extended symbols over the refined partition of T_0 u T_1.
// Subscript 1 marks the lower-half component (Im < 0), subscript 2 the upper.
enum class ExtSym : std::uint8_t { S01 = 0, S02 = 1, S11 = 2, S12 = 3 };

constexpr int base_digit(ExtSym s) {
    return (s == ExtSym::S11 || s == ExtSym::S12) ? 1 : 0;
}

constexpr int subscript(ExtSym s) {
    return (s == ExtSym::S01 || s == ExtSym::S11) ? 1 : 2;
}

constexpr ExtSym make_ext(int digit, int sub) {
    return digit == 0 ? (sub == 1 ? ExtSym::S01 : ExtSym::S02)
                      : (sub == 1 ? ExtSym::S11 : ExtSym::S12);
}

constexpr ExtSym swap_subscript(ExtSym s) {
    return make_ext(base_digit(s), subscript(s) == 1 ? 2 : 1);
}

// Transition matrix A with rows/cols ordered (0_1, 0_2, 1_1, 1_2).
constexpr std::array<std::array<int, 4>, 4> transition_matrix = {{
    {1, 0, 1, 0},
    {0, 1, 0, 1},
    {0, 1, 0, 1},
    {1, 0, 1, 0},
}};

constexpr bool transition_allowed(ExtSym from, ExtSym to) {
    return transition_matrix[static_cast<int>(from)][static_cast<int>(to)] == 1;
}

// Subscript of the unique allowed continuation after s.
constexpr int next_subscript(ExtSym s) {
    return (s == ExtSym::S01 || s == ExtSym::S12) ? 1 : 2;
}

inline std::string to_string(ExtSym s) {
    switch (s) {
        case ExtSym::S01: return "0_1";
        case ExtSym::S02: return "0_2";
        case ExtSym::S11: return "1_1";
        case ExtSym::S12: return "1_2";
    }
    return "?";
}

}  // namespace emap
