#pragma once

namespace obg {

enum class Color { Red, Blue };

inline Color opposite(Color c) {
    return c == Color::Red ? Color::Blue : Color::Red;
}

inline char color_letter(Color c) {
    return c == Color::Red ? 'r' : 'b';
}

inline const char* color_name(Color c) {
    return c == Color::Red ? "red" : "blue";
}

} // namespace obg
