#pragma once

#include <optional>

#include "obg/position.hpp"

namespace obg::detail {

/// Rational shadow of an interval bound: the strict rational constraint a
/// plain or pair-index candidate must satisfy. `blocked` marks bounds no
/// finite position can ever pass (a lower bound at +inf, upper at -inf).
struct RatBound {
    bool blocked = false;
    std::optional<Rat> q;
};

inline RatBound shadow_lower(const std::optional<ExtPos>& b) {
    if (!b) return {};
    switch (b->kind()) {
    case ExtPos::Kind::NegInf: return {};
    case ExtPos::Kind::PosInf: return {true, std::nullopt};
    default: return {false, b->q()};
    }
}

inline RatBound shadow_upper(const std::optional<ExtPos>& b) {
    if (!b) return {};
    switch (b->kind()) {
    case ExtPos::Kind::PosInf: return {};
    case ExtPos::Kind::NegInf: return {true, std::nullopt};
    default: return {false, b->q()};
    }
}

inline void tighten_lo(std::optional<Rat>& lo, const Rat& v) {
    if (!lo || *lo < v) lo = v;
}

inline void tighten_hi(std::optional<Rat>& hi, const Rat& v) {
    if (!hi || v < *hi) hi = v;
}

inline bool window_open(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    return !(lo && hi && !(*lo < *hi));
}

} // namespace obg::detail
