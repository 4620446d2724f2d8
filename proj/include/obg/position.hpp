#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "obg/rat.hpp"

namespace obg {

/// A point's position on the extended line.
///
/// Four kinds, totally ordered:
///   NegInf  <  Finite(q) / Pair(q, slot)  <  PosInf
///
/// Finite positions compare by rational value. Pair positions encode the
/// order type Q.2 exactly: (q, 0) is immediately followed by (q, 1) with
/// nothing in between. A plain Finite(q) ties with Pair(q, 0); a single
/// structure never mixes the two conventions at one rational.
class ExtPos {
public:
    enum class Kind { NegInf, Finite, Pair, PosInf };

    ExtPos() : kind_(Kind::Finite), q_(), slot_(0) {}

    static ExtPos neg_inf() { return ExtPos(Kind::NegInf, Rat(0), 0); }
    static ExtPos pos_inf() { return ExtPos(Kind::PosInf, Rat(0), 0); }
    static ExtPos finite(Rat q) { return ExtPos(Kind::Finite, std::move(q), 0); }
    static ExtPos pair(Rat q, int slot) { return ExtPos(Kind::Pair, std::move(q), slot); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite || kind_ == Kind::Pair; }
    bool is_infinite() const { return kind_ == Kind::NegInf || kind_ == Kind::PosInf; }

    /// Rational value; only meaningful for finite/pair kinds.
    const Rat& q() const { return q_; }
    int slot() const { return slot_; }

    std::strong_ordering operator<=>(const ExtPos& other) const;
    bool operator==(const ExtPos& other) const { return (*this <=> other) == 0; }

    std::string str() const;

private:
    ExtPos(Kind k, Rat q, int slot) : kind_(k), q_(std::move(q)), slot_(slot) {}

    int rank() const {
        switch (kind_) {
        case Kind::NegInf: return 0;
        case Kind::PosInf: return 2;
        default: return 1;
        }
    }

    Kind kind_;
    Rat q_;
    int slot_;
};

/// Open-interval membership with optional (absent = unbounded) endpoints.
inline bool strictly_between(const ExtPos& p, const std::optional<ExtPos>& lo,
                             const std::optional<ExtPos>& hi) {
    if (lo && !(*lo < p)) return false;
    if (hi && !(p < *hi)) return false;
    return true;
}

/// True when the open interval (lo, hi) is empty as a set of positions.
inline bool empty_interval(const std::optional<ExtPos>& lo, const std::optional<ExtPos>& hi) {
    return lo && hi && !(*lo < *hi);
}

} // namespace obg
