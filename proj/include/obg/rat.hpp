#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "obg/error.hpp"

namespace obg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Positions on the rational line are the order skeleton of every structure in
/// this library, so comparisons are exact (cross-multiplication) and
/// construction canonicalizes eagerly.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    std::strong_ordering operator<=>(const Rat& other) const;
    bool operator==(const Rat& other) const { return num_ == other.num_ && den_ == other.den_; }

    Rat operator-() const;

    /// Largest integer <= value.
    BigInt floor() const;

    std::string str() const;

    /// Parses "n/d" (or a bare integer "n"); requires d > 0 and gcd(|n|, d) = 1.
    /// Returns nullopt on any violation.
    static std::optional<Rat> parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;
};

/// Canonical rational strictly inside the open interval (lo, hi), where an
/// absent bound means the interval is unbounded on that side.
///
/// Deterministic: the mediant for two finite bounds, integer stepping when one
/// bound is absent, 0 when both are. Throws EmptyInterval when lo >= hi.
Rat mediant_between(const std::optional<Rat>& lo, const std::optional<Rat>& hi);

} // namespace obg
