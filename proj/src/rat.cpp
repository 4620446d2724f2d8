#include "obg/rat.hpp"

namespace obg {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        raise(ErrorKind::InvalidStructure, "rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::strong_ordering Rat::operator<=>(const Rat& other) const {
    BigInt lhs = num_ * other.den_;
    BigInt rhs = other.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

BigInt Rat::floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) {
        q -= 1;
    }
    return q;
}

std::string Rat::str() const {
    return num_.str() + "/" + den_.str();
}

std::optional<Rat> Rat::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto digits_ok = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    std::string num_text = text;
    std::string den_text = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num_text = text.substr(0, slash);
        den_text = text.substr(slash + 1);
    }
    if (!digits_ok(num_text, true) || !digits_ok(den_text, false)) return std::nullopt;
    BigInt num(num_text);
    BigInt den(den_text);
    if (den <= 0) return std::nullopt;
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g != 1) return std::nullopt; // not in lowest terms
    Rat r;
    return Rat(num, den);
}

Rat mediant_between(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (lo && hi && *lo >= *hi) {
        raise(ErrorKind::EmptyInterval, "mediant_between: empty interval [" + lo->str() + ", " + hi->str() + "]");
    }
    if (!lo && !hi) {
        return Rat(0);
    }
    if (lo && hi) {
        return Rat(lo->num() + hi->num(), lo->den() + hi->den());
    }
    if (lo) {
        // smallest integer strictly above lo
        return Rat(lo->floor() + 1, 1);
    }
    // largest integer strictly below hi
    BigInt f = hi->floor();
    if (Rat(f, 1) == *hi) f -= 1;
    return Rat(f, 1);
}

} // namespace obg
