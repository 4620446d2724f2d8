#include "obg/position.hpp"

namespace obg {

std::strong_ordering ExtPos::operator<=>(const ExtPos& other) const {
    if (int r = rank() - other.rank(); r != 0) {
        return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (is_infinite()) {
        return std::strong_ordering::equal;
    }
    if (auto c = q_ <=> other.q_; c != 0) {
        return c;
    }
    return slot_ <=> other.slot_;
}

std::string ExtPos::str() const {
    switch (kind_) {
    case Kind::NegInf: return "0/1@ninf";
    case Kind::PosInf: return "0/1@inf";
    case Kind::Finite: return q_.str();
    case Kind::Pair: return q_.str() + (slot_ == 0 ? "@pair0" : "@pair1");
    }
    return {};
}

} // namespace obg
