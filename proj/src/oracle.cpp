#include "obg/oracle.hpp"

#include <algorithm>

#include "obg/error.hpp"

namespace obg {

StructureOracle::StructureOracle(std::string label, std::uint64_t seed,
                                 std::unique_ptr<EntrySemantics> sem)
    : label_(std::move(label)), sem_(std::move(sem)) {
    state_.seed = seed;
    state_.rng.seed(seed * 0x9e3779b97f4a7c15ULL + 0xda3e39cb94b95bdbULL);
}

StructureOracle::StructureOracle(const StructureOracle& other)
    : label_(other.label_), state_(other.state_), sem_(other.sem_->clone()) {}

StructureOracle& StructureOracle::operator=(const StructureOracle& other) {
    if (this != &other) {
        label_ = other.label_;
        state_ = other.state_;
        sem_ = other.sem_->clone();
    }
    return *this;
}

bool StructureOracle::adjacent(PointId a, PointId b) const {
    const auto& pa = state_.sample.point(a);
    const auto& pb = state_.sample.point(b);
    if (pa.color == pb.color) {
        raise(ErrorKind::SameColor, "adjacent: points share a color");
    }
    return state_.sample.has_edge(a, b);
}

void StructureOracle::validate_spec(const WitnessSpec& spec) const {
    if (empty_interval(spec.lo, spec.hi)) {
        raise(ErrorKind::EmptyInterval, "witness interval is empty");
    }
    for (const auto& [id, sign] : spec.constraints) {
        (void)sign;
        if (!state_.sample.contains(id)) {
            raise(ErrorKind::MalformedSpec, "constraint id " + std::to_string(id) + " not in sample");
        }
        if (state_.sample.point(id).color == spec.color) {
            raise(ErrorKind::MalformedSpec, "constraint point has the witness color");
        }
    }
}

std::optional<PointId> StructureOracle::exists_between(const std::optional<ExtPos>& lo,
                                                       const std::optional<ExtPos>& hi, Color c) {
    if (empty_interval(lo, hi)) {
        raise(ErrorKind::EmptyInterval, "exists_between: empty interval");
    }
    for (const auto& p : state_.sample.points()) {
        if (p.color == c && strictly_between(p.pos, lo, hi)) {
            return p.id;
        }
    }
    WitnessSpec spec;
    spec.color = c;
    spec.lo = lo;
    spec.hi = hi;
    auto plan = sem_->plan(state_, spec);
    if (!plan) return std::nullopt;
    return apply(std::move(*plan));
}

std::optional<PointId> StructureOracle::realize_witness(const WitnessSpec& spec) {
    validate_spec(spec);
    // contradictory duplicate signs can never be satisfied
    std::map<PointId, bool> seen;
    WitnessSpec cleaned = spec;
    cleaned.constraints.clear();
    for (const auto& [id, sign] : spec.constraints) {
        auto it = seen.find(id);
        if (it == seen.end()) {
            seen.emplace(id, sign);
            cleaned.constraints.push_back({id, sign});
        } else if (it->second != sign) {
            return std::nullopt;
        }
    }
    auto plan = sem_->plan(state_, cleaned);
    if (!plan) return std::nullopt;
    return apply(std::move(*plan));
}

PointId StructureOracle::apply(PlacementPlan&& plan) {
    std::vector<PointId> ids;
    ids.reserve(plan.points.size());
    for (const auto& pp : plan.points) {
        PointId id = state_.next_id++;
        state_.sample.add_point(id, pp.pos, pp.color);
        if (pp.base) {
            state_.base.emplace(id, *pp.base);
        }
        ids.push_back(id);
    }
    for (const auto& [i, j] : plan.partner_links) {
        state_.partner[ids[i]] = ids[j];
        state_.partner[ids[j]] = ids[i];
    }
    for (const auto& [i, other, present] : plan.edges_to_existing) {
        if (present) state_.sample.add_edge(ids[i], other);
    }
    for (const auto& [i, j, present] : plan.internal_edges) {
        if (present) state_.sample.add_edge(ids[i], ids[j]);
    }
    return ids[0];
}

const FinStruct& StructureOracle::grow_to(std::size_t n) {
    constexpr std::size_t kHardCap = 4096;
    if (n > kHardCap) {
        raise(ErrorKind::BudgetExceeded, "grow_to target beyond hard cap");
    }
    while (state_.sample.size() < n) {
        std::size_t before = state_.sample.size();

        // one full sweep over the current gaps, both colors each
        const auto pts = state_.sample.points(); // copy: exists_between mutates
        for (std::size_t idx = 0; idx <= pts.size() && state_.sample.size() < n; ++idx) {
            std::optional<ExtPos> lo, hi;
            if (idx > 0) lo = pts[idx - 1].pos;
            if (idx < pts.size()) hi = pts[idx].pos;
            for (Color c : {Color::Red, Color::Blue}) {
                if (state_.sample.size() >= n) break;
                exists_between(lo, hi, c);
            }
        }

        // one seeded witness challenge per sweep, to keep sign patterns fair
        if (state_.sample.size() < n && state_.sample.size() >= 2) {
            Color c = state_.draw_bit() ? Color::Blue : Color::Red;
            std::vector<PointId> others;
            for (const auto& p : state_.sample.points()) {
                if (p.color == opposite(c)) others.push_back(p.id);
            }
            if (!others.empty()) {
                WitnessSpec spec;
                spec.color = c;
                std::size_t k = 1 + state_.rng() % std::min<std::size_t>(3, others.size());
                std::shuffle(others.begin(), others.end(), state_.rng);
                for (std::size_t i = 0; i < k; ++i) {
                    spec.constraints.push_back({others[i], state_.draw_bit()});
                }
                const auto& cur = state_.sample.points();
                std::size_t gap = state_.rng() % (cur.size() + 1);
                if (gap > 0) spec.lo = cur[gap - 1].pos;
                if (gap < cur.size()) spec.hi = cur[gap].pos;
                realize_witness(spec);
            }
        }

        if (state_.sample.size() == before) break; // saturated (finite structure)
    }
    return state_.sample;
}

std::optional<Rat> StructureOracle::base_coord(PointId id) const {
    auto it = state_.base.find(id);
    if (it == state_.base.end()) return std::nullopt;
    return it->second;
}

std::optional<PointId> StructureOracle::partner(PointId id) const {
    auto it = state_.partner.find(id);
    if (it == state_.partner.end()) return std::nullopt;
    return it->second;
}

std::vector<PlainGap> plain_gaps(const FinStruct& sample, const std::optional<ExtPos>& lo,
                                 const std::optional<ExtPos>& hi) {
    // rational shadow of an interval bound: strict on both sides (see pair
    // slot discussion in oracle.hpp — occupied slots make strictness exact)
    auto shadow = [](const ExtPos& p) -> std::optional<Rat> {
        if (p.is_finite()) return p.q();
        return std::nullopt; // infinities handled by viability flags below
    };

    std::optional<Rat> lo_q, hi_q;
    bool lo_blocked = false, hi_blocked = false; // bound at +inf / -inf: nothing fits
    if (lo) {
        if (lo->kind() == ExtPos::Kind::PosInf) lo_blocked = true;
        else lo_q = shadow(*lo);
    }
    if (hi) {
        if (hi->kind() == ExtPos::Kind::NegInf) hi_blocked = true;
        else hi_q = shadow(*hi);
    }
    if (lo_blocked || hi_blocked) return {};

    // dividers: sampled positions strictly inside (lo, hi)
    std::vector<ExtPos> dividers;
    for (const auto& p : sample.points()) {
        if (strictly_between(p.pos, lo, hi)) dividers.push_back(p.pos);
    }

    std::vector<PlainGap> out;
    auto push_gap = [&out](std::optional<Rat> a, bool a_top, std::optional<Rat> b, bool b_bottom) {
        // a_top: lower bound is a +inf divider; b_bottom: upper bound is -inf
        if (a_top || b_bottom) return;
        if (a && b && !(*a < *b)) return;
        out.push_back(PlainGap{std::move(a), std::move(b)});
    };

    std::optional<Rat> prev = lo_q;
    bool prev_top = false;
    for (const auto& d : dividers) {
        if (d.kind() == ExtPos::Kind::NegInf) {
            // nothing fits below -inf; restart the lower bound unbounded
            prev = std::nullopt;
            prev_top = false;
            continue;
        }
        if (d.kind() == ExtPos::Kind::PosInf) {
            push_gap(prev, prev_top, std::nullopt, false);
            prev = std::nullopt;
            prev_top = true;
            continue;
        }
        push_gap(prev, prev_top, d.q(), false);
        prev = d.q();
        prev_top = false;
    }
    push_gap(prev, prev_top, hi_q, false);
    return out;
}

} // namespace obg
