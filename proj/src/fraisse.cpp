#include "obg/fraisse.hpp"

#include <algorithm>

#include "obg/detail/placement.hpp"
#include "obg/enumerate.hpp"
#include "obg/error.hpp"

namespace obg {

using detail::shadow_lower;
using detail::shadow_upper;
using detail::tighten_hi;
using detail::tighten_lo;
using detail::window_open;

namespace {

constexpr std::size_t kMaxCheckSize = 4;

bool edge_allowed(ClassKind kind, const ExtPos& red_pos, const ExtPos& blue_pos) {
    switch (kind) {
    case ClassKind::AllOrdered2ColoredBipartite:
    case ClassKind::RedBlockBeforeBlue:
        return true;
    case ClassKind::RightClass:
        return red_pos < blue_pos;
    case ClassKind::LeftClass:
        return blue_pos < red_pos;
    }
    return false;
}

// ---------------------------------------------------------------------------
// generic limit by one-point extensions constrained to the class

class ClassLimitSemantics final : public EntrySemantics {
public:
    explicit ClassLimitSemantics(ClassKind kind) : kind_(kind) {}

    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<ClassLimitSemantics>(*this);
    }
    bool deterministic() const override { return false; }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        auto dlo = shadow_lower(spec.lo);
        auto dhi = shadow_upper(spec.hi);
        if (dlo.blocked || dhi.blocked) return std::nullopt;
        std::optional<Rat> wlo = dlo.q, whi = dhi.q;

        // class constraints on where a point of this color may go
        if (kind_ == ClassKind::RedBlockBeforeBlue) {
            for (const auto& p : st.sample.points()) {
                if (spec.color == Color::Red && p.color == Color::Blue) {
                    tighten_hi(whi, p.pos.q());
                } else if (spec.color == Color::Blue && p.color == Color::Red) {
                    tighten_lo(wlo, p.pos.q());
                }
            }
        }
        // positive constraints force the position to keep the edge legal
        for (const auto& [id, sign] : spec.constraints) {
            if (!sign) continue;
            const auto& cp = st.sample.point(id);
            if (kind_ == ClassKind::RightClass) {
                if (spec.color == Color::Blue) tighten_lo(wlo, cp.pos.q());
                else tighten_hi(whi, cp.pos.q());
            } else if (kind_ == ClassKind::LeftClass) {
                if (spec.color == Color::Blue) tighten_hi(whi, cp.pos.q());
                else tighten_lo(wlo, cp.pos.q());
            }
        }
        if (!window_open(wlo, whi)) return std::nullopt;

        std::optional<ExtPos> l = wlo ? std::optional<ExtPos>(ExtPos::finite(*wlo)) : std::nullopt;
        std::optional<ExtPos> h = whi ? std::optional<ExtPos>(ExtPos::finite(*whi)) : std::nullopt;
        auto gaps = plain_gaps(st.sample, l, h);
        if (gaps.empty()) return std::nullopt;
        Rat np = mediant_between(gaps.front().lo, gaps.front().hi);
        ExtPos npos = ExtPos::finite(np);

        PlacementPlan out;
        out.points.push_back({npos, spec.color, std::nullopt});
        for (const auto& p : st.sample.points()) {
            if (p.color == spec.color) continue;
            bool present = false;
            bool constrained = false;
            for (const auto& [id, sign] : spec.constraints) {
                if (id == p.id) {
                    present = sign;
                    constrained = true;
                    break;
                }
            }
            if (!constrained) {
                const ExtPos& red_pos = spec.color == Color::Red ? npos : p.pos;
                const ExtPos& blue_pos = spec.color == Color::Red ? p.pos : npos;
                present = edge_allowed(kind_, red_pos, blue_pos) && st.draw_bit();
            }
            out.edges_to_existing.push_back({0, p.id, present});
        }
        return out;
    }

private:
    ClassKind kind_;
};

// ---------------------------------------------------------------------------
// amalgam search

// Builds the free amalgam of B and C over the matched base subsets, with the
// extras merged zone by zone according to `zone_orders` and no cross edges,
// then checks class membership. Returns the amalgam when it works. Cross
// edges never help here: membership constraints only ever forbid edges, and
// a no-cross-edge candidate keeps both copies induced.
//
// Base points are identified via their position rank inside bids/cids.
std::optional<FinStruct> try_amalgam(ClassKind kind, const FinStruct& b,
                                     const std::vector<PointId>& bids, const FinStruct& c,
                                     const std::vector<PointId>& cids,
                                     const std::vector<std::vector<int>>& zone_orders) {
    std::size_t k = bids.size();
    // zone of an extra = number of base points strictly below it
    auto zone_of = [](const FinStruct& s, const std::vector<PointId>& base, const ExtPos& pos) {
        std::size_t z = 0;
        for (PointId id : base) {
            if (s.point(id).pos < pos) ++z;
        }
        return z;
    };

    std::vector<std::vector<const FinStruct::Point*>> b_zone(k + 1), c_zone(k + 1);
    for (const auto& p : b.points()) {
        if (std::find(bids.begin(), bids.end(), p.id) == bids.end()) {
            b_zone[zone_of(b, bids, p.pos)].push_back(&p);
        }
    }
    for (const auto& p : c.points()) {
        if (std::find(cids.begin(), cids.end(), p.id) == cids.end()) {
            c_zone[zone_of(c, cids, p.pos)].push_back(&p);
        }
    }

    // assemble the merged point sequence; ids: base 1..k, B extras 100+,
    // C extras 200+ (sizes stay below 100 at desk scale)
    FinStruct d;
    std::vector<std::pair<PointId, PointId>> b_map, c_map; // origin id -> amalgam id
    std::int64_t next_pos = 1;
    for (std::size_t z = 0; z <= k; ++z) {
        std::size_t bi = 0, ci = 0;
        for (int who : zone_orders[z]) {
            const FinStruct::Point* p = who == 0 ? b_zone[z][bi] : c_zone[z][ci];
            PointId nid = static_cast<PointId>(who == 0 ? 100 + b_map.size() : 200 + c_map.size());
            d.add_point(nid, ExtPos::finite(Rat(next_pos++)), p->color);
            if (who == 0) {
                b_map.push_back({p->id, nid});
                ++bi;
            } else {
                c_map.push_back({p->id, nid});
                ++ci;
            }
        }
        if (z < k) {
            PointId bid = bids[z];
            d.add_point(static_cast<PointId>(z + 1), ExtPos::finite(Rat(next_pos++)),
                        b.point(bid).color);
            b_map.push_back({bid, static_cast<PointId>(z + 1)});
            c_map.push_back({cids[z], static_cast<PointId>(z + 1)});
        }
    }

    auto lookup = [](const std::vector<std::pair<PointId, PointId>>& m, PointId id) {
        for (const auto& [from, to] : m) {
            if (from == id) return to;
        }
        return PointId{0};
    };
    for (const auto& [x, y] : b.edges()) {
        d.add_edge(lookup(b_map, x), lookup(b_map, y));
    }
    for (const auto& [x, y] : c.edges()) {
        PointId dx = lookup(c_map, x), dy = lookup(c_map, y);
        if (!d.has_edge(dx, dy)) d.add_edge(dx, dy);
    }

    ClassDescriptor cd{kind, ""};
    if (!member(cd, d)) return std::nullopt;
    return d;
}

// All ways to interleave nb B-extras with nc C-extras inside one zone.
void zone_shuffles(std::size_t nb, std::size_t nc, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (nb == 0 && nc == 0) {
        out.push_back(cur);
        return;
    }
    if (nb > 0) {
        cur.push_back(0);
        zone_shuffles(nb - 1, nc, cur, out);
        cur.pop_back();
    }
    if (nc > 0) {
        cur.push_back(1);
        zone_shuffles(nb, nc - 1, cur, out);
        cur.pop_back();
    }
}

// Searches for an amalgam of B and C over the base subsets: free amalgams
// only (no identification beyond the base), all zone interleavings, no cross
// edges first. For the classes here a no-cross-edge amalgam always exists.
bool amalgam_exists(ClassKind kind, const FinStruct& b, const std::vector<PointId>& bids,
                    const FinStruct& c, const std::vector<PointId>& cids) {
    std::size_t k = bids.size();
    std::vector<std::size_t> nb(k + 1, 0), nc(k + 1, 0);
    auto zone_of = [](const FinStruct& s, const std::vector<PointId>& base, const ExtPos& pos) {
        std::size_t z = 0;
        for (PointId id : base) {
            if (s.point(id).pos < pos) ++z;
        }
        return z;
    };
    for (const auto& p : b.points()) {
        if (std::find(bids.begin(), bids.end(), p.id) == bids.end()) {
            ++nb[zone_of(b, bids, p.pos)];
        }
    }
    for (const auto& p : c.points()) {
        if (std::find(cids.begin(), cids.end(), p.id) == cids.end()) {
            ++nc[zone_of(c, cids, p.pos)];
        }
    }

    std::vector<std::vector<std::vector<int>>> per_zone(k + 1);
    for (std::size_t z = 0; z <= k; ++z) {
        std::vector<int> cur;
        zone_shuffles(nb[z], nc[z], cur, per_zone[z]);
    }

    // iterate the product of per-zone shuffles
    std::vector<std::size_t> pick(k + 1, 0);
    while (true) {
        std::vector<std::vector<int>> zo(k + 1);
        for (std::size_t z = 0; z <= k; ++z) zo[z] = per_zone[z][pick[z]];
        if (try_amalgam(kind, b, bids, c, cids, zo)) return true;
        std::size_t z = 0;
        while (z <= k && ++pick[z] == per_zone[z].size()) {
            pick[z] = 0;
            ++z;
        }
        if (z > k) break;
    }
    return false;
}

// Subsets of the points of s (by id, position order).
std::vector<std::vector<PointId>> id_subsets(const FinStruct& s) {
    std::vector<PointId> ids;
    for (const auto& p : s.points()) ids.push_back(p.id);
    std::vector<std::vector<PointId>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << ids.size()); ++mask) {
        std::vector<PointId> sub;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (mask & (std::size_t(1) << i)) sub.push_back(ids[i]);
        }
        out.push_back(std::move(sub));
    }
    return out;
}

} // namespace

const std::vector<ClassDescriptor>& all_classes() {
    static const std::vector<ClassDescriptor> classes = {
        {ClassKind::AllOrdered2ColoredBipartite, "allOrdered2ColoredBipartite"},
        {ClassKind::RedBlockBeforeBlue, "redBlockBeforeBlue"},
        {ClassKind::RightClass, "rightClass"},
        {ClassKind::LeftClass, "leftClass"},
    };
    return classes;
}

std::optional<ClassDescriptor> parse_class(const std::string& name) {
    for (const auto& c : all_classes()) {
        if (c.name == name) return c;
    }
    return std::nullopt;
}

bool member(const ClassDescriptor& c, const FinStruct& s) {
    switch (c.kind) {
    case ClassKind::AllOrdered2ColoredBipartite:
        return true; // the type invariants are the membership conditions
    case ClassKind::RedBlockBeforeBlue:
        for (const auto& p : s.points()) {
            for (const auto& q : s.points()) {
                if (p.color == Color::Red && q.color == Color::Blue && q.pos < p.pos) return false;
            }
        }
        return true;
    case ClassKind::RightClass:
    case ClassKind::LeftClass:
        for (const auto& [a, b] : s.edges()) {
            const auto& pa = s.point(a);
            const auto& pb = s.point(b);
            const ExtPos& red = pa.color == Color::Red ? pa.pos : pb.pos;
            const ExtPos& blue = pa.color == Color::Red ? pb.pos : pa.pos;
            if (c.kind == ClassKind::RightClass ? !(red < blue) : !(blue < red)) return false;
        }
        return true;
    }
    return false;
}

AmalgamReport check_property(const ClassDescriptor& c, ClassProperty prop, std::size_t max_size) {
    if (max_size > kMaxCheckSize) {
        raise(ErrorKind::BudgetExceeded, "check_property size cap is " + std::to_string(kMaxCheckSize));
    }
    AmalgamReport report;
    report.property = prop;
    report.max_size = max_size;

    std::vector<FinStruct> members;
    for (auto& s : enumerate_up_to(max_size)) {
        if (member(c, s)) members.push_back(std::move(s));
    }

    if (prop == ClassProperty::HP) {
        for (const auto& s : members) {
            for (const auto& sub : id_subsets(s)) {
                FinStruct t = induced_substructure(s, sub);
                if (!member(c, t)) {
                    report.pass = false;
                    report.a = s;
                    report.b = t;
                    report.note = "induced substructure leaves the class";
                    return report;
                }
            }
        }
        report.note = "hereditary over " + std::to_string(members.size()) + " members";
        return report;
    }

    if (prop == ClassProperty::JEP) {
        for (const auto& x : members) {
            for (const auto& y : members) {
                if (!amalgam_exists(c.kind, x, {}, y, {})) {
                    report.pass = false;
                    report.a = x;
                    report.b = y;
                    report.note = "no joint embedding found (free search exhausted)";
                    return report;
                }
            }
        }
        report.note = "joint embeddings found for all pairs (free amalgams)";
        return report;
    }

    // AP: bases range over matched induced substructures of the two extensions
    for (const auto& x : members) {
        auto x_subs = id_subsets(x);
        for (const auto& y : members) {
            auto y_subs = id_subsets(y);
            for (const auto& xs : x_subs) {
                FinStruct base_x = induced_substructure(x, xs);
                for (const auto& ys : y_subs) {
                    if (xs.size() != ys.size()) continue;
                    FinStruct base_y = induced_substructure(y, ys);
                    if (!base_x.same_pattern(base_y)) continue;
                    if (!amalgam_exists(c.kind, x, xs, y, ys)) {
                        report.pass = false;
                        report.a = base_x;
                        report.b = x;
                        report.c = y;
                        report.note = "no amalgam found (free search exhausted)";
                        return report;
                    }
                }
            }
        }
    }
    report.note = "amalgams found for all squares (free amalgams)";
    return report;
}

StructureOracle limit_oracle(const ClassDescriptor& c, std::uint64_t seed) {
    return StructureOracle("limit:" + c.name, seed, std::make_unique<ClassLimitSemantics>(c.kind));
}

} // namespace obg
