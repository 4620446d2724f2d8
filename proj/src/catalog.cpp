#include "obg/catalog.hpp"

#include <algorithm>

#include "obg/detail/placement.hpp"
#include "obg/error.hpp"

namespace obg {

using detail::shadow_lower;
using detail::shadow_upper;
using detail::tighten_hi;
using detail::tighten_lo;
using detail::window_open;

namespace {

// ---------------------------------------------------------------------------
// shared placement helpers

// First open slot for a plain point strictly inside (lo, hi), leftmost.
std::optional<Rat> first_plain_slot(const FinStruct& sample, const std::optional<ExtPos>& lo,
                                    const std::optional<ExtPos>& hi) {
    auto gaps = plain_gaps(sample, lo, hi);
    if (gaps.empty()) return std::nullopt;
    return mediant_between(gaps.front().lo, gaps.front().hi);
}

std::pair<std::optional<ExtPos>, std::optional<ExtPos>> clip(const std::optional<ExtPos>& lo,
                                                             const std::optional<ExtPos>& hi,
                                                             const std::optional<ExtPos>& block_lo,
                                                             const std::optional<ExtPos>& block_hi) {
    std::optional<ExtPos> l = lo, h = hi;
    if (block_lo && (!l || *l < *block_lo)) l = block_lo;
    if (block_hi && (!h || *block_hi < *h)) h = block_hi;
    return {l, h};
}

// Fills the new point's edges to every existing opposite-color point, in
// position order: constrained pairs use their sign, the rest use `fallback`.
void fill_edges(PlacementPlan& plan, std::size_t idx, const OracleState& st, Color color,
                const WitnessSpec& spec, const std::function<bool(const FinStruct::Point&)>& fallback) {
    for (const auto& p : st.sample.points()) {
        if (p.color == color) continue;
        bool present = false;
        bool constrained = false;
        for (const auto& [id, sign] : spec.constraints) {
            if (id == p.id) {
                present = sign;
                constrained = true;
                break;
            }
        }
        if (!constrained) present = fallback(p);
        plan.edges_to_existing.push_back({idx, p.id, present});
    }
}

// ---------------------------------------------------------------------------
// case (i): a fixed one- or two-point structure

class FiniteSemantics final : public EntrySemantics {
public:
    FiniteSemantics(PointSet points, bool complete) : complete_(complete) {
        if (points == PointSet::OneRed || points == PointSet::RedBlue) {
            fixed_.push_back({ExtPos::finite(Rat(0)), Color::Red});
        }
        if (points == PointSet::OneBlue) {
            fixed_.push_back({ExtPos::finite(Rat(0)), Color::Blue});
        } else if (points == PointSet::RedBlue) {
            fixed_.push_back({ExtPos::finite(Rat(1)), Color::Blue});
        }
    }

    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<FiniteSemantics>(*this);
    }
    bool deterministic() const override { return true; }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        for (const auto& [id, sign] : spec.constraints) {
            (void)id;
            if (sign != complete_) return std::nullopt;
        }
        for (const auto& [pos, color] : fixed_) {
            if (color != spec.color) continue;
            if (!strictly_between(pos, spec.lo, spec.hi)) continue;
            bool sampled = false;
            for (const auto& p : st.sample.points()) {
                if (p.pos == pos) {
                    sampled = true;
                    break;
                }
            }
            if (sampled) continue;
            PlacementPlan out;
            out.points.push_back({pos, color, std::nullopt});
            fill_edges(out, 0, st, color, spec, [&](const FinStruct::Point&) { return complete_; });
            return out;
        }
        return std::nullopt;
    }

private:
    std::vector<std::pair<ExtPos, Color>> fixed_;
    bool complete_;
};

// ---------------------------------------------------------------------------
// case (ii): Q monochromatic, R empty

class MonoSemantics final : public EntrySemantics {
public:
    explicit MonoSemantics(Color c) : color_(c) {}

    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<MonoSemantics>(*this);
    }
    bool deterministic() const override { return true; }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        if (spec.color != color_) return std::nullopt;
        auto slot = first_plain_slot(st.sample, spec.lo, spec.hi);
        if (!slot) return std::nullopt;
        PlacementPlan out;
        out.points.push_back({ExtPos::finite(*slot), color_, std::nullopt});
        return out;
    }

private:
    Color color_;
};

// ---------------------------------------------------------------------------
// case (iii): Q of one color plus a single endpoint of the other

class EndpointSemantics final : public EntrySemantics {
public:
    EndpointSemantics(bool pos_side, Color end_color, bool complete)
        : pos_side_(pos_side), end_color_(end_color), complete_(complete) {}

    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<EndpointSemantics>(*this);
    }
    bool deterministic() const override { return true; }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        for (const auto& [id, sign] : spec.constraints) {
            (void)id;
            if (sign != complete_) return std::nullopt;
        }
        if (spec.color == end_color_) {
            ExtPos ep = pos_side_ ? ExtPos::pos_inf() : ExtPos::neg_inf();
            for (const auto& p : st.sample.points()) {
                if (p.pos == ep) return std::nullopt; // the unique endpoint is taken
            }
            if (!strictly_between(ep, spec.lo, spec.hi)) return std::nullopt;
            PlacementPlan out;
            out.points.push_back({ep, end_color_, std::nullopt});
            fill_edges(out, 0, st, end_color_, spec,
                       [&](const FinStruct::Point&) { return complete_; });
            return out;
        }
        auto slot = first_plain_slot(st.sample, spec.lo, spec.hi);
        if (!slot) return std::nullopt;
        PlacementPlan out;
        out.points.push_back({ExtPos::finite(*slot), spec.color, std::nullopt});
        fill_edges(out, 0, st, spec.color, spec, [&](const FinStruct::Point&) { return complete_; });
        return out;
    }

private:
    bool pos_side_;
    Color end_color_;
    bool complete_;
};

// ---------------------------------------------------------------------------
// case (iv): two blocks 2.Q with an edge relation across them

class TwoBlockSemantics final : public EntrySemantics {
public:
    TwoBlockSemantics(bool red_low, IvRelation rel, bool rrev, bool brev)
        : red_low_(red_low), rel_(rel), red_reversed_(rrev), blue_reversed_(brev) {}

    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<TwoBlockSemantics>(*this);
    }
    bool deterministic() const override { return rel_ != IvRelation::UnboundedGeneric; }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        bool low_block = (spec.color == Color::Red) == red_low_;
        std::optional<ExtPos> block_lo, block_hi;
        if (low_block) block_hi = ExtPos::finite(Rat(0));
        else block_lo = ExtPos::finite(Rat(0));
        auto [l, h] = clip(spec.lo, spec.hi, block_lo, block_hi);
        if (empty_interval(l, h)) return std::nullopt;

        switch (rel_) {
        case IvRelation::Empty:
        case IvRelation::Complete: {
            bool value = rel_ == IvRelation::Complete;
            for (const auto& [id, sign] : spec.constraints) {
                (void)id;
                if (sign != value) return std::nullopt;
            }
            auto slot = first_plain_slot(st.sample, l, h);
            if (!slot) return std::nullopt;
            PlacementPlan out;
            out.points.push_back({ExtPos::finite(*slot), spec.color, std::nullopt});
            fill_edges(out, 0, st, spec.color, spec, [&](const FinStruct::Point&) { return value; });
            return out;
        }
        case IvRelation::UnboundedGeneric: {
            auto slot = first_plain_slot(st.sample, l, h);
            if (!slot) return std::nullopt;
            PlacementPlan out;
            out.points.push_back({ExtPos::finite(*slot), spec.color, std::nullopt});
            fill_edges(out, 0, st, spec.color, spec,
                       [&](const FinStruct::Point&) { return st.draw_bit(); });
            return out;
        }
        case IvRelation::BoundedGeneric:
            return plan_bounded(st, spec, l, h);
        }
        return std::nullopt;
    }

private:
    // R(red, blue) iff base(red) < base(blue); the displayed block order is
    // the base order per color, flipped by that color's reversal flag.
    std::optional<PlacementPlan> plan_bounded(OracleState& st, const WitnessSpec& spec,
                                              const std::optional<ExtPos>& l,
                                              const std::optional<ExtPos>& h) const {
        std::optional<Rat> clo, chi; // base bounds from the sign constraints
        for (const auto& [id, sign] : spec.constraints) {
            const Rat& ob = st.base.at(id);
            bool wants_below = (spec.color == Color::Red) == sign;
            // new red adjacent to blue  <=> base(new) < base(blue)
            // new blue adjacent to red  <=> base(red) < base(new)
            if (wants_below) tighten_hi(chi, ob);
            else tighten_lo(clo, ob);
        }
        if (!window_open(clo, chi)) return std::nullopt;

        auto dlo = shadow_lower(l);
        auto dhi = shadow_upper(h);
        if (dlo.blocked || dhi.blocked) return std::nullopt;

        bool reversed = spec.color == Color::Red ? red_reversed_ : blue_reversed_;
        std::vector<const FinStruct::Point*> block;
        for (const auto& p : st.sample.points()) {
            if (p.color == spec.color) block.push_back(&p);
        }

        for (std::size_t k = 0; k <= block.size(); ++k) {
            const FinStruct::Point* flo = k > 0 ? block[k - 1] : nullptr;
            const FinStruct::Point* fhi = k < block.size() ? block[k] : nullptr;
            std::optional<Rat> slot_lo = dlo.q, slot_hi = dhi.q;
            if (flo) tighten_lo(slot_lo, flo->pos.q());
            if (fhi) tighten_hi(slot_hi, fhi->pos.q());
            if (!window_open(slot_lo, slot_hi)) continue;

            std::optional<Rat> wlo = clo, whi = chi;
            const FinStruct::Point* base_below = reversed ? fhi : flo;
            const FinStruct::Point* base_above = reversed ? flo : fhi;
            if (base_below) tighten_lo(wlo, st.base.at(base_below->id));
            if (base_above) tighten_hi(whi, st.base.at(base_above->id));
            if (!window_open(wlo, whi)) continue;

            // avoid every existing base coordinate: leftmost free sub-window
            std::vector<Rat> inside;
            for (const auto& [id, b] : st.base) {
                (void)id;
                if ((!wlo || *wlo < b) && (!whi || b < *whi)) inside.push_back(b);
            }
            std::sort(inside.begin(), inside.end());
            std::optional<Rat> sub_hi = inside.empty() ? whi : std::optional<Rat>(inside.front());
            Rat nb = mediant_between(wlo, sub_hi);
            Rat np = mediant_between(slot_lo, slot_hi);

            PlacementPlan out;
            out.points.push_back({ExtPos::finite(np), spec.color, nb});
            for (const auto& p : st.sample.points()) {
                if (p.color == spec.color) continue;
                const Rat& other_base = st.base.at(p.id);
                bool edge = spec.color == Color::Red ? nb < other_base : other_base < nb;
                out.edges_to_existing.push_back({0, p.id, edge});
            }
            return out;
        }
        return std::nullopt;
    }

    bool red_low_;
    IvRelation rel_;
    bool red_reversed_;
    bool blue_reversed_;
};

// ---------------------------------------------------------------------------
// case (v): Q.2, adjacent same-index pairs, relation a subset of {M, Above, Below}

bool pair_rule(unsigned rels, const Rat& red_idx, const Rat& blue_idx) {
    if (red_idx == blue_idx) return rels & kPairM;
    if (red_idx < blue_idx) return rels & kPairAbove;
    return rels & kPairBelow;
}

class PairedSemantics final : public EntrySemantics {
public:
    PairedSemantics(bool red_first, unsigned rels) : red_first_(red_first), rels_(rels) {}

    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<PairedSemantics>(*this);
    }
    bool deterministic() const override { return true; }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        auto dlo = shadow_lower(spec.lo);
        auto dhi = shadow_upper(spec.hi);
        if (dlo.blocked || dhi.blocked) return std::nullopt;
        std::optional<Rat> wlo = dlo.q, whi = dhi.q;

        bool above = rels_ & kPairAbove;
        bool below = rels_ & kPairBelow;
        for (const auto& [id, sign] : spec.constraints) {
            const Rat& oq = st.sample.point(id).pos.q();
            // fresh pair index q vs the constraint point's index oq; M can
            // never apply to a fresh pair, both slots of oq are sampled
            bool adjacency_needs_less =
                spec.color == Color::Red ? above : below; // q < oq makes them adjacent?
            bool adjacency_needs_greater = spec.color == Color::Red ? below : above;
            if (sign) {
                if (adjacency_needs_less && adjacency_needs_greater) continue; // any q works
                if (adjacency_needs_less) tighten_hi(whi, oq);
                else if (adjacency_needs_greater) tighten_lo(wlo, oq);
                else return std::nullopt;
            } else {
                if (adjacency_needs_less && adjacency_needs_greater) return std::nullopt;
                if (adjacency_needs_less) tighten_lo(wlo, oq);
                else if (adjacency_needs_greater) tighten_hi(whi, oq);
            }
        }
        if (!window_open(wlo, whi)) return std::nullopt;

        // fresh pair index in the leftmost open index gap
        std::vector<Rat> used;
        for (const auto& p : st.sample.points()) {
            if (p.pos.slot() == 0) used.push_back(p.pos.q());
        }
        std::sort(used.begin(), used.end());
        std::optional<Rat> q;
        for (std::size_t k = 0; k <= used.size(); ++k) {
            std::optional<Rat> glo = wlo, ghi = whi;
            if (k > 0) tighten_lo(glo, used[k - 1]);
            if (k < used.size()) tighten_hi(ghi, used[k]);
            if (!window_open(glo, ghi)) continue;
            q = mediant_between(glo, ghi);
            break;
        }
        if (!q) return std::nullopt;

        int s = slot_of(spec.color);
        PlacementPlan out;
        out.points.push_back({ExtPos::pair(*q, s), spec.color, std::nullopt});
        out.points.push_back({ExtPos::pair(*q, 1 - s), opposite(spec.color), std::nullopt});
        out.partner_links.push_back({0, 1});
        out.internal_edges.push_back({0, 1, (rels_ & kPairM) != 0});
        for (std::size_t i = 0; i < 2; ++i) {
            Color c = i == 0 ? spec.color : opposite(spec.color);
            for (const auto& p : st.sample.points()) {
                if (p.color == c) continue;
                const Rat& red_idx = c == Color::Red ? *q : p.pos.q();
                const Rat& blue_idx = c == Color::Red ? p.pos.q() : *q;
                out.edges_to_existing.push_back({i, p.id, pair_rule(rels_, red_idx, blue_idx)});
            }
        }
        return out;
    }

private:
    int slot_of(Color c) const { return (c == Color::Red) == red_first_ ? 0 : 1; }

    bool red_first_;
    unsigned rels_;
};

// ---------------------------------------------------------------------------
// case (vi): Q_2 with independent relations on right- and left-pointing pairs

class MixedSemantics final : public EntrySemantics {
public:
    MixedSemantics(R1Kind r1, R2Kind r2) : r1_(r1), r2_(r2) {}

    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<MixedSemantics>(*this);
    }
    bool deterministic() const override {
        return r1_ != R1Kind::RightGeneric && r2_ != R2Kind::LeftGeneric;
    }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        // the candidate's side relative to each constraint point decides which
        // half-relation governs, so split the interval at constraint points
        std::vector<ExtPos> cuts;
        for (const auto& [id, sign] : spec.constraints) {
            (void)sign;
            const ExtPos& p = st.sample.point(id).pos;
            if (strictly_between(p, spec.lo, spec.hi)) cuts.push_back(p);
        }
        std::sort(cuts.begin(), cuts.end());

        std::vector<std::pair<std::optional<ExtPos>, std::optional<ExtPos>>> subs;
        std::optional<ExtPos> prev = spec.lo;
        for (const auto& c : cuts) {
            subs.push_back({prev, c});
            prev = c;
        }
        subs.push_back({prev, spec.hi});

        for (const auto& [slo, shi] : subs) {
            bool feasible = true;
            for (const auto& [id, sign] : spec.constraints) {
                const auto& cp = st.sample.point(id);
                bool cp_below;
                if (shi && !(cp.pos < *shi)) {
                    cp_below = false; // at or above the sub-interval
                } else if (slo && !(*slo < cp.pos)) {
                    cp_below = true; // at or below it
                } else {
                    feasible = false; // can't happen: inside points become cuts
                    break;
                }
                int kind = governs(spec.color, cp_below);
                if (kind == 1 && sign) { feasible = false; break; }  // empty half
                if (kind == 2 && !sign) { feasible = false; break; } // complete half
            }
            if (!feasible) continue;
            auto slot = first_plain_slot(st.sample, slo, shi);
            if (!slot) continue;
            ExtPos np = ExtPos::finite(*slot);
            PlacementPlan out;
            out.points.push_back({np, spec.color, std::nullopt});
            fill_edges(out, 0, st, spec.color, spec, [&](const FinStruct::Point& p) {
                int kind = governs(spec.color, p.pos < np);
                if (kind == 1) return false;
                if (kind == 2) return true;
                return st.draw_bit();
            });
            return out;
        }
        return std::nullopt;
    }

private:
    // 0 = generic, 1 = empty, 2 = complete, for the half-relation governing a
    // (witness, other) pair where other_below says the other point is lower.
    int governs(Color witness, bool other_below) const {
        bool red_below_blue = (witness == Color::Blue) == other_below;
        if (red_below_blue) {
            if (r1_ == R1Kind::Empty) return 1;
            if (r1_ == R1Kind::RightComplete) return 2;
            return 0;
        }
        if (r2_ == R2Kind::Empty) return 1;
        if (r2_ == R2Kind::LeftComplete) return 2;
        return 0;
    }

    R1Kind r1_;
    R2Kind r2_;
};

// ---------------------------------------------------------------------------

const char* r1_name(R1Kind k) {
    switch (k) {
    case R1Kind::Empty: return "empty";
    case R1Kind::RightGeneric: return "rightGeneric";
    case R1Kind::RightComplete: return "rightComplete";
    }
    return "";
}

const char* r2_name(R2Kind k) {
    switch (k) {
    case R2Kind::Empty: return "empty";
    case R2Kind::LeftGeneric: return "leftGeneric";
    case R2Kind::LeftComplete: return "leftComplete";
    }
    return "";
}

std::string pair_set_name(unsigned rels) {
    if (rels == 0) return "empty";
    std::string out;
    auto append = [&out](const char* part) {
        if (!out.empty()) out += '+';
        out += part;
    };
    if (rels & kPairM) append("M");
    if (rels & kPairAbove) append("Above");
    if (rels & kPairBelow) append("Below");
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

} // namespace

const std::vector<CatalogEntry>& all_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        // (i)
        for (PointSet ps : {PointSet::OneRed, PointSet::OneBlue}) {
            CatalogEntry e;
            e.tag = CaseTag::I;
            e.point_set = ps;
            out.push_back(e);
        }
        for (bool complete : {false, true}) {
            CatalogEntry e;
            e.tag = CaseTag::I;
            e.point_set = PointSet::RedBlue;
            e.complete = complete;
            out.push_back(e);
        }
        // (ii)
        for (Color c : {Color::Red, Color::Blue}) {
            CatalogEntry e;
            e.tag = CaseTag::II;
            e.color = c;
            out.push_back(e);
        }
        // (iii)
        for (bool pos_side : {false, true}) {
            for (Color c : {Color::Red, Color::Blue}) {
                for (bool complete : {false, true}) {
                    CatalogEntry e;
                    e.tag = CaseTag::III;
                    e.pos_side = pos_side;
                    e.color = c;
                    e.complete = complete;
                    out.push_back(e);
                }
            }
        }
        // (iv)
        for (bool red_low : {true, false}) {
            for (IvRelation rel :
                 {IvRelation::Empty, IvRelation::Complete, IvRelation::BoundedGeneric,
                  IvRelation::UnboundedGeneric}) {
                if (rel == IvRelation::BoundedGeneric) {
                    for (unsigned flags = 0; flags < 4; ++flags) {
                        CatalogEntry e;
                        e.tag = CaseTag::IV;
                        e.red_low = red_low;
                        e.iv_rel = rel;
                        e.red_reversed = flags & 1;
                        e.blue_reversed = flags & 2;
                        out.push_back(e);
                    }
                } else {
                    CatalogEntry e;
                    e.tag = CaseTag::IV;
                    e.red_low = red_low;
                    e.iv_rel = rel;
                    out.push_back(e);
                }
            }
        }
        // (v)
        for (bool red_first : {true, false}) {
            for (unsigned rels = 0; rels < 8; ++rels) {
                CatalogEntry e;
                e.tag = CaseTag::V;
                e.red_first = red_first;
                e.pair_rels = rels;
                out.push_back(e);
            }
        }
        // (vi)
        for (R1Kind r1 : {R1Kind::Empty, R1Kind::RightGeneric, R1Kind::RightComplete}) {
            for (R2Kind r2 : {R2Kind::Empty, R2Kind::LeftGeneric, R2Kind::LeftComplete}) {
                CatalogEntry e;
                e.tag = CaseTag::VI;
                e.r1 = r1;
                e.r2 = r2;
                out.push_back(e);
            }
        }
        return out;
    }();
    return entries;
}

std::string entry_name(const CatalogEntry& e) {
    switch (e.tag) {
    case CaseTag::I:
        if (e.point_set == PointSet::OneRed) return "i.red";
        if (e.point_set == PointSet::OneBlue) return "i.blue";
        return e.complete ? "i.red+blue.complete" : "i.red+blue.empty";
    case CaseTag::II:
        return std::string("ii.") + color_name(e.color);
    case CaseTag::III:
        return std::string("iii.") + (e.pos_side ? "posInf." : "negInf.") + color_name(e.color) +
               (e.complete ? ".complete" : ".empty");
    case CaseTag::IV: {
        std::string out = e.red_low ? "iv." : "iv.br.";
        switch (e.iv_rel) {
        case IvRelation::Empty: return out + "empty";
        case IvRelation::Complete: return out + "complete";
        case IvRelation::UnboundedGeneric: return out + "unbounded_generic";
        case IvRelation::BoundedGeneric:
            out += "bounded_generic";
            if (e.red_reversed || e.blue_reversed) {
                out += '.';
                if (e.red_reversed) out += 'R';
                if (e.blue_reversed) out += 'B';
            }
            return out;
        }
        return out;
    }
    case CaseTag::V:
        return std::string("v.") + (e.red_first ? "rb." : "br.") + pair_set_name(e.pair_rels);
    case CaseTag::VI:
        return std::string("vi.") + r1_name(e.r1) + "+" + r2_name(e.r2);
    }
    return {};
}

std::optional<CatalogEntry> parse_entry(const std::string& name) {
    auto parts = split(name, '.');
    if (parts.empty()) return std::nullopt;
    const std::string& head = parts[0];
    CatalogEntry e;
    if (head == "i") {
        e.tag = CaseTag::I;
        if (parts.size() == 2 && parts[1] == "red") {
            e.point_set = PointSet::OneRed;
            return e;
        }
        if (parts.size() == 2 && parts[1] == "blue") {
            e.point_set = PointSet::OneBlue;
            return e;
        }
        if (parts.size() == 3 && parts[1] == "red+blue") {
            e.point_set = PointSet::RedBlue;
            if (parts[2] == "empty") return e;
            if (parts[2] == "complete") {
                e.complete = true;
                return e;
            }
        }
        return std::nullopt;
    }
    if (head == "ii") {
        if (parts.size() != 2) return std::nullopt;
        e.tag = CaseTag::II;
        if (parts[1] == "red") e.color = Color::Red;
        else if (parts[1] == "blue") e.color = Color::Blue;
        else return std::nullopt;
        return e;
    }
    if (head == "iii") {
        if (parts.size() != 4) return std::nullopt;
        e.tag = CaseTag::III;
        if (parts[1] == "posInf") e.pos_side = true;
        else if (parts[1] == "negInf") e.pos_side = false;
        else return std::nullopt;
        if (parts[2] == "red") e.color = Color::Red;
        else if (parts[2] == "blue") e.color = Color::Blue;
        else return std::nullopt;
        if (parts[3] == "empty") e.complete = false;
        else if (parts[3] == "complete") e.complete = true;
        else return std::nullopt;
        return e;
    }
    if (head == "iv") {
        e.tag = CaseTag::IV;
        std::size_t at = 1;
        e.red_low = true;
        if (at < parts.size() && parts[at] == "br") {
            e.red_low = false;
            ++at;
        }
        if (at >= parts.size()) return std::nullopt;
        const std::string& rel = parts[at];
        if (rel == "empty") e.iv_rel = IvRelation::Empty;
        else if (rel == "complete") e.iv_rel = IvRelation::Complete;
        else if (rel == "unbounded_generic") e.iv_rel = IvRelation::UnboundedGeneric;
        else if (rel == "bounded_generic") e.iv_rel = IvRelation::BoundedGeneric;
        else return std::nullopt;
        ++at;
        if (e.iv_rel == IvRelation::BoundedGeneric && at < parts.size()) {
            const std::string& flags = parts[at];
            if (flags.empty() || flags.size() > 2) return std::nullopt;
            for (char c : flags) {
                if (c == 'R' && !e.red_reversed) e.red_reversed = true;
                else if (c == 'B' && !e.blue_reversed) e.blue_reversed = true;
                else return std::nullopt;
            }
            ++at;
        }
        if (at != parts.size()) return std::nullopt;
        return e;
    }
    if (head == "v") {
        if (parts.size() != 3) return std::nullopt;
        e.tag = CaseTag::V;
        if (parts[1] == "rb") e.red_first = true;
        else if (parts[1] == "br") e.red_first = false;
        else return std::nullopt;
        if (parts[2] == "empty") {
            e.pair_rels = 0;
            return e;
        }
        for (const auto& tok : split(parts[2], '+')) {
            unsigned bit;
            if (tok == "M") bit = kPairM;
            else if (tok == "Above") bit = kPairAbove;
            else if (tok == "Below") bit = kPairBelow;
            else return std::nullopt;
            if (e.pair_rels & bit) return std::nullopt;
            e.pair_rels |= bit;
        }
        return e;
    }
    if (head == "vi") {
        if (parts.size() != 2) return std::nullopt;
        auto toks = split(parts[1], '+');
        if (toks.size() != 2) return std::nullopt;
        e.tag = CaseTag::VI;
        std::optional<R1Kind> r1;
        std::optional<R2Kind> r2;
        int empties = 0;
        for (const auto& tok : toks) {
            if (tok == "rightGeneric" && !r1) r1 = R1Kind::RightGeneric;
            else if (tok == "rightComplete" && !r1) r1 = R1Kind::RightComplete;
            else if (tok == "leftGeneric" && !r2) r2 = R2Kind::LeftGeneric;
            else if (tok == "leftComplete" && !r2) r2 = R2Kind::LeftComplete;
            else if (tok == "empty") ++empties;
            else return std::nullopt;
        }
        if (static_cast<int>(!r1) + static_cast<int>(!r2) != empties) return std::nullopt;
        e.r1 = r1.value_or(R1Kind::Empty);
        e.r2 = r2.value_or(R2Kind::Empty);
        return e;
    }
    return std::nullopt;
}

std::optional<ClosedFormRule> closed_form(const CatalogEntry& e) {
    switch (e.tag) {
    case CaseTag::I:
    case CaseTag::III: {
        bool value = e.complete;
        return ClosedFormRule{[value](const ExtPos&, Color ca, const ExtPos&, Color cb) {
            return ca != cb && value;
        }};
    }
    case CaseTag::II:
        return ClosedFormRule{
            [](const ExtPos&, Color, const ExtPos&, Color) { return false; }};
    case CaseTag::IV:
        if (e.iv_rel == IvRelation::Empty || e.iv_rel == IvRelation::Complete) {
            bool value = e.iv_rel == IvRelation::Complete;
            return ClosedFormRule{[value](const ExtPos&, Color ca, const ExtPos&, Color cb) {
                return ca != cb && value;
            }};
        }
        return std::nullopt; // bounded generic lives on hidden base coordinates
    case CaseTag::V: {
        unsigned rels = e.pair_rels;
        return ClosedFormRule{[rels](const ExtPos& pa, Color ca, const ExtPos& pb, Color cb) {
            if (ca == cb) return false;
            const ExtPos& red = ca == Color::Red ? pa : pb;
            const ExtPos& blue = ca == Color::Red ? pb : pa;
            return pair_rule(rels, red.q(), blue.q());
        }};
    }
    case CaseTag::VI: {
        if (e.r1 == R1Kind::RightGeneric || e.r2 == R2Kind::LeftGeneric) return std::nullopt;
        bool right = e.r1 == R1Kind::RightComplete;
        bool left = e.r2 == R2Kind::LeftComplete;
        return ClosedFormRule{[right, left](const ExtPos& pa, Color ca, const ExtPos& pb, Color cb) {
            if (ca == cb) return false;
            const ExtPos& red = ca == Color::Red ? pa : pb;
            const ExtPos& blue = ca == Color::Red ? pb : pa;
            return red < blue ? right : left;
        }};
    }
    }
    return std::nullopt;
}

CatalogEntry apply_reversal(const CatalogEntry& e, Color which) {
    if (e.tag != CaseTag::IV || e.iv_rel != IvRelation::BoundedGeneric) {
        raise(ErrorKind::NotApplicable, "reversals apply to case (iv) bounded generic only");
    }
    CatalogEntry out = e;
    if (which == Color::Red) out.red_reversed = !out.red_reversed;
    else out.blue_reversed = !out.blue_reversed;
    return out;
}

StructureOracle instantiate(const CatalogEntry& e, std::uint64_t seed) {
    std::unique_ptr<EntrySemantics> sem;
    switch (e.tag) {
    case CaseTag::I:
        sem = std::make_unique<FiniteSemantics>(e.point_set, e.complete);
        break;
    case CaseTag::II:
        sem = std::make_unique<MonoSemantics>(e.color);
        break;
    case CaseTag::III:
        sem = std::make_unique<EndpointSemantics>(e.pos_side, e.color, e.complete);
        break;
    case CaseTag::IV:
        sem = std::make_unique<TwoBlockSemantics>(e.red_low, e.iv_rel, e.red_reversed,
                                                  e.blue_reversed);
        break;
    case CaseTag::V:
        sem = std::make_unique<PairedSemantics>(e.red_first, e.pair_rels);
        break;
    case CaseTag::VI:
        sem = std::make_unique<MixedSemantics>(e.r1, e.r2);
        break;
    }
    return StructureOracle(entry_name(e), seed, std::move(sem));
}

} // namespace obg
