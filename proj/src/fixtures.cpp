#include "obg/fixtures.hpp"

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

// Perfect matching between the red block (-inf, 0) and the blue block
// (0, inf), kept order-isomorphic: inserting one endpoint always creates its
// partner in the order-corresponding gap of the other block.
class MatchingSemantics final : public EntrySemantics {
public:
    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<MatchingSemantics>(*this);
    }
    bool deterministic() const override { return true; }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        for (const auto& [id, sign] : spec.constraints) {
            (void)id;
            // a new point's only neighbor is its freshly created partner
            if (sign) return std::nullopt;
        }
        bool red = spec.color == Color::Red;
        auto dlo = shadow_lower(spec.lo);
        auto dhi = shadow_upper(spec.hi);
        if (dlo.blocked || dhi.blocked) return std::nullopt;
        std::optional<Rat> wlo = dlo.q, whi = dhi.q;
        if (red) tighten_hi(whi, Rat(0));
        else tighten_lo(wlo, Rat(0));
        if (!window_open(wlo, whi)) return std::nullopt;

        std::vector<const FinStruct::Point*> block;
        for (const auto& p : st.sample.points()) {
            if (p.color == spec.color) block.push_back(&p);
        }
        for (std::size_t k = 0; k <= block.size(); ++k) {
            const FinStruct::Point* flo = k > 0 ? block[k - 1] : nullptr;
            const FinStruct::Point* fhi = k < block.size() ? block[k] : nullptr;
            std::optional<Rat> slo = wlo, shi = whi;
            if (flo) tighten_lo(slo, flo->pos.q());
            if (fhi) tighten_hi(shi, fhi->pos.q());
            if (!window_open(slo, shi)) continue;

            // partner goes into the order-corresponding gap of the other block
            std::optional<Rat> plo, phi;
            if (red) plo = Rat(0);
            else phi = Rat(0);
            if (flo) tighten_lo(plo, st.sample.point(st.partner.at(flo->id)).pos.q());
            if (fhi) tighten_hi(phi, st.sample.point(st.partner.at(fhi->id)).pos.q());

            Rat mine = mediant_between(slo, shi);
            Rat theirs = mediant_between(plo, phi);
            PlacementPlan out;
            out.points.push_back({ExtPos::finite(mine), spec.color, std::nullopt});
            out.points.push_back({ExtPos::finite(theirs), opposite(spec.color), std::nullopt});
            out.partner_links.push_back({0, 1});
            out.internal_edges.push_back({0, 1, true});
            for (std::size_t i = 0; i < 2; ++i) {
                Color c = i == 0 ? spec.color : opposite(spec.color);
                for (const auto& p : st.sample.points()) {
                    if (p.color != c) out.edges_to_existing.push_back({i, p.id, false});
                }
            }
            return out;
        }
        return std::nullopt;
    }
};

// Two blocks where blue points come in adjacent pairs (q,0),(q,1) with q > 0
// and every red point (below 0) is joined to exactly the two blues of its
// matched pair. |R(a)| = 2 for every red a, so the structure mirrors the
// "R(a) is infinite" contradiction from the two-block analysis.
class FiniteNeighborsSemantics final : public EntrySemantics {
public:
    std::unique_ptr<EntrySemantics> clone() const override {
        return std::make_unique<FiniteNeighborsSemantics>(*this);
    }
    bool deterministic() const override { return true; }

    std::optional<PlacementPlan> plan(OracleState& st, const WitnessSpec& spec) const override {
        for (const auto& [id, sign] : spec.constraints) {
            (void)id;
            if (sign) return std::nullopt; // pairs are created saturated
        }
        auto dlo = shadow_lower(spec.lo);
        auto dhi = shadow_upper(spec.hi);
        if (dlo.blocked || dhi.blocked) return std::nullopt;
        std::optional<Rat> wlo = dlo.q, whi = dhi.q;

        // reds sorted, with their pair indices (all sampled atomically)
        std::vector<const FinStruct::Point*> reds;
        for (const auto& p : st.sample.points()) {
            if (p.color == Color::Red) reds.push_back(&p);
        }
        auto index_of_red = [&st](const FinStruct::Point* r) -> Rat {
            return st.sample.point(st.partner.at(r->id)).pos.q();
        };

        if (spec.color == Color::Red) {
            tighten_hi(whi, Rat(0));
            if (!window_open(wlo, whi)) return std::nullopt;
            for (std::size_t k = 0; k <= reds.size(); ++k) {
                const FinStruct::Point* flo = k > 0 ? reds[k - 1] : nullptr;
                const FinStruct::Point* fhi = k < reds.size() ? reds[k] : nullptr;
                std::optional<Rat> slo = wlo, shi = whi;
                if (flo) tighten_lo(slo, flo->pos.q());
                if (fhi) tighten_hi(shi, fhi->pos.q());
                if (!window_open(slo, shi)) continue;
                std::optional<Rat> ilo = Rat(0), ihi;
                if (flo) tighten_lo(ilo, index_of_red(flo));
                if (fhi) tighten_hi(ihi, index_of_red(fhi));
                Rat pos = mediant_between(slo, shi);
                Rat q = mediant_between(ilo, ihi);
                return make_triple(st, ExtPos::finite(pos), q);
            }
            return std::nullopt;
        }

        // blue request: fresh pair index q > 0 strictly inside the window
        tighten_lo(wlo, Rat(0));
        if (!window_open(wlo, whi)) return std::nullopt;
        std::vector<Rat> used;
        for (const auto& p : st.sample.points()) {
            if (p.color == Color::Blue && p.pos.slot() == 0) used.push_back(p.pos.q());
        }
        std::sort(used.begin(), used.end());
        for (std::size_t k = 0; k <= used.size(); ++k) {
            std::optional<Rat> glo = wlo, ghi = whi;
            if (k > 0) tighten_lo(glo, used[k - 1]);
            if (k < used.size()) tighten_hi(ghi, used[k]);
            if (!window_open(glo, ghi)) continue;
            Rat q = mediant_between(glo, ghi);
            // the matched red goes to the order-corresponding red gap
            std::optional<Rat> rlo, rhi = Rat(0);
            const Rat* below = k > 0 ? &used[k - 1] : nullptr;
            const Rat* above = k < used.size() ? &used[k] : nullptr;
            for (const auto& p : st.sample.points()) {
                if (p.color != Color::Red) continue;
                Rat idx = index_of_red_id(st, p.id);
                if (below && idx == *below) tighten_lo(rlo, p.pos.q());
                if (above && idx == *above) tighten_hi(rhi, p.pos.q());
            }
            Rat rpos = mediant_between(rlo, rhi);
            return make_triple(st, ExtPos::finite(rpos), q, /*blue_first=*/true);
        }
        return std::nullopt;
    }

private:
    static Rat index_of_red_id(const OracleState& st, PointId red) {
        return st.sample.point(st.partner.at(red)).pos.q();
    }

    // Creates red + blue pair (q,0),(q,1); requested point goes first.
    static std::optional<PlacementPlan> make_triple(OracleState& st, ExtPos red_pos, const Rat& q,
                                                    bool blue_first = false) {
        PlacementPlan out;
        std::size_t red_i, b0_i, b1_i;
        if (blue_first) {
            out.points.push_back({ExtPos::pair(q, 0), Color::Blue, std::nullopt});
            out.points.push_back({ExtPos::pair(q, 1), Color::Blue, std::nullopt});
            out.points.push_back({red_pos, Color::Red, std::nullopt});
            b0_i = 0; b1_i = 1; red_i = 2;
        } else {
            out.points.push_back({red_pos, Color::Red, std::nullopt});
            out.points.push_back({ExtPos::pair(q, 0), Color::Blue, std::nullopt});
            out.points.push_back({ExtPos::pair(q, 1), Color::Blue, std::nullopt});
            red_i = 0; b0_i = 1; b1_i = 2;
        }
        out.partner_links.push_back({red_i, b0_i});
        out.internal_edges.push_back({red_i, b0_i, true});
        out.internal_edges.push_back({red_i, b1_i, true});
        for (const auto& p : st.sample.points()) {
            if (p.color == Color::Blue) out.edges_to_existing.push_back({red_i, p.id, false});
            else {
                out.edges_to_existing.push_back({b0_i, p.id, false});
                out.edges_to_existing.push_back({b1_i, p.id, false});
            }
        }
        return out;
    }
};

} // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"fixture:matching2Q",
                                                   "fixture:finiteNeighbors2Q"};
    return names;
}

std::optional<StructureOracle> instantiate_fixture(const std::string& name, std::uint64_t seed) {
    if (name == "fixture:matching2Q") {
        return StructureOracle(name, seed, std::make_unique<MatchingSemantics>());
    }
    if (name == "fixture:finiteNeighbors2Q") {
        return StructureOracle(name, seed, std::make_unique<FiniteNeighborsSemantics>());
    }
    return std::nullopt;
}

} // namespace obg
