#include "obg/analysis.hpp"

#include <algorithm>
#include <random>

#include "obg/error.hpp"

namespace obg {

namespace {

std::string describe(const WitnessSpec& spec) {
    std::string out = "witness ";
    out += color_name(spec.color);
    out += " in (";
    out += spec.lo ? spec.lo->str() : "-";
    out += ", ";
    out += spec.hi ? spec.hi->str() : "-";
    out += ")";
    for (const auto& [id, sign] : spec.constraints) {
        out += sign ? " +" : " -";
        out += std::to_string(id);
    }
    return out;
}

} // namespace

WitnessSpec forced_spec(const FinStruct& src, PointId a, const PartialIso& p,
                        const FinStruct& tgt) {
    const auto& pa = src.point(a);
    WitnessSpec spec;
    spec.color = pa.color;
    const FinStruct::Point* pred = nullptr;
    const FinStruct::Point* succ = nullptr;
    PointId pred_img = 0, succ_img = 0;
    for (const auto& [s, t] : p.pairs) {
        const auto& ps = src.point(s);
        if (ps.pos < pa.pos && (!pred || pred->pos < ps.pos)) {
            pred = &ps;
            pred_img = t;
        }
        if (pa.pos < ps.pos && (!succ || ps.pos < succ->pos)) {
            succ = &ps;
            succ_img = t;
        }
        if (ps.color != pa.color) {
            spec.constraints.push_back({t, src.has_edge(a, s)});
        }
    }
    if (pred) spec.lo = tgt.point(pred_img).pos;
    if (succ) spec.hi = tgt.point(succ_img).pos;
    return spec;
}

std::optional<PointId> find_extension_image(StructureOracle& o, const WitnessSpec& spec,
                                            const std::set<PointId>& used) {
    for (const auto& p : o.sample().points()) {
        if (p.color != spec.color || used.count(p.id)) continue;
        if (!strictly_between(p.pos, spec.lo, spec.hi)) continue;
        bool ok = true;
        for (const auto& [id, sign] : spec.constraints) {
            if (p.id == id || o.adjacent(p.id, id) != sign) {
                ok = false;
                break;
            }
        }
        if (ok) return p.id;
    }
    return o.realize_witness(spec);
}

// ---------------------------------------------------------------------------
// reduct classification

namespace {

struct ProbeCounter {
    std::size_t used = 0;
    std::size_t budget;
    explicit ProbeCounter(std::size_t b) : budget(b) {}
    void spend(std::size_t n = 1) {
        used += n;
        if (used > budget) {
            raise(ErrorKind::BudgetExceeded, "classification probe budget exhausted");
        }
    }
};

} // namespace

ReductVerdict reduct_classify(StructureOracle& o, std::size_t budget) {
    if (budget < 8) {
        raise(ErrorKind::BudgetExceeded, "reduct_classify needs a budget of at least 8");
    }
    ProbeCounter probes(budget);
    ReductVerdict v;

    o.grow_to(6);
    v.evidence.push_back("grow_to(6) -> size " + std::to_string(o.sample().size()));

    if (o.sample().size() < 3) {
        v.tag = CaseTag::I;
        std::size_t reds = 0, blues = 0;
        for (const auto& p : o.sample().points()) {
            (p.color == Color::Red ? reds : blues) += 1;
        }
        if (reds == 1 && blues == 1) v.point_set = PointSet::RedBlue;
        else if (reds >= 1) v.point_set = PointSet::OneRed;
        else v.point_set = PointSet::OneBlue;
        v.evidence.push_back("saturated below 3 points");
        return v;
    }

    auto count_color = [&o](Color c) {
        std::size_t n = 0;
        for (const auto& p : o.sample().points()) {
            if (p.color == c) ++n;
        }
        return n;
    };
    for (Color c : {Color::Red, Color::Blue}) {
        // top the color up to two points, or learn that the structure can't
        while (count_color(c) < 2) {
            WitnessSpec anywhere;
            anywhere.color = c;
            probes.spend();
            auto got = o.realize_witness(anywhere);
            v.evidence.push_back(describe(anywhere) + (got ? " -> point" : " -> NoSuchPoint"));
            if (got) continue;
            if (count_color(c) == 0) {
                v.tag = CaseTag::II;
                v.color = opposite(c);
                return v;
            }
            // a single unextendable point of color c: the case (iii) endpoint
            const FinStruct::Point* lone = nullptr;
            for (const auto& p : o.sample().points()) {
                if (p.color == c) lone = &p;
            }
            v.tag = CaseTag::III;
            v.color = c;
            v.pos_side = lone && lone->pos.kind() == ExtPos::Kind::PosInf;
            v.evidence.push_back(std::string("singleton ") + color_name(c) + " at " +
                                 (lone ? lone->pos.str() : "?"));
            return v;
        }
    }

    // block separation: is there a red above the lowest blue / a blue above
    // the lowest red?
    const FinStruct::Point* first_red = nullptr;
    const FinStruct::Point* first_blue = nullptr;
    for (const auto& p : o.sample().points()) {
        if (!first_red && p.color == Color::Red) first_red = &p;
        if (!first_blue && p.color == Color::Blue) first_blue = &p;
    }
    probes.spend();
    auto red_above_blue = o.exists_between(first_blue->pos, std::nullopt, Color::Red);
    v.evidence.push_back("red above lowest blue -> " +
                         std::string(red_above_blue ? "point" : "NoSuchPoint"));
    if (!red_above_blue) {
        v.tag = CaseTag::IV;
        v.red_low = true;
        return v;
    }
    probes.spend();
    auto blue_above_red = o.exists_between(first_red->pos, std::nullopt, Color::Blue);
    v.evidence.push_back("blue above lowest red -> " +
                         std::string(blue_above_red ? "point" : "NoSuchPoint"));
    if (!blue_above_red) {
        v.tag = CaseTag::IV;
        v.red_low = false;
        return v;
    }

    // immediate-successor scan over the current snapshot's gaps
    FinStruct snap = o.sample_snapshot();
    for (std::size_t i = 0; i + 1 < snap.points().size(); ++i) {
        const auto& x = snap.points()[i];
        const auto& y = snap.points()[i + 1];
        probes.spend(2);
        auto r = o.exists_between(x.pos, y.pos, Color::Red);
        auto b = o.exists_between(x.pos, y.pos, Color::Blue);
        if (!r && !b) {
            v.evidence.push_back("empty gap (" + x.pos.str() + ", " + y.pos.str() + ")");
            if (x.color == y.color) {
                // adjacent same-colored points never happen in the catalog;
                // keep probing rather than guess
                continue;
            }
            v.tag = CaseTag::V;
            v.red_first = x.color == Color::Red;
            return v;
        }
    }
    v.evidence.push_back("no empty gap in snapshot of size " +
                         std::to_string(snap.points().size()));
    v.tag = CaseTag::VI;
    return v;
}

// ---------------------------------------------------------------------------
// edge classification

namespace {

// first sampled point of a color, growing if needed
PointId some_point(StructureOracle& o, Color c) {
    for (const auto& p : o.sample().points()) {
        if (p.color == c) return p.id;
    }
    o.grow_to(o.sample().size() + 2);
    for (const auto& p : o.sample().points()) {
        if (p.color == c) return p.id;
    }
    raise(ErrorKind::Inconclusive, "no sample point of the required color");
}

// two points of a color in display order
std::pair<PointId, PointId> two_points(StructureOracle& o, Color c) {
    std::vector<PointId> ids;
    for (const auto& p : o.sample().points()) {
        if (p.color == c) ids.push_back(p.id);
    }
    if (ids.size() < 2) {
        o.grow_to(o.sample().size() + 4);
        ids.clear();
        for (const auto& p : o.sample().points()) {
            if (p.color == c) ids.push_back(p.id);
        }
    }
    if (ids.size() < 2) {
        raise(ErrorKind::Inconclusive, "could not sample two points of one color");
    }
    return {ids[0], ids[1]};
}

bool witness_succeeds(StructureOracle& o, ProbeCounter& probes, std::vector<std::string>& log,
                      const WitnessSpec& spec) {
    probes.spend();
    StructureOracle scratch = o;
    bool ok = scratch.realize_witness(spec).has_value();
    log.push_back(describe(spec) + (ok ? " -> point" : " -> NoSuchPoint"));
    return ok;
}

} // namespace

EdgeVerdict edge_classify(StructureOracle& o, const ReductVerdict& reduct, std::size_t budget) {
    ProbeCounter probes(budget);
    EdgeVerdict v;
    CatalogEntry& e = v.entry;

    switch (reduct.tag) {
    case CaseTag::I: {
        e.tag = CaseTag::I;
        e.point_set = reduct.point_set;
        e.complete = false;
        if (reduct.point_set == PointSet::RedBlue) {
            PointId r = some_point(o, Color::Red);
            PointId b = some_point(o, Color::Blue);
            probes.spend();
            e.complete = o.adjacent(r, b);
            v.probes.push_back(std::string("adjacent -> ") + (e.complete ? "true" : "false"));
        }
        return v;
    }
    case CaseTag::II:
        e.tag = CaseTag::II;
        e.color = reduct.color;
        return v;
    case CaseTag::III: {
        e.tag = CaseTag::III;
        e.color = reduct.color;
        e.pos_side = reduct.pos_side;
        PointId end = some_point(o, reduct.color);
        PointId q = some_point(o, opposite(reduct.color));
        probes.spend();
        e.complete = o.adjacent(end, q);
        v.probes.push_back(std::string("adjacent(endpoint, q) -> ") +
                           (e.complete ? "true" : "false"));
        return v;
    }
    case CaseTag::IV: {
        e.tag = CaseTag::IV;
        e.red_low = reduct.red_low;
        auto [r1, r2] = two_points(o, Color::Red);
        WitnessSpec plus;
        plus.color = Color::Blue;
        plus.constraints = {{r1, true}};
        if (!witness_succeeds(o, probes, v.probes, plus)) {
            e.iv_rel = IvRelation::Empty;
            return v;
        }
        WitnessSpec minus;
        minus.color = Color::Blue;
        minus.constraints = {{r1, false}};
        if (!witness_succeeds(o, probes, v.probes, minus)) {
            e.iv_rel = IvRelation::Complete;
            return v;
        }
        // nested neighbor sets admit only one orientation of the split pair
        WitnessSpec split_a, split_b;
        split_a.color = Color::Blue;
        split_a.constraints = {{r1, true}, {r2, false}};
        split_b.color = Color::Blue;
        split_b.constraints = {{r1, false}, {r2, true}};
        bool wa = witness_succeeds(o, probes, v.probes, split_a);
        bool wb = witness_succeeds(o, probes, v.probes, split_b);
        if (wa && wb) {
            e.iv_rel = IvRelation::UnboundedGeneric;
            return v;
        }
        if (!wa && !wb) {
            raise(ErrorKind::Inconclusive, "case (iv) probes matched no relation");
        }
        e.iv_rel = IvRelation::BoundedGeneric;
        e.red_reversed = wb; // the split realizable only against display order
        auto [b1, b2] = two_points(o, Color::Blue);
        WitnessSpec rsplit;
        rsplit.color = Color::Red;
        rsplit.constraints = {{b1, true}, {b2, false}};
        e.blue_reversed = witness_succeeds(o, probes, v.probes, rsplit);
        return v;
    }
    case CaseTag::V: {
        e.tag = CaseTag::V;
        e.red_first = reduct.red_first;
        e.pair_rels = 0;
        // find one full pair: consecutive opposite-colored points with an
        // empty gap between them
        o.grow_to(std::max<std::size_t>(o.sample().size(), 6));
        FinStruct snap = o.sample_snapshot();
        std::optional<std::pair<PointId, PointId>> pair; // (red, blue)
        for (std::size_t i = 0; i + 1 < snap.points().size(); ++i) {
            const auto& x = snap.points()[i];
            const auto& y = snap.points()[i + 1];
            if (x.color == y.color) continue;
            probes.spend(2);
            if (o.exists_between(x.pos, y.pos, Color::Red) ||
                o.exists_between(x.pos, y.pos, Color::Blue)) {
                continue;
            }
            v.probes.push_back("pair gap (" + x.pos.str() + ", " + y.pos.str() + ")");
            pair = x.color == Color::Red ? std::make_pair(x.id, y.id)
                                         : std::make_pair(y.id, x.id);
            break;
        }
        if (!pair) {
            raise(ErrorKind::Inconclusive, "no adjacent pair found in case (v) sample");
        }
        auto [red, blue] = *pair;
        probes.spend();
        if (o.adjacent(red, blue)) e.pair_rels |= kPairM;
        const ExtPos above_from =
            o.sample().point(red).pos < o.sample().point(blue).pos
                ? o.sample().point(blue).pos
                : o.sample().point(red).pos;
        const ExtPos below_from =
            o.sample().point(red).pos < o.sample().point(blue).pos
                ? o.sample().point(red).pos
                : o.sample().point(blue).pos;
        probes.spend(2);
        auto blue_above = o.exists_between(above_from, std::nullopt, Color::Blue);
        auto blue_below = o.exists_between(std::nullopt, below_from, Color::Blue);
        if (!blue_above || !blue_below) {
            raise(ErrorKind::Inconclusive, "case (v) density probes failed");
        }
        probes.spend(2);
        if (o.adjacent(red, *blue_above)) e.pair_rels |= kPairAbove;
        if (o.adjacent(red, *blue_below)) e.pair_rels |= kPairBelow;
        v.probes.push_back("pair rel mask " + std::to_string(e.pair_rels));
        return v;
    }
    case CaseTag::VI: {
        e.tag = CaseTag::VI;
        PointId r = some_point(o, Color::Red);
        const ExtPos rpos = o.sample().point(r).pos;
        WitnessSpec up_plus, up_minus, down_plus, down_minus;
        up_plus.color = up_minus.color = down_plus.color = down_minus.color = Color::Blue;
        up_plus.lo = up_minus.lo = rpos;
        down_plus.hi = down_minus.hi = rpos;
        up_plus.constraints = {{r, true}};
        up_minus.constraints = {{r, false}};
        down_plus.constraints = {{r, true}};
        down_minus.constraints = {{r, false}};
        bool upp = witness_succeeds(o, probes, v.probes, up_plus);
        bool upm = witness_succeeds(o, probes, v.probes, up_minus);
        bool downp = witness_succeeds(o, probes, v.probes, down_plus);
        bool downm = witness_succeeds(o, probes, v.probes, down_minus);
        if (!upp) e.r1 = R1Kind::Empty;
        else if (!upm) e.r1 = R1Kind::RightComplete;
        else e.r1 = R1Kind::RightGeneric;
        if (!downp) e.r2 = R2Kind::Empty;
        else if (!downm) e.r2 = R2Kind::LeftComplete;
        else e.r2 = R2Kind::LeftGeneric;
        return v;
    }
    }
    raise(ErrorKind::Inconclusive, "unreachable reduct case");
}

CatalogEntry classify_entry(StructureOracle& o, std::size_t budget) {
    ReductVerdict reduct = reduct_classify(o, budget);
    EdgeVerdict edge = edge_classify(o, reduct, budget);
    return edge.entry;
}

std::pair<CaseTag, std::string> guess_reduct_from_sample(const FinStruct& s) {
    if (s.size() <= 2) return {CaseTag::I, "at most two points"};
    bool has_red = false, has_blue = false, has_inf = false, has_pair = false;
    for (const auto& p : s.points()) {
        has_red |= p.color == Color::Red;
        has_blue |= p.color == Color::Blue;
        has_inf |= p.pos.is_infinite();
        has_pair |= p.pos.kind() == ExtPos::Kind::Pair;
    }
    if (!has_red || !has_blue) return {CaseTag::II, "monochromatic sample"};
    if (has_inf) return {CaseTag::III, "an infinite endpoint is sampled"};
    if (has_pair) return {CaseTag::V, "pair-slot positions present"};
    bool separated = true;
    for (const auto& p : s.points()) {
        for (const auto& q : s.points()) {
            if (p.color == Color::Red && q.color == Color::Blue && q.pos < p.pos) {
                separated = false;
            }
        }
    }
    bool separated_swapped = true;
    for (const auto& p : s.points()) {
        for (const auto& q : s.points()) {
            if (p.color == Color::Blue && q.color == Color::Red && q.pos < p.pos) {
                separated_swapped = false;
            }
        }
    }
    if (separated || separated_swapped) return {CaseTag::IV, "color blocks are separated"};
    return {CaseTag::VI, "both colors interleave"};
}

// ---------------------------------------------------------------------------
// one-point extension testing

namespace {

// Enumerates partial isos of `s` in canonical order (domain size ascending,
// then lexicographic domains and images), feeding each to `visit` until it
// returns false or the enumeration space is exhausted.
class IsoEnumerator {
public:
    IsoEnumerator(const FinStruct& s, std::size_t max_dom) : s_(s), max_dom_(max_dom) {
        for (const auto& p : s.points()) ids_.push_back(p.id);
    }

    template <typename Visit>
    void run(Visit&& visit) {
        done_ = false;
        for (std::size_t k = 1; k <= std::min(max_dom_, ids_.size()) && !done_; ++k) {
            std::vector<std::size_t> dom;
            choose_domain(k, 0, dom, visit);
        }
    }

private:
    template <typename Visit>
    void choose_domain(std::size_t k, std::size_t from, std::vector<std::size_t>& dom,
                       Visit&& visit) {
        if (done_) return;
        if (dom.size() == k) {
            PartialIso iso;
            assign(dom, 0, iso, visit);
            return;
        }
        for (std::size_t i = from; i < ids_.size() && !done_; ++i) {
            dom.push_back(i);
            choose_domain(k, i + 1, dom, visit);
            dom.pop_back();
        }
    }

    template <typename Visit>
    void assign(const std::vector<std::size_t>& dom, std::size_t at, PartialIso& iso,
                Visit&& visit) {
        if (done_) return;
        if (at == dom.size()) {
            if (!visit(iso)) done_ = true;
            return;
        }
        PointId src = ids_[dom[at]];
        for (PointId tgt : ids_) {
            iso.pairs.push_back({src, tgt});
            if (is_partial_iso(iso, s_, s_)) {
                assign(dom, at + 1, iso, visit);
            }
            iso.pairs.pop_back();
            if (done_) return;
        }
    }

    const FinStruct& s_;
    std::size_t max_dom_;
    std::vector<PointId> ids_;
    bool done_ = false;
};

// One random valid partial iso, or nullopt when the sampler dead-ends.
std::optional<PartialIso> random_iso(const FinStruct& s, std::size_t dom_size,
                                     std::mt19937_64& rng) {
    std::vector<PointId> ids;
    for (const auto& p : s.points()) ids.push_back(p.id);
    if (ids.size() < dom_size) return std::nullopt;
    std::vector<PointId> dom = ids;
    std::shuffle(dom.begin(), dom.end(), rng);
    dom.resize(dom_size);
    PartialIso iso;
    for (PointId src : dom) {
        std::vector<PointId> imgs = ids;
        std::shuffle(imgs.begin(), imgs.end(), rng);
        bool placed = false;
        for (PointId tgt : imgs) {
            iso.pairs.push_back({src, tgt});
            if (is_partial_iso(iso, s, s)) {
                placed = true;
                break;
            }
            iso.pairs.pop_back();
        }
        if (!placed) return std::nullopt;
    }
    return iso;
}

} // namespace

HomogeneityReport one_point_extension_test(StructureOracle& o, std::size_t sample_size,
                                           std::size_t trials, std::uint64_t seed) {
    if (sample_size > 8) {
        raise(ErrorKind::BudgetExceeded, "one_point_extension_test sample size cap is 8");
    }
    HomogeneityReport report;
    o.grow_to(sample_size + 4);
    FinStruct snap = o.sample_snapshot();
    std::size_t max_dom = sample_size > 0 ? sample_size - 1 : 0;

    auto try_iso = [&](const PartialIso& iso) -> bool {
        ++report.trials;
        std::set<PointId> dom, img;
        for (const auto& [s, t] : iso.pairs) {
            dom.insert(s);
            img.insert(t);
        }
        for (const auto& p : snap.points()) {
            if (dom.count(p.id)) continue;
            WitnessSpec spec = forced_spec(snap, p.id, iso, snap);
            StructureOracle probe = o; // keep the base sample pristine
            if (!find_extension_image(probe, spec, img)) {
                Counterexample cx;
                cx.snapshot = snap;
                cx.iso = iso;
                cx.witness_point = p.id;
                cx.forced = spec;
                report.counterexample = std::move(cx);
                return false;
            }
        }
        return report.trials < trials;
    };

    IsoEnumerator enumerator(snap, max_dom);
    enumerator.run(try_iso);
    if (report.counterexample || report.trials >= trials) return report;

    // enumeration exhausted below the trial budget: top up with seeded
    // random isos (larger samples only reachable this way)
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 1);
    std::size_t attempts = 0;
    while (report.trials < trials && attempts < trials * 4) {
        ++attempts;
        std::size_t k = 1 + rng() % std::max<std::size_t>(max_dom, 1);
        auto iso = random_iso(snap, k, rng);
        if (!iso) continue;
        if (!try_iso(*iso)) break;
    }
    return report;
}

// ---------------------------------------------------------------------------
// back-and-forth

namespace {

struct BnfSide {
    StructureOracle* oracle = nullptr;
    std::vector<PointId> config; // in creation (= position) order
};

struct BnfSearch {
    BnfSide first;
    BnfSide second;
    std::size_t budget = 0;
    std::size_t calls = 0;
    std::optional<BnfConfig> found;
    std::size_t found_depth = 0;
    bool out_of_budget = false;

    // forced spec for the next config point on one side: above everything
    // placed so far, adjacency to the opposite-colored config points by mask
    WitnessSpec spec_for(const BnfSide& side, Color c, unsigned mask) const {
        WitnessSpec spec;
        spec.color = c;
        if (!side.config.empty()) {
            spec.lo = side.oracle->sample().point(side.config.back()).pos;
        }
        unsigned bit = 0;
        for (PointId id : side.config) {
            if (side.oracle->sample().point(id).color == c) continue;
            spec.constraints.push_back({id, (mask >> bit) & 1u});
            ++bit;
        }
        return spec;
    }

    std::optional<PointId> extend(BnfSide& side, const WitnessSpec& spec) {
        ++calls;
        std::set<PointId> used(side.config.begin(), side.config.end());
        return find_extension_image(*side.oracle, spec, used);
    }

    unsigned opposite_count(const BnfSide& side, Color c) const {
        unsigned n = 0;
        for (PointId id : side.config) {
            if (side.oracle->sample().point(id).color != c) ++n;
        }
        return n;
    }

    // depth-limited exploration; returns true when a distinguisher was found
    bool dfs(std::size_t limit) {
        if (found || out_of_budget || limit == 0) return found.has_value();
        for (Color c : {Color::Red, Color::Blue}) {
            unsigned masks = 1u << opposite_count(first, c);
            for (unsigned mask = 0; mask < masks; ++mask) {
                if (calls + 2 > budget) {
                    out_of_budget = true;
                    return found.has_value();
                }
                WitnessSpec sa = spec_for(first, c, mask);
                WitnessSpec sb = spec_for(second, c, mask);
                auto ia = extend(first, sa);
                auto ib = extend(second, sb);
                if (ia.has_value() != ib.has_value()) {
                    record(ia.has_value(), c, mask, ia ? *ia : *ib, sa, sb);
                    return true;
                }
                if (ia && ib) {
                    first.config.push_back(*ia);
                    second.config.push_back(*ib);
                    if (dfs(limit - 1)) return true;
                    first.config.pop_back();
                    second.config.pop_back();
                    if (out_of_budget) return found.has_value();
                }
            }
        }
        return false;
    }

    void record(bool first_realized, Color, unsigned, PointId realized_id, const WitnessSpec& sa,
                const WitnessSpec& sb) {
        BnfConfig cfg;
        cfg.realized_in_first = first_realized;
        const BnfSide& winner = first_realized ? first : second;
        const BnfSide& loser = first_realized ? second : first;
        std::vector<PointId> wids = winner.config;
        wids.push_back(realized_id);
        cfg.realized = induced_substructure(winner.oracle->sample(), wids);
        cfg.mirrored = induced_substructure(loser.oracle->sample(), loser.config);
        cfg.failed = first_realized ? sb : sa;
        found = std::move(cfg);
        found_depth = winner.config.size() + 1;
    }
};

} // namespace

BnfResult back_and_forth(StructureOracle& a, StructureOracle& b, std::size_t depth,
                         std::uint64_t seed, std::size_t call_budget) {
    if (depth > 8) {
        raise(ErrorKind::BudgetExceeded, "back_and_forth depth cap is 8");
    }
    (void)seed; // the schedule is canonical; seeds govern the oracles themselves
    BnfResult result;
    BnfSearch search;
    search.first = BnfSide{&a, {}};
    search.second = BnfSide{&b, {}};
    search.budget = call_budget;
    for (std::size_t limit = 1; limit <= depth; ++limit) {
        search.dfs(limit);
        if (search.found) {
            result.distinguished = true;
            result.depth = search.found_depth;
            result.config = search.found;
            result.calls = search.calls;
            result.exhaustive_to = limit;
            return result;
        }
        if (search.out_of_budget) {
            result.exhaustive_to = limit - 1;
            result.depth = depth;
            result.calls = search.calls;
            return result;
        }
        result.exhaustive_to = limit;
    }
    result.depth = depth;
    result.calls = search.calls;
    return result;
}

} // namespace obg
