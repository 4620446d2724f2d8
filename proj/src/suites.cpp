#include "obg/suites.hpp"

#include <algorithm>
#include <random>

#include "obg/error.hpp"

namespace obg {

namespace {

// the entries whose witness sets are dense in a describable regime
enum class DensityRegime {
    NotApplicable,
    OwnBlock,          // iv unbounded generic: any interval meeting the witness block
    Anywhere,          // vi fully generic
    TowardConstraints, // vi one-sided generics: above/below all constraint points
};

DensityRegime regime_of(const CatalogEntry& e) {
    if (e.tag == CaseTag::IV && e.iv_rel == IvRelation::UnboundedGeneric) {
        return DensityRegime::OwnBlock;
    }
    if (e.tag == CaseTag::VI) {
        if (e.r1 == R1Kind::RightGeneric && e.r2 == R2Kind::LeftGeneric) {
            return DensityRegime::Anywhere;
        }
        if (e.r1 == R1Kind::RightGeneric && e.r2 == R2Kind::Empty) {
            return DensityRegime::TowardConstraints;
        }
        if (e.r1 == R1Kind::Empty && e.r2 == R2Kind::LeftGeneric) {
            return DensityRegime::TowardConstraints;
        }
    }
    return DensityRegime::NotApplicable;
}

} // namespace

SuiteResult run_homogeneity(StructureOracle oracle, std::size_t sample_size, std::size_t trials,
                            std::uint64_t seed) {
    SuiteResult result;
    HomogeneityReport report = one_point_extension_test(oracle, sample_size, trials, seed);
    result.stats.push_back({"trials", std::to_string(report.trials)});
    if (!report.counterexample) {
        result.note = "no counterexample found within budget";
        return result;
    }
    const Counterexample& cx = *report.counterexample;
    result.pass = false;
    // re-verify before reporting: the iso is valid and the forced spec
    // really has no image
    if (!is_partial_iso(cx.iso, cx.snapshot, cx.snapshot)) {
        result.note = "counterexample failed re-validation (iso invalid)";
        return result;
    }
    std::set<PointId> used;
    for (const auto& [s, t] : cx.iso.pairs) {
        (void)s;
        used.insert(t);
    }
    StructureOracle probe = oracle;
    if (find_extension_image(probe, cx.forced, used)) {
        result.note = "counterexample failed re-validation (extension exists)";
        return result;
    }
    result.note = "verified counterexample of size " + std::to_string(cx.iso.pairs.size() + 1);
    result.counterexample = cx;
    return result;
}

SuiteResult run_density(const CatalogEntry& e, std::size_t specs, std::size_t max_constraints,
                        std::uint64_t seed) {
    SuiteResult result;
    DensityRegime regime = regime_of(e);
    if (regime == DensityRegime::NotApplicable) {
        result.applicable = false;
        result.note = "density suite applies to generically-witnessed entries";
        return result;
    }
    StructureOracle oracle = instantiate(e, seed);
    oracle.grow_to(10);
    std::mt19937_64 rng(seed ^ 0xabcdef1234567890ULL);
    std::size_t ran = 0;

    for (std::size_t t = 0; t < specs; ++t) {
        FinStruct snap = oracle.sample_snapshot();
        Color c = (rng() & 1) ? Color::Blue : Color::Red;
        std::vector<const FinStruct::Point*> others, own;
        for (const auto& p : snap.points()) {
            (p.color == c ? own : others).push_back(&p);
        }
        if (others.empty()) {
            --t;
            oracle.grow_to(snap.size() + 2);
            continue;
        }
        WitnessSpec spec;
        spec.color = c;
        std::size_t k = rng() % (std::min(max_constraints, others.size()) + 1);
        std::shuffle(others.begin(), others.end(), rng);
        for (std::size_t i = 0; i < k; ++i) {
            spec.constraints.push_back({others[i]->id, (rng() & 1) != 0});
        }

        switch (regime) {
        case DensityRegime::OwnBlock: {
            // any interval meeting the witness color's block: bound one side
            // by an own-color point, leave the other open
            if (!own.empty() && (rng() & 1)) {
                const auto* p = own[rng() % own.size()];
                if (rng() & 1) spec.lo = p->pos;
                else spec.hi = p->pos;
            }
            break;
        }
        case DensityRegime::Anywhere: {
            std::vector<ExtPos> all;
            for (const auto& p : snap.points()) all.push_back(p.pos);
            if (!all.empty() && (rng() & 1)) spec.lo = all[rng() % all.size()];
            if (!all.empty() && (rng() & 1)) spec.hi = all[rng() % all.size()];
            if (spec.lo && spec.hi && !(*spec.lo < *spec.hi)) {
                std::swap(spec.lo, spec.hi);
                if (spec.lo && spec.hi && !(*spec.lo < *spec.hi)) spec.hi.reset();
            }
            break;
        }
        case DensityRegime::TowardConstraints: {
            // right generic: blue witnesses live above max(A1 u A2), red
            // witnesses below min; the left generic mirror swaps colors
            bool above = (e.r1 == R1Kind::RightGeneric) == (c == Color::Blue);
            std::optional<ExtPos> extreme;
            for (const auto& [id, sign] : spec.constraints) {
                (void)sign;
                const ExtPos& p = snap.point(id).pos;
                if (!extreme || (above ? *extreme < p : p < *extreme)) extreme = p;
            }
            if (above) spec.lo = extreme;
            else spec.hi = extreme;
            break;
        }
        default:
            break;
        }

        auto got = oracle.realize_witness(spec);
        ++ran;
        if (!got) {
            result.pass = false;
            result.note = "witness request failed: " + std::to_string(spec.constraints.size()) +
                          " constraints";
            return result;
        }
        const auto& p = oracle.sample().point(*got);
        if (!strictly_between(p.pos, spec.lo, spec.hi)) {
            result.pass = false;
            result.note = "returned position " + p.pos.str() + " escapes the interval";
            return result;
        }
        for (const auto& [id, sign] : spec.constraints) {
            if (oracle.adjacent(*got, id) != sign) {
                result.pass = false;
                result.note = "returned point violates a sign constraint";
                return result;
            }
        }
    }
    result.stats.push_back({"specs", std::to_string(ran)});
    result.note = "all witness requests realized inside their intervals";
    return result;
}

SuiteResult run_closedform(const CatalogEntry& e, std::size_t grow, std::uint64_t seed) {
    SuiteResult result;
    auto rule = closed_form(e);
    if (!rule) {
        result.applicable = false;
        result.note = "entry has no closed form (generic component)";
        return result;
    }
    StructureOracle oracle = instantiate(e, seed);
    oracle.grow_to(grow);
    const FinStruct& s = oracle.sample();
    std::size_t pairs = 0, mismatches = 0;
    for (const auto& a : s.points()) {
        for (const auto& b : s.points()) {
            if (a.id >= b.id || a.color == b.color) continue;
            ++pairs;
            bool expect = rule->adjacent(a.pos, a.color, b.pos, b.color);
            if (oracle.adjacent(a.id, b.id) != expect) ++mismatches;
        }
    }
    result.stats.push_back({"pairs", std::to_string(pairs)});
    result.stats.push_back({"sample", std::to_string(s.size())});
    if (mismatches > 0) {
        result.pass = false;
        result.note = std::to_string(mismatches) + " adjacency mismatches against the rule";
    } else {
        result.note = "oracle adjacency matches the closed form on all pairs";
    }
    return result;
}

} // namespace obg
