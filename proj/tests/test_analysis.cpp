#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "obg/analysis.hpp"
#include "obg/catalog.hpp"
#include "obg/error.hpp"
#include "obg/fixtures.hpp"

#include "support/embed.hpp"

using namespace obg;

namespace {

StructureOracle make(const std::string& name, std::uint64_t seed = 1) {
    return instantiate(*parse_entry(name), seed);
}

} // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("forced specs mirror order neighbors and adjacencies") {
    FinStruct s;
    s.add_point(1, ExtPos::finite(Rat(0)), Color::Red);
    s.add_point(2, ExtPos::finite(Rat(1)), Color::Blue);
    s.add_point(3, ExtPos::finite(Rat(2)), Color::Red);
    s.add_edge(2, 3);
    PartialIso p{{{1, 1}, {3, 3}}};
    WitnessSpec w = forced_spec(s, 2, p, s);
    CHECK(w.color == Color::Blue);
    REQUIRE(w.lo.has_value());
    REQUIRE(w.hi.has_value());
    CHECK(*w.lo == s.point(1).pos);
    CHECK(*w.hi == s.point(3).pos);
    REQUIRE(w.constraints.size() == 2);
    for (const auto& [id, sign] : w.constraints) {
        CHECK(sign == (id == 3));
    }
}

TEST_CASE("reduct classification lands in the right case") {
    struct Expect {
        const char* name;
        CaseTag tag;
    };
    for (Expect x : {Expect{"i.red", CaseTag::I}, Expect{"i.red+blue.complete", CaseTag::I},
                     Expect{"ii.blue", CaseTag::II}, Expect{"iii.posInf.blue.complete", CaseTag::III},
                     Expect{"iii.negInf.red.empty", CaseTag::III}, Expect{"iv.empty", CaseTag::IV},
                     Expect{"iv.br.unbounded_generic", CaseTag::IV}, Expect{"v.rb.M", CaseTag::V},
                     Expect{"v.br.Above+Below", CaseTag::V},
                     Expect{"vi.rightComplete+leftGeneric", CaseTag::VI}}) {
        auto o = make(x.name, 2);
        ReductVerdict v = reduct_classify(o, 200);
        CHECK(v.tag == x.tag);
        CHECK_FALSE(v.evidence.empty());
    }
}

TEST_CASE("reduct parameters are recovered") {
    {
        auto o = make("iv.empty", 1);
        ReductVerdict v = reduct_classify(o, 200);
        CHECK(v.red_low);
    }
    {
        auto o = make("iv.br.complete", 1);
        ReductVerdict v = reduct_classify(o, 200);
        CHECK_FALSE(v.red_low);
    }
    {
        auto o = make("v.rb.M", 1);
        ReductVerdict v = reduct_classify(o, 200);
        CHECK(v.red_first);
    }
    {
        auto o = make("iii.negInf.blue.empty", 1);
        ReductVerdict v = reduct_classify(o, 200);
        CHECK(v.color == Color::Blue);
        CHECK_FALSE(v.pos_side);
    }
    {
        auto o = make("ii.red", 1);
        ReductVerdict v = reduct_classify(o, 200);
        CHECK(v.color == Color::Red);
    }
}

TEST_CASE("the classifier budget is enforced") {
    auto o = make("vi.empty+empty", 1);
    CHECK_THROWS_AS(reduct_classify(o, 4), Error);
}

TEST_CASE("classification round-trips every catalog entry") {
    for (const auto& e : all_entries()) {
        StructureOracle o = instantiate(e, 7);
        CatalogEntry back = classify_entry(o, 400);
        CHECK(entry_name(back) == entry_name(e));
    }
}

TEST_CASE("catalog entries yield no homogeneity counterexample") {
    // a spot sample across the six cases; the acceptance suite runs all
    for (const char* name : {"i.red+blue.complete", "ii.red", "iii.posInf.blue.complete",
                             "iv.bounded_generic.B", "iv.unbounded_generic", "v.rb.M+Below",
                             "vi.rightGeneric+leftComplete"}) {
        auto o = make(name, 3);
        HomogeneityReport r = one_point_extension_test(o, 6, 150, 3);
        INFO(name);
        CHECK_FALSE(r.counterexample.has_value());
        CHECK(r.trials > 0);
    }
}

TEST_CASE("pair entries that cannot see the partner boundary are rigid") {
    // the covering partner of a fixed point is fixed by every automorphism,
    // so a valid partial iso moving an unrelated point onto it never extends;
    // that map stays valid exactly when the relation gives the partner and
    // the far side of it the same adjacency
    for (const char* name : {"v.rb.empty", "v.rb.M+Above", "v.br.M+Below", "v.rb.Below"}) {
        auto o = make(name, 1);
        HomogeneityReport r = one_point_extension_test(o, 6, 500, 1);
        INFO(name);
        REQUIRE(r.counterexample.has_value());
        const Counterexample& cx = *r.counterexample;
        CHECK(is_partial_iso(cx.iso, cx.snapshot, cx.snapshot));
        CHECK(cx.iso.pairs.size() + 1 <= 4);
    }
    // the relation-separated pair entries show no such witness
    for (const char* name :
         {"v.rb.M", "v.rb.Above", "v.rb.M+Below", "v.rb.Above+Below", "v.br.M+Above", "v.br.Below"}) {
        auto o = make(name, 1);
        HomogeneityReport r = one_point_extension_test(o, 6, 300, 1);
        INFO(name);
        CHECK_FALSE(r.counterexample.has_value());
    }
}

TEST_CASE("the matching fixture fails homogeneity with a small witness") {
    auto o = *instantiate_fixture("fixture:matching2Q", 1);
    HomogeneityReport r = one_point_extension_test(o, 6, 2000, 1);
    REQUIRE(r.counterexample.has_value());
    const Counterexample& cx = *r.counterexample;
    CHECK(cx.iso.pairs.size() + 1 <= 4);
    CHECK(is_partial_iso(cx.iso, cx.snapshot, cx.snapshot));
    // the forced spec really has no image, existing or fresh
    std::set<PointId> used;
    for (const auto& [s, t] : cx.iso.pairs) {
        (void)s;
        used.insert(t);
    }
    auto probe = *instantiate_fixture("fixture:matching2Q", 1);
    probe.grow_to(cx.snapshot.size());
    CHECK_FALSE(find_extension_image(probe, cx.forced, used).has_value());
}

TEST_CASE("the finite-neighbor fixture fails homogeneity too") {
    auto o = *instantiate_fixture("fixture:finiteNeighbors2Q", 2);
    HomogeneityReport r = one_point_extension_test(o, 6, 2000, 2);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->iso.pairs.size() + 1 <= 4);
}

TEST_CASE("back-and-forth separates the two complete orientations") {
    // an edge on a red-below-blue pair exists in one and never in the other
    auto a = make("vi.empty+leftComplete", 1);
    auto b = make("vi.rightComplete+empty", 1);
    BnfResult r = back_and_forth(a, b, 4, 1, 2000);
    REQUIRE(r.distinguished);
    CHECK(r.depth == 2);
    REQUIRE(r.config.has_value());
    CHECK(r.config->realized.size() == 2);
}

TEST_CASE("bounded and unbounded generics separate within depth 4") {
    auto a = make("iv.bounded_generic", 1);
    auto b = make("iv.unbounded_generic", 1);
    BnfResult r = back_and_forth(a, b, 4, 1, 2000);
    REQUIRE(r.distinguished);
    CHECK(r.depth <= 4);
    // the realized configuration embeds in exactly one entry's structure
    CHECK(testsupport::embeds(*parse_entry("iv.unbounded_generic"), r.config->realized) !=
          testsupport::embeds(*parse_entry("iv.bounded_generic"), r.config->realized));
}

TEST_CASE("an oracle is indistinguishable from itself") {
    for (const char* name : {"iv.bounded_generic", "vi.rightGeneric+leftGeneric", "v.rb.M"}) {
        auto a = make(name, 5);
        auto b = make(name, 5);
        BnfResult r = back_and_forth(a, b, 5, 5, 2000);
        CHECK_FALSE(r.distinguished);
    }
}

TEST_CASE("distinguishing depth is monotone in the depth bound") {
    for (std::size_t depth : {3u, 4u, 5u, 6u}) {
        auto a = make("vi.empty+empty", 2);
        auto b = make("vi.rightComplete+empty", 2);
        BnfResult r = back_and_forth(a, b, depth, 2, 2000);
        REQUIRE(r.distinguished);
        CHECK(r.depth == 2);
    }
}

TEST_CASE("distinguished verdicts re-validate against the embed oracle") {
    auto e1 = *parse_entry("v.rb.M");
    auto e2 = *parse_entry("v.rb.M+Above");
    auto a = instantiate(e1, 3);
    auto b = instantiate(e2, 3);
    BnfResult r = back_and_forth(a, b, 5, 3, 2000);
    REQUIRE(r.distinguished);
    const FinStruct& cfg = r.config->realized;
    bool in1 = testsupport::embeds(e1, cfg);
    bool in2 = testsupport::embeds(e2, cfg);
    CHECK(in1 != in2);
    CHECK((r.config->realized_in_first ? in1 : in2));
}

TEST_CASE("a case (v) verdict replays: the cited gap is really empty") {
    auto o = make("v.br.M+Above", 4);
    ReductVerdict v = reduct_classify(o, 200);
    REQUIRE(v.tag == CaseTag::V);
    std::optional<std::pair<ExtPos, ExtPos>> gap;
    for (std::size_t i = 0; i + 1 < o.sample().points().size(); ++i) {
        const auto& x = o.sample().points()[i];
        const auto& y = o.sample().points()[i + 1];
        if (x.pos.q() == y.pos.q()) gap = {x.pos, y.pos};
    }
    REQUIRE(gap.has_value());
    CHECK_FALSE(o.exists_between(gap->first, gap->second, Color::Red).has_value());
    CHECK_FALSE(o.exists_between(gap->first, gap->second, Color::Blue).has_value());
}

TEST_CASE("evidence-only reduct guesses from bare samples") {
    auto snap = [](const char* name) {
        auto o = make(name, 1);
        o.grow_to(6);
        return o.sample_snapshot();
    };
    CHECK(guess_reduct_from_sample(snap("ii.red")).first == CaseTag::II);
    CHECK(guess_reduct_from_sample(snap("iii.posInf.blue.complete")).first == CaseTag::III);
    CHECK(guess_reduct_from_sample(snap("iv.complete")).first == CaseTag::IV);
    CHECK(guess_reduct_from_sample(snap("v.rb.M")).first == CaseTag::V);
    CHECK(guess_reduct_from_sample(snap("i.red")).first == CaseTag::I);
}

TEST_SUITE_END();
