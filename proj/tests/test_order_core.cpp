#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "obg/enumerate.hpp"
#include "obg/error.hpp"
#include "obg/fin_struct.hpp"
#include "obg/rat.hpp"

using namespace obg;

namespace {

Rat q(std::int64_t n, std::int64_t d = 1) { return Rat(BigInt(n), BigInt(d)); }

// independent check that a < m < b by cross-multiplication
bool strictly_inside(const Rat& m, const Rat& a, const Rat& b) {
    return a.num() * m.den() < m.num() * a.den() && m.num() * b.den() < b.num() * m.den();
}

} // namespace

TEST_SUITE_BEGIN("order-core");

TEST_CASE("rationals normalize and compare exactly") {
    CHECK(Rat(BigInt(2), BigInt(4)) == q(1, 2));
    CHECK(Rat(BigInt(-2), BigInt(-4)) == q(1, 2));
    CHECK(Rat(BigInt(2), BigInt(-4)) == q(-1, 2));
    CHECK(q(1, 3) < q(1, 2));
    CHECK(q(-1, 2) < q(1, 3));
    CHECK(q(7, 3).floor() == 2);
    CHECK(q(-7, 3).floor() == -3);
    CHECK(q(6, 3).floor() == 2);
    CHECK(q(1, 2).str() == "1/2");
}

TEST_CASE("rational parsing requires lowest terms and positive denominator") {
    CHECK(Rat::parse("3/4").has_value());
    CHECK(Rat::parse("-3/4").has_value());
    CHECK(Rat::parse("5").has_value());
    CHECK_FALSE(Rat::parse("2/4").has_value());
    CHECK_FALSE(Rat::parse("3/0").has_value());
    CHECK_FALSE(Rat::parse("3/-4").has_value());
    CHECK_FALSE(Rat::parse("a/4").has_value());
    CHECK_FALSE(Rat::parse("").has_value());
}

TEST_CASE("mediant_between on the documented inputs") {
    CHECK(mediant_between(std::nullopt, std::nullopt) == q(0)); // canonical base point
    Rat m = mediant_between(q(0), q(1));
    CHECK(m == q(1, 2));
    CHECK(strictly_inside(m, q(0), q(1)));
    CHECK(mediant_between(q(1), std::nullopt) == q(2)); // integer stepping
    CHECK(q(1) < mediant_between(q(1), std::nullopt));
    CHECK(mediant_between(std::nullopt, q(1)) == q(0));
    CHECK(mediant_between(std::nullopt, q(1, 2)) == q(0));
    CHECK(mediant_between(std::nullopt, q(-3, 2)) == q(-2));
    CHECK(mediant_between(q(5, 3), std::nullopt) == q(2));
}

TEST_CASE("mediant_between rejects empty intervals") {
    CHECK_THROWS_AS(mediant_between(q(1), q(1)), Error);
    CHECK_THROWS_AS(mediant_between(q(2), q(1)), Error);
}

TEST_CASE("mediant lies strictly inside for random rational intervals") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t n1 = static_cast<std::int64_t>(rng() % 2001) - 1000;
        std::int64_t d1 = static_cast<std::int64_t>(rng() % 50) + 1;
        std::int64_t n2 = static_cast<std::int64_t>(rng() % 2001) - 1000;
        std::int64_t d2 = static_cast<std::int64_t>(rng() % 50) + 1;
        Rat a = q(n1, d1), b = q(n2, d2);
        if (!(a < b)) {
            if (a == b) continue;
            std::swap(a, b);
        }
        Rat m = mediant_between(a, b);
        CHECK(strictly_inside(m, a, b));
        CHECK(a < mediant_between(a, std::nullopt));
        CHECK(mediant_between(std::nullopt, b) < b);
    }
}

TEST_CASE("positions order with infinities and pair slots") {
    ExtPos ni = ExtPos::neg_inf();
    ExtPos pi = ExtPos::pos_inf();
    ExtPos f0 = ExtPos::finite(q(0));
    ExtPos p0 = ExtPos::pair(q(0), 0);
    ExtPos p1 = ExtPos::pair(q(0), 1);
    ExtPos f1 = ExtPos::finite(q(1));
    CHECK(ni < f0);
    CHECK(f0 < f1);
    CHECK(f1 < pi);
    CHECK(p0 < p1);
    CHECK(p1 < f1);
    CHECK(f0 == p0);  // same rational, slot 0: one convention per structure
    CHECK(ni < p0);
    CHECK_FALSE(strictly_between(p1, p0, p1));
    CHECK(strictly_between(f0, ni, pi));
    // the open interval between a pair's two slots contains nothing
    CHECK(empty_interval(p0, p0));
    CHECK_FALSE(empty_interval(p0, p1));
}

TEST_CASE("finite structures enforce canonical form") {
    FinStruct s;
    s.add_point(1, ExtPos::finite(q(1)), Color::Red);
    s.add_point(2, ExtPos::finite(q(0)), Color::Blue);
    CHECK(s.points()[0].id == 2); // sorted by position
    CHECK(s.points()[1].id == 1);
    CHECK_THROWS_AS(s.add_point(3, ExtPos::finite(q(1)), Color::Red), Error); // dup position
    CHECK_THROWS_AS(s.add_point(1, ExtPos::finite(q(2)), Color::Red), Error); // dup id
    s.add_edge(1, 2);
    CHECK(s.has_edge(2, 1));
    s.add_point(3, ExtPos::finite(q(2)), Color::Red);
    CHECK_THROWS_AS(s.add_edge(1, 3), Error); // monochromatic
    CHECK_THROWS_AS(s.add_edge(1, 9), Error); // unknown id
}

TEST_CASE("is_partial_iso on the documented examples") {
    FinStruct s;
    s.add_point(1, ExtPos::finite(q(0)), Color::Red);
    s.add_point(2, ExtPos::finite(q(1)), Color::Blue);
    s.add_edge(1, 2);
    FinStruct t;
    t.add_point(1, ExtPos::finite(q(0)), Color::Red);
    t.add_point(2, ExtPos::finite(q(1)), Color::Blue);

    CHECK(is_partial_iso(PartialIso{}, s, t)); // the empty map
    // edge not preserved
    CHECK_FALSE(is_partial_iso(PartialIso{{{1, 1}, {2, 2}}}, s, t));
    CHECK(is_partial_iso(PartialIso{{{1, 1}, {2, 2}}}, s, s));

    // order violated: images swap sides
    FinStruct u;
    u.add_point(1, ExtPos::finite(q(0)), Color::Blue);
    u.add_point(2, ExtPos::finite(q(1)), Color::Red);
    CHECK_FALSE(is_partial_iso(PartialIso{{{1, 2}, {2, 1}}}, t, u));

    CHECK_THROWS_AS(is_partial_iso(PartialIso{{{9, 1}}}, s, t), Error);
}

TEST_CASE("partial isos invert") {
    FinStruct s;
    s.add_point(1, ExtPos::finite(q(0)), Color::Red);
    s.add_point(2, ExtPos::finite(q(1)), Color::Blue);
    s.add_point(3, ExtPos::finite(q(2)), Color::Red);
    s.add_edge(2, 3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        PartialIso p;
        for (PointId a : {1u, 2u, 3u}) {
            if (rng() & 1) p.pairs.push_back({a, 1 + static_cast<PointId>(rng() % 3)});
        }
        PartialIso inv;
        for (const auto& [x, y] : p.pairs) inv.pairs.push_back({y, x});
        CHECK(is_partial_iso(p, s, s) == is_partial_iso(inv, s, s));
    }
}

TEST_CASE("identity maps are partial isos on every enumerated structure") {
    for (const auto& s : enumerate_up_to(3)) {
        PartialIso identity;
        for (const auto& p : s.points()) identity.pairs.push_back({p.id, p.id});
        CHECK(is_partial_iso(identity, s, s));
    }
}

TEST_CASE("induced substructures") {
    FinStruct s; // 3-point path: 1 - 2 - 3 (edges 1-2, 2-3)
    s.add_point(1, ExtPos::finite(q(0)), Color::Red);
    s.add_point(2, ExtPos::finite(q(1)), Color::Blue);
    s.add_point(3, ExtPos::finite(q(2)), Color::Red);
    s.add_edge(1, 2);
    s.add_edge(2, 3);

    CHECK(induced_substructure(s, {1, 2, 3}) == s);
    CHECK(induced_substructure(s, {}).empty());
    FinStruct ends = induced_substructure(s, {1, 3});
    CHECK(ends.size() == 2);
    CHECK(ends.edges().empty()); // brute-force edge restriction
    CHECK_THROWS_AS(induced_substructure(s, {9}), Error);
}

TEST_CASE("enumeration counts match the independent size oracle") {
    // independent oracle: sum over red-counts r of C(n,r) * 2^(r*(n-r)),
    // frozen for the sizes the build relies on
    CHECK(enumerate_structures(1).size() == 2);
    CHECK(enumerate_structures(2).size() == 6);
    CHECK(enumerate_structures(3).size() == 26);
    CHECK(enumerate_structures(4).size() == 162);
    CHECK(count_structures(5) == 1442);
    CHECK(enumerate_up_to(3).size() == 2 + 6 + 26);
}

TEST_CASE("enumeration is duplicate-free by exhaustive pattern matching") {
    auto all = enumerate_up_to(3);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            CHECK_FALSE(all[i].same_pattern(all[j]));
        }
    }
}

TEST_CASE("enumeration respects the budget cap") {
    CHECK_THROWS_AS(enumerate_structures(7), Error);
}

TEST_SUITE_END();
