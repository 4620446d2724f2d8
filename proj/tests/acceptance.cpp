#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "obg/analysis.hpp"
#include "obg/catalog.hpp"
#include "obg/enumerate.hpp"
#include "obg/fixtures.hpp"
#include "obg/fraisse.hpp"
#include "obg/sample_io.hpp"
#include "obg/suites.hpp"

#include "support/embed.hpp"

using namespace obg;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& what) {
    std::cout << "[criterion " << criterion << "] " << (pass ? "pass" : "FAIL") << " - " << what
              << std::endl;
}

const std::vector<std::uint64_t> kSeeds = {1, 2, 3};

} // namespace

TEST_CASE("criterion 1: catalog homogeneity suite") {
    auto start = std::chrono::steady_clock::now();
    std::set<std::string> failing;
    bool counterexamples_verified = true;
    for (const auto& e : all_entries()) {
        for (std::uint64_t seed : kSeeds) {
            StructureOracle o = instantiate(e, seed);
            HomogeneityReport r = one_point_extension_test(o, 6, 200, seed);
            if (!r.counterexample) continue;
            failing.insert(entry_name(e));
            const Counterexample& cx = *r.counterexample;
            std::set<PointId> used;
            for (const auto& [s, t] : cx.iso.pairs) {
                (void)s;
                used.insert(t);
            }
            StructureOracle probe = o;
            if (!is_partial_iso(cx.iso, cx.snapshot, cx.snapshot) ||
                find_extension_image(probe, cx.forced, used).has_value()) {
                counterexamples_verified = false;
            }
        }
    }
    double elapsed = seconds_since(start);
    bool in_time = elapsed < 300.0;
    bool as_stated = failing.empty();
    report(1, as_stated && in_time,
           "53 entries x 3 seeds x 200 trials at sample size 6, " + std::to_string(elapsed) + "s");

    // Known defect, kept visible on purpose: the pair structures whose
    // relation does not separate the matched partner from one side are
    // provably non-homogeneous (a partial iso may move an unrelated point
    // onto a covering partner, and order automorphisms preserve covers).
    // Exactly the eight entries below are affected; their counterexamples
    // re-verify. The criterion is asserted as stated and therefore fails.
    const std::set<std::string> rigid = {
        "v.rb.empty",  "v.rb.Below", "v.rb.M+Above", "v.rb.M+Above+Below",
        "v.br.empty",  "v.br.Above", "v.br.M+Below", "v.br.M+Above+Below",
    };
    if (!as_stated) {
        std::cout << "  non-homogeneous pair entries detected:";
        for (const auto& name : failing) std::cout << " " << name;
        std::cout << "\n  (verified counterexamples; see the project notes for the analysis)"
                  << std::endl;
    }
    CHECK(failing == rigid);          // the defect is exactly the known set
    CHECK(counterexamples_verified);  // every reported counterexample is sound
    CHECK(in_time);
    CHECK(as_stated); // the criterion as stated; red by the analysis above
}

TEST_CASE("criterion 2: negative fixtures yield verified counterexamples") {
    bool ok = true;
    for (const char* name : {"fixture:matching2Q", "fixture:finiteNeighbors2Q"}) {
        auto start = std::chrono::steady_clock::now();
        auto o = *instantiate_fixture(name, 1);
        HomogeneityReport r = one_point_extension_test(o, 6, 5000, 1);
        double elapsed = seconds_since(start);
        bool found = r.counterexample.has_value();
        bool small = found && r.counterexample->iso.pairs.size() + 1 <= 4;
        bool valid = false;
        bool fast = elapsed < 10.0;
        if (found) {
            const Counterexample& cx = *r.counterexample;
            valid = is_partial_iso(cx.iso, cx.snapshot, cx.snapshot);
            std::set<PointId> used;
            for (const auto& [s, t] : cx.iso.pairs) {
                (void)s;
                used.insert(t);
            }
            StructureOracle probe = o;
            valid = valid && !find_extension_image(probe, cx.forced, used).has_value();
        }
        ok = ok && found && small && valid && fast;
        report(2, found && small && valid && fast,
               std::string(name) + " counterexample of size " +
                   (found ? std::to_string(r.counterexample->iso.pairs.size() + 1) : "-") + " in " +
                   std::to_string(elapsed) + "s");
        CHECK(found);
        CHECK(small);
        CHECK(valid);
        CHECK(fast);
    }
}

TEST_CASE("criterion 3: witness density for the generic entries") {
    for (const char* name : {"iv.unbounded_generic", "vi.rightGeneric+empty",
                             "vi.empty+leftGeneric", "vi.rightGeneric+leftGeneric"}) {
        SuiteResult r = run_density(*parse_entry(name), 500, 3, 17);
        report(3, r.applicable && r.pass, std::string(name) + ": " + r.note);
        CHECK(r.applicable);
        CHECK(r.pass);
    }
}

TEST_CASE("criterion 4: closed-form agreement on grown samples") {
    std::size_t covered = 0;
    bool ok = true;
    for (const auto& e : all_entries()) {
        if (!closed_form(e)) continue;
        ++covered;
        for (std::uint64_t seed : kSeeds) {
            SuiteResult r = run_closedform(e, 12, seed);
            if (!r.pass || !r.applicable) {
                ok = false;
                std::cout << "  mismatch in " << entry_name(e) << " seed " << seed << std::endl;
            }
        }
    }
    report(4, ok && covered == 38,
           std::to_string(covered) + " deterministic entries x 3 seeds, grow_to(12), zero mismatches");
    CHECK(ok);
    CHECK(covered == 38);
}

TEST_CASE("criterion 5: pairwise separation with the frozen depth table") {
    const auto& entries = all_entries();
    std::map<std::string, std::size_t> table;
    bool brute_ok = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (!testsupport::same_reduct(entries[i], entries[j])) continue;
            auto depth = testsupport::min_distinguishing_depth(entries[i], entries[j], 6);
            if (!depth) {
                brute_ok = false;
                continue;
            }
            table[entry_name(entries[i]) + "|" + entry_name(entries[j])] = *depth;
        }
    }
    CHECK(brute_ok);

    std::string golden_path = std::string(OBG_GOLDEN_DIR) + "/separation_depths.txt";
    if (std::getenv("OBG_REGEN_GOLDEN")) {
        std::ofstream out(golden_path);
        out << "# minimal distinguishing configuration size per same-reduct pair\n";
        out << "# regenerate with OBG_REGEN_GOLDEN=1 (runs the embeddability brute force)\n";
        for (const auto& [k, v] : table) out << k << " " << v << "\n";
        report(5, true, "golden table regenerated with " + std::to_string(table.size()) + " pairs");
        return;
    }

    std::map<std::string, std::size_t> frozen;
    std::ifstream in(golden_path);
    REQUIRE(in.good());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string key;
        std::size_t depth;
        row >> key >> depth;
        frozen[key] = depth;
    }
    bool table_matches = frozen == table;
    CHECK(table_matches);

    bool bnf_ok = true;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (!testsupport::same_reduct(entries[i], entries[j])) continue;
            StructureOracle a = instantiate(entries[i], 1);
            StructureOracle b = instantiate(entries[j], 1);
            BnfResult r = back_and_forth(a, b, 6, 1, 2000);
            std::size_t expected = table[entry_name(entries[i]) + "|" + entry_name(entries[j])];
            ++checked;
            if (!r.distinguished || r.depth != expected || r.depth > 6) {
                bnf_ok = false;
                std::cout << "  " << entry_name(entries[i]) << " vs " << entry_name(entries[j])
                          << ": got " << (r.distinguished ? std::to_string(r.depth) : "none")
                          << ", expected " << expected << std::endl;
            }
        }
    }
    bool self_ok = true;
    for (const auto& e : entries) {
        StructureOracle a = instantiate(e, 1);
        StructureOracle b = instantiate(e, 1);
        BnfResult r = back_and_forth(a, b, 6, 1, 2000);
        if (r.distinguished) {
            self_ok = false;
            std::cout << "  self-distinguished: " << entry_name(e) << std::endl;
        }
    }
    report(5, table_matches && bnf_ok && self_ok,
           std::to_string(checked) + " same-reduct pairs at frozen depths, " +
               std::to_string(entries.size()) + " self-pairs indistinguishable at depth 6");
    CHECK(bnf_ok);
    CHECK(self_ok);
}

TEST_CASE("criterion 6: classification round-trip") {
    bool ok = true;
    for (const auto& e : all_entries()) {
        for (std::uint64_t seed : kSeeds) {
            StructureOracle o = instantiate(e, seed);
            CatalogEntry back = classify_entry(o, 400);
            if (!(back == e)) {
                ok = false;
                std::cout << "  " << entry_name(e) << " classified as " << entry_name(back)
                          << " (seed " << seed << ")" << std::endl;
            }
        }
    }
    report(6, ok, "cmd_classify(instantiate(e)) = e for all entries x 3 seeds");
    CHECK(ok);
}

TEST_CASE("criterion 7: amalgamation classes and their limits") {
    bool props_ok = true;
    for (const auto& cls : all_classes()) {
        for (std::size_t max_size : {std::size_t(3), std::size_t(4)}) {
            for (ClassProperty prop : {ClassProperty::HP, ClassProperty::JEP, ClassProperty::AP}) {
                AmalgamReport r = check_property(cls, prop, max_size);
                if (!r.pass) {
                    props_ok = false;
                    std::cout << "  " << cls.name << " fails at size " << max_size << std::endl;
                }
            }
        }
    }
    report(7, props_ok, "HP/JEP/AP for 4 classes at sizes 3 and 4");
    CHECK(props_ok);

    bool limits_ok = true;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        StructureOracle lim1 = limit_oracle(*parse_class("redBlockBeforeBlue"), seed);
        StructureOracle cat1 = instantiate(*parse_entry("iv.unbounded_generic"), seed);
        BnfResult r1 = back_and_forth(lim1, cat1, 5, seed, 20000);
        StructureOracle lim2 = limit_oracle(*parse_class("rightClass"), seed);
        StructureOracle cat2 = instantiate(*parse_entry("vi.rightGeneric+empty"), seed);
        BnfResult r2 = back_and_forth(lim2, cat2, 5, seed, 20000);
        if (r1.distinguished || r2.distinguished) {
            limits_ok = false;
            std::cout << "  limit distinguished from its catalog twin at seed " << seed
                      << std::endl;
        }
    }
    report(7, limits_ok, "limit oracles indistinguishable from catalog twins at depth 5, 5 seeds");
    CHECK(limits_ok);
}

TEST_CASE("criterion 8: enumeration counts") {
    bool ok = enumerate_structures(1).size() == 2 && enumerate_structures(2).size() == 6 &&
              enumerate_structures(3).size() == 26;
    report(8, ok, "enumerate_structures sizes 1,2,3 -> 2, 6, 26");
    CHECK(ok);
}

TEST_CASE("criterion 9: serialization round-trips and rejections") {
    std::mt19937_64 rng(2024);
    bool ok = true;
    for (int t = 0; t < 1000; ++t) {
        FinStruct s;
        PointId next = 1;
        std::size_t n = 1 + rng() % 7;
        for (std::size_t i = 0; i < n; ++i) {
            long num = static_cast<long>(rng() % 61) - 30;
            long den = static_cast<long>(rng() % 9) + 1;
            Rat q{BigInt(num), BigInt(den)};
            std::size_t kind = rng() % 8;
            ExtPos pos = kind == 0   ? ExtPos::pos_inf()
                         : kind == 1 ? ExtPos::neg_inf()
                         : kind <= 3 ? ExtPos::pair(q, static_cast<int>(rng() % 2))
                                     : ExtPos::finite(q);
            bool clash = false;
            for (const auto& p : s.points()) {
                if (p.pos == pos) clash = true;
            }
            if (clash) continue;
            s.add_point(next++, pos, (rng() & 1) ? Color::Blue : Color::Red);
        }
        for (const auto& a : s.points()) {
            for (const auto& b : s.points()) {
                if (a.id < b.id && a.color != b.color && (rng() & 1)) s.add_edge(a.id, b.id);
            }
        }
        std::string text = io::serialize_sample(s);
        auto parsed = io::parse_sample(text);
        if (!parsed.value || !(*parsed.value == s) || io::serialize_sample(*parsed.value) != text) {
            ok = false;
        }
    }
    auto code_of = [](const char* text) { return io::parse_sample(text).code; };
    bool codes_ok = code_of("OBG v1\np 1 2/4 r\n") == io::ParseCode::NotReduced &&
                    code_of("OBG v1\np 1 1/2 r\np 2 1/2 b\n") == io::ParseCode::DuplicatePosition &&
                    code_of("OBG v1\np 1 0/1 r\np 2 1/1 r\ne 1 2\n") ==
                        io::ParseCode::MonochromaticEdge;
    report(9, ok && codes_ok, "1000 byte-stable round-trips; malformed inputs get distinct codes");
    CHECK(ok);
    CHECK(codes_ok);
}
