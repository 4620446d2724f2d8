#include "obg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "obg/analysis.hpp"
#include "obg/catalog.hpp"
#include "obg/error.hpp"
#include "obg/fixtures.hpp"
#include "obg/fraisse.hpp"
#include "obg/sample_io.hpp"
#include "obg/suites.hpp"

namespace obg::cli {

namespace {

constexpr const char* kEntryGrammar =
    "Entry identifiers:\n"
    "  i.red | i.blue | i.red+blue.{empty|complete}\n"
    "  ii.{red|blue}\n"
    "  iii.{negInf|posInf}.{red|blue}.{empty|complete}   (endpoint side, endpoint color)\n"
    "  iv[.br].{empty|complete|bounded_generic[.R|.B|.RB]|unbounded_generic}\n"
    "      br = blue block before red; R/B suffix letters mark reversed colors\n"
    "  v.{rb|br}.{empty|M|Above|Below|M+Above|M+Below|Above+Below|M+Above+Below}\n"
    "  vi.{empty|rightGeneric|rightComplete}+{empty|leftGeneric|leftComplete}\n"
    "  fixture:matching2Q | fixture:finiteNeighbors2Q   (non-homogeneous controls)\n";

std::uint64_t default_seed() {
    if (const char* env = std::getenv("OBG_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return 1;
}

std::optional<StructureOracle> oracle_by_name(const std::string& name, std::uint64_t seed) {
    if (auto fixture = instantiate_fixture(name, seed)) return fixture;
    if (name.rfind("limit:", 0) == 0) {
        if (auto cls = parse_class(name.substr(6))) return limit_oracle(*cls, seed);
        return std::nullopt;
    }
    if (auto entry = parse_entry(name)) return instantiate(*entry, seed);
    return std::nullopt;
}

void emit(const io::Report& report, const std::string& out_path, std::ostream& out,
          std::ostream& err) {
    std::string text = report.str();
    out << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot write " << out_path << "\n";
            return;
        }
        f << text;
    }
}

void attach_counterexample(io::Report& report, const Counterexample& cx) {
    report.add("counterexample.size", std::to_string(cx.iso.pairs.size() + 1));
    report.block.push_back("# counterexample: sample, map pairs, unmatched extension point");
    std::istringstream lines(io::serialize_sample(cx.snapshot));
    std::string line;
    while (std::getline(lines, line)) report.block.push_back(line);
    for (const auto& [s, t] : cx.iso.pairs) {
        report.block.push_back("# map " + std::to_string(s) + " -> " + std::to_string(t));
    }
    report.block.push_back("# extend " + std::to_string(cx.witness_point));
}

int cmd_catalog(std::ostream& out) {
    for (const auto& e : all_entries()) {
        out << entry_name(e) << "\n";
    }
    return 0;
}

int cmd_sample(const std::string& name, std::size_t size, std::uint64_t seed,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
    auto oracle = oracle_by_name(name, seed);
    if (!oracle) {
        err << "unknown entry '" << name << "'\n";
        return 3;
    }
    oracle->grow_to(size);
    std::string text = io::serialize_sample(
        oracle->sample(), {"entry = " + name + " seed = " + std::to_string(seed)});
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot write " << out_path << "\n";
            return 3;
        }
        f << text;
    }
    io::Report report;
    report.add("entry", name);
    report.add("size", std::to_string(oracle->sample().size()));
    if (!out_path.empty()) {
        report.add("out", out_path);
        out << report.str();
    }
    return 0;
}

int cmd_test(const std::string& selection, const std::string& suite, std::size_t sample_size,
             std::size_t trials, std::size_t max_constraints, std::uint64_t seed,
             const std::string& out_path, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names;
    if (selection == "all") {
        for (const auto& e : all_entries()) names.push_back(entry_name(e));
    } else {
        names.push_back(selection);
    }

    io::Report report;
    report.add("suite", suite);
    report.add("seed", std::to_string(seed));
    bool all_pass = true;
    bool any_applicable = false;
    std::optional<Counterexample> first_cx;

    for (const auto& name : names) {
        SuiteResult result;
        if (suite == "homogeneity") {
            auto oracle = oracle_by_name(name, seed);
            if (!oracle) {
                err << "unknown entry '" << name << "'\n";
                return 3;
            }
            result = run_homogeneity(*oracle, sample_size, trials, seed);
        } else if (suite == "density") {
            auto entry = parse_entry(name);
            if (!entry) {
                if (selection != "all") {
                    err << "density suite needs a catalog entry\n";
                    return 3;
                }
                continue;
            }
            result = run_density(*entry, trials, max_constraints, seed);
        } else if (suite == "closedform") {
            auto entry = parse_entry(name);
            if (!entry) {
                if (selection != "all") {
                    err << "closedform suite needs a catalog entry\n";
                    return 3;
                }
                continue;
            }
            result = run_closedform(*entry, 12, seed);
        } else {
            err << "unknown suite '" << suite << "' (homogeneity|density|closedform)\n";
            return 3;
        }
        if (!result.applicable) {
            if (selection != "all") {
                report.add(name, "not-applicable: " + result.note);
                report.verdict = "inconclusive";
                emit(report, out_path, out, err);
                return report.exit_code();
            }
            continue;
        }
        any_applicable = true;
        report.add(name, (result.pass ? "pass" : "fail") + std::string(": ") + result.note);
        if (!result.pass) {
            all_pass = false;
            if (!first_cx && result.counterexample) first_cx = result.counterexample;
        }
    }
    if (!any_applicable) {
        report.verdict = "inconclusive";
        emit(report, out_path, out, err);
        return report.exit_code();
    }
    report.verdict = all_pass ? "pass" : "fail";
    if (first_cx) attach_counterexample(report, *first_cx);
    emit(report, out_path, out, err);
    return report.exit_code();
}

int cmd_classify(const std::string& input, std::size_t budget, std::uint64_t seed,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
    io::Report report;
    if (auto oracle = oracle_by_name(input, seed)) {
        ReductVerdict reduct = reduct_classify(*oracle, budget);
        EdgeVerdict edge = edge_classify(*oracle, reduct, budget);
        const char* tags[] = {"i", "ii", "iii", "iv", "v", "vi"};
        report.add("input", input);
        report.add("reduct", tags[static_cast<int>(reduct.tag)]);
        report.add("entry", entry_name(edge.entry));
        report.add("probes", std::to_string(reduct.evidence.size() + edge.probes.size()));
        report.verdict = "pass";
        emit(report, out_path, out, err);
        return report.exit_code();
    }
    // file input: evidence-only reduct guess from the bare sample
    std::ifstream f(input);
    if (!f) {
        err << "no such entry or file: '" << input << "'\n";
        return 3;
    }
    std::stringstream buffer;
    buffer << f.rdbuf();
    auto parsed = io::parse_sample(buffer.str());
    if (!parsed.value) {
        err << "parse error at line " << parsed.line << ": "
            << io::parse_code_name(parsed.code) << " (" << parsed.message << ")\n";
        return 3;
    }
    auto [tag, why] = guess_reduct_from_sample(*parsed.value);
    const char* tags[] = {"i", "ii", "iii", "iv", "v", "vi"};
    report.add("input", input);
    report.add("mode", "evidence-only");
    report.add("reduct", tags[static_cast<int>(tag)]);
    report.add("evidence", why);
    report.verdict = "inconclusive"; // a bare sample cannot witness density
    emit(report, out_path, out, err);
    return report.exit_code();
}

int cmd_distinguish(const std::string& n1, const std::string& n2, std::size_t depth,
                    std::uint64_t seed, std::size_t budget, const std::string& out_path,
                    std::ostream& out, std::ostream& err) {
    auto o1 = oracle_by_name(n1, seed);
    auto o2 = oracle_by_name(n2, seed);
    if (!o1 || !o2) {
        err << "unknown entry\n";
        return 3;
    }
    BnfResult result = back_and_forth(*o1, *o2, depth, seed, budget);
    io::Report report;
    report.add("first", n1);
    report.add("second", n2);
    report.add("depth", std::to_string(depth));
    report.add("calls", std::to_string(result.calls));
    report.add("outcome", result.distinguished ? "distinguished" : "indistinguishable");
    if (result.distinguished) {
        report.add("distinguished.at", std::to_string(result.depth));
        report.block.push_back("# configuration realized in " +
                               (result.config->realized_in_first ? n1 : n2) + " only");
        std::istringstream lines(io::serialize_sample(result.config->realized));
        std::string line;
        while (std::getline(lines, line)) report.block.push_back(line);
    } else {
        report.add("exhaustive.to", std::to_string(result.exhaustive_to));
    }
    bool expect_distinguished = n1 != n2;
    report.verdict = (result.distinguished == expect_distinguished) ? "pass" : "fail";
    emit(report, out_path, out, err);
    return report.exit_code();
}

int cmd_fraisse(const std::string& cls_name, const std::string& property, std::size_t max_size,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
    auto cls = parse_class(cls_name);
    if (!cls) {
        err << "unknown class '" << cls_name << "'\n";
        return 3;
    }
    std::vector<ClassProperty> props;
    if (property == "HP") props = {ClassProperty::HP};
    else if (property == "JEP") props = {ClassProperty::JEP};
    else if (property == "AP") props = {ClassProperty::AP};
    else if (property == "all") props = {ClassProperty::HP, ClassProperty::JEP, ClassProperty::AP};
    else {
        err << "unknown property '" << property << "' (HP|JEP|AP|all)\n";
        return 3;
    }
    io::Report report;
    report.add("class", cls_name);
    report.add("max_size", std::to_string(max_size));
    bool all_pass = true;
    for (ClassProperty p : props) {
        AmalgamReport r = check_property(*cls, p, max_size);
        const char* pname = p == ClassProperty::HP ? "HP" : p == ClassProperty::JEP ? "JEP" : "AP";
        report.add(pname, (r.pass ? "pass" : "fail") + std::string(": ") + r.note);
        if (!r.pass) {
            all_pass = false;
            if (r.a) {
                report.block.push_back("# failing base/structure");
                std::istringstream lines(io::serialize_sample(*r.a));
                std::string line;
                while (std::getline(lines, line)) report.block.push_back(line);
            }
        }
    }
    report.add("caveat", "brute-force evidence at this size, not a proof");
    report.verdict = all_pass ? "pass" : "fail";
    emit(report, out_path, out, err);
    return report.exit_code();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"obg: countable homogeneous ordered bipartite graphs as growable oracles"};
    app.footer(kEntryGrammar);
    app.require_subcommand(1);

    std::string entry, entry2, suite, property, input, out_path;
    std::size_t size = 8, sample_size = 6, trials = 200, max_constraints = 3;
    std::size_t depth = 4, budget = 300, bnf_budget = 2000, max_size = 3;
    std::uint64_t seed = default_seed();

    auto* catalog = app.add_subcommand("catalog", "list all catalog entry identifiers");
    (void)catalog;

    auto* sample = app.add_subcommand("sample", "grow an entry's sample and write it");
    sample->add_option("entry", entry)->required();
    sample->add_option("--size", size);
    sample->add_option("--seed", seed);
    sample->add_option("--out", out_path);

    auto* test = app.add_subcommand("test", "run an analysis suite against entries");
    test->add_option("entry", entry, "entry id, fixture:..., limit:..., or 'all'")->required();
    test->add_option("suite", suite, "homogeneity|density|closedform")->required();
    test->add_option("--sample-size", sample_size);
    test->add_option("--trials", trials);
    test->add_option("--max-constraints", max_constraints);
    test->add_option("--seed", seed);
    test->add_option("--out", out_path);

    auto* classify = app.add_subcommand("classify", "classify an entry oracle or a sample file");
    classify->add_option("input", input)->required();
    classify->add_option("--budget", budget);
    classify->add_option("--seed", seed);
    classify->add_option("--out", out_path);

    auto* distinguish = app.add_subcommand("distinguish", "bounded back-and-forth comparison");
    distinguish->add_option("first", entry)->required();
    distinguish->add_option("second", entry2)->required();
    distinguish->add_option("--depth", depth);
    distinguish->add_option("--seed", seed);
    distinguish->add_option("--budget", bnf_budget);
    distinguish->add_option("--out", out_path);

    auto* fraisse = app.add_subcommand("fraisse", "check amalgamation class properties");
    fraisse->add_option("class", entry, "allOrdered2ColoredBipartite|redBlockBeforeBlue|rightClass|leftClass")
        ->required();
    fraisse->add_option("property", property, "HP|JEP|AP|all")->required();
    fraisse->add_option("--max-size", max_size);
    fraisse->add_option("--out", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 3;
    }

    try {
        if (app.got_subcommand("catalog")) return cmd_catalog(out);
        if (app.got_subcommand("sample")) return cmd_sample(entry, size, seed, out_path, out, err);
        if (app.got_subcommand("test")) {
            return cmd_test(entry, suite, sample_size, trials, max_constraints, seed, out_path,
                            out, err);
        }
        if (app.got_subcommand("classify")) {
            return cmd_classify(input, budget, seed, out_path, out, err);
        }
        if (app.got_subcommand("distinguish")) {
            return cmd_distinguish(entry, entry2, depth, seed, bnf_budget, out_path, out, err);
        }
        if (app.got_subcommand("fraisse")) {
            return cmd_fraisse(entry, property, max_size, out_path, out, err);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Inconclusive || e.kind() == ErrorKind::BudgetExceeded) {
            io::Report report;
            report.add("error", e.what());
            report.verdict = "inconclusive";
            out << report.str();
            return 2;
        }
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << app.help();
    return 3;
}

} // namespace obg::cli
