#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obg/fin_struct.hpp"

namespace obg::io {

/// Parse failure codes for the OBG v1 sample format; each malformed-input
/// class gets its own code so callers can assert on the exact failure.
enum class ParseCode {
    Ok,
    BadHeader,
    BadLine,
    BadRational,
    NotReduced,
    BadPosition,
    BadColor,
    DuplicateId,
    DuplicatePosition,
    UnknownEdgeId,
    MonochromaticEdge,
    DuplicateEdge,
    NotCanonicalOrder,
};

const char* parse_code_name(ParseCode code);

struct ParseResult {
    std::optional<FinStruct> value;
    ParseCode code = ParseCode::Ok;
    std::size_t line = 0;
    std::string message;
};

/// Reads the line-based OBG v1 format:
///
///   OBG v1
///   # comment
///   p <id> <num>/<den>[@inf|@ninf|@pair0|@pair1] <r|b>
///   e <id> <id>
///
/// Point lines must appear in position order, edge lines normalized
/// (smaller id first) and sorted; rationals must be in lowest terms with a
/// positive denominator (infinite positions use 0/1). Comments and blank
/// lines are skipped.
ParseResult parse_sample(const std::string& text);

/// Canonical serialization: header, points in position order, edges sorted.
/// Comments, when given, go right after the header. parse(serialize(s))
/// recovers s exactly, and serialization of comment-free canonical files is
/// byte-stable under a parse round-trip.
std::string serialize_sample(const FinStruct& s, const std::vector<std::string>& comments = {});

/// Machine-readable report: `key = value` lines, one verdict line, and an
/// optional trailing block (counterexamples in sample syntax). Exit code 0
/// iff the verdict is pass, 1 fail, 2 inconclusive.
struct Report {
    std::vector<std::pair<std::string, std::string>> fields;
    std::string verdict = "pass"; // pass | fail | inconclusive
    std::vector<std::string> block;

    void add(const std::string& key, const std::string& value) { fields.push_back({key, value}); }
    int exit_code() const;
    std::string str() const;
};

} // namespace obg::io
