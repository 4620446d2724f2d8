#include "obg/sample_io.hpp"

#include <sstream>

#include "obg/error.hpp"
#include "obg/rat.hpp"

namespace obg::io {

namespace {

struct PosParse {
    std::optional<ExtPos> pos;
    ParseCode code = ParseCode::Ok;
};

PosParse parse_position(const std::string& text) {
    std::string body = text;
    std::string tag;
    if (auto at = text.find('@'); at != std::string::npos) {
        body = text.substr(0, at);
        tag = text.substr(at + 1);
    }
    // the rational part is always required and must be reduced
    auto slash = body.find('/');
    if (slash == std::string::npos) return {std::nullopt, ParseCode::BadPosition};
    std::string num_text = body.substr(0, slash);
    std::string den_text = body.substr(slash + 1);
    auto digits = [](const std::string& s, bool sign) {
        if (s.empty()) return false;
        std::size_t i = (sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    if (!digits(num_text, true) || !digits(den_text, false)) {
        return {std::nullopt, ParseCode::BadRational};
    }
    BigInt num(num_text);
    BigInt den(den_text);
    if (den <= 0) return {std::nullopt, ParseCode::BadRational};
    if (boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den) != 1) {
        return {std::nullopt, ParseCode::NotReduced};
    }
    Rat q(num, den);
    if (tag.empty()) return {ExtPos::finite(q), ParseCode::Ok};
    if (tag == "inf" || tag == "ninf") {
        if (!(q == Rat(0))) return {std::nullopt, ParseCode::BadPosition};
        return {tag == "inf" ? ExtPos::pos_inf() : ExtPos::neg_inf(), ParseCode::Ok};
    }
    if (tag == "pair0") return {ExtPos::pair(q, 0), ParseCode::Ok};
    if (tag == "pair1") return {ExtPos::pair(q, 1), ParseCode::Ok};
    return {std::nullopt, ParseCode::BadPosition};
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

const char* parse_code_name(ParseCode code) {
    switch (code) {
    case ParseCode::Ok: return "ok";
    case ParseCode::BadHeader: return "bad-header";
    case ParseCode::BadLine: return "bad-line";
    case ParseCode::BadRational: return "bad-rational";
    case ParseCode::NotReduced: return "not-reduced";
    case ParseCode::BadPosition: return "bad-position";
    case ParseCode::BadColor: return "bad-color";
    case ParseCode::DuplicateId: return "duplicate-id";
    case ParseCode::DuplicatePosition: return "duplicate-position";
    case ParseCode::UnknownEdgeId: return "unknown-edge-id";
    case ParseCode::MonochromaticEdge: return "monochromatic-edge";
    case ParseCode::DuplicateEdge: return "duplicate-edge";
    case ParseCode::NotCanonicalOrder: return "not-canonical-order";
    }
    return "?";
}

ParseResult parse_sample(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    FinStruct s;
    std::optional<ExtPos> last_pos;
    std::optional<std::pair<PointId, PointId>> last_edge;
    bool seen_edges = false;

    auto fail = [&](ParseCode code, const std::string& msg) {
        return ParseResult{std::nullopt, code, lineno, msg};
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            if (line != "OBG v1") return fail(ParseCode::BadHeader, "expected 'OBG v1'");
            have_header = true;
            continue;
        }
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "p") {
            if (seen_edges) return fail(ParseCode::NotCanonicalOrder, "point after edges");
            if (toks.size() != 4) return fail(ParseCode::BadLine, "point line needs 3 fields");
            unsigned long raw = 0;
            try {
                std::size_t used = 0;
                raw = std::stoul(toks[1], &used);
                if (used != toks[1].size() || raw == 0) throw std::invalid_argument("id");
            } catch (...) {
                return fail(ParseCode::BadLine, "bad point id");
            }
            auto pp = parse_position(toks[2]);
            if (!pp.pos) return fail(pp.code, "bad position '" + toks[2] + "'");
            Color color;
            if (toks[3] == "r") color = Color::Red;
            else if (toks[3] == "b") color = Color::Blue;
            else return fail(ParseCode::BadColor, "color must be r or b");
            PointId id = static_cast<PointId>(raw);
            if (s.contains(id)) return fail(ParseCode::DuplicateId, "duplicate id");
            for (const auto& p : s.points()) {
                if (p.pos == *pp.pos) return fail(ParseCode::DuplicatePosition, "duplicate position");
            }
            if (last_pos && !(*last_pos < *pp.pos)) {
                return fail(ParseCode::NotCanonicalOrder, "points out of position order");
            }
            last_pos = *pp.pos;
            s.add_point(id, *pp.pos, color);
            continue;
        }
        if (toks[0] == "e") {
            if (toks.size() != 3) return fail(ParseCode::BadLine, "edge line needs 2 fields");
            unsigned long a = 0, b = 0;
            try {
                a = std::stoul(toks[1]);
                b = std::stoul(toks[2]);
            } catch (...) {
                return fail(ParseCode::BadLine, "bad edge ids");
            }
            seen_edges = true;
            PointId pa = static_cast<PointId>(a), pb = static_cast<PointId>(b);
            if (!s.contains(pa) || !s.contains(pb)) {
                return fail(ParseCode::UnknownEdgeId, "edge cites an unknown id");
            }
            if (pa >= pb) return fail(ParseCode::NotCanonicalOrder, "edge not normalized");
            if (s.has_edge(pa, pb)) return fail(ParseCode::DuplicateEdge, "duplicate edge");
            if (s.point(pa).color == s.point(pb).color) {
                return fail(ParseCode::MonochromaticEdge, "edge joins same-colored points");
            }
            std::pair<PointId, PointId> key{pa, pb};
            if (last_edge && !(*last_edge < key)) {
                return fail(ParseCode::NotCanonicalOrder, "edges out of order");
            }
            last_edge = key;
            s.add_edge(pa, pb);
            continue;
        }
        return fail(ParseCode::BadLine, "unknown line kind '" + toks[0] + "'");
    }
    if (!have_header) return fail(ParseCode::BadHeader, "missing header");
    return ParseResult{std::move(s), ParseCode::Ok, 0, ""};
}

std::string serialize_sample(const FinStruct& s, const std::vector<std::string>& comments) {
    std::string out = "OBG v1\n";
    for (const auto& c : comments) {
        out += "# " + c + "\n";
    }
    for (const auto& p : s.points()) {
        out += "p " + std::to_string(p.id) + " " + p.pos.str() + " " + color_letter(p.color) + "\n";
    }
    for (const auto& [a, b] : s.edges()) {
        out += "e " + std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return out;
}

int Report::exit_code() const {
    if (verdict == "pass") return 0;
    if (verdict == "fail") return 1;
    return 2;
}

std::string Report::str() const {
    std::string out;
    for (const auto& [k, v] : fields) {
        out += k + " = " + v + "\n";
    }
    out += "verdict = " + verdict + "\n";
    for (const auto& line : block) {
        out += line + "\n";
    }
    return out;
}

} // namespace obg::io
