#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "obg/oracle.hpp"

namespace obg {

enum class CaseTag { I, II, III, IV, V, VI };

/// Case (i): which points the finite structure carries.
enum class PointSet { OneRed, OneBlue, RedBlue };

/// Case (iv): the edge relation on the two-block order.
enum class IvRelation { Empty, Complete, BoundedGeneric, UnboundedGeneric };

/// Case (v): components of the relation on Q.2, as a bitmask.
enum PairRel : unsigned {
    kPairM = 1,     // the matched partner
    kPairAbove = 2, // blues later than the partner
    kPairBelow = 4, // blues earlier than the partner
};

/// Case (vi): the two independent halves of the relation on Q_2.
enum class R1Kind { Empty, RightGeneric, RightComplete }; // pairs red a < blue b
enum class R2Kind { Empty, LeftGeneric, LeftComplete };   // pairs blue b < red a

/// One parameterized structure from the classification. Only the fields of
/// the active caseTag are meaningful.
struct CatalogEntry {
    CaseTag tag = CaseTag::I;

    PointSet point_set = PointSet::OneRed; // i
    bool complete = false;                 // i, iii

    Color color = Color::Red; // ii: the copy's color; iii: the endpoint's color
    bool pos_side = true;     // iii: endpoint at +inf (else -inf)

    bool red_low = true; // iv: red block before blue block
    IvRelation iv_rel = IvRelation::Empty;
    bool red_reversed = false;  // iv bounded generic
    bool blue_reversed = false; // iv bounded generic

    bool red_first = true;  // v: pairs colored (red, blue) (else (blue, red))
    unsigned pair_rels = 0; // v: PairRel bitmask

    R1Kind r1 = R1Kind::Empty; // vi
    R2Kind r2 = R2Kind::Empty; // vi

    bool operator==(const CatalogEntry&) const = default;
};

/// Complete, duplicate-free list of valid parameterizations in stable order.
const std::vector<CatalogEntry>& all_entries();

/// Stable ASCII identifier, e.g. "iv.bounded_generic.RB" (uppercase letter =
/// that color's block order reversed), "v.rb.M+Above",
/// "vi.rightGeneric+leftComplete". Grammar documented in the CLI help.
std::string entry_name(const CatalogEntry& e);

/// Inverse of entry_name. Accepts the vi components in either order and the
/// bare alias "iv.bounded_generic" for the unreversed bounded generic.
std::optional<CatalogEntry> parse_entry(const std::string& name);

/// Adjacency as a pure symmetric predicate of the two endpoints' displayed
/// positions and colors (pair slots carry the partner information). Absent
/// exactly for entries containing a generic component, including bounded
/// generic, whose relation lives on hidden base coordinates.
struct ClosedFormRule {
    std::function<bool(const ExtPos& pa, Color ca, const ExtPos& pb, Color cb)> adjacent;
};
std::optional<ClosedFormRule> closed_form(const CatalogEntry& e);

/// Toggles one reversal flag of a case (iv) bounded-generic entry; the edge
/// relation itself is unchanged. Throws NotApplicable for anything else.
CatalogEntry apply_reversal(const CatalogEntry& e, Color which);

/// An oracle whose query semantics match the entry.
StructureOracle instantiate(const CatalogEntry& e, std::uint64_t seed);

} // namespace obg
