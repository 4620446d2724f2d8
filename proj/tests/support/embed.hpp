#pragma once

// Test-side embeddability oracle: decides by closed case analysis whether an
// abstract finite configuration embeds into a catalog structure. Independent
// of the oracle/witness machinery on purpose; the acceptance suite plays the
// two against each other.

#include <optional>
#include <vector>

#include "obg/catalog.hpp"
#include "obg/enumerate.hpp"

namespace obg::testsupport {

namespace detail {

inline bool acyclic(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    std::vector<std::vector<std::size_t>> next(n);
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& [a, b] : arcs) {
        next[a].push_back(b);
        ++indeg[b];
    }
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
        if (indeg[i] == 0) queue.push_back(i);
    }
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        ++seen;
        for (std::size_t w : next[v]) {
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    return seen == n;
}

inline bool blocks_separated(const FinStruct& c, bool red_low) {
    bool seen_high = false;
    for (const auto& p : c.points()) {
        bool high = (p.color == Color::Red) != red_low;
        if (high) seen_high = true;
        else if (seen_high) return false;
    }
    return true;
}

inline bool embeds_bounded(const FinStruct& c, bool red_low, bool rrev, bool brev) {
    if (!blocks_separated(c, red_low)) return false;
    // base-order constraint digraph: an arc x -> y means base(x) < base(y)
    const auto& pts = c.points();
    std::size_t n = pts.size();
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    std::vector<std::size_t> reds, blues;
    for (std::size_t i = 0; i < n; ++i) {
        (pts[i].color == Color::Red ? reds : blues).push_back(i);
    }
    for (std::size_t k = 0; k + 1 < reds.size(); ++k) {
        if (rrev) arcs.push_back({reds[k + 1], reds[k]});
        else arcs.push_back({reds[k], reds[k + 1]});
    }
    for (std::size_t k = 0; k + 1 < blues.size(); ++k) {
        if (brev) arcs.push_back({blues[k + 1], blues[k]});
        else arcs.push_back({blues[k], blues[k + 1]});
    }
    for (std::size_t r : reds) {
        for (std::size_t b : blues) {
            if (c.has_edge(pts[r].id, pts[b].id)) arcs.push_back({r, b});
            else arcs.push_back({b, r});
        }
    }
    return acyclic(n, arcs);
}

inline bool embeds_paired(const FinStruct& c, bool red_first, unsigned rels) {
    const auto& pts = c.points();
    std::size_t n = pts.size();
    if (n == 0) return true;
    auto slot_of = [red_first](Color col) { return (col == Color::Red) == red_first ? 0 : 1; };
    // choice bit i: point i joins point i-1's pair (else starts a new one)
    for (std::size_t mask = 0; mask < (std::size_t(1) << (n - 1)); ++mask) {
        std::vector<std::size_t> rank(n, 0);
        bool ok = true;
        for (std::size_t i = 1; i < n && ok; ++i) {
            bool join = mask & (std::size_t(1) << (i - 1));
            if (join) {
                bool prev_joined = i >= 2 && (mask & (std::size_t(1) << (i - 2)));
                if (prev_joined || slot_of(pts[i - 1].color) != 0 || slot_of(pts[i].color) != 1) {
                    ok = false;
                    break;
                }
                rank[i] = rank[i - 1];
            } else {
                rank[i] = rank[i - 1] + 1;
            }
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if (pts[i].color == pts[j].color) continue;
                std::size_t r = pts[i].color == Color::Red ? rank[i] : rank[j];
                std::size_t b = pts[i].color == Color::Red ? rank[j] : rank[i];
                bool adj;
                if (r == b) adj = rels & kPairM;
                else if (r < b) adj = rels & kPairAbove;
                else adj = rels & kPairBelow;
                if (c.has_edge(pts[i].id, pts[j].id) != adj) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace detail

/// Does the abstract configuration embed into the entry's structure?
inline bool embeds(const CatalogEntry& e, const FinStruct& c) {
    const auto& pts = c.points();
    std::size_t reds = 0, blues = 0;
    for (const auto& p : pts) {
        (p.color == Color::Red ? reds : blues) += 1;
    }
    switch (e.tag) {
    case CaseTag::I: {
        std::size_t max_red = e.point_set != PointSet::OneBlue ? 1 : 0;
        std::size_t max_blue = e.point_set != PointSet::OneRed ? 1 : 0;
        if (reds > max_red || blues > max_blue) return false;
        if (reds == 1 && blues == 1) {
            if (pts[0].color != Color::Red) return false; // red sits below blue
            return c.has_edge(pts[0].id, pts[1].id) == e.complete;
        }
        return c.edges().empty();
    }
    case CaseTag::II:
        if (e.color == Color::Red ? blues > 0 : reds > 0) return false;
        return c.edges().empty();
    case CaseTag::III: {
        std::size_t endpoints = e.color == Color::Red ? reds : blues;
        if (endpoints > 1) return false;
        if (endpoints == 1) {
            const auto& ep = e.pos_side ? pts.back() : pts.front();
            if (ep.color != e.color) return false;
            for (const auto& p : pts) {
                if (p.color == e.color) continue;
                if (c.has_edge(ep.id, p.id) != e.complete) return false;
            }
        }
        return true;
    }
    case CaseTag::IV: {
        if (!detail::blocks_separated(c, e.red_low)) return false;
        std::size_t cross = reds * blues;
        switch (e.iv_rel) {
        case IvRelation::Empty: return c.edges().empty();
        case IvRelation::Complete: return c.edges().size() == cross;
        case IvRelation::UnboundedGeneric: return true;
        case IvRelation::BoundedGeneric:
            return detail::embeds_bounded(c, e.red_low, e.red_reversed, e.blue_reversed);
        }
        return false;
    }
    case CaseTag::V:
        return detail::embeds_paired(c, e.red_first, e.pair_rels);
    case CaseTag::VI:
        for (const auto& p : pts) {
            for (const auto& q : pts) {
                if (p.color != Color::Red || q.color != Color::Blue) continue;
                bool edge = c.has_edge(p.id, q.id);
                if (p.pos < q.pos) {
                    if (e.r1 == R1Kind::Empty && edge) return false;
                    if (e.r1 == R1Kind::RightComplete && !edge) return false;
                } else {
                    if (e.r2 == R2Kind::Empty && edge) return false;
                    if (e.r2 == R2Kind::LeftComplete && !edge) return false;
                }
            }
        }
        return true;
    }
    return false;
}

/// Minimal size of a configuration embedding into exactly one of the two
/// entries, by exhaustive search up to max_size.
inline std::optional<std::size_t> min_distinguishing_depth(const CatalogEntry& e1,
                                                           const CatalogEntry& e2,
                                                           std::size_t max_size) {
    for (std::size_t k = 1; k <= max_size; ++k) {
        for (const auto& c : enumerate_structures(k)) {
            if (embeds(e1, c) != embeds(e2, c)) return k;
        }
    }
    return std::nullopt;
}

/// True when two entries share the reduct (the colored order underneath).
inline bool same_reduct(const CatalogEntry& a, const CatalogEntry& b) {
    if (a.tag != b.tag) return false;
    switch (a.tag) {
    case CaseTag::I: return a.point_set == b.point_set;
    case CaseTag::II: return a.color == b.color;
    case CaseTag::III: return a.pos_side == b.pos_side && a.color == b.color;
    case CaseTag::IV: return a.red_low == b.red_low;
    case CaseTag::V: return a.red_first == b.red_first;
    case CaseTag::VI: return true;
    }
    return false;
}

} // namespace obg::testsupport
