#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "obg/color.hpp"
#include "obg/position.hpp"

namespace obg {

using PointId = std::uint32_t;

/// Finite ordered 2-colored bipartite graph in canonical form: points kept
/// sorted by position, all ids and positions distinct, edges only between
/// opposite colors.
class FinStruct {
public:
    struct Point {
        PointId id;
        ExtPos pos;
        Color color;
    };

    FinStruct() = default;

    /// Inserts a point, keeping position order. Throws InvalidStructure on a
    /// duplicate id or position.
    void add_point(PointId id, ExtPos pos, Color color);

    /// Adds the unordered edge {a, b}. Throws UnknownId for absent ids and
    /// InvalidStructure for monochromatic edges.
    void add_edge(PointId a, PointId b);

    bool contains(PointId id) const { return index_.count(id) != 0; }
    const Point& point(PointId id) const; // throws UnknownId
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    bool has_edge(PointId a, PointId b) const;
    const std::set<std::pair<PointId, PointId>>& edges() const { return edges_; }

    /// Index of a point in position order.
    std::size_t rank_of(PointId id) const;

    /// Same isomorphism class: equal color sequences in position order and
    /// equal edge patterns under the (unique) order-preserving bijection.
    bool same_pattern(const FinStruct& other) const;

    bool operator==(const FinStruct& other) const {
        if (points_.size() != other.points_.size() || edges_ != other.edges_) return false;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            const Point& p = points_[i];
            const Point& q = other.points_[i];
            if (p.id != q.id || p.color != q.color || !(p.pos == q.pos)) return false;
        }
        return true;
    }

private:
    std::vector<Point> points_;               // sorted by pos
    std::map<PointId, std::size_t> index_;    // id -> index into points_
    std::set<std::pair<PointId, PointId>> edges_; // normalized (min, max)

    void reindex_from(std::size_t start);
};

/// Restriction of S to the given ids (edges included); throws UnknownId.
FinStruct induced_substructure(const FinStruct& s, const std::vector<PointId>& ids);

/// A finite candidate map between two structures, as (source, target) pairs.
struct PartialIso {
    std::vector<std::pair<PointId, PointId>> pairs;
};

/// True iff p is injective both ways and preserves order, colors, and edges
/// in both directions. Throws UnknownId when a cited id is absent.
bool is_partial_iso(const PartialIso& p, const FinStruct& src, const FinStruct& tgt);

} // namespace obg
