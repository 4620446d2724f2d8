#include "obg/fin_struct.hpp"

#include <algorithm>

#include "obg/error.hpp"

namespace obg {

void FinStruct::add_point(PointId id, ExtPos pos, Color color) {
    if (index_.count(id)) {
        raise(ErrorKind::InvalidStructure, "duplicate point id " + std::to_string(id));
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), pos,
                               [](const Point& p, const ExtPos& x) { return p.pos < x; });
    if (it != points_.end() && it->pos == pos) {
        raise(ErrorKind::InvalidStructure, "duplicate position " + pos.str());
    }
    std::size_t at = static_cast<std::size_t>(it - points_.begin());
    points_.insert(it, Point{id, std::move(pos), color});
    reindex_from(at);
}

void FinStruct::reindex_from(std::size_t start) {
    if (start > 0) --start;
    for (std::size_t i = start; i < points_.size(); ++i) {
        index_[points_[i].id] = i;
    }
}

const FinStruct::Point& FinStruct::point(PointId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        raise(ErrorKind::UnknownId, "unknown point id " + std::to_string(id));
    }
    return points_[it->second];
}

void FinStruct::add_edge(PointId a, PointId b) {
    const Point& pa = point(a);
    const Point& pb = point(b);
    if (pa.color == pb.color) {
        raise(ErrorKind::InvalidStructure, "monochromatic edge");
    }
    edges_.insert({std::min(a, b), std::max(a, b)});
}

bool FinStruct::has_edge(PointId a, PointId b) const {
    return edges_.count({std::min(a, b), std::max(a, b)}) != 0;
}

std::size_t FinStruct::rank_of(PointId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        raise(ErrorKind::UnknownId, "unknown point id " + std::to_string(id));
    }
    return it->second;
}

bool FinStruct::same_pattern(const FinStruct& other) const {
    if (points_.size() != other.points_.size()) return false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].color != other.points_[i].color) return false;
    }
    auto index_edges = [](const FinStruct& s) {
        std::set<std::pair<std::size_t, std::size_t>> out;
        for (const auto& [a, b] : s.edges_) {
            std::size_t ia = s.rank_of(a);
            std::size_t ib = s.rank_of(b);
            out.insert({std::min(ia, ib), std::max(ia, ib)});
        }
        return out;
    };
    return index_edges(*this) == index_edges(other);
}

FinStruct induced_substructure(const FinStruct& s, const std::vector<PointId>& ids) {
    FinStruct out;
    for (PointId id : ids) {
        const auto& p = s.point(id);
        out.add_point(p.id, p.pos, p.color);
    }
    for (const auto& [a, b] : s.edges()) {
        if (out.contains(a) && out.contains(b)) {
            out.add_edge(a, b);
        }
    }
    return out;
}

bool is_partial_iso(const PartialIso& p, const FinStruct& src, const FinStruct& tgt) {
    std::set<PointId> dom;
    std::set<PointId> img;
    for (const auto& [s, t] : p.pairs) {
        const auto& ps = src.point(s);
        const auto& pt = tgt.point(t);
        if (!dom.insert(s).second || !img.insert(t).second) return false;
        if (ps.color != pt.color) return false;
    }
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < p.pairs.size(); ++j) {
            const auto& [s1, t1] = p.pairs[i];
            const auto& [s2, t2] = p.pairs[j];
            bool src_less = src.point(s1).pos < src.point(s2).pos;
            bool tgt_less = tgt.point(t1).pos < tgt.point(t2).pos;
            if (src_less != tgt_less) return false;
            if (src.has_edge(s1, s2) != tgt.has_edge(t1, t2)) return false;
        }
    }
    return true;
}

} // namespace obg
