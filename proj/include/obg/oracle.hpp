#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "obg/fin_struct.hpp"

namespace obg {

/// Request for a new point: color, open displayed interval (absent bound =
/// unbounded) and adjacency signs against existing sample points.
struct WitnessSpec {
    Color color = Color::Red;
    std::optional<ExtPos> lo;
    std::optional<ExtPos> hi;
    std::vector<std::pair<PointId, bool>> constraints; // (point, must be adjacent)
};

/// Mutable bookkeeping shared by every entry's semantics.
///
/// The sample is the ground truth for everything already materialized:
/// adjacency of sampled pairs is stored as edges at creation time, so answers
/// can never drift as the sample grows.
struct OracleState {
    FinStruct sample;
    PointId next_id = 1;
    std::uint64_t seed = 0;
    std::mt19937_64 rng;
    std::map<PointId, Rat> base;        // bounded generic: base coordinate per point
    std::map<PointId, PointId> partner; // pairing entries/fixtures (symmetric)

    bool draw_bit() { return (rng() & 1) != 0; }
};

/// One point scheduled for creation by a placement plan.
struct PlannedPoint {
    ExtPos pos;
    Color color = Color::Red;
    std::optional<Rat> base;
};

/// Atomic extension of the sample: the requested point plus any forced
/// companions (pair partners), with every new edge decided up front.
struct PlacementPlan {
    std::vector<PlannedPoint> points; // points[0] is the requested point
    std::vector<std::pair<std::size_t, std::size_t>> partner_links;
    std::vector<std::tuple<std::size_t, PointId, bool>> edges_to_existing;
    std::vector<std::tuple<std::size_t, std::size_t, bool>> internal_edges;
};

/// Entry-specific semantics: decides whether a witness request is realizable
/// in the (fixed, countable) structure and, if so, how to extend the sample.
class EntrySemantics {
public:
    virtual ~EntrySemantics() = default;
    virtual std::unique_ptr<EntrySemantics> clone() const = 0;

    /// Adjacency never involves a free choice for deterministic entries.
    virtual bool deterministic() const = 0;

    /// Plan a new point satisfying the spec, or nullopt when the structure
    /// has no such (unsampled) point. May consume state.rng for free choices.
    virtual std::optional<PlacementPlan> plan(OracleState& state, const WitnessSpec& spec) const = 0;
};

/// A finite, monotonically growing sample of one fixed countable structure,
/// answering order/color/adjacency/density/witness queries consistently with
/// that structure's defining semantics.
///
/// Growth mutates; concurrent use needs external serialization of calls.
/// Snapshots are plain values and freely shareable. Copying an oracle clones
/// its whole state, so independent trials can fork cheaply.
class StructureOracle {
public:
    StructureOracle(std::string label, std::uint64_t seed, std::unique_ptr<EntrySemantics> sem);

    StructureOracle(const StructureOracle& other);
    StructureOracle& operator=(const StructureOracle& other);
    StructureOracle(StructureOracle&&) noexcept = default;
    StructureOracle& operator=(StructureOracle&&) noexcept = default;

    const std::string& label() const { return label_; }
    std::uint64_t seed() const { return state_.seed; }
    bool deterministic() const { return sem_->deterministic(); }

    /// Adjacency of two sampled points. Throws UnknownId / SameColor.
    bool adjacent(PointId a, PointId b) const;

    /// A sample point of color c strictly inside (lo, hi): an existing one if
    /// present, else a newly created one if the structure has any, else
    /// nullopt. Throws EmptyInterval when lo >= hi.
    std::optional<PointId> exists_between(const std::optional<ExtPos>& lo,
                                          const std::optional<ExtPos>& hi, Color c);

    /// A new point realizing the spec, or nullopt when the structure contains
    /// none. Throws MalformedSpec for bad constraints, EmptyInterval for an
    /// empty interval.
    std::optional<PointId> realize_witness(const WitnessSpec& spec);

    /// Immutable canonical copy of the current sample.
    FinStruct sample_snapshot() const { return state_.sample; }
    const FinStruct& sample() const { return state_.sample; }

    /// Grows the sample to >= n points by a fair seeded interleaving of
    /// density and witness challenges; saturates quietly when the structure
    /// is exhausted (finite entries). Throws BudgetExceeded past the cap.
    const FinStruct& grow_to(std::size_t n);

    /// Entry-specific inspection hooks (nullopt where not applicable).
    std::optional<Rat> base_coord(PointId id) const;
    std::optional<PointId> partner(PointId id) const;

private:
    PointId apply(PlacementPlan&& plan);
    void validate_spec(const WitnessSpec& spec) const;

    std::string label_;
    OracleState state_;
    std::unique_ptr<EntrySemantics> sem_;
};

/// Sub-intervals of (lo, hi) left open by the sampled positions: candidate
/// slots for a new plain point, in display order. Bounds are returned as
/// optional rational shadows suitable for mediant_between; slots inside a
/// Q.2 pair are skipped (nothing fits between the two slots of a pair).
struct PlainGap {
    std::optional<Rat> lo;
    std::optional<Rat> hi;
};
std::vector<PlainGap> plain_gaps(const FinStruct& sample, const std::optional<ExtPos>& lo,
                                 const std::optional<ExtPos>& hi);

} // namespace obg
