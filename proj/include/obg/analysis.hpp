#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "obg/catalog.hpp"
#include "obg/oracle.hpp"

namespace obg {

/// Outcome of the reduct classifier: which colored linear order underlies the
/// oracle's structure, with the parameters that case carries.
struct ReductVerdict {
    CaseTag tag = CaseTag::VI;
    PointSet point_set = PointSet::OneRed; // i
    Color color = Color::Red;              // ii: the copy; iii: the endpoint
    bool pos_side = true;                  // iii
    bool red_low = true;                   // iv
    bool red_first = true;                 // v
    std::vector<std::string> evidence;     // performed queries, in order
};

/// Outcome of the edge classifier: the full catalog entry guess plus the
/// recorded probes backing it.
struct EdgeVerdict {
    CatalogEntry entry;
    std::vector<std::string> probes;
};

/// A verified non-extendability witness: the partial iso is valid on the
/// snapshot and the forced spec for the extension point has no image.
struct Counterexample {
    FinStruct snapshot;
    PartialIso iso;
    PointId witness_point = 0;
    WitnessSpec forced;
};

struct HomogeneityReport {
    std::optional<Counterexample> counterexample;
    std::size_t trials = 0;
};

/// A distinguishing configuration between two oracles: the abstract pattern
/// realized on the `realized_in_first` side whose final point has no image on
/// the other side (the forced spec below returned NoSuchPoint there).
struct BnfConfig {
    bool realized_in_first = true;
    FinStruct realized;     // config including the unmatched final point
    FinStruct mirrored;     // the other side's matched prefix
    WitnessSpec failed;     // forced spec that failed on the mirror side
};

struct BnfResult {
    bool distinguished = false;
    std::size_t depth = 0;        // size of the distinguishing config, or the
                                  // depth searched when indistinguishable
    std::size_t exhaustive_to = 0; // largest size fully enumerated in budget
    std::size_t calls = 0;
    std::optional<BnfConfig> config;
};

/// Forced one-point-extension spec: the image of `a` must sit between the
/// images of its mapped order-neighbors and reproduce its adjacencies to the
/// mapped points of the opposite color.
WitnessSpec forced_spec(const FinStruct& src, PointId a, const PartialIso& p,
                        const FinStruct& tgt);

/// Image candidate for a forced spec: an unused existing sample point first,
/// a fresh witness otherwise.
std::optional<PointId> find_extension_image(StructureOracle& o, const WitnessSpec& spec,
                                            const std::set<PointId>& used);

/// Decides the reduct case by oracle probes (saturation, color counts, block
/// separation, empty-gap detection). Throws BudgetExceeded when the probe
/// budget (minimum 8) runs out inconclusively.
ReductVerdict reduct_classify(StructureOracle& o, std::size_t budget);

/// Refines a reduct verdict to a full catalog entry by witness probes.
/// Throws Inconclusive when probes contradict every case.
EdgeVerdict edge_classify(StructureOracle& o, const ReductVerdict& reduct, std::size_t budget);

/// reduct_classify followed by edge_classify.
CatalogEntry classify_entry(StructureOracle& o, std::size_t budget);

/// One-point-extension homogeneity test: enumerates (then samples) partial
/// isos of the grown sample and tries to extend each by one more point.
/// Evidence is one-sided: only non-homogeneity is ever proven.
HomogeneityReport one_point_extension_test(StructureOracle& o, std::size_t sample_size,
                                           std::size_t trials, std::uint64_t seed);

/// Bounded back-and-forth comparison by iterative deepening over challenge
/// configurations played on both sides; distinguishing depth is the minimal
/// configuration size the schedule realizes on exactly one side.
BnfResult back_and_forth(StructureOracle& a, StructureOracle& b, std::size_t depth,
                         std::uint64_t seed, std::size_t call_budget = 2000);

/// Evidence-only reduct guess from a bare sample (no oracle to probe).
std::pair<CaseTag, std::string> guess_reduct_from_sample(const FinStruct& s);

} // namespace obg
