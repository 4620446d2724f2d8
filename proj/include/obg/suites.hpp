#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obg/analysis.hpp"
#include "obg/catalog.hpp"

namespace obg {

struct SuiteResult {
    bool applicable = true;
    bool pass = true;
    std::string note;
    std::vector<std::pair<std::string, std::string>> stats;
    std::optional<Counterexample> counterexample;
};

/// Homogeneity evidence by one-point extensions. The verdict is one-sided:
/// pass only means no counterexample surfaced within the trial budget; a fail
/// carries a re-verified counterexample.
SuiteResult run_homogeneity(StructureOracle oracle, std::size_t sample_size, std::size_t trials,
                            std::uint64_t seed);

/// Witness density for the generically-witnessed entries: randomized specs
/// with up to max_constraints signed constraints inside that entry's valid
/// interval regime must all be realized, with exact-position interval checks.
SuiteResult run_density(const CatalogEntry& e, std::size_t specs, std::size_t max_constraints,
                        std::uint64_t seed);

/// Oracle adjacency against the entry's closed-form rule on a grown sample.
SuiteResult run_closedform(const CatalogEntry& e, std::size_t grow, std::uint64_t seed);

} // namespace obg
