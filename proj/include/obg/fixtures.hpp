#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obg/oracle.hpp"

namespace obg {

/// Non-catalog oracles used as negative controls for the homogeneity tester.
///
///   fixture:matching2Q        — two blocks 2.Q whose relation is an
///                               order-isomorphic perfect matching
///   fixture:finiteNeighbors2Q — two blocks where every red point is joined
///                               to exactly one adjacent pair of blue points
///                               (each neighbor set has size 2)
///
/// Neither structure is homogeneous; the tester must find small witnesses.
std::optional<StructureOracle> instantiate_fixture(const std::string& name, std::uint64_t seed);

const std::vector<std::string>& fixture_names();

} // namespace obg
