#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obg/oracle.hpp"

namespace obg {

/// The finite amalgamation classes used for generic-limit constructions.
enum class ClassKind {
    AllOrdered2ColoredBipartite, // every finite ordered 2-colored bipartite graph
    RedBlockBeforeBlue,          // all red points precede all blue points
    RightClass,                  // every edge (red a, blue b) has a < b
    LeftClass,                   // every edge has a > b
};

struct ClassDescriptor {
    ClassKind kind;
    std::string name;
};

const std::vector<ClassDescriptor>& all_classes();
std::optional<ClassDescriptor> parse_class(const std::string& name);

/// Membership predicate (isomorphism-invariant, checks order/edge constraints).
bool member(const ClassDescriptor& c, const FinStruct& s);

enum class ClassProperty { HP, JEP, AP };

struct AmalgamReport {
    ClassProperty property = ClassProperty::HP;
    std::size_t max_size = 0;
    bool pass = true;
    std::string note;
    // failing witnesses: HP uses a+b (structure, bad substructure);
    // JEP uses a+b; AP uses a+b+c (base and the two extensions)
    std::optional<FinStruct> a, b, c;
};

/// Exhaustive verification of HP / JEP / AP over all class members of size
/// <= max_size, searching amalgams over order interleavings and free edge
/// completions. Throws BudgetExceeded when max_size exceeds the cap.
AmalgamReport check_property(const ClassDescriptor& c, ClassProperty prop, std::size_t max_size);

/// Generic limit of the class: an oracle growing by a fair seeded schedule of
/// one-point extensions, with free adjacencies committed as they are drawn.
StructureOracle limit_oracle(const ClassDescriptor& c, std::uint64_t seed);

} // namespace obg
