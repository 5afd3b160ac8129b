#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aw/opalgebra.hpp"

namespace aw {

struct DashedEdge {
    GeneratorLabel from;
    GeneratorLabel to;
    GeneratorLabel derived; // the q-commutator generator [from, to]_q defines
};

struct Triangle {
    std::size_t edge;   // index into dashed_edges
    GeneratorLabel apex; // bosonic vertex commuting with both endpoints
};

// Pentagon on the bosonic generators. Dashed edges join non-commuting
// pairs, directed by the argument order of the defining q-commutator.
struct CompassGraph {
    std::vector<GeneratorLabel> vertices;
    std::vector<DashedEdge> dashed_edges;
    std::vector<std::pair<GeneratorLabel, GeneratorLabel>> solid_edges;
    std::vector<Triangle> triangles;
};

// Classifies every bosonic pair by its actual commutator; throws
// ConsistencyError when the non-commuting pairs are not the 5-cycle.
CompassGraph build_compass(const GeneratorRegistry &reg);

std::string export_dot(const CompassGraph &g);

} // namespace aw
