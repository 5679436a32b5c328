#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "galmine/context.hpp"

namespace galmine {

struct EnumerationOptions {
    // Concept counts are worst-case exponential; enumeration aborts with
    // ResourceLimitError past this many concepts.
    std::size_t max_concepts = 1'000'000;
};

// All formal concepts of ctx, in lectic order of intents (the canonical
// order; intents are pairwise distinct so no ties). NextClosure over
// attribute sets, lectic order induced by stored attribute order.
std::vector<Concept> enumerate_concepts(const BinaryContext& ctx,
                                        const EnumerationOptions& opts = {});

// Concepts plus the Hasse diagram of the extent-inclusion order.
struct ConceptLattice {
    std::vector<Concept> concepts;
    // (lower, upper) index pairs; the transitive reduction of extent inclusion
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::size_t top_index = 0;     // extent = all objects
    std::size_t bottom_index = 0;  // intent = all attributes
};

// InternalError on duplicate concepts (an enumeration bug upstream).
ConceptLattice build_order(std::vector<Concept> concepts);

ConceptLattice build_lattice(const BinaryContext& ctx, const EnumerationOptions& opts = {});

// level[i] = length of the longest cover path from top to concept i
std::vector<std::size_t> concept_levels(const ConceptLattice& lattice);

// The paper's reporting convention: deepest level over concepts that are
// neither top nor bottom (0 when there are none).
std::size_t level_count(const ConceptLattice& lattice);

}  // namespace galmine
