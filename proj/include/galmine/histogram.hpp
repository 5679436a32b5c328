#pragma once

#include <span>
#include <string>
#include <vector>

#include "galmine/context.hpp"
#include "galmine/lattice.hpp"

namespace galmine {

// Per-trait affinity tuples; the intent type of the union/intersection
// lattices. Shape (trait count, per-trait modality counts) must match the
// owning ManyValuedContext.
struct HistogramVector {
    std::vector<std::vector<int>> per_trait;

    bool operator==(const HistogramVector&) const = default;
};

enum class HistogramMode { Union, Intersection };

struct HistogramConcept {
    Bitset extent;
    HistogramVector intent;
    HistogramMode mode = HistogramMode::Union;
};

// The object's own histogram.
HistogramVector object_histogram(const ManyValuedContext& mvc, std::size_t object);

// Union connection: componentwise maximum over the members' histograms;
// the empty set yields the all-zero vector (neutral element of max).
HistogramVector union_intent(const ManyValuedContext& mvc, const Bitset& objects);
// Objects whose histogram is componentwise <= h.
Bitset union_extent(const ManyValuedContext& mvc, const HistogramVector& h);

// Intersection connection: componentwise minimum; empty set yields all-max.
HistogramVector intersection_intent(const ManyValuedContext& mvc, const Bitset& objects);
// Objects whose histogram dominates h componentwise.
Bitset intersection_extent(const ManyValuedContext& mvc, const HistogramVector& h);

// Name-level variants.
HistogramVector union_intent(const ManyValuedContext& mvc, std::span<const std::string> objects);
HistogramVector intersection_intent(const ManyValuedContext& mvc,
                                    std::span<const std::string> objects);

// All distinct closed extents with their intents, via Close-by-One over
// objects. Order: extent size descending, then object-order lexicographic.
std::vector<HistogramConcept> enumerate_histogram_concepts(const ManyValuedContext& mvc,
                                                           HistogramMode mode,
                                                           const EnumerationOptions& opts = {});

// a -> max_affinity - a on every cell; intersection concepts of mvc equal
// union concepts of the flipped context, extent for extent.
ManyValuedContext flip_affinities(const ManyValuedContext& mvc);

// Paper-style intent rendering: per-trait bracketed tuples, "S:[1,2,3,2]";
// traits joined by a single space.
std::string render_histogram(const ManyValuedContext& mvc, const HistogramVector& h);

}  // namespace galmine
