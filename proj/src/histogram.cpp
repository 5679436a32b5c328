#include "galmine/histogram.hpp"

#include <algorithm>

namespace galmine {

namespace {

void check_shape(const ManyValuedContext& mvc, const HistogramVector& h) {
    if (h.per_trait.size() != mvc.trait_count())
        throw InputError("histogram has " + std::to_string(h.per_trait.size()) +
                         " traits, context has " + std::to_string(mvc.trait_count()));
    for (std::size_t t = 0; t < mvc.trait_count(); ++t) {
        const auto& trait = mvc.traits()[t];
        if (h.per_trait[t].size() != trait.modalities.size())
            throw InputError("histogram tuple for trait " + trait.code + " has " +
                             std::to_string(h.per_trait[t].size()) + " entries, expected " +
                             std::to_string(trait.modalities.size()));
        for (int v : h.per_trait[t]) {
            if (v < 0 || v > mvc.max_affinity())
                throw InputError("histogram value " + std::to_string(v) +
                                 " out of range 0.." + std::to_string(mvc.max_affinity()) +
                                 " for trait " + trait.code);
        }
    }
}

HistogramVector filled(const ManyValuedContext& mvc, int value) {
    HistogramVector h;
    h.per_trait.reserve(mvc.trait_count());
    for (const auto& trait : mvc.traits())
        h.per_trait.emplace_back(trait.modalities.size(), value);
    return h;
}

}  // namespace

HistogramVector object_histogram(const ManyValuedContext& mvc, std::size_t object) {
    HistogramVector h;
    h.per_trait.reserve(mvc.trait_count());
    for (std::size_t t = 0; t < mvc.trait_count(); ++t) {
        auto tup = mvc.tuple(object, t);
        h.per_trait.emplace_back(tup.begin(), tup.end());
    }
    return h;
}

HistogramVector union_intent(const ManyValuedContext& mvc, const Bitset& objects) {
    HistogramVector h = filled(mvc, 0);
    objects.for_each([&](std::size_t o) {
        for (std::size_t t = 0; t < mvc.trait_count(); ++t) {
            auto tup = mvc.tuple(o, t);
            for (std::size_t m = 0; m < tup.size(); ++m)
                h.per_trait[t][m] = std::max(h.per_trait[t][m], tup[m]);
        }
    });
    return h;
}

HistogramVector intersection_intent(const ManyValuedContext& mvc, const Bitset& objects) {
    HistogramVector h = filled(mvc, mvc.max_affinity());
    objects.for_each([&](std::size_t o) {
        for (std::size_t t = 0; t < mvc.trait_count(); ++t) {
            auto tup = mvc.tuple(o, t);
            for (std::size_t m = 0; m < tup.size(); ++m)
                h.per_trait[t][m] = std::min(h.per_trait[t][m], tup[m]);
        }
    });
    return h;
}

Bitset union_extent(const ManyValuedContext& mvc, const HistogramVector& h) {
    check_shape(mvc, h);
    Bitset out(mvc.object_count());
    for (std::size_t o = 0; o < mvc.object_count(); ++o) {
        bool dominated = true;
        for (std::size_t t = 0; t < mvc.trait_count() && dominated; ++t) {
            auto tup = mvc.tuple(o, t);
            for (std::size_t m = 0; m < tup.size(); ++m) {
                if (tup[m] > h.per_trait[t][m]) {
                    dominated = false;
                    break;
                }
            }
        }
        if (dominated) out.set(o);
    }
    return out;
}

Bitset intersection_extent(const ManyValuedContext& mvc, const HistogramVector& h) {
    check_shape(mvc, h);
    Bitset out(mvc.object_count());
    for (std::size_t o = 0; o < mvc.object_count(); ++o) {
        bool dominates = true;
        for (std::size_t t = 0; t < mvc.trait_count() && dominates; ++t) {
            auto tup = mvc.tuple(o, t);
            for (std::size_t m = 0; m < tup.size(); ++m) {
                if (tup[m] < h.per_trait[t][m]) {
                    dominates = false;
                    break;
                }
            }
        }
        if (dominates) out.set(o);
    }
    return out;
}

HistogramVector union_intent(const ManyValuedContext& mvc,
                             std::span<const std::string> objects) {
    return union_intent(mvc, mvc.object_set(objects));
}

HistogramVector intersection_intent(const ManyValuedContext& mvc,
                                    std::span<const std::string> objects) {
    return intersection_intent(mvc, mvc.object_set(objects));
}

namespace {

Bitset mode_close(const ManyValuedContext& mvc, HistogramMode mode, const Bitset& objects) {
    if (mode == HistogramMode::Union) return union_extent(mvc, union_intent(mvc, objects));
    return intersection_extent(mvc, intersection_intent(mvc, objects));
}

// Close-by-One over objects: every closed extent exactly once.
void cbo(const ManyValuedContext& mvc, HistogramMode mode, const Bitset& extent,
         std::size_t min_object, std::vector<Bitset>& out, std::size_t max_concepts) {
    if (out.size() >= max_concepts)
        throw ResourceLimitError("histogram concept enumeration exceeded limit of " +
                                 std::to_string(max_concepts) +
                                 " (raise --max-concepts or GALOIS_MINER_MAX_CONCEPTS)");
    out.push_back(extent);
    for (std::size_t o = min_object; o < mvc.object_count(); ++o) {
        if (extent.test(o)) continue;
        Bitset grown = extent;
        grown.set(o);
        Bitset closed = mode_close(mvc, mode, grown);
        // canonicity: the closure may not add objects before o
        Bitset added = closed.minus(extent);
        if (added.find_first() >= o) cbo(mvc, mode, closed, o + 1, out, max_concepts);
    }
}

}  // namespace

std::vector<HistogramConcept> enumerate_histogram_concepts(const ManyValuedContext& mvc,
                                                           HistogramMode mode,
                                                           const EnumerationOptions& opts) {
    std::vector<Bitset> extents;
    cbo(mvc, mode, mode_close(mvc, mode, Bitset(mvc.object_count())), 0, extents,
        opts.max_concepts);

    std::sort(extents.begin(), extents.end(), [](const Bitset& a, const Bitset& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        // object-order lexicographic: the set holding the smaller
        // first-differing object comes first
        return b.lectic_less(a);
    });

    std::vector<HistogramConcept> out;
    out.reserve(extents.size());
    for (auto& e : extents) {
        HistogramVector intent = mode == HistogramMode::Union ? union_intent(mvc, e)
                                                              : intersection_intent(mvc, e);
        out.push_back({std::move(e), std::move(intent), mode});
    }
    return out;
}

ManyValuedContext flip_affinities(const ManyValuedContext& mvc) {
    std::vector<int> values;
    values.reserve(mvc.object_count() * mvc.total_modalities());
    for (std::size_t o = 0; o < mvc.object_count(); ++o)
        for (int v : mvc.row(o)) values.push_back(mvc.max_affinity() - v);
    return ManyValuedContext(mvc.objects(), mvc.traits(), std::move(values),
                             mvc.max_affinity());
}

std::string render_histogram(const ManyValuedContext& mvc, const HistogramVector& h) {
    check_shape(mvc, h);
    std::string out;
    for (std::size_t t = 0; t < mvc.trait_count(); ++t) {
        if (t) out += ' ';
        out += mvc.traits()[t].code;
        out += ":[";
        for (std::size_t m = 0; m < h.per_trait[t].size(); ++m) {
            if (m) out += ',';
            out += std::to_string(h.per_trait[t][m]);
        }
        out += ']';
    }
    return out;
}

}  // namespace galmine
