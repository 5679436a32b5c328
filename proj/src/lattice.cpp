#include "galmine/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace galmine {

std::vector<Concept> enumerate_concepts(const BinaryContext& ctx,
                                        const EnumerationOptions& opts) {
    const std::size_t n = ctx.attribute_count();
    std::vector<Concept> out;

    auto emit = [&](Bitset intent) {
        if (out.size() >= opts.max_concepts)
            throw ResourceLimitError("concept enumeration exceeded limit of " +
                                     std::to_string(opts.max_concepts) +
                                     " (raise --max-concepts or GALOIS_MINER_MAX_CONCEPTS)");
        Bitset extent = ctx.extent(intent);
        out.push_back({std::move(extent), std::move(intent)});
    };

    Bitset current = ctx.close_attrs(Bitset(n));
    const Bitset all = Bitset::full(n);
    emit(current);

    // NextClosure: the smallest closed set lectically greater than current.
    while (current != all) {
        Bitset next(0);
        for (std::size_t i = n; i-- > 0;) {
            if (current.test(i)) {
                current.reset(i);  // restrict to the part below i
                continue;
            }
            Bitset candidate = current;
            candidate.set(i);
            candidate = ctx.close_attrs(candidate);
            // canonicity: no new attribute below i
            Bitset added = candidate.minus(current);
            if (added.find_first() >= i) {
                next = std::move(candidate);
                break;
            }
        }
        current = std::move(next);
        emit(current);
    }
    return out;
}

ConceptLattice build_order(std::vector<Concept> concepts) {
    ConceptLattice lat;
    lat.concepts = std::move(concepts);
    const std::size_t n = lat.concepts.size();
    if (n == 0) throw InternalError("build_order: empty concept list");
    const std::size_t n_objects = lat.concepts.front().extent.size();

    std::unordered_map<Bitset, std::size_t, BitsetHash> by_intent;
    by_intent.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!by_intent.emplace(lat.concepts[i].intent, i).second)
            throw InternalError("build_order: duplicate concept");
    }

    std::size_t top = 0, bottom = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (lat.concepts[i].extent.count() > lat.concepts[top].extent.count()) top = i;
        if (lat.concepts[i].intent.count() > lat.concepts[bottom].intent.count()) bottom = i;
    }
    lat.top_index = top;
    lat.bottom_index = bottom;

    // f({o}) = intent of the object concept of o (smallest extent containing o)
    std::vector<const Bitset*> object_intent(n_objects, nullptr);
    std::vector<std::size_t> gamma_size(n_objects, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t sz = lat.concepts[i].extent.count();
        lat.concepts[i].extent.for_each([&](std::size_t o) {
            if (!object_intent[o] || sz < gamma_size[o]) {
                object_intent[o] = &lat.concepts[i].intent;
                gamma_size[o] = sz;
            }
        });
    }

    // Upper covers of c: minimal closures of extent(c) + one outside object.
    // The closure's intent is intent(c) with f({o}), looked up by intent.
    for (std::size_t i = 0; i < n; ++i) {
        const Concept& c = lat.concepts[i];
        std::vector<std::size_t> candidates;
        for (std::size_t o = 0; o < n_objects; ++o) {
            if (c.extent.test(o)) continue;
            if (!object_intent[o])
                throw InternalError("build_order: object missing from every extent");
            auto it = by_intent.find(c.intent & *object_intent[o]);
            if (it == by_intent.end())
                throw InternalError("build_order: concept set is not closed under joins");
            if (std::find(candidates.begin(), candidates.end(), it->second) == candidates.end())
                candidates.push_back(it->second);
        }
        for (std::size_t j : candidates) {
            bool minimal = true;
            for (std::size_t k : candidates) {
                if (k != j && lat.concepts[k].extent.is_subset_of(lat.concepts[j].extent)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) lat.covers.emplace_back(i, j);
        }
    }
    std::sort(lat.covers.begin(), lat.covers.end());
    return lat;
}

std::vector<std::size_t> concept_levels(const ConceptLattice& lattice) {
    std::vector<std::size_t> levels(lattice.concepts.size(), 0);
    // Covers go lower -> upper; any order by extent size descending is
    // topological from the top.
    std::vector<std::size_t> order(lattice.concepts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lattice.concepts[a].extent.count() > lattice.concepts[b].extent.count();
    });
    std::vector<std::vector<std::size_t>> uppers(lattice.concepts.size());
    for (const auto& [lower, upper] : lattice.covers) uppers[lower].push_back(upper);
    for (std::size_t c : order)
        for (std::size_t u : uppers[c]) levels[c] = std::max(levels[c], levels[u] + 1);
    return levels;
}

std::size_t level_count(const ConceptLattice& lattice) {
    auto levels = concept_levels(lattice);
    std::size_t deepest = 0;
    for (std::size_t i = 0; i < lattice.concepts.size(); ++i) {
        if (i == lattice.top_index || i == lattice.bottom_index) continue;
        deepest = std::max(deepest, levels[i]);
    }
    return deepest;
}

ConceptLattice build_lattice(const BinaryContext& ctx, const EnumerationOptions& opts) {
    return build_order(enumerate_concepts(ctx, opts));
}

}  // namespace galmine
