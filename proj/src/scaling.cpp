#include "galmine/scaling.hpp"

#include <algorithm>
#include <set>

namespace galmine {

AffinityGrouping AffinityGrouping::identity() { return {Kind::Identity, "identity"}; }
AffinityGrouping AffinityGrouping::presence() { return {Kind::Presence, "presence"}; }
AffinityGrouping AffinityGrouping::lowhigh() { return {Kind::LowHigh, "lowhigh"}; }

AffinityGrouping AffinityGrouping::custom(std::string name, std::map<int, int> mapping) {
    AffinityGrouping g(Kind::Custom, std::move(name));
    for (const auto& [from, to] : mapping) {
        if (from < 0 || to < 0)
            throw ConfigError("grouping " + g.name_ + ": affinity values must be non-negative");
    }
    g.mapping_ = std::move(mapping);
    return g;
}

AffinityGrouping AffinityGrouping::parse(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        if (text == "identity") return identity();
        if (text == "presence") return presence();
        if (text == "lowhigh") return lowhigh();
        throw ConfigError("unknown grouping \"" + std::string(text) +
                          "\" (expected identity, presence, lowhigh or name=0:0,1:1,...)");
    }
    std::string name(text.substr(0, eq));
    if (name.empty()) throw ConfigError("grouping definition has an empty name");
    std::map<int, int> mapping;
    std::string_view rest = text.substr(eq + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view pair = rest.substr(0, comma);
        rest = (comma == std::string_view::npos) ? std::string_view{} : rest.substr(comma + 1);
        auto colon = pair.find(':');
        if (colon == std::string_view::npos)
            throw ConfigError("grouping " + name + ": bad entry \"" + std::string(pair) +
                              "\" (expected affinity:value)");
        try {
            std::size_t p1 = 0, p2 = 0;
            int from = std::stoi(std::string(pair.substr(0, colon)), &p1);
            int to = std::stoi(std::string(pair.substr(colon + 1)), &p2);
            if (p1 != colon || p2 != pair.size() - colon - 1) throw std::invalid_argument("");
            if (mapping.count(from))
                throw ConfigError("grouping " + name + ": affinity " + std::to_string(from) +
                                  " mapped twice");
            mapping[from] = to;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("grouping " + name + ": bad entry \"" + std::string(pair) + "\"");
        }
    }
    return custom(std::move(name), std::move(mapping));
}

std::vector<int> AffinityGrouping::table_for(int max_affinity) const {
    std::vector<int> table(static_cast<std::size_t>(max_affinity) + 1);
    for (int a = 0; a <= max_affinity; ++a) {
        switch (kind_) {
            case Kind::Identity:
                table[a] = a;
                break;
            case Kind::Presence:
                table[a] = a == 0 ? 0 : 1;
                break;
            case Kind::LowHigh:
                table[a] = a <= 1 ? 0 : 1;
                break;
            case Kind::Custom: {
                auto it = mapping_.find(a);
                if (it == mapping_.end())
                    throw ConfigError("grouping " + name_ + ": no mapping for affinity " +
                                      std::to_string(a));
                table[a] = it->second;
                break;
            }
        }
    }
    return table;
}

ManyValuedContext group_affinities(const ManyValuedContext& mvc,
                                   const AffinityGrouping& grouping) {
    const std::vector<int> table = grouping.table_for(mvc.max_affinity());
    int new_max = 0;
    for (int v : table) new_max = std::max(new_max, v);

    std::vector<int> values;
    values.reserve(mvc.object_count() * mvc.total_modalities());
    for (std::size_t o = 0; o < mvc.object_count(); ++o)
        for (int v : mvc.row(o)) values.push_back(table[static_cast<std::size_t>(v)]);

    return ManyValuedContext(mvc.objects(), mvc.traits(), std::move(values), new_max);
}

namespace {

bool compact_names(const Trait& trait, int max_affinity) {
    return trait.modalities.size() <= 9 && max_affinity <= 9;
}

}  // namespace

std::string disjunctive_attribute_name(const Trait& trait, std::size_t modality, int affinity,
                                       int max_affinity) {
    if (compact_names(trait, max_affinity))
        return trait.code + std::to_string(modality + 1) + std::to_string(affinity);
    return trait.code + ".m" + std::to_string(modality + 1) + ".a" + std::to_string(affinity);
}

std::string pattern_attribute_name(const Trait& trait, std::span<const int> tuple,
                                   int max_affinity) {
    std::string out = trait.code;
    if (compact_names(trait, max_affinity)) {
        for (int v : tuple) out += std::to_string(v);
        return out;
    }
    out += ':';
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(tuple[i]);
    }
    return out;
}

BinaryContext disjunctive_scale(const ManyValuedContext& mvc, const DisjunctiveOptions& opts) {
    const std::size_t n_obj = mvc.object_count();
    const int max_aff = mvc.max_affinity();

    // (trait, modality, affinity) columns in trait/modality/affinity order
    std::vector<std::string> attributes;
    struct Column {
        std::size_t trait, modality;
        int affinity;
    };
    std::vector<Column> columns;
    for (std::size_t t = 0; t < mvc.trait_count(); ++t) {
        const Trait& trait = mvc.traits()[t];
        for (std::size_t m = 0; m < trait.modalities.size(); ++m) {
            for (int a = 0; a <= max_aff; ++a) {
                bool realized = false;
                for (std::size_t o = 0; o < n_obj && !realized; ++o)
                    realized = mvc.affinity(o, t, m) == a;
                if (realized || opts.full_columns) {
                    columns.push_back({t, m, a});
                    attributes.push_back(disjunctive_attribute_name(trait, m, a, max_aff));
                }
            }
        }
    }

    std::vector<Bitset> rows(n_obj, Bitset(columns.size()));
    for (std::size_t o = 0; o < n_obj; ++o)
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (mvc.affinity(o, columns[c].trait, columns[c].modality) == columns[c].affinity)
                rows[o].set(c);

    return BinaryContext(mvc.objects(), std::move(attributes), std::move(rows));
}

BinaryContext pattern_scale(const ManyValuedContext& mvc) {
    const std::size_t n_obj = mvc.object_count();

    std::vector<std::string> attributes;
    std::vector<Bitset> rows(n_obj, Bitset(0));
    std::vector<std::vector<bool>> incidence;  // per column, per object

    for (std::size_t t = 0; t < mvc.trait_count(); ++t) {
        const Trait& trait = mvc.traits()[t];
        std::set<std::vector<int>> tuples;  // lexicographic order
        for (std::size_t o = 0; o < n_obj; ++o) {
            auto tup = mvc.tuple(o, t);
            tuples.insert(std::vector<int>(tup.begin(), tup.end()));
        }
        for (const auto& tup : tuples) {
            attributes.push_back(pattern_attribute_name(trait, tup, mvc.max_affinity()));
            std::vector<bool> col(n_obj, false);
            for (std::size_t o = 0; o < n_obj; ++o) {
                auto own = mvc.tuple(o, t);
                col[o] = std::equal(own.begin(), own.end(), tup.begin(), tup.end());
            }
            incidence.push_back(std::move(col));
        }
    }

    for (std::size_t o = 0; o < n_obj; ++o) {
        Bitset row(attributes.size());
        for (std::size_t c = 0; c < attributes.size(); ++c)
            if (incidence[c][o]) row.set(c);
        rows[o] = std::move(row);
    }

    return BinaryContext(mvc.objects(), std::move(attributes), std::move(rows));
}

}  // namespace galmine
