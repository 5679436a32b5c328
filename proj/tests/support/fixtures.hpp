#pragma once

// Shared test fixtures: the bundled potential-size dataset and small
// context builders / random generators.

#include <array>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "galmine/context.hpp"

namespace galmine::testing {

struct SizeRow {
    const char* taxon;
    std::array<int, 4> affinities;
};

// 15 macrophyte taxa, potential-size trait, 4 modalities, affinities 0..3
inline const std::vector<SizeRow>& size_rows() {
    static const std::vector<SizeRow> rows = {
        {"BERE", {1, 2, 3, 0}}, {"CALO", {0, 1, 2, 2}}, {"ELOC", {0, 2, 3, 1}},
        {"ELOE", {0, 2, 3, 1}}, {"ELON", {0, 2, 3, 1}}, {"LEMM", {3, 0, 0, 0}},
        {"MENA", {0, 1, 3, 1}}, {"MYRS", {0, 2, 2, 2}}, {"NASO", {0, 2, 2, 0}},
        {"NUPL", {0, 0, 1, 3}}, {"PTCO", {0, 0, 3, 0}}, {"PTNO", {0, 0, 2, 3}},
        {"PTPE", {0, 0, 1, 3}}, {"RANU", {0, 1, 2, 3}}, {"SEFC", {0, 1, 3, 1}},
    };
    return rows;
}

inline ManyValuedContext size_context() {
    std::vector<std::string> objects;
    std::vector<int> values;
    for (const auto& row : size_rows()) {
        objects.emplace_back(row.taxon);
        values.insert(values.end(), row.affinities.begin(), row.affinities.end());
    }
    Trait size{"S", "Potential Size", {"<0.08m", "0.08-0.3m", "0.3-1m", "1-5m"}};
    return ManyValuedContext(std::move(objects), {size}, std::move(values), 3);
}

// rows given as strings of '.'/'X' (or '0'/'1'), one per object
inline BinaryContext make_binary(std::vector<std::string> objects,
                                 std::vector<std::string> attributes,
                                 const std::vector<std::string>& rows, std::string name = "") {
    std::vector<Bitset> bits;
    bits.reserve(rows.size());
    for (const auto& r : rows) {
        Bitset b(attributes.size());
        for (std::size_t a = 0; a < r.size(); ++a)
            if (r[a] == 'X' || r[a] == '1') b.set(a);
        bits.push_back(std::move(b));
    }
    return BinaryContext(std::move(objects), std::move(attributes), std::move(bits),
                         std::move(name));
}

inline BinaryContext random_binary(std::mt19937& rng, std::size_t max_objects = 12,
                                   std::size_t max_attributes = 10) {
    std::uniform_int_distribution<std::size_t> obj_dist(0, max_objects);
    std::uniform_int_distribution<std::size_t> attr_dist(0, max_attributes);
    std::size_t n_obj = obj_dist(rng), n_attr = attr_dist(rng);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::bernoulli_distribution cell(density(rng));

    std::vector<std::string> objects, attributes;
    for (std::size_t o = 0; o < n_obj; ++o) objects.push_back("g" + std::to_string(o));
    for (std::size_t a = 0; a < n_attr; ++a) attributes.push_back("m" + std::to_string(a));
    std::vector<Bitset> rows(n_obj, Bitset(n_attr));
    for (std::size_t o = 0; o < n_obj; ++o)
        for (std::size_t a = 0; a < n_attr; ++a)
            if (cell(rng)) rows[o].set(a);
    return BinaryContext(std::move(objects), std::move(attributes), std::move(rows));
}

inline ManyValuedContext random_mvc(std::mt19937& rng, std::size_t max_objects = 10,
                                    std::size_t max_traits = 3, std::size_t max_modalities = 5,
                                    int max_affinity = 3) {
    std::uniform_int_distribution<std::size_t> obj_dist(1, max_objects);
    std::uniform_int_distribution<std::size_t> trait_dist(1, max_traits);
    std::uniform_int_distribution<std::size_t> mod_dist(1, max_modalities);
    std::uniform_int_distribution<int> aff(0, max_affinity);

    std::size_t n_obj = obj_dist(rng), n_traits = trait_dist(rng);
    std::vector<std::string> objects;
    for (std::size_t o = 0; o < n_obj; ++o) objects.push_back("g" + std::to_string(o));
    std::vector<Trait> traits;
    std::size_t total = 0;
    for (std::size_t t = 0; t < n_traits; ++t) {
        Trait trait;
        trait.code = std::string(1, static_cast<char>('A' + t));
        trait.name = trait.code;
        std::size_t n_mod = mod_dist(rng);
        for (std::size_t m = 0; m < n_mod; ++m) trait.modalities.push_back("m" + std::to_string(m));
        total += n_mod;
        traits.push_back(std::move(trait));
    }
    std::vector<int> values(n_obj * total);
    for (auto& v : values) v = aff(rng);
    return ManyValuedContext(std::move(objects), std::move(traits), std::move(values),
                             max_affinity);
}

inline Bitset random_subset(std::mt19937& rng, std::size_t universe) {
    Bitset out(universe);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < universe; ++i)
        if (bit(rng)) out.set(i);
    return out;
}

}  // namespace galmine::testing
