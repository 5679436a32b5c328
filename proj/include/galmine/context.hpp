#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galmine/bitset.hpp"
#include "galmine/errors.hpp"

namespace galmine {

// A biological attribute together with its qualitative classes.
struct Trait {
    std::string code;                     // short label, e.g. "S"
    std::string name;                     // free text, e.g. "Potential Size"
    std::vector<std::string> modalities;  // ordered, unique within the trait
};

// Objects x traits x modalities with integer affinity values in
// 0..max_affinity. Immutable after construction; every accessor is const.
class ManyValuedContext {
public:
    // values are object-major: for object i, trait t, modality m the cell is
    // values[i * total_modalities + offset(t) + m].
    ManyValuedContext(std::vector<std::string> objects, std::vector<Trait> traits,
                      std::vector<int> values, int max_affinity = 3);

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Trait>& traits() const { return traits_; }
    int max_affinity() const { return max_affinity_; }

    std::size_t object_count() const { return objects_.size(); }
    std::size_t trait_count() const { return traits_.size(); }
    std::size_t total_modalities() const { return total_modalities_; }
    std::size_t modality_offset(std::size_t trait) const { return offsets_[trait]; }

    int affinity(std::size_t object, std::size_t trait, std::size_t modality) const;

    // whole affinity row of one object (all traits, concatenated in trait order)
    std::span<const int> row(std::size_t object) const;
    // the object's affinity tuple on one trait
    std::span<const int> tuple(std::size_t object, std::size_t trait) const;

    std::size_t object_index(std::string_view name) const;  // InputError if unknown
    std::size_t trait_index(std::string_view code) const;   // InputError if unknown

    Bitset object_set(std::span<const std::string> names) const;
    std::vector<std::string> object_names(const Bitset& set) const;

private:
    std::vector<std::string> objects_;
    std::vector<Trait> traits_;
    std::vector<std::size_t> offsets_;
    std::size_t total_modalities_ = 0;
    std::vector<int> values_;
    int max_affinity_ = 3;
};

// Formal context (E, F, R). Incidence is stored row-major as
// object->attribute bitsets with a column-major mirror for fast g;
// iteration order over objects and attributes is the stored order.
class BinaryContext {
public:
    BinaryContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<Bitset> rows, std::string name = "");

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }
    const std::string& name() const { return name_; }

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }

    bool incidence(std::size_t object, std::size_t attribute) const {
        return rows_[object].test(attribute);
    }

    const Bitset& row(std::size_t object) const { return rows_[object]; }
    const Bitset& column(std::size_t attribute) const { return cols_[attribute]; }

    // f: attributes shared by every object in X (all attributes for X = {})
    Bitset intent(const Bitset& object_set) const;
    // g: objects owning every attribute in Y (all objects for Y = {})
    Bitset extent(const Bitset& attribute_set) const;
    Bitset close_objects(const Bitset& object_set) const { return extent(intent(object_set)); }
    Bitset close_attrs(const Bitset& attribute_set) const { return intent(extent(attribute_set)); }

    std::size_t object_index(std::string_view name) const;
    std::size_t attribute_index(std::string_view name) const;

    Bitset object_set(std::span<const std::string> names) const;
    Bitset attribute_set(std::span<const std::string> names) const;
    std::vector<std::string> object_names(const Bitset& set) const;
    std::vector<std::string> attribute_names(const Bitset& set) const;

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
    std::string name_;
};

// A formal concept: extent = g(intent), intent = f(extent).
struct Concept {
    Bitset extent;
    Bitset intent;

    bool operator==(const Concept&) const = default;
};

// Name-level derivation operators (spec surface; unknown names raise
// InputError naming the offender).
std::vector<std::string> derive_intent(std::span<const std::string> objects,
                                       const BinaryContext& ctx);
std::vector<std::string> derive_extent(std::span<const std::string> attributes,
                                       const BinaryContext& ctx);
std::vector<std::string> close_objects(std::span<const std::string> objects,
                                       const BinaryContext& ctx);
std::vector<std::string> close_attrs(std::span<const std::string> attributes,
                                     const BinaryContext& ctx);

// Burmeister .cxt interop. write -> read -> write is byte-identical.
std::string write_burmeister(const BinaryContext& ctx);
BinaryContext read_burmeister(std::string_view text);
BinaryContext read_burmeister_file(const std::string& path);
void write_burmeister_file(const BinaryContext& ctx, const std::string& path);

}  // namespace galmine
