#include "galmine/context.hpp"

#include <algorithm>
#include <unordered_set>

namespace galmine {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second)
            throw InputError(std::string("duplicate ") + what + " name: " + n);
    }
}

}  // namespace

ManyValuedContext::ManyValuedContext(std::vector<std::string> objects, std::vector<Trait> traits,
                                     std::vector<int> values, int max_affinity)
    : objects_(std::move(objects)),
      traits_(std::move(traits)),
      values_(std::move(values)),
      max_affinity_(max_affinity) {
    require_unique(objects_, "object");
    if (max_affinity_ < 0) throw InputError("max_affinity must be non-negative");

    std::unordered_set<std::string_view> codes;
    offsets_.reserve(traits_.size());
    for (const auto& t : traits_) {
        if (!codes.insert(t.code).second)
            throw InputError("duplicate trait code: " + t.code);
        if (t.modalities.empty())
            throw InputError("trait " + t.code + " has no modalities");
        std::unordered_set<std::string_view> mods;
        for (const auto& m : t.modalities) {
            if (!mods.insert(m).second)
                throw InputError("duplicate modality \"" + m + "\" in trait " + t.code);
        }
        offsets_.push_back(total_modalities_);
        total_modalities_ += t.modalities.size();
    }

    if (values_.size() != objects_.size() * total_modalities_)
        throw InputError("affinity table size mismatch: expected " +
                         std::to_string(objects_.size() * total_modalities_) + " cells, got " +
                         std::to_string(values_.size()));
    for (int v : values_) {
        if (v < 0 || v > max_affinity_)
            throw InputError("affinity " + std::to_string(v) + " out of range 0.." +
                             std::to_string(max_affinity_));
    }
}

int ManyValuedContext::affinity(std::size_t object, std::size_t trait,
                                std::size_t modality) const {
    return values_[object * total_modalities_ + offsets_[trait] + modality];
}

std::span<const int> ManyValuedContext::row(std::size_t object) const {
    return {values_.data() + object * total_modalities_, total_modalities_};
}

std::span<const int> ManyValuedContext::tuple(std::size_t object, std::size_t trait) const {
    return {values_.data() + object * total_modalities_ + offsets_[trait],
            traits_[trait].modalities.size()};
}

std::size_t ManyValuedContext::object_index(std::string_view name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) throw InputError("unknown object: " + std::string(name));
    return static_cast<std::size_t>(it - objects_.begin());
}

std::size_t ManyValuedContext::trait_index(std::string_view code) const {
    auto it = std::find_if(traits_.begin(), traits_.end(),
                           [&](const Trait& t) { return t.code == code; });
    if (it == traits_.end()) throw InputError("unknown trait: " + std::string(code));
    return static_cast<std::size_t>(it - traits_.begin());
}

Bitset ManyValuedContext::object_set(std::span<const std::string> names) const {
    Bitset out(objects_.size());
    for (const auto& n : names) out.set(object_index(n));
    return out;
}

std::vector<std::string> ManyValuedContext::object_names(const Bitset& set) const {
    std::vector<std::string> out;
    set.for_each([&](std::size_t i) { out.push_back(objects_[i]); });
    return out;
}

BinaryContext::BinaryContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes, std::vector<Bitset> rows,
                             std::string name)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)),
      name_(std::move(name)) {
    require_unique(objects_, "object");
    require_unique(attributes_, "attribute");
    if (rows_.size() != objects_.size())
        throw InputError("row count does not match object count");
    for (const auto& r : rows_) {
        if (r.size() != attributes_.size())
            throw InputError("row width does not match attribute count");
    }
    cols_.assign(attributes_.size(), Bitset(objects_.size()));
    for (std::size_t o = 0; o < rows_.size(); ++o)
        rows_[o].for_each([&](std::size_t a) { cols_[a].set(o); });
}

Bitset BinaryContext::intent(const Bitset& object_set) const {
    Bitset result = Bitset::full(attributes_.size());
    object_set.for_each([&](std::size_t o) { result &= rows_[o]; });
    return result;
}

Bitset BinaryContext::extent(const Bitset& attribute_set) const {
    Bitset result = Bitset::full(objects_.size());
    attribute_set.for_each([&](std::size_t a) { result &= cols_[a]; });
    return result;
}

std::size_t BinaryContext::object_index(std::string_view name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) throw InputError("unknown object: " + std::string(name));
    return static_cast<std::size_t>(it - objects_.begin());
}

std::size_t BinaryContext::attribute_index(std::string_view name) const {
    auto it = std::find(attributes_.begin(), attributes_.end(), name);
    if (it == attributes_.end()) throw InputError("unknown attribute: " + std::string(name));
    return static_cast<std::size_t>(it - attributes_.begin());
}

Bitset BinaryContext::object_set(std::span<const std::string> names) const {
    Bitset out(objects_.size());
    for (const auto& n : names) out.set(object_index(n));
    return out;
}

Bitset BinaryContext::attribute_set(std::span<const std::string> names) const {
    Bitset out(attributes_.size());
    for (const auto& n : names) out.set(attribute_index(n));
    return out;
}

std::vector<std::string> BinaryContext::object_names(const Bitset& set) const {
    std::vector<std::string> out;
    set.for_each([&](std::size_t i) { out.push_back(objects_[i]); });
    return out;
}

std::vector<std::string> BinaryContext::attribute_names(const Bitset& set) const {
    std::vector<std::string> out;
    set.for_each([&](std::size_t i) { out.push_back(attributes_[i]); });
    return out;
}

std::vector<std::string> derive_intent(std::span<const std::string> objects,
                                       const BinaryContext& ctx) {
    return ctx.attribute_names(ctx.intent(ctx.object_set(objects)));
}

std::vector<std::string> derive_extent(std::span<const std::string> attributes,
                                       const BinaryContext& ctx) {
    return ctx.object_names(ctx.extent(ctx.attribute_set(attributes)));
}

std::vector<std::string> close_objects(std::span<const std::string> objects,
                                       const BinaryContext& ctx) {
    return ctx.object_names(ctx.close_objects(ctx.object_set(objects)));
}

std::vector<std::string> close_attrs(std::span<const std::string> attributes,
                                     const BinaryContext& ctx) {
    return ctx.attribute_names(ctx.close_attrs(ctx.attribute_set(attributes)));
}

}  // namespace galmine
