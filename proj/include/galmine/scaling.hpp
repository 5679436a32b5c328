#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "galmine/context.hpp"

namespace galmine {

// A named coarsening of the affinity scale, applied value-wise.
// Built-ins: identity, presence (0 stays 0, 1..max collapse to 1) and
// lowhigh (0..1 collapse to 0, 2..max to 1). Custom groupings come from
// config entries of the form "name=0:0,1:1,2:1,3:1".
class AffinityGrouping {
public:
    static AffinityGrouping identity();
    static AffinityGrouping presence();
    static AffinityGrouping lowhigh();
    static AffinityGrouping custom(std::string name, std::map<int, int> mapping);

    // Accepts a built-in name or a "name=a:v,a:v,..." definition.
    static AffinityGrouping parse(std::string_view text);

    const std::string& name() const { return name_; }

    // Materializes the value table for a 0..max_affinity scale.
    // ConfigError if a custom mapping does not cover every value.
    std::vector<int> table_for(int max_affinity) const;

private:
    enum class Kind { Identity, Presence, LowHigh, Custom };

    AffinityGrouping(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    std::map<int, int> mapping_;  // custom only
};

ManyValuedContext group_affinities(const ManyValuedContext& mvc, const AffinityGrouping& grouping);

struct DisjunctiveOptions {
    // emit the full (modality, affinity) cross product instead of only the
    // combinations realized by some object
    bool full_columns = false;
};

// Complete disjunctive table: object x owns attribute (T, m, a) iff
// affinity(x, T, m) = a. Attributes ordered by trait, then modality, then
// affinity value.
BinaryContext disjunctive_scale(const ManyValuedContext& mvc, const DisjunctiveOptions& = {});

// Pattern table: one attribute per distinct (trait, affinity tuple) realized
// in the data; ordered by trait, then lexicographically by tuple.
BinaryContext pattern_scale(const ManyValuedContext& mvc);

// Attribute names. Compact when every index fits in one digit ("S21",
// "S0122"), separator forms otherwise ("S.m21.a3", "S:0-1-2-2").
// modality is 0-based here; rendered 1-based.
std::string disjunctive_attribute_name(const Trait& trait, std::size_t modality, int affinity,
                                       int max_affinity);
std::string pattern_attribute_name(const Trait& trait, std::span<const int> tuple,
                                   int max_affinity);

}  // namespace galmine
