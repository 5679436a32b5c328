#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "galmine/context.hpp"
#include "galmine/lattice.hpp"

namespace galmine {

// premise -> conclusion over a context's attributes; the conclusion is
// stored disjoint from the premise.
struct Implication {
    Bitset premise;
    Bitset conclusion;
    std::size_t support = 0;  // |g(premise | conclusion)|

    bool operator==(const Implication&) const = default;
};

// Exact rational in [0, 1], kept unreduced so that confidence serializes as
// |g(premise|conclusion)| / |g(premise)|.
struct Rational {
    std::size_t num = 0;
    std::size_t den = 1;
};

struct AssociationRule {
    Bitset premise;
    Bitset conclusion;
    std::size_t support = 0;
    Rational confidence;  // den 0 only for a vacuous implication (empty premise extent)
};

// exact comparison: a >= b (a den of 0 means a vacuously true rule, >= all)
bool rational_geq(const Rational& a, const Rational& b);

// Duquenne-Guigues basis: P -> f(g(P)) \ P for every pseudo-intent P, in
// lectic order. Sound, complete, minimum cardinality.
std::vector<Implication> dg_basis(const BinaryContext& ctx);

bool implication_holds(const Implication& imp, const BinaryContext& ctx);
std::size_t implication_support(const Implication& imp, const BinaryContext& ctx);

// Name-level variants; unknown attribute names raise InputError.
Implication make_implication(const BinaryContext& ctx, std::span<const std::string> premise,
                             std::span<const std::string> conclusion);

// Forward-chaining closure of start under the basis (linear-closure
// semantics: apply every implication whose premise is contained until
// fixpoint).
Bitset close_under(std::span<const Implication> basis, Bitset start);

// true iff imp.conclusion is contained in the basis-closure of imp.premise
bool follows(const Implication& imp, std::span<const Implication> basis);

struct RuleThresholds {
    std::size_t min_support = 0;
    Rational min_confidence{1, 1};  // 0 < min_confidence <= 1
};

// Luxenburger-style rules between cover-related concept intents plus the
// DG basis, both filtered by the thresholds. Ordered by descending support,
// then descending confidence, then lectic premise order.
std::vector<AssociationRule> association_rules(const BinaryContext& ctx,
                                               const ConceptLattice& lattice,
                                               const RuleThresholds& thresholds);
std::vector<AssociationRule> association_rules(const BinaryContext& ctx,
                                               const RuleThresholds& thresholds,
                                               const EnumerationOptions& opts = {});

enum class ImplicationStyle {
    Compact,      // "P13 ⇒ P30 (support 13)"
    Individuals,  // "P13 ⇒ P30 (true for 13 individuals)"
};

std::string render_implication(const BinaryContext& ctx, const Implication& imp,
                               ImplicationStyle style = ImplicationStyle::Compact);
std::string render_rule(const BinaryContext& ctx, const AssociationRule& rule);

}  // namespace galmine
