#include "galmine/implications.hpp"

#include <algorithm>

namespace galmine {

namespace {

// closure of start under the implications, premises compared against the
// growing set
Bitset chain(std::span<const Implication> imps, Bitset set) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& imp : imps) {
            if (imp.premise.is_subset_of(set) && !imp.conclusion.is_subset_of(set)) {
                set |= imp.conclusion;
                changed = true;
            }
        }
    }
    return set;
}

}  // namespace

Bitset close_under(std::span<const Implication> basis, Bitset start) {
    return chain(basis, std::move(start));
}

bool follows(const Implication& imp, std::span<const Implication> basis) {
    return imp.conclusion.is_subset_of(chain(basis, imp.premise));
}

std::vector<Implication> dg_basis(const BinaryContext& ctx) {
    const std::size_t n = ctx.attribute_count();
    std::vector<Implication> basis;
    const Bitset all = Bitset::full(n);
    Bitset current(n);  // the empty set is closed under the empty basis

    while (true) {
        Bitset closed = ctx.close_attrs(current);
        if (closed != current) {
            // current is a pseudo-intent
            std::size_t support = ctx.extent(closed).count();
            basis.push_back({current, closed.minus(current), support});
        }
        if (current == all) break;

        // NextClosure step over the closure operator "close under the
        // implications found so far".
        Bitset next(0);
        for (std::size_t i = n; i-- > 0;) {
            if (current.test(i)) {
                current.reset(i);
                continue;
            }
            Bitset candidate = current;
            candidate.set(i);
            candidate = chain(basis, std::move(candidate));
            if (candidate.minus(current).find_first() >= i) {
                next = std::move(candidate);
                break;
            }
        }
        current = std::move(next);
    }
    return basis;
}

bool implication_holds(const Implication& imp, const BinaryContext& ctx) {
    return ctx.extent(imp.premise).is_subset_of(ctx.extent(imp.conclusion));
}

std::size_t implication_support(const Implication& imp, const BinaryContext& ctx) {
    return ctx.extent(imp.premise | imp.conclusion).count();
}

Implication make_implication(const BinaryContext& ctx, std::span<const std::string> premise,
                             std::span<const std::string> conclusion) {
    Implication imp;
    imp.premise = ctx.attribute_set(premise);
    imp.conclusion = ctx.attribute_set(conclusion).minus(imp.premise);
    imp.support = implication_support(imp, ctx);
    return imp;
}

bool rational_geq(const Rational& a, const Rational& b) {
    if (a.den == 0) return true;            // vacuous rule counts as confidence 1
    if (b.den == 0) return a.num >= a.den;  // b counts as 1
    return a.num * b.den >= b.num * a.den;  // exact cross-multiplication
}

std::vector<AssociationRule> association_rules(const BinaryContext& ctx,
                                               const ConceptLattice& lattice,
                                               const RuleThresholds& thresholds) {
    if (thresholds.min_confidence.den == 0 || thresholds.min_confidence.num == 0 ||
        thresholds.min_confidence.num > thresholds.min_confidence.den)
        throw ConfigError("min confidence must satisfy 0 < p/q <= 1");

    std::vector<AssociationRule> rules;

    // confidence-1 layer: the DG basis; |g(premise)| equals the support for
    // a valid implication
    for (const auto& imp : dg_basis(ctx)) {
        if (imp.support < thresholds.min_support) continue;
        rules.push_back({imp.premise, imp.conclusion, imp.support, {imp.support, imp.support}});
    }

    // partial rules: cover-related intent pairs B1 = intent(upper) strictly
    // inside B2 = intent(lower)
    for (const auto& [lower, upper] : lattice.covers) {
        const Concept& cl = lattice.concepts[lower];
        const Concept& cu = lattice.concepts[upper];
        const std::size_t support = cl.extent.count();
        const std::size_t base = cu.extent.count();
        if (support < thresholds.min_support) continue;
        Rational confidence{support, base};
        if (!rational_geq(confidence, thresholds.min_confidence)) continue;
        rules.push_back({cu.intent, cl.intent.minus(cu.intent), support, confidence});
    }

    std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
        if (a.support != b.support) return a.support > b.support;
        bool a_over_b = !rational_geq(b.confidence, a.confidence);  // a > b
        bool b_over_a = !rational_geq(a.confidence, b.confidence);
        if (a_over_b != b_over_a) return a_over_b;
        return a.premise.lectic_less(b.premise);
    });
    return rules;
}

std::vector<AssociationRule> association_rules(const BinaryContext& ctx,
                                               const RuleThresholds& thresholds,
                                               const EnumerationOptions& opts) {
    return association_rules(ctx, build_lattice(ctx, opts), thresholds);
}

namespace {

void append_names(std::string& out, const BinaryContext& ctx, const Bitset& set) {
    if (set.none()) {
        out += "∅";
        return;
    }
    bool first = true;
    set.for_each([&](std::size_t a) {
        if (!first) out += ' ';
        out += ctx.attributes()[a];
        first = false;
    });
}

}  // namespace

std::string render_implication(const BinaryContext& ctx, const Implication& imp,
                               ImplicationStyle style) {
    std::string out;
    append_names(out, ctx, imp.premise);
    out += " ⇒ ";
    append_names(out, ctx, imp.conclusion);
    if (style == ImplicationStyle::Compact) {
        out += " (support " + std::to_string(imp.support) + ")";
    } else {
        out += " (true for " + std::to_string(imp.support) +
               (imp.support == 1 ? " individual)" : " individuals)");
    }
    return out;
}

std::string render_rule(const BinaryContext& ctx, const AssociationRule& rule) {
    std::string out;
    append_names(out, ctx, rule.premise);
    out += " ⇒ ";
    append_names(out, ctx, rule.conclusion);
    out += " (support " + std::to_string(rule.support) + ", confidence " +
           std::to_string(rule.confidence.num) + "/" + std::to_string(rule.confidence.den) + ")";
    return out;
}

}  // namespace galmine
