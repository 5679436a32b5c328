#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galmine/context.hpp"
#include "galmine/histogram.hpp"
#include "galmine/implications.hpp"
#include "galmine/lattice.hpp"

namespace galmine {

// The machine-readable result document. All sections optional; which are
// present depends on the command that produced it. Serialization is
// canonical: stable key order, stable array order, integers only.
struct ExportDocument {
    struct ContextSummary {
        std::string name;
        std::vector<std::string> objects;
        std::vector<std::string> attributes;
    };
    struct ConceptRecord {
        std::vector<std::string> extent;
        std::vector<std::string> intent;
    };
    struct ImplicationRecord {
        std::vector<std::string> premise;
        std::vector<std::string> conclusion;
        std::size_t support = 0;
    };
    struct RuleRecord {
        std::vector<std::string> premise;
        std::vector<std::string> conclusion;
        std::size_t support = 0;
        std::size_t confidence_num = 0;
        std::size_t confidence_den = 0;
    };
    struct HistogramConceptRecord {
        std::vector<std::string> extent;
        std::string mode;  // "union" | "intersection"
        // per trait: (trait code, affinity tuple)
        std::vector<std::pair<std::string, std::vector<int>>> intent;
    };

    int schema_version = 1;
    std::optional<ContextSummary> context;
    std::optional<std::vector<ConceptRecord>> concepts;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> covers;
    std::optional<std::vector<ImplicationRecord>> implications;
    std::optional<std::vector<RuleRecord>> rules;
    std::optional<std::vector<HistogramConceptRecord>> histogram_concepts;
};

// Record builders from the computation types.
ExportDocument::ContextSummary summarize_context(const BinaryContext& ctx);
std::vector<ExportDocument::ConceptRecord> concept_records(const BinaryContext& ctx,
                                                           const std::vector<Concept>& concepts);
std::vector<ExportDocument::ImplicationRecord> implication_records(
    const BinaryContext& ctx, const std::vector<Implication>& basis);
std::vector<ExportDocument::RuleRecord> rule_records(const BinaryContext& ctx,
                                                     const std::vector<AssociationRule>& rules);
std::vector<ExportDocument::HistogramConceptRecord> histogram_records(
    const ManyValuedContext& mvc, const std::vector<HistogramConcept>& concepts);

// Canonical JSON text; export -> parse -> export is byte-identical.
std::string export_json(const ExportDocument& doc);
ExportDocument parse_export_json(std::string_view text);

// Graphviz digraph of the lattice with reduced labeling: each attribute at
// the topmost concept whose intent contains it, each object at the
// bottommost concept whose extent contains it; edges drawn upward.
std::string export_dot(const ConceptLattice& lattice, const BinaryContext& ctx);

}  // namespace galmine
