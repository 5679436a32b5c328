#include "galmine/export.hpp"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>

namespace galmine {

using ordered_json = nlohmann::ordered_json;

ExportDocument::ContextSummary summarize_context(const BinaryContext& ctx) {
    return {ctx.name(), ctx.objects(), ctx.attributes()};
}

std::vector<ExportDocument::ConceptRecord> concept_records(
    const BinaryContext& ctx, const std::vector<Concept>& concepts) {
    std::vector<ExportDocument::ConceptRecord> out;
    out.reserve(concepts.size());
    for (const auto& c : concepts)
        out.push_back({ctx.object_names(c.extent), ctx.attribute_names(c.intent)});
    return out;
}

std::vector<ExportDocument::ImplicationRecord> implication_records(
    const BinaryContext& ctx, const std::vector<Implication>& basis) {
    std::vector<ExportDocument::ImplicationRecord> out;
    out.reserve(basis.size());
    for (const auto& imp : basis)
        out.push_back(
            {ctx.attribute_names(imp.premise), ctx.attribute_names(imp.conclusion), imp.support});
    return out;
}

std::vector<ExportDocument::RuleRecord> rule_records(const BinaryContext& ctx,
                                                     const std::vector<AssociationRule>& rules) {
    std::vector<ExportDocument::RuleRecord> out;
    out.reserve(rules.size());
    for (const auto& r : rules)
        out.push_back({ctx.attribute_names(r.premise), ctx.attribute_names(r.conclusion),
                       r.support, r.confidence.num, r.confidence.den});
    return out;
}

std::vector<ExportDocument::HistogramConceptRecord> histogram_records(
    const ManyValuedContext& mvc, const std::vector<HistogramConcept>& concepts) {
    std::vector<ExportDocument::HistogramConceptRecord> out;
    out.reserve(concepts.size());
    for (const auto& c : concepts) {
        ExportDocument::HistogramConceptRecord rec;
        rec.extent = mvc.object_names(c.extent);
        rec.mode = c.mode == HistogramMode::Union ? "union" : "intersection";
        for (std::size_t t = 0; t < mvc.trait_count(); ++t)
            rec.intent.emplace_back(mvc.traits()[t].code, c.intent.per_trait[t]);
        out.push_back(std::move(rec));
    }
    return out;
}

std::string export_json(const ExportDocument& doc) {
    ordered_json j;
    j["schema_version"] = doc.schema_version;
    if (doc.context) {
        j["context"] = {{"name", doc.context->name},
                        {"objects", doc.context->objects},
                        {"attributes", doc.context->attributes}};
    }
    if (doc.concepts) {
        auto& arr = j["concepts"] = ordered_json::array();
        for (const auto& c : *doc.concepts)
            arr.push_back({{"extent", c.extent}, {"intent", c.intent}});
    }
    if (doc.covers) {
        auto& arr = j["covers"] = ordered_json::array();
        for (const auto& [lower, upper] : *doc.covers)
            arr.push_back({{"lower", lower}, {"upper", upper}});
    }
    if (doc.implications) {
        auto& arr = j["implications"] = ordered_json::array();
        for (const auto& imp : *doc.implications)
            arr.push_back({{"premise", imp.premise},
                           {"conclusion", imp.conclusion},
                           {"support", imp.support}});
    }
    if (doc.rules) {
        auto& arr = j["rules"] = ordered_json::array();
        for (const auto& r : *doc.rules)
            arr.push_back({{"premise", r.premise},
                           {"conclusion", r.conclusion},
                           {"support", r.support},
                           {"confidence", {{"num", r.confidence_num}, {"den", r.confidence_den}}}});
    }
    if (doc.histogram_concepts) {
        auto& arr = j["histogram_concepts"] = ordered_json::array();
        for (const auto& h : *doc.histogram_concepts) {
            ordered_json intent = ordered_json::array();
            for (const auto& [code, tuple] : h.intent)
                intent.push_back({{"trait", code}, {"values", tuple}});
            arr.push_back({{"extent", h.extent}, {"mode", h.mode}, {"intent", intent}});
        }
    }
    return j.dump(2) + "\n";
}

ExportDocument parse_export_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid export document: ") + e.what());
    }
    ExportDocument doc;
    try {
        doc.schema_version = j.at("schema_version").get<int>();
        if (j.contains("context")) {
            const auto& c = j["context"];
            doc.context = ExportDocument::ContextSummary{
                c.at("name").get<std::string>(),
                c.at("objects").get<std::vector<std::string>>(),
                c.at("attributes").get<std::vector<std::string>>()};
        }
        if (j.contains("concepts")) {
            std::vector<ExportDocument::ConceptRecord> concepts;
            for (const auto& c : j["concepts"])
                concepts.push_back({c.at("extent").get<std::vector<std::string>>(),
                                    c.at("intent").get<std::vector<std::string>>()});
            doc.concepts = std::move(concepts);
        }
        if (j.contains("covers")) {
            std::vector<std::pair<std::size_t, std::size_t>> covers;
            for (const auto& e : j["covers"])
                covers.emplace_back(e.at("lower").get<std::size_t>(),
                                    e.at("upper").get<std::size_t>());
            if (doc.concepts) {
                for (const auto& [lower, upper] : covers)
                    if (lower >= doc.concepts->size() || upper >= doc.concepts->size())
                        throw InputError("cover index out of range");
            }
            doc.covers = std::move(covers);
        }
        if (j.contains("implications")) {
            std::vector<ExportDocument::ImplicationRecord> imps;
            for (const auto& e : j["implications"])
                imps.push_back({e.at("premise").get<std::vector<std::string>>(),
                                e.at("conclusion").get<std::vector<std::string>>(),
                                e.at("support").get<std::size_t>()});
            doc.implications = std::move(imps);
        }
        if (j.contains("rules")) {
            std::vector<ExportDocument::RuleRecord> rules;
            for (const auto& e : j["rules"])
                rules.push_back({e.at("premise").get<std::vector<std::string>>(),
                                 e.at("conclusion").get<std::vector<std::string>>(),
                                 e.at("support").get<std::size_t>(),
                                 e.at("confidence").at("num").get<std::size_t>(),
                                 e.at("confidence").at("den").get<std::size_t>()});
            doc.rules = std::move(rules);
        }
        if (j.contains("histogram_concepts")) {
            std::vector<ExportDocument::HistogramConceptRecord> hists;
            for (const auto& e : j["histogram_concepts"]) {
                ExportDocument::HistogramConceptRecord rec;
                rec.extent = e.at("extent").get<std::vector<std::string>>();
                rec.mode = e.at("mode").get<std::string>();
                for (const auto& t : e.at("intent"))
                    rec.intent.emplace_back(t.at("trait").get<std::string>(),
                                            t.at("values").get<std::vector<int>>());
                hists.push_back(std::move(rec));
            }
            doc.histogram_concepts = std::move(hists);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid export document: ") + e.what());
    }
    return doc;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const ConceptLattice& lattice, const BinaryContext& ctx) {
    const std::size_t n = lattice.concepts.size();

    // reduced labeling targets
    std::unordered_map<Bitset, std::size_t, BitsetHash> by_extent;
    by_extent.reserve(n);
    for (std::size_t i = 0; i < n; ++i) by_extent.emplace(lattice.concepts[i].extent, i);

    std::vector<std::vector<std::string>> attr_labels(n), object_labels(n);
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
        Bitset single(ctx.attribute_count());
        single.set(a);
        auto it = by_extent.find(ctx.extent(single));
        if (it == by_extent.end())
            throw InternalError("export_dot: attribute concept missing from lattice");
        attr_labels[it->second].push_back(ctx.attributes()[a]);
    }
    for (std::size_t o = 0; o < ctx.object_count(); ++o) {
        Bitset single(ctx.object_count());
        single.set(o);
        auto it = by_extent.find(ctx.close_objects(single));
        if (it == by_extent.end())
            throw InternalError("export_dot: object concept missing from lattice");
        object_labels[it->second].push_back(ctx.objects()[o]);
    }

    std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < n; ++i) {
        std::string label;
        for (std::size_t k = 0; k < attr_labels[i].size(); ++k) {
            if (k) label += ", ";
            label += dot_escape(attr_labels[i][k]);
        }
        label += "\\n";
        for (std::size_t k = 0; k < object_labels[i].size(); ++k) {
            if (k) label += ", ";
            label += dot_escape(object_labels[i][k]);
        }
        out += "  c" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (const auto& [lower, upper] : lattice.covers)
        out += "  c" + std::to_string(lower) + " -> c" + std::to_string(upper) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace galmine
