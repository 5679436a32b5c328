#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galmine/context.hpp"
#include "galmine/csv.hpp"
#include "galmine/export.hpp"
#include "galmine/histogram.hpp"
#include "galmine/implications.hpp"
#include "galmine/lattice.hpp"
#include "galmine/scaling.hpp"

namespace py = pybind11;
using namespace galmine;

namespace {

// histograms cross the boundary as {trait_code: [affinities]} dicts
HistogramVector histogram_from_dict(const ManyValuedContext& mvc, const py::dict& d) {
    HistogramVector h;
    h.per_trait.resize(mvc.trait_count());
    std::size_t seen = 0;
    for (std::size_t t = 0; t < mvc.trait_count(); ++t) {
        const auto& code = mvc.traits()[t].code;
        if (!d.contains(py::str(code)))
            throw InputError("histogram missing trait " + code);
        h.per_trait[t] = d[py::str(code)].cast<std::vector<int>>();
        ++seen;
    }
    if (seen != d.size()) throw InputError("histogram names a trait not in the context");
    return h;
}

py::dict histogram_to_dict(const ManyValuedContext& mvc, const HistogramVector& h) {
    py::dict d;
    for (std::size_t t = 0; t < mvc.trait_count(); ++t)
        d[py::str(mvc.traits()[t].code)] = h.per_trait[t];
    return d;
}

HistogramMode parse_mode(const std::string& mode) {
    if (mode == "union") return HistogramMode::Union;
    if (mode == "intersection") return HistogramMode::Intersection;
    throw InputError("mode must be \"union\" or \"intersection\"");
}

EnumerationOptions enum_opts(std::size_t max_concepts) { return {max_concepts}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Galois-lattice mining of many-valued trait data";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<Trait>(m, "Trait")
        .def(py::init([](std::string code, std::string name, std::vector<std::string> mods) {
                 return Trait{std::move(code), std::move(name), std::move(mods)};
             }),
             py::arg("code"), py::arg("name"), py::arg("modalities"))
        .def_readonly("code", &Trait::code)
        .def_readonly("name", &Trait::name)
        .def_readonly("modalities", &Trait::modalities)
        .def("__repr__", [](const Trait& t) {
            return "Trait(" + t.code + ", " + std::to_string(t.modalities.size()) +
                   " modalities)";
        });

    py::class_<ManyValuedContext>(m, "ManyValuedContext")
        .def(py::init([](std::vector<std::string> objects, std::vector<Trait> traits,
                         std::vector<std::vector<int>> rows, int max_affinity) {
                 std::vector<int> flat;
                 for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
                 return ManyValuedContext(std::move(objects), std::move(traits),
                                          std::move(flat), max_affinity);
             }),
             py::arg("objects"), py::arg("traits"), py::arg("rows"), py::arg("max_affinity") = 3)
        .def_property_readonly("objects", &ManyValuedContext::objects)
        .def_property_readonly("traits", &ManyValuedContext::traits)
        .def_property_readonly("max_affinity", &ManyValuedContext::max_affinity)
        .def("affinity",
             [](const ManyValuedContext& mvc, const std::string& object,
                const std::string& trait, std::size_t modality) {
                 return mvc.affinity(mvc.object_index(object), mvc.trait_index(trait), modality);
             },
             py::arg("object"), py::arg("trait"), py::arg("modality"))
        .def("histogram",
             [](const ManyValuedContext& mvc, const std::string& object) {
                 return histogram_to_dict(mvc, object_histogram(mvc, mvc.object_index(object)));
             },
             py::arg("object"))
        .def("__repr__", [](const ManyValuedContext& mvc) {
            return "ManyValuedContext(" + std::to_string(mvc.object_count()) + " objects, " +
                   std::to_string(mvc.trait_count()) + " traits)";
        });

    py::class_<BinaryContext>(m, "BinaryContext")
        .def(py::init([](std::vector<std::string> objects, std::vector<std::string> attributes,
                         const std::vector<std::vector<bool>>& rows, std::string name) {
                 std::vector<Bitset> bits;
                 bits.reserve(rows.size());
                 for (const auto& r : rows) {
                     Bitset b(attributes.size());
                     if (r.size() != attributes.size())
                         throw InputError("row width does not match attribute count");
                     for (std::size_t a = 0; a < r.size(); ++a)
                         if (r[a]) b.set(a);
                     bits.push_back(std::move(b));
                 }
                 return BinaryContext(std::move(objects), std::move(attributes), std::move(bits),
                                      std::move(name));
             }),
             py::arg("objects"), py::arg("attributes"), py::arg("rows"), py::arg("name") = "")
        .def_property_readonly("objects", &BinaryContext::objects)
        .def_property_readonly("attributes", &BinaryContext::attributes)
        .def_property_readonly("name", &BinaryContext::name)
        .def("incidence",
             [](const BinaryContext& ctx, const std::string& object,
                const std::string& attribute) {
                 return ctx.incidence(ctx.object_index(object), ctx.attribute_index(attribute));
             },
             py::arg("object"), py::arg("attribute"))
        .def("__repr__", [](const BinaryContext& ctx) {
            return "BinaryContext(" + std::to_string(ctx.object_count()) + " objects, " +
                   std::to_string(ctx.attribute_count()) + " attributes)";
        });

    m.def("load_csv",
          [](const std::string& path, int max_affinity, bool strict) {
              CsvResult r = ingest_csv(path, {max_affinity, strict});
              return py::make_tuple(std::move(r.context), r.warnings);
          },
          py::arg("path"), py::arg("max_affinity") = 3, py::arg("strict") = false,
          "Load a long-format CSV; returns (context, warnings).");
    m.def("load_csv_text",
          [](const std::string& text, int max_affinity, bool strict) {
              CsvResult r = ingest_csv_text(text, {max_affinity, strict});
              return py::make_tuple(std::move(r.context), r.warnings);
          },
          py::arg("text"), py::arg("max_affinity") = 3, py::arg("strict") = false);

    // derivations
    m.def("derive_intent",
          [](const std::vector<std::string>& objects, const BinaryContext& ctx) {
              return derive_intent(objects, ctx);
          },
          py::arg("objects"), py::arg("ctx"));
    m.def("derive_extent",
          [](const std::vector<std::string>& attributes, const BinaryContext& ctx) {
              return derive_extent(attributes, ctx);
          },
          py::arg("attributes"), py::arg("ctx"));
    m.def("close_objects",
          [](const std::vector<std::string>& objects, const BinaryContext& ctx) {
              return close_objects(objects, ctx);
          },
          py::arg("objects"), py::arg("ctx"));
    m.def("close_attrs",
          [](const std::vector<std::string>& attributes, const BinaryContext& ctx) {
              return close_attrs(attributes, ctx);
          },
          py::arg("attributes"), py::arg("ctx"));

    // scaling
    m.def("disjunctive_scale",
          [](const ManyValuedContext& mvc, bool full_columns) {
              return disjunctive_scale(mvc, {full_columns});
          },
          py::arg("mvc"), py::arg("full_columns") = false);
    m.def("pattern_scale", &pattern_scale, py::arg("mvc"));
    m.def("group_affinities",
          [](const ManyValuedContext& mvc, const std::string& grouping) {
              return group_affinities(mvc, AffinityGrouping::parse(grouping));
          },
          py::arg("mvc"), py::arg("grouping"),
          "grouping: \"identity\", \"presence\", \"lowhigh\" or \"name=0:0,1:1,...\"");

    // lattice
    m.def("enumerate_concepts",
          [](const BinaryContext& ctx, std::size_t max_concepts) {
              py::list out;
              for (const auto& c : enumerate_concepts(ctx, enum_opts(max_concepts)))
                  out.append(py::make_tuple(ctx.object_names(c.extent),
                                            ctx.attribute_names(c.intent)));
              return out;
          },
          py::arg("ctx"), py::arg("max_concepts") = 1'000'000);

    py::class_<ConceptLattice>(m, "ConceptLattice")
        .def_property_readonly("covers",
                               [](const ConceptLattice& lat) { return lat.covers; })
        .def_property_readonly("top_index", [](const ConceptLattice& lat) { return lat.top_index; })
        .def_property_readonly("bottom_index",
                               [](const ConceptLattice& lat) { return lat.bottom_index; })
        .def("levels", &concept_levels)
        .def("level_count", &level_count)
        .def("__len__", [](const ConceptLattice& lat) { return lat.concepts.size(); })
        .def("__repr__", [](const ConceptLattice& lat) {
            return "ConceptLattice(" + std::to_string(lat.concepts.size()) + " concepts)";
        });

    m.def("build_lattice",
          [](const BinaryContext& ctx, std::size_t max_concepts) {
              return build_lattice(ctx, enum_opts(max_concepts));
          },
          py::arg("ctx"), py::arg("max_concepts") = 1'000'000);
    m.def("lattice_concepts",
          [](const ConceptLattice& lat, const BinaryContext& ctx) {
              py::list out;
              for (const auto& c : lat.concepts)
                  out.append(py::make_tuple(ctx.object_names(c.extent),
                                            ctx.attribute_names(c.intent)));
              return out;
          },
          py::arg("lattice"), py::arg("ctx"));

    // implications and rules
    m.def("dg_basis",
          [](const BinaryContext& ctx) {
              py::list out;
              for (const auto& imp : dg_basis(ctx))
                  out.append(py::make_tuple(ctx.attribute_names(imp.premise),
                                            ctx.attribute_names(imp.conclusion), imp.support));
              return out;
          },
          py::arg("ctx"));
    m.def("implication_holds",
          [](const std::vector<std::string>& premise, const std::vector<std::string>& conclusion,
             const BinaryContext& ctx) {
              return implication_holds(make_implication(ctx, premise, conclusion), ctx);
          },
          py::arg("premise"), py::arg("conclusion"), py::arg("ctx"));
    m.def("implication_support",
          [](const std::vector<std::string>& premise, const std::vector<std::string>& conclusion,
             const BinaryContext& ctx) {
              return implication_support(make_implication(ctx, premise, conclusion), ctx);
          },
          py::arg("premise"), py::arg("conclusion"), py::arg("ctx"));
    m.def("association_rules",
          [](const BinaryContext& ctx, std::size_t min_support,
             std::pair<std::size_t, std::size_t> min_confidence, std::size_t max_concepts) {
              RuleThresholds t{min_support, {min_confidence.first, min_confidence.second}};
              py::list out;
              for (const auto& r : association_rules(ctx, t, enum_opts(max_concepts)))
                  out.append(py::make_tuple(
                      ctx.attribute_names(r.premise), ctx.attribute_names(r.conclusion),
                      r.support, py::make_tuple(r.confidence.num, r.confidence.den)));
              return out;
          },
          py::arg("ctx"), py::arg("min_support") = 0,
          py::arg("min_confidence") = std::pair<std::size_t, std::size_t>{1, 1},
          py::arg("max_concepts") = 1'000'000);
    m.def("render_implication",
          [](const std::vector<std::string>& premise, const std::vector<std::string>& conclusion,
             const BinaryContext& ctx, const std::string& style) {
              auto s = style == "individuals" ? ImplicationStyle::Individuals
                                              : ImplicationStyle::Compact;
              return render_implication(ctx, make_implication(ctx, premise, conclusion), s);
          },
          py::arg("premise"), py::arg("conclusion"), py::arg("ctx"),
          py::arg("style") = "compact");

    // histogram connections
    m.def("union_intent",
          [](const ManyValuedContext& mvc, const std::vector<std::string>& objects) {
              return histogram_to_dict(mvc, union_intent(mvc, objects));
          },
          py::arg("mvc"), py::arg("objects"));
    m.def("intersection_intent",
          [](const ManyValuedContext& mvc, const std::vector<std::string>& objects) {
              return histogram_to_dict(mvc, intersection_intent(mvc, objects));
          },
          py::arg("mvc"), py::arg("objects"));
    m.def("union_extent",
          [](const ManyValuedContext& mvc, const py::dict& h) {
              return mvc.object_names(union_extent(mvc, histogram_from_dict(mvc, h)));
          },
          py::arg("mvc"), py::arg("histogram"));
    m.def("intersection_extent",
          [](const ManyValuedContext& mvc, const py::dict& h) {
              return mvc.object_names(intersection_extent(mvc, histogram_from_dict(mvc, h)));
          },
          py::arg("mvc"), py::arg("histogram"));
    m.def("enumerate_histogram_concepts",
          [](const ManyValuedContext& mvc, const std::string& mode, std::size_t max_concepts) {
              py::list out;
              for (const auto& c :
                   enumerate_histogram_concepts(mvc, parse_mode(mode), enum_opts(max_concepts)))
                  out.append(py::make_tuple(mvc.object_names(c.extent),
                                            histogram_to_dict(mvc, c.intent)));
              return out;
          },
          py::arg("mvc"), py::arg("mode"), py::arg("max_concepts") = 1'000'000);
    m.def("flip_affinities", &flip_affinities, py::arg("mvc"));
    m.def("render_histogram",
          [](const ManyValuedContext& mvc, const py::dict& h) {
              return render_histogram(mvc, histogram_from_dict(mvc, h));
          },
          py::arg("mvc"), py::arg("histogram"));

    // interop
    m.def("to_burmeister", &write_burmeister, py::arg("ctx"));
    m.def("from_burmeister",
          [](const std::string& text) { return read_burmeister(text); }, py::arg("text"));
    m.def("export_dot", &export_dot, py::arg("lattice"), py::arg("ctx"));
}
