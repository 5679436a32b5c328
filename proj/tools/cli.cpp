#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "galmine/csv.hpp"
#include "galmine/export.hpp"
#include "galmine/histogram.hpp"
#include "galmine/implications.hpp"
#include "galmine/lattice.hpp"
#include "galmine/scaling.hpp"

namespace galmine {

namespace {

std::size_t default_max_concepts() {
    if (const char* env = std::getenv("GALOIS_MINER_MAX_CONCEPTS")) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(env, &pos);
            if (pos != std::string(env).size() || v <= 0) throw std::invalid_argument("");
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw ConfigError("GALOIS_MINER_MAX_CONCEPTS must be a positive integer, got \"" +
                              std::string(env) + "\"");
        }
    }
    return 1'000'000;
}

Rational parse_confidence(const std::string& text) {
    try {
        std::size_t slash = text.find('/');
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            long long num = std::stoll(text, &pos);
            if (pos != text.size() || num < 0) throw std::invalid_argument("");
            return {static_cast<std::size_t>(num), 1};
        }
        std::size_t p1 = 0, p2 = 0;
        long long num = std::stoll(text.substr(0, slash), &p1);
        long long den = std::stoll(text.substr(slash + 1), &p2);
        if (p1 != slash || p2 != text.size() - slash - 1 || num < 0 || den <= 0)
            throw std::invalid_argument("");
        return {static_cast<std::size_t>(num), static_cast<std::size_t>(den)};
    } catch (const std::exception&) {
        throw ConfigError("confidence must be an integer or P/Q fraction, got \"" + text + "\"");
    }
}

struct InputOptions {
    std::string path;
    int max_affinity = 3;
    bool strict = false;
    std::string method = "disjunctive";
    std::string group;
    bool full_columns = false;
    // set when the corresponding flag was given explicitly on the command line
    bool method_given = false;
    bool group_given = false;
    bool full_columns_given = false;
};

bool is_burmeister_path(const std::string& path) {
    return path.size() >= 4 && path.substr(path.size() - 4) == ".cxt";
}

ManyValuedContext load_mvc(const InputOptions& in) {
    CsvResult result = ingest_csv(in.path, {in.max_affinity, in.strict});
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    if (in.group.empty()) return std::move(result.context);
    return group_affinities(result.context, AffinityGrouping::parse(in.group));
}

BinaryContext load_binary(const InputOptions& in) {
    if (is_burmeister_path(in.path)) {
        if (in.method_given || in.group_given || in.full_columns_given)
            throw InputError("--method/--group/--full-columns do not apply to .cxt input");
        return read_burmeister_file(in.path);
    }
    ManyValuedContext mvc = load_mvc(in);
    if (in.method == "disjunctive") return disjunctive_scale(mvc, {in.full_columns});
    if (in.method == "pattern") return pattern_scale(mvc);
    throw ConfigError("unknown scaling method \"" + in.method +
                      "\" (expected disjunctive or pattern)");
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + output_path);
    out << text;
}

void add_input_options(CLI::App* cmd, InputOptions& in, bool binary_commands = true) {
    cmd->add_option("--input", in.path, "input file (CSV long format" +
                                            std::string(binary_commands ? " or Burmeister .cxt)" : ")"))
        ->required();
    cmd->add_option("--max-affinity", in.max_affinity, "affinity scale upper bound (CSV input)")
        ->default_val(3);
    cmd->add_flag("--strict", in.strict, "treat missing CSV cells as errors");
    if (binary_commands) {
        cmd->add_option("--method", in.method, "scaling: disjunctive or pattern")
            ->default_val("disjunctive");
        cmd->add_option("--group", in.group,
                        "affinity grouping: presence, lowhigh, identity or name=0:0,1:1,...");
        cmd->add_flag("--full-columns", in.full_columns,
                      "disjunctive scaling: emit unrealized (modality, affinity) columns too");
    } else {
        cmd->add_option("--group", in.group,
                        "affinity grouping: presence, lowhigh, identity or name=0:0,1:1,...");
    }
}

void finalize_input_flags(CLI::App* cmd, InputOptions& in) {
    auto given = [&](const std::string& name) {
        auto* opt = cmd->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    in.method_given = given("--method");
    in.group_given = given("--group");
    in.full_columns_given = given("--full-columns");
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out;
}

std::string concept_line(const BinaryContext& ctx, const Concept& c) {
    return "((" + join(ctx.attribute_names(c.intent)) + ") (" + join(ctx.object_names(c.extent)) +
           "))";
}

std::string count_noun(std::size_t n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Galois-lattice mining of many-valued trait data"};
    app.name("galois-miner");
    app.require_subcommand(1);

    InputOptions in;
    std::string output_path;
    std::size_t max_concepts = 0;  // resolved after parsing (env var default)
    bool max_concepts_given = false;

    auto add_common = [&](CLI::App* cmd, bool binary = true) {
        add_input_options(cmd, in, binary);
        cmd->add_option("--output", output_path, "write to this file instead of stdout");
        cmd->add_option("--max-concepts", max_concepts,
                        "abort enumeration past this many concepts "
                        "(default 1000000, env GALOIS_MINER_MAX_CONCEPTS)");
    };

    // scale
    auto* scale_cmd = app.add_subcommand("scale", "scale a many-valued CSV to a binary context");
    std::string context_name;
    add_common(scale_cmd);
    scale_cmd->add_option("--name", context_name, "context name for the Burmeister header");

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "concept count, levels, optional listing");
    bool list_concepts = false;
    add_common(lattice_cmd);
    lattice_cmd->add_flag("--concepts", list_concepts, "list every concept");

    // implications
    auto* imp_cmd = app.add_subcommand("implications", "Duquenne-Guigues implication basis");
    bool individuals_style = false;
    add_common(imp_cmd);
    imp_cmd->add_flag("--individuals", individuals_style,
                      "render supports as \"true for N individuals\"");

    // rules
    auto* rules_cmd = app.add_subcommand("rules", "association rules with thresholds");
    std::size_t min_support = 0;
    std::string min_confidence = "1";
    add_common(rules_cmd);
    rules_cmd->add_option("--min-support", min_support, "minimum support count")->default_val(0);
    rules_cmd->add_option("--min-confidence", min_confidence, "minimum confidence (P/Q or 1)")
        ->default_val("1");

    // hist
    auto* hist_cmd = app.add_subcommand("hist", "histogram-valued concepts (union/intersection)");
    std::string mode = "union";
    add_common(hist_cmd, /*binary=*/false);
    hist_cmd->add_option("--mode", mode, "union or intersection")->default_val("union");

    // export
    auto* export_cmd = app.add_subcommand("export", "write a DOT diagram or JSON document");
    std::string format;
    std::string sections = "context,concepts,covers";
    std::size_t exp_min_support = 0;
    std::string exp_min_confidence = "1";
    add_common(export_cmd);
    export_cmd->add_option("--format", format, "dot or json")->required();
    export_cmd->add_option("--sections", sections,
                           "json sections: context,concepts,covers,implications,rules,"
                           "histogram-union,histogram-intersection");
    export_cmd->add_option("--min-support", exp_min_support, "rules section: minimum support")
        ->default_val(0);
    export_cmd->add_option("--min-confidence", exp_min_confidence,
                           "rules section: minimum confidence")
        ->default_val("1");

    std::vector<const char*> argv;
    argv.push_back("galois-miner");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            auto subs = app.get_subcommands();
            std::cout << (subs.empty() ? app.help() : subs.front()->help());
            return 0;
        } catch (const CLI::ParseError& e) {
            std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
            return 1;
        }

        CLI::App* cmd = app.get_subcommands().front();
        finalize_input_flags(cmd, in);
        if (cmd->get_option_no_throw("--max-concepts"))
            max_concepts_given = cmd->get_option_no_throw("--max-concepts")->count() > 0;
        EnumerationOptions enum_opts;
        enum_opts.max_concepts = max_concepts_given ? max_concepts : default_max_concepts();

        std::ostringstream out;

        if (cmd == scale_cmd) {
            if (is_burmeister_path(in.path))
                throw InputError("scale expects a many-valued CSV input");
            BinaryContext ctx = load_binary(in);
            if (!context_name.empty()) {
                std::vector<Bitset> rows;
                rows.reserve(ctx.object_count());
                for (std::size_t o = 0; o < ctx.object_count(); ++o) rows.push_back(ctx.row(o));
                ctx = BinaryContext(ctx.objects(), ctx.attributes(), std::move(rows),
                                    context_name);
            }
            out << write_burmeister(ctx);
        } else if (cmd == lattice_cmd) {
            BinaryContext ctx = load_binary(in);
            ConceptLattice lat = build_lattice(ctx, enum_opts);
            out << count_noun(lat.concepts.size(), "concept") << "\n"
                << count_noun(level_count(lat), "level") << " (excepting top and bottom)\n";
            if (list_concepts)
                for (const auto& c : lat.concepts) out << concept_line(ctx, c) << "\n";
        } else if (cmd == imp_cmd) {
            BinaryContext ctx = load_binary(in);
            auto style = individuals_style ? ImplicationStyle::Individuals
                                           : ImplicationStyle::Compact;
            for (const auto& imp : dg_basis(ctx))
                out << render_implication(ctx, imp, style) << "\n";
        } else if (cmd == rules_cmd) {
            BinaryContext ctx = load_binary(in);
            RuleThresholds thresholds{min_support, parse_confidence(min_confidence)};
            for (const auto& rule : association_rules(ctx, thresholds, enum_opts))
                out << render_rule(ctx, rule) << "\n";
        } else if (cmd == hist_cmd) {
            if (is_burmeister_path(in.path))
                throw InputError("hist expects a many-valued CSV input");
            ManyValuedContext mvc = load_mvc(in);
            HistogramMode hist_mode;
            if (mode == "union")
                hist_mode = HistogramMode::Union;
            else if (mode == "intersection")
                hist_mode = HistogramMode::Intersection;
            else
                throw ConfigError("unknown mode \"" + mode +
                                  "\" (expected union or intersection)");
            auto concepts = enumerate_histogram_concepts(mvc, hist_mode, enum_opts);
            out << count_noun(concepts.size(), "concept") << "\n";
            for (const auto& c : concepts)
                out << "((" << render_histogram(mvc, c.intent) << ") ("
                    << join(mvc.object_names(c.extent)) << "))\n";
        } else if (cmd == export_cmd) {
            if (format == "dot") {
                BinaryContext ctx = load_binary(in);
                out << export_dot(build_lattice(ctx, enum_opts), ctx);
            } else if (format == "json") {
                ExportDocument doc;
                std::optional<BinaryContext> ctx;
                std::optional<ConceptLattice> lat;
                auto binary_ctx = [&]() -> const BinaryContext& {
                    if (!ctx) ctx = load_binary(in);
                    return *ctx;
                };
                auto lattice = [&]() -> const ConceptLattice& {
                    if (!lat) lat = build_lattice(binary_ctx(), enum_opts);
                    return *lat;
                };
                std::stringstream ss(sections);
                std::string section;
                while (std::getline(ss, section, ',')) {
                    if (section == "context") {
                        doc.context = summarize_context(binary_ctx());
                    } else if (section == "concepts") {
                        doc.concepts = concept_records(binary_ctx(), lattice().concepts);
                    } else if (section == "covers") {
                        doc.covers = lattice().covers;
                    } else if (section == "implications") {
                        doc.implications = implication_records(binary_ctx(), dg_basis(binary_ctx()));
                    } else if (section == "rules") {
                        RuleThresholds thresholds{exp_min_support,
                                                  parse_confidence(exp_min_confidence)};
                        doc.rules = rule_records(
                            binary_ctx(), association_rules(binary_ctx(), lattice(), thresholds));
                    } else if (section == "histogram-union" ||
                               section == "histogram-intersection") {
                        if (is_burmeister_path(in.path))
                            throw InputError("histogram sections need a many-valued CSV input");
                        ManyValuedContext mvc = load_mvc(in);
                        auto hist_mode = section == "histogram-union"
                                             ? HistogramMode::Union
                                             : HistogramMode::Intersection;
                        doc.histogram_concepts = histogram_records(
                            mvc, enumerate_histogram_concepts(mvc, hist_mode, enum_opts));
                    } else {
                        throw ConfigError("unknown export section \"" + section + "\"");
                    }
                }
                out << export_json(doc);
            } else {
                throw ConfigError("unknown format \"" + format + "\" (expected dot or json)");
            }
        }

        write_output(out.str(), output_path);
        return 0;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace galmine
