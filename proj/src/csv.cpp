#include "galmine/csv.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace galmine {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct PendingTrait {
    std::string code;
    std::vector<std::string> modalities;
};

}  // namespace

CsvResult ingest_csv_text(std::string_view text, const CsvOptions& opts) {
    std::vector<std::string> objects;
    std::unordered_map<std::string, std::size_t> object_index;
    std::vector<PendingTrait> traits;
    std::unordered_map<std::string, std::size_t> trait_index;
    // (object, trait, modality) -> (affinity, line number)
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<int, std::size_t>> cells;

    std::size_t lineno = 0;
    bool header_seen = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view raw = (nl == std::string_view::npos)
                                   ? text.substr(start)
                                   : text.substr(start, nl - start);
        start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            fields.push_back(trim(line.substr(pos, comma - pos)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }

        if (!header_seen) {
            if (fields.size() != 4 || fields[0] != "object" || fields[1] != "trait" ||
                fields[2] != "modality" || fields[3] != "affinity")
                throw InputError("line " + std::to_string(lineno) +
                                 ": expected header \"object,trait,modality,affinity\"");
            header_seen = true;
            continue;
        }

        if (fields.size() != 4)
            throw InputError("line " + std::to_string(lineno) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty() || fields[2].empty())
            throw InputError("line " + std::to_string(lineno) + ": empty field");

        std::string object(fields[0]), trait_code(fields[1]), modality(fields[2]);

        int affinity = 0;
        try {
            std::size_t used = 0;
            affinity = std::stoi(std::string(fields[3]), &used);
            if (used != fields[3].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(lineno) + ": affinity \"" +
                             std::string(fields[3]) + "\" is not an integer");
        }
        if (affinity < 0 || affinity > opts.max_affinity)
            throw InputError("line " + std::to_string(lineno) + ": affinity " +
                             std::to_string(affinity) + " out of range 0.." +
                             std::to_string(opts.max_affinity));

        std::size_t oi;
        if (auto it = object_index.find(object); it != object_index.end()) {
            oi = it->second;
        } else {
            oi = objects.size();
            object_index.emplace(object, oi);
            objects.push_back(object);
        }

        std::size_t ti;
        if (auto it = trait_index.find(trait_code); it != trait_index.end()) {
            ti = it->second;
        } else {
            ti = traits.size();
            trait_index.emplace(trait_code, ti);
            traits.push_back({trait_code, {}});
        }
        auto& mods = traits[ti].modalities;

        std::size_t mi;
        if (all_digits(modality)) {
            // 1-based index; may extend the list by exactly one
            unsigned long idx = std::stoul(modality);
            if (idx >= 1 && idx <= mods.size()) {
                mi = idx - 1;
            } else if (idx == mods.size() + 1) {
                mi = mods.size();
                mods.push_back(modality);
            } else {
                throw InputError("line " + std::to_string(lineno) + ": modality index " +
                                 modality + " out of range for trait " + trait_code + " (has " +
                                 std::to_string(mods.size()) + " modalities so far)");
            }
        } else {
            auto it = std::find(mods.begin(), mods.end(), modality);
            if (it != mods.end()) {
                mi = static_cast<std::size_t>(it - mods.begin());
            } else {
                mi = mods.size();
                mods.push_back(modality);
            }
        }

        auto key = std::make_tuple(oi, ti, mi);
        if (auto it = cells.find(key); it != cells.end())
            throw InputError("line " + std::to_string(lineno) + ": duplicate record for (" +
                             object + ", " + trait_code + ", " + mods[mi] + "), first at line " +
                             std::to_string(it->second.second));
        cells.emplace(key, std::make_pair(affinity, lineno));
    }

    if (!header_seen) throw InputError("missing header \"object,trait,modality,affinity\"");

    std::vector<std::string> warnings;
    std::vector<Trait> built_traits;
    built_traits.reserve(traits.size());
    std::size_t total_modalities = 0;
    for (auto& t : traits) {
        built_traits.push_back({t.code, t.code, t.modalities});
        total_modalities += t.modalities.size();
    }

    std::vector<int> values(objects.size() * total_modalities, 0);
    std::size_t offset = 0;
    std::vector<std::size_t> offsets;
    for (const auto& t : built_traits) {
        offsets.push_back(offset);
        offset += t.modalities.size();
    }
    for (std::size_t oi = 0; oi < objects.size(); ++oi) {
        for (std::size_t ti = 0; ti < built_traits.size(); ++ti) {
            for (std::size_t mi = 0; mi < built_traits[ti].modalities.size(); ++mi) {
                auto it = cells.find(std::make_tuple(oi, ti, mi));
                if (it == cells.end()) {
                    std::string msg = "missing cell (" + objects[oi] + ", " +
                                      built_traits[ti].code + ", " +
                                      built_traits[ti].modalities[mi] +
                                      ") defaulted to affinity 0";
                    if (opts.strict) throw InputError(msg + " (strict mode)");
                    warnings.push_back(std::move(msg));
                } else {
                    values[oi * total_modalities + offsets[ti] + mi] = it->second.first;
                }
            }
        }
    }

    return {ManyValuedContext(std::move(objects), std::move(built_traits), std::move(values),
                              opts.max_affinity),
            std::move(warnings)};
}

CsvResult ingest_csv(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return ingest_csv_text(buf.str(), opts);
}

}  // namespace galmine
