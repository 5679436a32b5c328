#pragma once

#include <string>
#include <vector>

#include "galmine/context.hpp"

namespace galmine {

struct CsvOptions {
    int max_affinity = 3;
    // with strict = true, cells missing from the file are an error instead
    // of defaulting to affinity 0 with a warning
    bool strict = false;
};

struct CsvResult {
    ManyValuedContext context;
    std::vector<std::string> warnings;
};

// Long-format CSV: header "object,trait,modality,affinity", UTF-8, comma
// separated, '#' comment lines. Objects, traits and modalities keep
// first-appearance order. Modalities may be labels or 1-based indices;
// labels are canonical in output.
CsvResult ingest_csv_text(std::string_view text, const CsvOptions& opts = {});
CsvResult ingest_csv(const std::string& path, const CsvOptions& opts = {});

}  // namespace galmine
