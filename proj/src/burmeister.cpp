#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "galmine/context.hpp"

namespace galmine {

namespace {

// Splits on '\n'; a trailing newline does not produce an empty last line.
std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::size_t parse_count(const std::string& line, std::size_t lineno, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(line, &pos);
        if (pos != line.size() || v < 0) throw std::invalid_argument("trailing");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError("burmeister: line " + std::to_string(lineno) + ": expected " +
                         std::string(what) + " count, got \"" + line + "\"");
    }
}

}  // namespace

std::string write_burmeister(const BinaryContext& ctx) {
    std::string out;
    out += "B\n";
    out += ctx.name();
    out += '\n';
    out += std::to_string(ctx.object_count());
    out += '\n';
    out += std::to_string(ctx.attribute_count());
    out += '\n';
    out += '\n';
    for (const auto& o : ctx.objects()) {
        out += o;
        out += '\n';
    }
    for (const auto& a : ctx.attributes()) {
        out += a;
        out += '\n';
    }
    for (std::size_t o = 0; o < ctx.object_count(); ++o) {
        for (std::size_t a = 0; a < ctx.attribute_count(); ++a)
            out += ctx.incidence(o, a) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

BinaryContext read_burmeister(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    auto next = [&]() -> const std::string& {
        if (i >= lines.size()) throw InputError("burmeister: unexpected end of input");
        return lines[i++];
    };

    if (next() != "B") throw InputError("burmeister: first line must be \"B\"");
    std::string name = next();
    const std::string& obj_line = next();
    std::size_t n_objects = parse_count(obj_line, i, "object");
    const std::string& attr_line = next();
    std::size_t n_attributes = parse_count(attr_line, i, "attribute");
    if (!next().empty())
        throw InputError("burmeister: line " + std::to_string(i) + ": expected blank separator");

    std::vector<std::string> objects, attributes;
    objects.reserve(n_objects);
    attributes.reserve(n_attributes);
    for (std::size_t k = 0; k < n_objects; ++k) objects.push_back(next());
    for (std::size_t k = 0; k < n_attributes; ++k) attributes.push_back(next());

    std::vector<Bitset> rows;
    rows.reserve(n_objects);
    for (std::size_t o = 0; o < n_objects; ++o) {
        const std::string& line = next();
        if (line.size() != n_attributes)
            throw InputError("burmeister: line " + std::to_string(i) + ": row has " +
                             std::to_string(line.size()) + " cells, expected " +
                             std::to_string(n_attributes));
        Bitset row(n_attributes);
        for (std::size_t a = 0; a < n_attributes; ++a) {
            char c = line[a];
            if (c == 'X' || c == 'x')
                row.set(a);
            else if (c != '.')
                throw InputError("burmeister: line " + std::to_string(i) +
                                 ": invalid incidence character '" + std::string(1, c) + "'");
        }
        rows.push_back(std::move(row));
    }
    if (i != lines.size())
        throw InputError("burmeister: trailing content at line " + std::to_string(i + 1));
    return BinaryContext(std::move(objects), std::move(attributes), std::move(rows),
                         std::move(name));
}

BinaryContext read_burmeister_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_burmeister(buf.str());
}

void write_burmeister_file(const BinaryContext& ctx, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << write_burmeister(ctx);
}

}  // namespace galmine
