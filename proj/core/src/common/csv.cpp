#include "polyflam/common/csv.hpp"

#include <fstream>
#include <sstream>

#include "polyflam/common/error.hpp"

namespace polyflam {

int CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

int CsvTable::require(std::string_view name, const std::string& context) const {
    const int idx = column(name);
    if (idx < 0) throw SchemaError(context + ": missing required column '" + std::string(name) + "'");
    return idx;
}

namespace {

std::vector<std::string> parse_line(std::string_view text, std::size_t& pos) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool saw_any = false;
    while (pos < text.size()) {
        const char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field += '"';
                    pos += 2;
                } else {
                    quoted = false;
                    ++pos;
                }
            } else {
                field += c;
                ++pos;
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            saw_any = true;
            ++pos;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            saw_any = true;
            ++pos;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
            ++pos;
            break;
        } else {
            field += c;
            saw_any = true;
            ++pos;
        }
    }
    if (saw_any || !field.empty()) fields.push_back(std::move(field));
    return fields;
}

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\n\r") != std::string::npos;
}

void append_field(std::string& out, const std::string& field) {
    if (!needs_quoting(field)) {
        out += field;
        return;
    }
    out += '"';
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
    CsvTable table;
    std::size_t pos = 0;
    table.header = parse_line(text, pos);
    if (table.header.empty()) throw EmptyFile("CSV has no header line");
    while (pos < text.size()) {
        auto fields = parse_line(text, pos);
        if (fields.empty()) continue;  // blank line
        if (fields.size() != table.header.size()) {
            throw SchemaError("CSV row " + std::to_string(table.rows.size() + 2) + " has " +
                              std::to_string(fields.size()) + " fields, header has " +
                              std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    return parse_csv(read_text_file(path));
}

std::string to_csv(const CsvTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        append_field(out, table.header[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_field(out, row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    write_text_file(path, to_csv(table));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EmptyFile("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    if (text.empty()) throw EmptyFile("file is empty: " + path.string());
    return text;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace polyflam
