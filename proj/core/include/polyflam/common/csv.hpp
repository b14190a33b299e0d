#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace polyflam {

// Minimal RFC-4180-ish CSV: quoted fields, embedded commas/quotes, CRLF.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, -1 if absent.
    int column(std::string_view name) const;
    // Index of a required column; throws SchemaError when missing.
    int require(std::string_view name, const std::string& context) const;
    const std::string& at(std::size_t row, int col) const { return rows[row][static_cast<std::size_t>(col)]; }
};

CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);

std::string to_csv(const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace polyflam
