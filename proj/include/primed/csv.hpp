#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace primed {

// 17 significant digits, round-trippable through strtod.
std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Comma-separated, header first, '\n' line endings, newline-terminated.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace primed
