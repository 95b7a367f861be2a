#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace seakeep {

/// Format a double with 9 significant digits (the on-disk precision of all
/// CSV artifacts).
std::string fmt_g9(double v);

/// Strict double parse of a whole field; throws FormatError on trailing junk.
double parse_double_field(const std::string& field, int line_no, const std::string& col);

std::vector<std::string> split_csv_line(const std::string& line);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// Column index by name; -1 when absent.
  int column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& file);

std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, const std::string& contents);

}  // namespace seakeep
