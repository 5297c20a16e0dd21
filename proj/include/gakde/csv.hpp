#ifndef GAKDE_CSV_HPP
#define GAKDE_CSV_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gakde/data.hpp"

namespace gakde {

// File-level failures (missing file, unreadable path).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed content: non-numeric cell, unknown column, ragged row.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that cannot be used (fewer than 2 rows).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Comma-separated, decimal point, UTF-8. A single header row is
// auto-detected: the first row is a header iff any of its cells fails to
// parse as a double.
struct CsvTable {
    std::vector<std::string> header;  // empty when no header row
    bool has_header = false;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_count() const;
};

CsvTable read_csv(const std::filesystem::path& path);

// Resolves a selector token per column: all-digits means a 0-based index,
// anything else a header name (ParseError when there is no header or no
// such name). An empty selector list selects all columns in order.
std::vector<std::size_t> resolve_columns(const CsvTable& table,
                                         const std::vector<std::string>& selectors);

// Parses the selected columns into a DataSet. Throws ParseError naming the
// offending row/column on a non-numeric cell, DataError for < 2 rows.
DataSet dataset_from_csv(const CsvTable& table, const std::vector<std::size_t>& columns);

// Strict double parsing of a whole cell (surrounding blanks tolerated).
std::optional<double> parse_double(const std::string& cell);

// 17 significant digits; round-trips doubles exactly.
std::string format_double(double x);

// Writes one header row plus the coordinates, format_double per cell.
void write_dataset_csv(const std::filesystem::path& path, const DataSet& data,
                       const std::vector<std::string>& column_names);

}  // namespace gakde

#endif
