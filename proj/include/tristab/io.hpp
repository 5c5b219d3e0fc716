#pragma once

#include <string>
#include <vector>

namespace tristab {

/// One table cell: either a number (printed with 9 significant digits) or a
/// short label such as a classification verdict.
struct Cell {
    bool is_number = true;
    double num = 0.0;
    std::string text;

    static Cell number(double v) { return Cell{true, v, {}}; }
    static Cell label(std::string s) { return Cell{false, 0.0, std::move(s)}; }
};

/// Column-named rows ready for CSV or JSON serialization.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Formats one number with 9 significant digits and '.' as the decimal
/// separator, locale-independent.
std::string format_number(double v);

/// Single header row, comma-separated, one line per row, '\n' endings.
std::string to_csv(const Table& table);

/// Array of row objects keyed by column name, numbers with 9 significant
/// digits, two-space indentation.
std::string to_json(const Table& table);

enum class OutputFormat { Csv, Json };

/// Accepts "csv" or "json" (lowercase); anything else is a DomainError.
OutputFormat parse_format(const std::string& name);

std::string serialize(const Table& table, OutputFormat format);

/// Writes content to the given path, or to stdout when the path is empty.
/// Failures throw std::runtime_error naming the path.
void write_output(const std::string& content, const std::string& out_path);

} // namespace tristab
