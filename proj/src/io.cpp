#include "tristab/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tristab/errors.hpp"

namespace tristab {

namespace {

/// CSV fields and JSON strings in this project are plain identifiers or
/// verdict names; quoting handles the general case anyway.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string cell_csv(const Cell& c) {
    return c.is_number ? format_number(c.num) : csv_field(c.text);
}

std::string cell_json(const Cell& c) {
    return c.is_number ? format_number(c.num) : json_string(c.text);
}

} // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        if (j) out += ',';
        out += csv_field(table.columns[j]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += cell_csv(row[j]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    std::string out = "[";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        out += i ? ",\n  {" : "\n  {";
        const auto& row = table.rows[i];
        for (std::size_t j = 0; j < row.size() && j < table.columns.size();
             ++j) {
            if (j) out += ", ";
            out += json_string(table.columns[j]);
            out += ": ";
            out += cell_json(row[j]);
        }
        out += '}';
    }
    out += table.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw DomainError("unknown output format '" + name +
                      "' (expected csv or json)");
}

std::string serialize(const Table& table, OutputFormat format) {
    return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    file << content;
    file.flush();
    if (!file) {
        throw std::runtime_error("failed writing output file: " + out_path);
    }
}

} // namespace tristab
