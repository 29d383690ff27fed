#pragma once

#include "stair/rational.hpp"
#include "stair/surd.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace stair::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "stair";
inline constexpr const char* kToolVersion = "1.0.0";

using Cell = std::variant<std::string, Integer, Rational, QuadraticSurd, bool>;

// Exact columns (Rational, QuadraticSurd) get a companion "<name>_decimal" column.
class Table {
public:
    enum class Kind { text, integer, exact, boolean };

    Table& column(std::string name, Kind kind);
    void add_row(std::vector<Cell> row);

    bool empty() const { return columns_.empty(); }
    std::size_t rows() const { return rows_.size(); }
    std::vector<std::string> header() const;  // expanded, decimal columns included
    std::vector<std::vector<std::string>> cells() const;
    Json to_json() const;

private:
    struct Column {
        std::string name;
        Kind kind;
    };
    std::vector<Column> columns_;
    std::vector<std::vector<Cell>> rows_;
};

Json to_json(const Cell& c);
std::string exact_string(const Cell& c);
std::string decimal_string(const Cell& c);

struct Report {
    Json config = Json::object();  // command, subcommand and every option as a string
    Json summary = Json::object();
    Json diagnostics = Json::object();
    Table table;
    int exit_code = 0;  // set by commands whose checks can fail after the report is written
};

enum class Format { csv, json };

Format parse_format(const std::string& s);

// CSV: "# " header lines (tool, config, summary, diagnostics), then the table.
// JSON: {"config": ..., "results": {"summary": ..., "rows": [...]}, "diagnostics": ...}.
void write_report(const Report& r, Format f, std::ostream& os);

// Config object from the "# config: " line of a CSV report or the "config" member of a JSON report.
Json read_config(const std::string& report_text);

Json error_json(const std::string& kind, const std::string& message, int exit_code);

}  // namespace stair::cli
