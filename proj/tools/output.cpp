#include "output.hpp"

#include "stair/error.hpp"

#include <sstream>

namespace stair::cli {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

Table& Table::column(std::string name, Kind kind) {
    columns_.push_back({std::move(name), kind});
    return *this;
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw CheckFailure("table row has the wrong number of cells", 0);
    rows_.push_back(std::move(row));
}

std::vector<std::string> Table::header() const {
    std::vector<std::string> h;
    for (const auto& c : columns_) {
        h.push_back(c.name);
        if (c.kind == Kind::exact) h.push_back(c.name + "_decimal");
    }
    return h;
}

std::vector<std::vector<std::string>> Table::cells() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : rows_) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(exact_string(row[i]));
            if (columns_[i].kind == Kind::exact) line.push_back(decimal_string(row[i]));
        }
        out.push_back(std::move(line));
    }
    return out;
}

Json Table::to_json() const {
    Json rows = Json::array();
    for (const auto& row : rows_) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[columns_[i].name] = cli::to_json(row[i]);
            if (columns_[i].kind == Kind::exact) obj[columns_[i].name + "_decimal"] = decimal_string(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

Json to_json(const Cell& c) {
    if (const auto* b = std::get_if<bool>(&c)) return *b;
    if (const auto* z = std::get_if<Integer>(&c); z && z->fits_slong_p()) return z->get_si();
    return exact_string(c);
}

std::string exact_string(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) return v;
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, QuadraticSurd>) return v.to_string();
            else return stair::to_string(v);
        },
        c);
}

std::string decimal_string(const Cell& c) {
    if (const auto* q = std::get_if<Rational>(&c)) return to_decimal(*q, 20);
    if (const auto* s = std::get_if<QuadraticSurd>(&c)) return to_decimal(*s, 20);
    if (const auto* z = std::get_if<Integer>(&c)) return z->get_str();
    return exact_string(c);
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw DomainError("unknown format '" + s + "' (csv or json)");
}

void write_report(const Report& r, Format f, std::ostream& os) {
    if (f == Format::json) {
        Json doc = Json::object();
        Json config = r.config;
        config["tool"] = kToolName;
        config["version"] = kToolVersion;
        doc["config"] = std::move(config);
        doc["results"] = {{"summary", r.summary}, {"rows", r.table.to_json()}};
        doc["diagnostics"] = r.diagnostics;
        os << doc.dump(2) << "\n";
        return;
    }
    os << "# tool: " << kToolName << " " << kToolVersion << "\n";
    os << "# config: " << r.config.dump() << "\n";
    if (!r.summary.empty()) os << "# summary: " << r.summary.dump() << "\n";
    if (!r.diagnostics.empty()) os << "# diagnostics: " << r.diagnostics.dump() << "\n";
    if (r.table.empty()) return;
    auto join = [&](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << csv_escape(v[i]);
        os << "\n";
    };
    join(r.table.header());
    for (const auto& line : r.table.cells()) join(line);
}

Json read_config(const std::string& report_text) {
    const std::string marker = "# config: ";
    if (report_text.rfind("# tool:", 0) == 0) {
        std::istringstream in(report_text);
        std::string line;
        while (std::getline(in, line))
            if (line.rfind(marker, 0) == 0) return Json::parse(line.substr(marker.size()));
        throw DomainError("report has no config line");
    }
    Json doc = Json::parse(report_text);
    Json config = doc.at("config");
    config.erase("tool");
    config.erase("version");
    return config;
}

Json error_json(const std::string& kind, const std::string& message, int exit_code) {
    return {{"error", {{"kind", kind}, {"message", message}, {"exit_code", exit_code}}}};
}

}  // namespace stair::cli
