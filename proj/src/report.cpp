#include "qext/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "qext/error.hpp"

namespace qext {

BoundReport& finish_report(BoundReport& r, double tolerance) {
    if (std::isinf(r.bound)) {
        r.ratio = 0.0;
        r.passed = true;
        return r;
    }
    r.ratio = r.bound != 0.0 ? r.value / r.bound : std::numeric_limits<double>::infinity();
    if (r.checked) r.passed = r.value <= r.bound + tolerance;
    return r;
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const Table& table, const std::string& tool,
               const std::string& config_echo) {
    out << "schema=1\n";
    out << "# tool: " << tool << "\n";
    out << "# command: " << table.command << "\n";
    out << "# config: " << config_echo << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << row[c];
        }
        out << "\n";
    }
    out << "# summary:";
    for (const auto& [key, value] : table.summary) {
        out << " " << key << "=" << value;
    }
    out << "\n";
}

void write_json(std::ostream& out, const Table& table, const std::string& tool,
                const std::string& config_echo) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["tool"] = tool;
    doc["command"] = table.command;
    doc["config"] = config_echo;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    nlohmann::ordered_json summary;
    for (const auto& [key, value] : table.summary) summary[key] = value;
    doc["summary"] = summary;
    out << doc.dump(2) << "\n";
}

}  // namespace qext
