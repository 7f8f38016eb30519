#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qext {

/// One verified inequality or identity instance: the measured quantity, the
/// theoretical ceiling, and enough context to reproduce the measurement.
struct BoundReport {
    std::string check;    // check family, e.g. "kloosterman-weil"
    std::int64_t q = 0;
    int d = 0;
    std::string form_id;  // empty when not form-specific
    std::int64_t j = 0;
    std::uint64_t seed = 0;
    std::string family;   // test-function family or branch label
    double value = 0;     // measured quantity
    double bound = 0;     // theoretical ceiling
    double ratio = 0;     // value / bound (0 when the bound is +inf)
    std::string witness;  // maximizing argument, reproducible from the seed
    bool checked = true;  // false: informational row, bound not asserted
    bool passed = true;
};

/// Fills ratio and the pass flag from value/bound with a relative tolerance.
BoundReport& finish_report(BoundReport& r, double tolerance = 0.0);

/// Rows assembled by one CLI command, ready for CSV/JSON rendering.
struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
    int failures = 0;
};

/// Shortest-faithful float formatting: 17 significant digits.
std::string format_double(double v);

void write_csv(std::ostream& out, const Table& table, const std::string& tool,
               const std::string& config_echo);
void write_json(std::ostream& out, const Table& table, const std::string& tool,
                const std::string& config_echo);

}  // namespace qext
