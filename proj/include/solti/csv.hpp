#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "solti/matcore.hpp"

namespace solti {

// Reads time-step rows: comma-separated decimals, one vector per line.
// Lines starting with '#' and blank lines are skipped. All rows must have
// the same width.
std::vector<Vector> read_csv_rows(std::istream& in);
std::vector<Vector> read_csv_file(const std::string& path);

// One row per vector; optional '#'-prefixed header naming the columns.
void write_csv_rows(std::ostream& out, const std::vector<Vector>& rows,
                    const std::string& header = "");
void write_csv_file(const std::string& path, const std::vector<Vector>& rows,
                    const std::string& header = "");

}  // namespace solti
