#include "solti/csv.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "solti/errors.hpp"

namespace solti {

std::vector<Vector> read_csv_rows(std::istream& in) {
    std::vector<Vector> rows;
    std::string line;
    Eigen::Index width = -1;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        std::vector<double> values;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            try {
                size_t consumed = 0;
                double v = std::stod(field, &consumed);
                while (consumed < field.size() && std::isspace(static_cast<unsigned char>(field[consumed])))
                    ++consumed;
                if (consumed != field.size()) throw std::invalid_argument(field);
                if (!std::isfinite(v))
                    throw NonFiniteError("non-finite value on line " + std::to_string(lineno));
                values.push_back(v);
            } catch (const std::invalid_argument&) {
                throw ParseError("line " + std::to_string(lineno) + ": cannot parse \"" + field +
                                 "\" as a number");
            }
        }
        if (values.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty data row");
        if (width < 0) width = static_cast<Eigen::Index>(values.size());
        if (static_cast<Eigen::Index>(values.size()) != width)
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(width) + " columns, got " +
                             std::to_string(values.size()));
        rows.push_back(Eigen::Map<const Vector>(values.data(), width));
    }
    return rows;
}

std::vector<Vector> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open CSV file: " + path);
    return read_csv_rows(in);
}

void write_csv_rows(std::ostream& out, const std::vector<Vector>& rows,
                    const std::string& header) {
    if (!header.empty()) out << "# " << header << "\n";
    out << std::setprecision(17);
    for (const auto& row : rows) {
        for (Eigen::Index i = 0; i < row.size(); ++i) {
            if (i > 0) out << ",";
            out << row(i);
        }
        out << "\n";
    }
}

void write_csv_file(const std::string& path, const std::vector<Vector>& rows,
                    const std::string& header) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open CSV file for writing: " + path);
    write_csv_rows(out, rows, header);
}

}  // namespace solti
