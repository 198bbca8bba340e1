#include "solti/sysmodel.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace solti {

std::string to_string(TimeDomain kind) {
    return kind == TimeDomain::discrete ? "discrete" : "continuous";
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Matrix parse_matrix(const json& j, const std::string& key, int rows, int cols) {
    if (!j.is_array())
        throw ParseError("field \"" + key + "\" must be an array of row arrays");
    if (static_cast<int>(j.size()) != rows)
        throw DimensionError("field \"" + key + "\": expected " + std::to_string(rows) +
                             " rows, got " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw DimensionError("field \"" + key + "\": row " + std::to_string(i) +
                                 " must have " + std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k) {
            const auto& cell = row[static_cast<size_t>(k)];
            if (!cell.is_number())
                throw ParseError("field \"" + key + "\": non-numeric entry at (" +
                                 std::to_string(i) + "," + std::to_string(k) + ")");
            double v = cell.get<double>();
            if (!std::isfinite(v))
                throw NonFiniteError("field \"" + key + "\": non-finite entry at (" +
                                     std::to_string(i) + "," + std::to_string(k) + ")");
            m(i, k) = v;
        }
    }
    return m;
}

int parse_dim(const json& j, const std::string& key, int minimum) {
    if (!j.contains(key)) throw ParseError("missing field \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw ParseError("field \"" + key + "\" must be an integer");
    int value = v.get<int>();
    if (value < minimum)
        throw ParseError("field \"" + key + "\" must be >= " + std::to_string(minimum));
    return value;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

SecondOrderSystem load_system(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed system document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("system document must be a JSON object");

    static const std::set<std::string> allowed = {"kind", "n", "r", "p", "a0", "a1", "b", "c"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!allowed.count(key)) throw ParseError("unknown field \"" + key + "\"");
    }

    SecondOrderSystem sys;
    if (!doc.contains("kind")) throw ParseError("missing field \"kind\"");
    const std::string kind = doc.at("kind").is_string() ? doc.at("kind").get<std::string>() : "";
    if (kind == "discrete")
        sys.kind = TimeDomain::discrete;
    else if (kind == "continuous")
        sys.kind = TimeDomain::continuous;
    else
        throw ParseError("field \"kind\" must be \"discrete\" or \"continuous\"");

    sys.n = parse_dim(doc, "n", 1);
    sys.r = parse_dim(doc, "r", 0);
    sys.p = parse_dim(doc, "p", 1);

    for (const char* key : {"a0", "a1", "b", "c"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");

    sys.a0 = parse_matrix(doc.at("a0"), "a0", sys.n, sys.n);
    sys.a1 = parse_matrix(doc.at("a1"), "a1", sys.n, sys.n);
    sys.b = parse_matrix(doc.at("b"), "b", sys.n, sys.r);
    sys.c = parse_matrix(doc.at("c"), "c", sys.p, sys.n);
    return sys;
}

SecondOrderSystem load_system_from_string(const std::string& text) {
    std::istringstream in(text);
    return load_system(in);
}

SecondOrderSystem load_system_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open system file: " + path);
    return load_system(in);
}

std::string render_system(const SecondOrderSystem& sys) {
    ordered_json doc;
    doc["kind"] = to_string(sys.kind);
    doc["n"] = sys.n;
    doc["r"] = sys.r;
    doc["p"] = sys.p;
    doc["a0"] = matrix_to_json(sys.a0);
    doc["a1"] = matrix_to_json(sys.a1);
    doc["b"] = matrix_to_json(sys.b);
    doc["c"] = matrix_to_json(sys.c);
    return doc.dump(2) + "\n";
}

SecondOrderSystem dual_system(const SecondOrderSystem& sys) {
    SecondOrderSystem dual;
    dual.kind = sys.kind;
    dual.n = sys.n;
    dual.r = sys.p;
    dual.p = sys.r;
    dual.a0 = sys.a0.transpose();
    dual.a1 = -sys.a1.transpose();
    dual.b = sys.c.transpose();
    dual.c = sys.b.transpose();
    return dual;
}

std::vector<std::string> validate(const SecondOrderSystem& sys) {
    std::vector<std::string> violations;
    if (sys.n < 1) violations.push_back("n must be positive");
    if (sys.r < 0) violations.push_back("r must be nonnegative");
    if (sys.p < 1) violations.push_back("p must be positive");
    auto check_shape = [&](const Matrix& m, const char* name, int rows, int cols) {
        if (m.rows() != rows || m.cols() != cols) {
            violations.push_back(std::string("field \"") + name + "\" must be " +
                                 std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
            return;
        }
        if (!m.allFinite())
            violations.push_back(std::string("field \"") + name + "\" has a non-finite entry");
    };
    if (sys.n >= 1 && sys.p >= 1 && sys.r >= 0) {
        check_shape(sys.a0, "a0", sys.n, sys.n);
        check_shape(sys.a1, "a1", sys.n, sys.n);
        check_shape(sys.b, "b", sys.n, sys.r);
        check_shape(sys.c, "c", sys.p, sys.n);
    }
    return violations;
}

void require_valid(const SecondOrderSystem& sys) {
    auto violations = validate(sys);
    if (!violations.empty()) throw DimensionError("invalid system: " + violations.front());
}

}  // namespace solti
