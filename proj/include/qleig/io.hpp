#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "qleig/eigensolve.hpp"
#include "qleig/errors.hpp"
#include "qleig/qmatrix.hpp"
#include "qleig/quaternion.hpp"

namespace qleig {

using json = nlohmann::json;

// Rounds to `digits` significant decimal digits so serialized numbers are
// reproducible across runs and platforms.
inline double round_sig(double v, int digits = 12) {
    if (v == 0.0) return 0.0;  // also normalizes -0
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

inline json quaternion_to_json(const Quaternion& q) {
    return json::array({round_sig(q.w), round_sig(q.x), round_sig(q.y), round_sig(q.z)});
}

// Accepts either a grammar string ("1-2i+k") or a 4-array [w, x, y, z].
inline Quaternion quaternion_from_json(const json& j) {
    if (j.is_string()) return parse_quaternion(j.get<std::string>());
    if (j.is_array()) {
        if (j.size() != 4)
            throw ParseError("quaternion array must have exactly 4 components, got " +
                             std::to_string(j.size()));
        for (const auto& v : j)
            if (!v.is_number())
                throw ParseError("quaternion array components must be numbers");
        return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
    }
    throw ParseError("quaternion must be a string or a 4-array, got " + std::string(j.type_name()));
}

inline Quaternion parse_quaternion_argument(const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON array literal: ") + e.what());
        }
        return quaternion_from_json(j);
    }
    return parse_quaternion(text);
}

// Matrix files: {"n": size, "entries": [[q, ...], ...]} with quaternion
// entries in either accepted form.
inline QMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix document must be an object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw ParseError("matrix dimension \"n\" must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    const json& rows = j["entries"];
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("\"entries\" must be an array of " + std::to_string(n) + " rows");
    QMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw ParseError("row " + std::to_string(r) + " must be an array of " +
                             std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) out(r, c) = quaternion_from_json(rows[r][c]);
    }
    return out;
}

inline json matrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(quaternion_to_json(m(r, c)));
        rows.push_back(row);
    }
    return json{{"n", m.size()}, {"entries", rows}};
}

inline QMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

inline json spectrum_to_json(const SpectrumResult& s) {
    json values = json::array();
    for (const Quaternion& v : s.values) values.push_back(quaternion_to_json(v));
    json residuals = json::array();
    for (double r : s.residuals) residuals.push_back(round_sig(r));
    return json{{"kind", s.kind}, {"values", values}, {"residuals", residuals}};
}

}  // namespace qleig
