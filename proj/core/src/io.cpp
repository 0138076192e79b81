#include "cnets/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace cnets::io {

using nlohmann::json;

namespace {

i64 get_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("missing or non-integer field '") + field + "'");
    return j[field].get<i64>();
}

} // namespace

InputObject parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("input document must be a JSON object");
    InputObject obj;
    obj.p = get_int(j, "p");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("missing or non-string field 'kind'");
    obj.kind = j["kind"].get<std::string>();

    if (obj.kind == "net" || obj.kind == "pencil") {
        const std::size_t want = obj.kind == "net" ? 3 : 2;
        if (!j.contains("matrices") || !j["matrices"].is_array() || j["matrices"].size() != want)
            throw ParseError("field 'matrices' must be an array of " + std::to_string(want) +
                             " matrices");
        for (const auto& m : j["matrices"]) {
            if (!m.is_array() || m.size() != 9)
                throw ParseError("each matrix must be a row-major array of 9 integers");
            std::array<i64, 9> row{};
            for (int i = 0; i < 9; ++i) {
                if (!m[i].is_number_integer()) throw ParseError("matrix entries must be integers");
                row[i] = m[i].get<i64>();
            }
            obj.matrices.push_back(row);
        }
    } else if (obj.kind == "ideal") {
        if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
            throw ParseError("field 'generators' must be a nonempty array");
        for (const auto& g : j["generators"]) {
            if (!g.is_array() || (g.size() != 3 && g.size() != 6 && g.size() != 10))
                throw ParseError(
                    "each generator must have 3 (linear), 6 (quadric) or 10 (cubic) coefficients");
            std::vector<i64> coeffs;
            for (const auto& v : g) {
                if (!v.is_number_integer())
                    throw ParseError("generator coefficients must be integers");
                coeffs.push_back(v.get<i64>());
            }
            obj.generators.push_back(std::move(coeffs));
        }
    } else if (obj.kind == "multtable") {
        if (!j.contains("constants") || !j["constants"].is_array() || j["constants"].size() != 7)
            throw ParseError("field 'constants' must be a 7x7x7 integer array");
        for (const auto& plane : j["constants"]) {
            if (!plane.is_array() || plane.size() != 7)
                throw ParseError("field 'constants' must be a 7x7x7 integer array");
            for (const auto& row : plane) {
                if (!row.is_array() || row.size() != 7)
                    throw ParseError("field 'constants' must be a 7x7x7 integer array");
                for (const auto& v : row) {
                    if (!v.is_number_integer())
                        throw ParseError("structure constants must be integers");
                    obj.constants.push_back(v.get<i64>());
                }
            }
        }
    } else {
        throw ParseError("unknown kind '" + obj.kind +
                         "' (expected net, pencil, ideal or multtable)");
    }
    return obj;
}

InputObject parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

std::string to_json(const InputObject& obj) {
    json j;
    j["p"] = obj.p;
    j["kind"] = obj.kind;
    if (!obj.matrices.empty()) {
        json ms = json::array();
        for (const auto& m : obj.matrices) ms.push_back(m);
        j["matrices"] = ms;
    }
    if (!obj.generators.empty()) j["generators"] = obj.generators;
    if (!obj.constants.empty()) {
        json planes = json::array();
        int idx = 0;
        for (int a = 0; a < 7; ++a) {
            json plane = json::array();
            for (int b = 0; b < 7; ++b) {
                json row = json::array();
                for (int e = 0; e < 7; ++e) row.push_back(obj.constants[idx++]);
                plane.push_back(row);
            }
            planes.push_back(plane);
        }
        j["constants"] = planes;
    }
    return j.dump();
}

namespace {

sym::Mat3i dense_from_row(const std::array<i64, 9>& m) {
    return sym::Mat3i{{{m[0], m[1], m[2]}, {m[3], m[4], m[5]}, {m[6], m[7], m[8]}}};
}

} // namespace

nets::Net net_from_input(const gf::FieldCtx& F, const InputObject& obj) {
    if (obj.kind != "net") throw ParseError("expected kind 'net', got '" + obj.kind + "'");
    std::array<sym::Mat3i, 3> ms;
    for (int i = 0; i < 3; ++i) {
        ms[i] = dense_from_row(obj.matrices[i]);
        if (!sym::is_symmetric(ms[i], F.p()))
            throw ParseError("matrix " + std::to_string(i + 1) + " is not symmetric mod p");
    }
    try {
        return nets::make_net(F, ms[0], ms[1], ms[2]);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

pencils::Pencil pencil_from_input(const gf::FieldCtx& F, const InputObject& obj) {
    if (obj.kind != "pencil") throw ParseError("expected kind 'pencil', got '" + obj.kind + "'");
    std::array<sym::Mat3i, 2> ms;
    for (int i = 0; i < 2; ++i) {
        ms[i] = dense_from_row(obj.matrices[i]);
        if (!sym::is_symmetric(ms[i], F.p()))
            throw ParseError("matrix " + std::to_string(i + 1) + " is not symmetric mod p");
    }
    try {
        return pencils::make_pencil(F, ms[0], ms[1]);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::vector<algebras::IdealGenerator> generators_from_input(const InputObject& obj) {
    if (obj.kind != "ideal") throw ParseError("expected kind 'ideal', got '" + obj.kind + "'");
    std::vector<algebras::IdealGenerator> gens;
    for (const auto& g : obj.generators) gens.push_back({g});
    return gens;
}

algebras::MultTable multtable_from_input(const gf::FieldCtx& F, const InputObject& obj) {
    if (obj.kind != "multtable")
        throw ParseError("expected kind 'multtable', got '" + obj.kind + "'");
    std::array<std::array<std::array<i64, 7>, 7>, 7> c{};
    int idx = 0;
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (int e = 0; e < 7; ++e) c[a][b][e] = obj.constants[idx++];
    return algebras::make_mult_table(F, c);
}

InputObject input_from_net(const nets::Net& W) {
    InputObject obj;
    obj.p = W.p;
    obj.kind = "net";
    for (const auto& row : W.basis) {
        sym::Mat3i d = sym::unpack(row);
        obj.matrices.push_back({d[0][0], d[0][1], d[0][2], d[1][0], d[1][1], d[1][2], d[2][0],
                                d[2][1], d[2][2]});
    }
    return obj;
}

const char* to_string(CheckRecord::Status s) {
    switch (s) {
        case CheckRecord::Status::PASS: return "PASS";
        case CheckRecord::Status::FAIL: return "FAIL";
        case CheckRecord::Status::WARN: return "WARN";
    }
    return "?";
}

void print_records(std::ostream& os, const std::vector<CheckRecord>& records) {
    for (const auto& r : records)
        os << to_string(r.status) << "  " << r.id << "  " << r.detail << "\n";
}

int count_failures(const std::vector<CheckRecord>& records) {
    int n = 0;
    for (const auto& r : records)
        if (r.status == CheckRecord::Status::FAIL) ++n;
    return n;
}

int count_warnings(const std::vector<CheckRecord>& records) {
    int n = 0;
    for (const auto& r : records)
        if (r.status == CheckRecord::Status::WARN) ++n;
    return n;
}

std::string render_census(const oracle::OrbitCensus& census) {
    std::ostringstream os;
    os << "census kind=" << census.kind << " mode=" << census.mode << "\n";
    os << "total " << census.total << "\n";
    os << "expected_total " << census.expected_total << "\n";
    os << "unclassified " << census.unclassified << "\n";
    for (const auto& [label, n] : census.label_counts) os << "count " << label << " " << n << "\n";
    for (const auto& [label, sizes] : census.orbit_sizes) {
        os << "orbits " << label;
        for (auto s : sizes) os << " " << s;
        os << "\n";
    }
    for (const auto& [key, n] : census.slice_histogram) os << "slice " << key << " " << n << "\n";
    for (const auto& note : census.notes) os << "note " << note << "\n";
    return os.str();
}

} // namespace cnets::io
