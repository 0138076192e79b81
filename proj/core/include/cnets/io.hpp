#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cnets/algebras.hpp"
#include "cnets/oracle.hpp"

namespace cnets::io {

using gf::i64;

/// One parsed input object. Exactly the fields for its kind are populated;
/// integers are reduced mod p on load.
struct InputObject {
    i64 p = 0;
    std::string kind; // "net" | "pencil" | "ideal" | "multtable"
    std::vector<std::array<i64, 9>> matrices;  // row-major, net: 3, pencil: 2
    std::vector<std::vector<i64>> generators;  // ideal: coefficient arrays (3/6/10)
    std::vector<i64> constants;                // multtable: 343 entries, c[a][b][e]
};

/// Parse a JSON input document; throws ParseError with a field diagnostic.
InputObject parse_input(const std::string& text);
InputObject parse_input_file(const std::string& path);
/// Serialize back to JSON (used by the random-net emitter).
std::string to_json(const InputObject& obj);

/// Domain objects from a parsed input (validates symmetry, sizes, p).
nets::Net net_from_input(const gf::FieldCtx& F, const InputObject& obj);
pencils::Pencil pencil_from_input(const gf::FieldCtx& F, const InputObject& obj);
std::vector<algebras::IdealGenerator> generators_from_input(const InputObject& obj);
algebras::MultTable multtable_from_input(const gf::FieldCtx& F, const InputObject& obj);

InputObject input_from_net(const nets::Net& W);

/// One line of a verification or classification report.
struct CheckRecord {
    enum class Status { PASS, FAIL, WARN };
    Status status;
    std::string id;
    std::string detail;
};

const char* to_string(CheckRecord::Status s);
void print_records(std::ostream& os, const std::vector<CheckRecord>& records);
int count_failures(const std::vector<CheckRecord>& records);
int count_warnings(const std::vector<CheckRecord>& records);

/// Deterministic text rendering of a sweep census.
std::string render_census(const oracle::OrbitCensus& census);

} // namespace cnets::io
