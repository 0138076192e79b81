#pragma once

#include <stdexcept>
#include <string>

namespace cnets {

/// Base class for every domain error thrown by the library.
/// Each concrete error maps to a distinct CLI exit code (see tools/).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// gf
struct CompositeModulus : Error {
    explicit CompositeModulus(const std::string& m) : Error(m) {}
};
struct SmallCharacteristic : Error {
    explicit SmallCharacteristic(const std::string& m) : Error(m) {}
};
struct IrreducibleSearchFailed : Error {
    explicit IrreducibleSearchFailed(const std::string& m) : Error(m) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& m) : Error(m) {}
};

// forms
struct ZeroForm : Error {
    explicit ZeroForm(const std::string& m) : Error(m) {}
};
struct NonReducedInput : Error {
    explicit NonReducedInput(const std::string& m) : Error(m) {}
};

// cubic_taxonomy
struct JUndefined : Error {
    explicit JUndefined(const std::string& m) : Error(m) {}
};

// pencil_orbits
struct UnrecognizedPencil : Error {
    explicit UnrecognizedPencil(const std::string& m) : Error(m) {}
};

// net_orbits
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& m) : Error(m) {}
};
struct ImpossibleDiscriminant : Error {
    explicit ImpossibleDiscriminant(const std::string& m) : Error(m) {}
};

// algebras
struct WrongHilbert : Error {
    explicit WrongHilbert(const std::string& m) : Error(m) {}
};
struct NotLocal : Error {
    explicit NotLocal(const std::string& m) : Error(m) {}
};
struct CharacteristicObstruction : Error {
    explicit CharacteristicObstruction(const std::string& m) : Error(m) {}
};
struct NotType33 : Error {
    explicit NotType33(const std::string& m) : Error(m) {}
};
struct InvalidMultTable : Error {
    explicit InvalidMultTable(const std::string& m) : Error(m) {}
};

// oracle
struct UnsupportedField : Error {
    explicit UnsupportedField(const std::string& m) : Error(m) {}
};
struct ConsistencyFailure : Error {
    explicit ConsistencyFailure(const std::string& m) : Error(m) {}
};

// cli
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(m) {}
};

} // namespace cnets
