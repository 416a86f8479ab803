#pragma once

#include <stdexcept>
#include <string>

namespace tss {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input data (bad vertex id, self-loop, duplicate edge, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Malformed instance file; line is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Operation requires a connected graph; carries one vertex from each of two
// distinct components.
struct DisconnectedError : Error {
    int rep_a;
    int rep_b;
    DisconnectedError(int a, int b)
        : Error("graph is disconnected: vertices " + std::to_string(a) + " and " +
                std::to_string(b) + " lie in different components"),
          rep_a(a),
          rep_b(b) {}
};

// Solver invoked on a graph outside its class.
struct WrongClassError : Error {
    using Error::Error;
};

// Chordal solver invoked with a threshold above 2.
struct WrongThresholdsError : Error {
    using Error::Error;
};

// Explicit materialization would exceed the configured limit.
struct TooLargeError : Error {
    using Error::Error;
};

// Brute-force oracle invoked beyond its vertex limit.
struct OracleLimitError : Error {
    using Error::Error;
};

}  // namespace tss
