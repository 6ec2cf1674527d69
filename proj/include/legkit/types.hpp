#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace legkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file; carries a 1-based line number when known.
class parse_error : public error {
public:
    parse_error(const std::string& msg, int line = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Structurally invalid value (front word, matrix, module, ...).
class validation_error : public error {
public:
    using error::error;
};

inline std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

}  // namespace legkit
