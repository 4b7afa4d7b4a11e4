#ifndef GPDHOM_ERRORS_HPP
#define GPDHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpdhom {

// Input data failed structural validation (bad tables, broken axioms).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (JSON syntax, missing fields, bad references).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A library invariant broke. Always a bug, never a legitimate state.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gpdhom

#endif  // GPDHOM_ERRORS_HPP
