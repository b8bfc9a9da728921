#ifndef LPA_ERRORS_HPP
#define LPA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace lpa {

// Malformed or inconsistent user input (unknown vertex, bad graph file, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An operation was called outside its precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A family of paths or basic sets that would have to be materialized is
// infinite. `family` names the family, `witness` explains why.
class InfiniteFamilyError : public ContractError {
 public:
  InfiniteFamilyError(std::string family, std::string witness)
      : ContractError("infinite family " + family + ": " + witness),
        family_(std::move(family)),
        witness_(std::move(witness)) {}

  const std::string& family() const noexcept { return family_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string family_;
  std::string witness_;
};

// The subset enumeration guard tripped.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpa

#endif  // LPA_ERRORS_HPP
