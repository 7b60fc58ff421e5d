#pragma once

#include <stdexcept>
#include <string>

namespace fuzzy {

// Every domain failure carries a short machine-readable kind ("DivisionByZero",
// "SyntaxError", ...) so the CLI can report it as JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace fuzzy
