#ifndef KDVGAL_ERRORS_HPP
#define KDVGAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kdvgal {

// Mismatched truncations/families, insufficient headroom, infeasible windows.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A formal operation whose precondition fails (missing constant term, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// Raised when a recursion produces a value violating a structural invariant.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

class CacheError : public std::runtime_error {
 public:
  CacheError(const std::string& what, int line)
      : std::runtime_error("cache line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace kdvgal

#endif
