#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gft {

/// Resource limits for operations that enumerate elements or subgroups.
/// Operations that would exceed a cap throw CapError instead of degrading.
struct Caps {
  std::uint64_t max_elements = 1'000'000;    // element enumeration cap
  std::uint64_t max_subgroup_order = 200;    // all_subgroups / frattini cap
  int max_degree = 5000;                     // quotient coset-action degree cap
};

class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

}  // namespace gft
